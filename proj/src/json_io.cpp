#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclecover/json_io.hpp"

namespace cyclecover {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what, const std::exception& e) {
    throw std::invalid_argument("malformed " + what + " JSON: " + e.what());
}

}  // namespace

json to_json(const WeightedCompleteGraph& g) {
    json j;
    j["directed"] = g.directed;
    j["n"] = g.n;
    j["weights"] = g.w;
    return j;
}

WeightedCompleteGraph complete_graph_from_json(const json& j) {
    try {
        return make_complete_graph(
            j.at("directed").get<bool>(), j.at("n").get<int>(),
            j.at("weights").get<std::vector<std::vector<long long>>>());
    } catch (const json::exception& e) {
        malformed("complete graph", e);
    }
}

json to_json(const SparseGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges) {
        if (e.w == 1) {
            edges.push_back(json::array({e.u, e.v}));
        } else {
            edges.push_back(json::array({e.u, e.v, e.w}));
        }
    }
    json j;
    j["directed"] = g.directed;
    j["n"] = g.n;
    j["edges"] = std::move(edges);
    return j;
}

SparseGraph sparse_graph_from_json(const json& j) {
    try {
        std::vector<SparseGraph::Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || (e.size() != 2 && e.size() != 3)) {
                throw std::invalid_argument(
                    "sparse-graph edges must be [u,v] or [u,v,w]");
            }
            SparseGraph::Edge edge;
            edge.u = e.at(0).get<int>();
            edge.v = e.at(1).get<int>();
            edge.w = e.size() == 3 ? e.at(2).get<long long>() : 1;
            edges.push_back(edge);
        }
        return make_sparse_graph(j.at("directed").get<bool>(),
                                 j.at("n").get<int>(), std::move(edges));
    } catch (const json::exception& e) {
        malformed("sparse graph", e);
    }
}

json to_json(const LengthSet& L) {
    json j;
    j["finite"] = L.finite_part;
    j["tail"] = L.tail ? json(*L.tail) : json(nullptr);
    j["mode"] = L.directed ? "directed" : "undirected";
    return j;
}

LengthSet length_set_from_json(const json& j) {
    try {
        const std::string mode = j.at("mode").get<std::string>();
        if (mode != "directed" && mode != "undirected") {
            throw std::invalid_argument(
                "length-set mode must be \"directed\" or \"undirected\"");
        }
        std::optional<int> tail;
        if (!j.at("tail").is_null()) tail = j.at("tail").get<int>();
        return make_length_set(j.at("finite").get<std::vector<int>>(), tail,
                               mode == "directed");
    } catch (const json::exception& e) {
        malformed("length set", e);
    }
}

json to_json(const CycleCover& c) {
    json j;
    j["cycles"] = c.cycles;
    return j;
}

CycleCover cover_from_json(const json& j) {
    try {
        CycleCover c;
        c.cycles = j.at("cycles").get<std::vector<std::vector<int>>>();
        return c;
    } catch (const json::exception& e) {
        malformed("cover", e);
    }
}

json to_json(const Matching& m) {
    json j;
    j["edges"] = m.edges;
    j["weight"] = m.weight;
    return j;
}

json to_json(const PathPack& p) {
    json j;
    j["singles"] = p.singles;
    j["doubles"] = p.doubles;
    j["isolated"] = p.isolated;
    j["kept_weight"] = p.kept_weight;
    return j;
}

PathPack path_pack_from_json(const json& j) {
    try {
        PathPack p;
        p.singles = j.at("singles").get<std::vector<std::array<int, 2>>>();
        p.doubles = j.at("doubles").get<std::vector<std::array<int, 3>>>();
        p.isolated = j.at("isolated").get<std::vector<int>>();
        p.kept_weight = j.at("kept_weight").get<long long>();
        return p;
    } catch (const json::exception& e) {
        malformed("path pack", e);
    }
}

json to_json(const ApproxResult& r) {
    json j;
    j["cover"] = r.cover.cycles;
    j["weight"] = r.weight;
    j["branch"] = r.branch;
    j["pieces_kept_weight"] = r.pieces_kept_weight;
    return j;
}

json to_json(const ClampCandidate& c) {
    json j = to_json(c.graph);
    j["connectors"] = json::array({c.u, c.v});
    j["weighted"] = c.weighted;
    return j;
}

ClampCandidate clamp_from_json(const json& j) {
    try {
        SparseGraph g = sparse_graph_from_json(j);
        const auto& conn = j.at("connectors");
        if (!conn.is_array() || conn.size() != 2) {
            throw std::invalid_argument("clamp connectors must be [u,v]");
        }
        return make_clamp_candidate(std::move(g), conn.at(0).get<int>(),
                                    conn.at(1).get<int>(),
                                    j.at("weighted").get<bool>());
    } catch (const json::exception& e) {
        malformed("clamp", e);
    }
}

json to_json(const ClampVerdict& v) {
    json j;
    j["cover_without_u"] = v.cover_without_u;
    j["cover_without_v"] = v.cover_without_v;
    j["no_cover_intact"] = v.no_cover_intact;
    j["no_cover_without_both"] = v.no_cover_without_both;
    j["no_cover_with_joins"] = v.no_cover_with_joins;
    j["checked_k_max"] = v.checked_k_max;
    j["passes"] = v.passes;
    j["status"] = v.status;
    j["witness"] = v.witness ? json(v.witness->cycles) : json(nullptr);
    j["witness_graph"] = v.witness_graph;
    j["witness_k"] = v.witness_k ? json(*v.witness_k) : json(nullptr);
    return j;
}

json to_json(const GadgetCandidate& c) {
    json j = to_json(c.graph);
    j["connectors"] = json::array({c.x, c.y, c.z});
    j["weighted"] = c.weighted;
    return j;
}

GadgetCandidate gadget_from_json(const json& j) {
    try {
        SparseGraph g = sparse_graph_from_json(j);
        const auto& conn = j.at("connectors");
        if (!conn.is_array() || conn.size() != 3) {
            throw std::invalid_argument("gadget connectors must be [x,y,z]");
        }
        return make_gadget_candidate(std::move(g), conn.at(0).get<int>(),
                                     conn.at(1).get<int>(),
                                     conn.at(2).get<int>(),
                                     j.at("weighted").get<bool>());
    } catch (const json::exception& e) {
        malformed("gadget", e);
    }
}

json to_json(const GadgetVerdict& v) {
    json j;
    j["pair_removals_coverable"] = v.pair_removals_coverable;
    j["intact_uncoverable"] = v.intact_uncoverable;
    j["single_removals_uncoverable"] = v.single_removals_uncoverable;
    j["triple_removal_uncoverable"] = v.triple_removal_uncoverable;
    j["through_paths_blocked"] = v.through_paths_blocked;
    j["cap_all_cycles"] = v.cap_all_cycles;
    j["cap_external_ends"] = v.cap_external_ends;
    j["healthy_value_exact"] = v.healthy_value_exact;
    j["cap_two_connectors"] = v.cap_two_connectors;
    j["checked_budget"] = v.checked_budget;
    j["passes"] = v.passes;
    j["status"] = v.status;
    j["witness"] = v.witness ? json(v.witness->cycles) : json(nullptr);
    j["witness_detail"] = v.witness_detail;
    return j;
}

namespace {

json to_json(const Fraction& f) {
    json j;
    j["num"] = f.num;
    j["den"] = f.den;
    return j;
}

}  // namespace

json to_json(const RatioReport& r) {
    json per = json::array();
    for (const auto& rec : r.per_instance) {
        json j;
        j["seed"] = rec.seed;
        j["n"] = rec.n;
        j["lengths"] = rec.lengths;
        j["opt"] = rec.opt;
        j["apx"] = rec.apx;
        j["branch"] = rec.branch;
        j["within_bound"] = rec.within_bound;
        per.push_back(std::move(j));
    }
    json j;
    j["instances"] = r.instances;
    j["worst_ratio"] = to_json(r.worst_ratio);
    j["bound"] = to_json(r.bound);
    j["per_instance"] = std::move(per);
    j["ok"] = r.ok;
    return j;
}

GeneratorSpec generator_spec_from_json(const json& j) {
    try {
        GeneratorSpec spec;
        spec.n = j.at("n").get<int>();
        spec.directed = j.at("directed").get<bool>();
        spec.weight_max = j.at("weight_max").get<long long>();
        spec.seed = j.at("seed").get<unsigned long long>();
        spec.trials = j.at("trials").get<int>();
        return spec;
    } catch (const json::exception& e) {
        malformed("generator spec", e);
    }
}

json artifact_to_json(const ReductionArtifact& a) {
    json j;
    if (a.is_rvc) {
        j["kind"] = "vertex-cover";
        j["directed"] = a.directed;
        j["sigma"] = a.sigma;
        j["lambda"] = a.lambda;
        j["m"] = a.m;
        j["n_source"] = a.n_source;
        j["source"] = to_json(a.source);
        j["gadget"] = to_json(a.gadget);
        j["instance"] = to_json(a.instance);
    } else {
        j["kind"] = "exact-cover";
        j["directed"] = a.directed;
        j["lambda"] = a.lambda;
        j["n_source"] = a.n_source;
        j["sets"] = a.sets;
        j["clamp"] = to_json(a.clamp);
        j["instance"] = to_json(a.xlc_graph);
    }
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read " + path);
    }
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " +
                                    e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write " + path);
    }
    out << j.dump(2) << "\n";
    if (!out) {
        throw std::invalid_argument("cannot write " + path);
    }
}

}  // namespace cyclecover
