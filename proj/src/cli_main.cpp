#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_main.hpp"
#include "cyclecover/approx.hpp"
#include "cyclecover/cover_search.hpp"
#include "cyclecover/decompose.hpp"
#include "cyclecover/graph.hpp"
#include "cyclecover/json_io.hpp"
#include "cyclecover/lengths.hpp"
#include "cyclecover/oracle.hpp"
#include "cyclecover/reductions.hpp"

namespace cyclecover {

namespace {

using nlohmann::json;

bool parse_mode(const std::string& mode) {
    if (mode == "directed") return true;
    if (mode == "undirected") return false;
    throw std::invalid_argument(
        "mode must be \"directed\" or \"undirected\", got \"" + mode + "\"");
}

Fraction parse_fraction(const std::string& text) {
    Fraction f;
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            f.num = std::stoll(text);
            f.den = 1;
        } else {
            f.num = std::stoll(text.substr(0, slash));
            f.den = std::stoll(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse ratio bound \"" + text + "\"");
    }
    if (f.num < 0 || f.den <= 0) {
        throw std::invalid_argument("ratio bound must be nonnegative");
    }
    return f;
}

void emit(const json& j, const std::string& output_path) {
    const std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!output_path.empty()) {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            throw std::invalid_argument("cannot write " + output_path);
        }
        out << text;
        if (!out) {
            throw std::invalid_argument("cannot write " + output_path);
        }
    }
}

json bottom() {
    json j;
    j["result"] = "bottom";
    return j;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{
        "Restricted cycle covers: approximation, exact solving, "
        "decomposition, and reduction tooling"};
    app.require_subcommand(1);

    std::string output_path;
    std::string length_text;
    std::string mode_text = "undirected";
    std::string graph_path, cover_path, clamp_path, gadget_path, source_path;
    std::string instance_path, artifact_path, spec_path, algorithm;
    std::string bound_text;
    std::vector<std::string> length_texts;
    long long n_value = 0;
    int k_max = 20;
    int budget = 6;
    int search_max_vertices = 12;
    int search_budget = 2000;
    unsigned long long search_seed = 1;
    bool decide = false;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", output_path,
                        "Also write the JSON result to this file");
    };

    // --- admissible ---
    auto* cmd_admissible = app.add_subcommand(
        "admissible", "Can n vertices be partitioned into allowed lengths?");
    cmd_admissible->add_option("--L", length_text, "Allowed lengths")
        ->required();
    cmd_admissible->add_option("--mode", mode_text,
                               "directed|undirected (default undirected)");
    cmd_admissible->add_option("--n", n_value, "Vertex count")->required();
    add_output(cmd_admissible);
    cmd_admissible->callback([&] {
        const LengthSet L = parse_length_set(length_text, parse_mode(mode_text));
        json j;
        j["n"] = n_value;
        j["lengths"] = format_length_set(L);
        j["admissible"] = is_admissible(n_value, L);
        emit(j, output_path);
    });

    // --- plan ---
    auto* cmd_plan = app.add_subcommand(
        "plan", "Deterministic partition of n into allowed lengths");
    cmd_plan->add_option("--L", length_text, "Allowed lengths")->required();
    cmd_plan->add_option("--mode", mode_text,
                         "directed|undirected (default undirected)");
    cmd_plan->add_option("--n", n_value, "Vertex count")->required();
    add_output(cmd_plan);
    cmd_plan->callback([&] {
        const LengthSet L = parse_length_set(length_text, parse_mode(mode_text));
        if (!is_admissible(n_value, L)) {
            emit(bottom(), output_path);
            return;
        }
        json j;
        j["n"] = n_value;
        j["lengths"] = format_length_set(L);
        j["plan"] = length_plan(n_value, L).lengths;
        emit(j, output_path);
    });

    // --- solve-approx ---
    auto* cmd_approx = app.add_subcommand(
        "solve-approx",
        "Constant-factor approximation of the heaviest restricted cover");
    cmd_approx->add_option("--graph", graph_path, "Complete-graph JSON file")
        ->required();
    cmd_approx->add_option("--L", length_text, "Allowed lengths")->required();
    add_output(cmd_approx);
    cmd_approx->callback([&] {
        const WeightedCompleteGraph g =
            complete_graph_from_json(load_json_file(graph_path));
        const LengthSet L = parse_length_set(length_text, g.directed);
        const std::optional<ApproxResult> result =
            g.directed ? approx_directed(g, L) : approx_undirected(g, L);
        emit(result ? to_json(*result) : bottom(), output_path);
    });

    // --- solve-exact ---
    auto* cmd_exact = app.add_subcommand(
        "solve-exact",
        "Exact heaviest restricted cover by subset dynamic programming");
    cmd_exact->add_option("--graph", graph_path, "Complete-graph JSON file")
        ->required();
    cmd_exact->add_option("--L", length_text, "Allowed lengths")->required();
    add_output(cmd_exact);
    cmd_exact->callback([&] {
        const WeightedCompleteGraph g =
            complete_graph_from_json(load_json_file(graph_path));
        const LengthSet L = parse_length_set(length_text, g.directed);
        const auto cover = exact_best_cover(g, L);
        if (!cover) {
            emit(bottom(), output_path);
            return;
        }
        json j;
        j["cover"] = cover->cycles;
        j["weight"] = cover_weight(g, *cover);
        emit(j, output_path);
    });

    // --- decompose ---
    auto* cmd_decompose = app.add_subcommand(
        "decompose", "Split a cover into paths plus an alternation matching");
    cmd_decompose->add_option("--graph", graph_path, "Complete-graph JSON file")
        ->required();
    cmd_decompose->add_option("--cover", cover_path, "Cover JSON file")
        ->required();
    add_output(cmd_decompose);
    cmd_decompose->callback([&] {
        const WeightedCompleteGraph g =
            complete_graph_from_json(load_json_file(graph_path));
        const CycleCover c = cover_from_json(load_json_file(cover_path));
        json j;
        j["pack"] = to_json(decompose_cover(g, c));
        j["matching"] = to_json(decompose_to_matching(g, c));
        emit(j, output_path);
    });

    // --- verify-clamp ---
    auto* cmd_vclamp =
        app.add_subcommand("verify-clamp", "Check the clamp axioms");
    cmd_vclamp->add_option("--clamp", clamp_path, "Clamp JSON file")->required();
    cmd_vclamp->add_option("--L", length_text, "Allowed lengths")->required();
    cmd_vclamp->add_option("--k-max", k_max,
                           "Largest external-path length checked (default 20)");
    add_output(cmd_vclamp);
    cmd_vclamp->callback([&] {
        const ClampCandidate cand = clamp_from_json(load_json_file(clamp_path));
        const LengthSet L = parse_length_set(length_text, cand.graph.directed);
        emit(to_json(verify_clamp(cand, L, k_max)), output_path);
    });

    // --- verify-gadget ---
    auto* cmd_vgadget =
        app.add_subcommand("verify-gadget", "Check the gadget pattern");
    cmd_vgadget->add_option("--gadget", gadget_path, "Gadget JSON file")
        ->required();
    cmd_vgadget->add_option("--L", length_text, "Allowed lengths")->required();
    cmd_vgadget->add_option(
        "--budget", budget, "Largest external-path length checked (default 6)");
    add_output(cmd_vgadget);
    cmd_vgadget->callback([&] {
        const GadgetCandidate cand =
            gadget_from_json(load_json_file(gadget_path));
        const LengthSet L = parse_length_set(length_text, cand.graph.directed);
        emit(to_json(verify_gadget(cand, L, budget)), output_path);
    });

    // --- search-clamp ---
    auto* cmd_search = app.add_subcommand(
        "search-clamp", "Find a verified clamp by templates plus random search");
    cmd_search->add_option("--L", length_text, "Allowed lengths")->required();
    cmd_search->add_option("--mode", mode_text,
                           "directed|undirected (default undirected)");
    cmd_search->add_option("--max-vertices", search_max_vertices,
                           "Largest candidate size (default 12)");
    cmd_search->add_option("--budget", search_budget,
                           "Random candidates tried (default 2000)");
    cmd_search->add_option("--seed", search_seed, "Search seed (default 1)");
    add_output(cmd_search);
    cmd_search->callback([&] {
        const LengthSet L = parse_length_set(length_text, parse_mode(mode_text));
        const auto found =
            search_clamp(L, search_max_vertices, search_budget, search_seed);
        if (!found) {
            json j;
            j["result"] = "none";
            emit(j, output_path);
            return;
        }
        emit(to_json(*found), output_path);
    });

    // --- build-rvc ---
    auto* cmd_rvc = app.add_subcommand(
        "build-rvc",
        "Reduce minimum vertex cover on a regular graph to heaviest-cover");
    cmd_rvc->add_option("--source", source_path, "Source sparse-graph JSON")
        ->required();
    cmd_rvc->add_option("--gadget", gadget_path, "Gadget JSON file")->required();
    cmd_rvc->add_option("--L", length_text, "Allowed lengths")->required();
    add_output(cmd_rvc);
    cmd_rvc->callback([&] {
        const SparseGraph h = sparse_graph_from_json(load_json_file(source_path));
        const GadgetCandidate gadget =
            gadget_from_json(load_json_file(gadget_path));
        const LengthSet L = parse_length_set(length_text, gadget.graph.directed);
        emit(artifact_to_json(build_rvc_instance(h, L, gadget)), output_path);
    });

    // --- build-xlc ---
    auto* cmd_xlc = app.add_subcommand(
        "build-xlc", "Reduce exact cover by fixed-size sets to cover existence");
    cmd_xlc->add_option("--instance", instance_path,
                        "JSON file {\"universe\":int,\"sets\":[[...]]}")
        ->required();
    cmd_xlc->add_option("--clamp", clamp_path, "Clamp JSON file")->required();
    cmd_xlc->add_option("--L", length_text, "Allowed lengths")->required();
    cmd_xlc->add_flag("--decide", decide,
                      "Also search the built instance for a cover");
    add_output(cmd_xlc);
    cmd_xlc->callback([&] {
        const json inst = load_json_file(instance_path);
        int universe = 0;
        std::vector<std::vector<int>> sets;
        try {
            universe = inst.at("universe").get<int>();
            sets = inst.at("sets").get<std::vector<std::vector<int>>>();
        } catch (const json::exception& e) {
            throw std::invalid_argument(
                std::string("malformed set-system JSON: ") + e.what());
        }
        const ClampCandidate clamp = clamp_from_json(load_json_file(clamp_path));
        const LengthSet L = parse_length_set(length_text, /*directed=*/true);
        const ReductionArtifact art = build_xlc_instance(universe, sets, clamp, L);
        json j = artifact_to_json(art);
        if (decide) {
            const auto cover = find_cover(art.xlc_graph, L);
            j["has_cover"] = cover.has_value();
            j["cover"] = cover ? json(cover->cycles) : json(nullptr);
        }
        emit(j, output_path);
    });

    // --- legalize ---
    auto* cmd_legalize = app.add_subcommand(
        "legalize",
        "Rewrite a cover of a vertex-cover reduction instance into legal form");
    cmd_legalize
        ->add_option("--artifact", artifact_path, "Artifact JSON from build-rvc")
        ->required();
    cmd_legalize->add_option("--cover", cover_path, "Cover JSON file")
        ->required();
    add_output(cmd_legalize);
    cmd_legalize->callback([&] {
        const json aj = load_json_file(artifact_path);
        std::string kind;
        try {
            kind = aj.at("kind").get<std::string>();
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("malformed artifact JSON: ") +
                                        e.what());
        }
        if (kind != "vertex-cover") {
            throw std::invalid_argument(
                "legalize needs a vertex-cover reduction artifact");
        }
        SparseGraph h;
        GadgetCandidate gadget;
        int lambda = 0;
        bool directed = false;
        try {
            h = sparse_graph_from_json(aj.at("source"));
            gadget = gadget_from_json(aj.at("gadget"));
            lambda = aj.at("lambda").get<int>();
            directed = aj.at("directed").get<bool>();
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("malformed artifact JSON: ") +
                                        e.what());
        }
        const ReductionArtifact art = build_rvc_instance(
            h, make_length_set({}, lambda, directed), gadget);
        // The stored instance must agree with the rebuilt one.
        if (aj.contains("instance")) {
            const WeightedCompleteGraph stored =
                complete_graph_from_json(aj.at("instance"));
            if (stored.directed != art.instance.directed ||
                stored.n != art.instance.n || stored.w != art.instance.w) {
                throw std::invalid_argument(
                    "artifact instance does not match its parameters");
            }
        }
        const CycleCover c = cover_from_json(load_json_file(cover_path));
        const CycleCover legal = legalize(art, c);
        json j;
        j["cover"] = legal.cycles;
        j["weight"] = cover_weight(art.instance, legal);
        j["vertex_cover"] = extract_vertex_cover(art, legal);
        emit(j, output_path);
    });

    // --- ratio-bench ---
    auto* cmd_ratio = app.add_subcommand(
        "ratio-bench",
        "Compare the approximation against exact optima on seeded instances");
    cmd_ratio->add_option("--spec", spec_path, "Generator-spec JSON file")
        ->required();
    cmd_ratio
        ->add_option("--algorithm", algorithm, "undirected|directed")
        ->required();
    cmd_ratio
        ->add_option("--L", length_texts,
                     "Allowed lengths (repeat for a family)")
        ->required();
    cmd_ratio->add_option("--bound", bound_text,
                          "Global ratio cap as a fraction, e.g. 8/3");
    add_output(cmd_ratio);
    cmd_ratio->callback([&] {
        const GeneratorSpec spec =
            generator_spec_from_json(load_json_file(spec_path));
        const bool directed = parse_mode(algorithm == "directed" ? "directed"
                                         : algorithm == "undirected"
                                             ? "undirected"
                                             : algorithm);
        std::vector<LengthSet> family;
        for (const std::string& text : length_texts) {
            family.push_back(parse_length_set(text, directed));
        }
        Fraction bound =
            directed ? Fraction{5, 2} : Fraction{2, 1};
        if (!bound_text.empty()) bound = parse_fraction(bound_text);
        emit(to_json(ratio_harness(spec, algorithm, family, bound)),
             output_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace cyclecover
