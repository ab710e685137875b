#pragma once

// JSON serialization for the public data model. Formats:
//   complete graph  {"directed":bool,"n":int,"weights":[[int]]}
//   sparse graph    {"directed":bool,"n":int,"edges":[[u,v]|[u,v,w]]}
//   length set      {"finite":[int],"tail":int|null,"mode":"directed"|"undirected"}
//   cover           {"cycles":[[int]]}
//   path pack       {"singles":[[u,v]],"doubles":[[u,v,w]],"isolated":[v],
//                    "kept_weight":int}
//   approx result   {"cover":[[int]],"weight":int,"branch":str,
//                    "pieces_kept_weight":int}
//   clamp file      sparse graph + {"connectors":[u,v],"weighted":bool}
//   gadget file     sparse graph + {"connectors":[x,y,z],"weighted":bool}

#include <string>

#include <json.hpp>

#include "cyclecover/approx.hpp"
#include "cyclecover/decompose.hpp"
#include "cyclecover/graph.hpp"
#include "cyclecover/lengths.hpp"
#include "cyclecover/oracle.hpp"
#include "cyclecover/reductions.hpp"

namespace cyclecover {

nlohmann::json to_json(const WeightedCompleteGraph& g);
WeightedCompleteGraph complete_graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SparseGraph& g);
SparseGraph sparse_graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LengthSet& L);
LengthSet length_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CycleCover& c);
CycleCover cover_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Matching& m);
nlohmann::json to_json(const PathPack& p);
PathPack path_pack_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ApproxResult& r);

nlohmann::json to_json(const ClampCandidate& c);
ClampCandidate clamp_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClampVerdict& v);

nlohmann::json to_json(const GadgetCandidate& c);
GadgetCandidate gadget_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GadgetVerdict& v);

nlohmann::json to_json(const RatioReport& r);
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);

// Instance-facing summary of a reduction artifact (instance graph plus the
// numeric parameters; registries are reconstructed by rebuilding).
nlohmann::json artifact_to_json(const ReductionArtifact& a);

// File helpers; throw std::invalid_argument with the path on failure.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace cyclecover
