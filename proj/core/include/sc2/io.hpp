#pragma once

// JSON (de)serialization. Every document carries "format": "sc2/1"; object
// keys come out sorted, so output is byte-stable.

#include "sc2/decide.hpp"
#include "sc2/obstructions.hpp"
#include "sc2/regular_rep.hpp"
#include "sc2/splitting.hpp"

#include "json.hpp"

#include <string>

namespace sc2 {

using Json = nlohmann::json;

inline constexpr const char* kFormat = "sc2/1";

Json to_json(const Complex2& c);
Complex2 complex_from_json(const Json& j);

Json to_json(const Matroid& m, std::size_t circuit_bound = kDefaultCircuitBound);
/// Accepts {"field", "ground", "rows"}; rows hold integers or rational strings.
Matroid matroid_from_json(const Json& j);

Json to_json(const IntegerMatrix& a);
IntegerMatrix matrix_from_json(const Json& j);

Json to_json(const Complex2& c, const RotationSystem& s);
RotationSystem rotation_from_json(const Complex2& c, const Json& j);

/// {vertices, edges: [{face, endpoints}]}; vertices are named "s{i}".
Json dual_graph_to_json(const Multigraph& g);
Multigraph dual_graph_from_json(const Json& j);

/// Realizations use the same layout with element ids as edge labels.
Json graph_to_json(const Multigraph& g);

Json to_json(const LinkGraph& l, const Complex2& c);
Json to_json(const SplitResult& r);
Json to_json(const Constraint& k);
Json to_json(const Verdict& v);
Certificate certificate_from_json(const Json& j);
Json to_json(const AnFactsReport& r);

Json read_json_file(const std::string& path);
/// Writes through a temporary file and a rename.
void write_json_file(const std::string& path, const Json& j);

}  // namespace sc2
