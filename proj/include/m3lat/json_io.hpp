#pragma once

// JSON forms:
//   FcSet    {"universe": "omega" | {"finite": n}, "tag": "fin"|"cofin", "support": [..]}
//   Triple   [FcSet, FcSet, FcSet]
//   lattice  {"n": n, "leq": [[0|1, ...], ...]}
//   BanMap   {"table": [..]}
//   Subspace {"modulus": p, "dim": d, "basis": [[..], ..]}  (canonical echelon rows)

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "m3lat/banfn.hpp"
#include "m3lat/finlat.hpp"
#include "m3lat/subspace.hpp"
#include "m3lat/triples.hpp"

namespace m3lat {

using nlohmann::json;

/// Malformed input. what() names the offending field path or the line and
/// column of a syntax error.
class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses text, reporting syntax errors as "line L, column C: ...".
json parse_json_text(const std::string& text);

json to_json(const Universe& u);
json to_json(const FcSet& s);
json to_json(const Triple& t);
json to_json(const FiniteLattice& l);
json to_json(const BanMap& f);
json to_json(const Subspace& w);

Universe universe_from_json(const json& j, const std::string& path = "universe");
FcSet fcset_from_json(const json& j, const std::string& path = "$");
Triple triple_from_json(const json& j, const std::string& path = "$");
FiniteLattice lattice_from_json(const json& j, const std::string& path = "$");
BanMap banmap_from_json(const json& j, const std::string& path = "$");
Subspace subspace_from_json(const json& j, const std::string& path = "$");

}  // namespace m3lat
