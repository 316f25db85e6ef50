#include "m3lat/json_io.hpp"

#include <algorithm>

namespace m3lat {

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  throw SchemaError(path + ": " + msg);
}

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) schema_fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t natural(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    schema_fail(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array");
  return j;
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column.
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

json to_json(const Universe& u) {
  if (!u.is_finite()) return "omega";
  return json{{"finite", u.size()}};
}

json to_json(const FcSet& s) {
  return json{{"universe", to_json(s.universe())},
              {"tag", s.tag() == Tag::Fin ? "fin" : "cofin"},
              {"support", s.support()}};
}

json to_json(const Triple& t) { return json::array({to_json(t.a), to_json(t.b), to_json(t.c)}); }

json to_json(const FiniteLattice& l) {
  json rows = json::array();
  for (Elem x = 0; x < l.size(); ++x) {
    json row = json::array();
    for (Elem y = 0; y < l.size(); ++y) row.push_back(l.leq(x, y) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return json{{"n", l.size()}, {"leq", std::move(rows)}};
}

json to_json(const BanMap& f) { return json{{"table", f.table}}; }

json to_json(const Subspace& w) {
  return json{{"modulus", w.space().field.modulus()}, {"dim", w.space().dim}, {"basis", w.basis()}};
}

Universe universe_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "omega") return Universe::omega();
    schema_fail(path, "expected \"omega\" or {\"finite\": n}");
  }
  return Universe::finite(natural(field(j, path, "finite"), path + ".finite"));
}

FcSet fcset_from_json(const json& j, const std::string& path) {
  const Universe u = universe_from_json(field(j, path, "universe"), path + ".universe");
  const json& tag_j = field(j, path, "tag");
  if (!tag_j.is_string() || (tag_j != "fin" && tag_j != "cofin")) {
    schema_fail(path + ".tag", "expected \"fin\" or \"cofin\"");
  }
  const json& sup = array(field(j, path, "support"), path + ".support");
  std::vector<Index> support;
  for (std::size_t i = 0; i < sup.size(); ++i) {
    support.push_back(natural(sup[i], path + ".support[" + std::to_string(i) + "]"));
  }
  try {
    return FcSet(u, tag_j == "fin" ? Tag::Fin : Tag::Cofin, std::move(support));
  } catch (const std::out_of_range& e) {
    schema_fail(path + ".support", e.what());
  }
}

Triple triple_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) schema_fail(path, "expected an array of three FcSets");
  FcSet a = fcset_from_json(j[0], path + "[0]");
  FcSet b = fcset_from_json(j[1], path + "[1]");
  FcSet c = fcset_from_json(j[2], path + "[2]");
  try {
    return Triple(std::move(a), std::move(b), std::move(c));
  } catch (const UniverseMismatch& e) {
    schema_fail(path, e.what());
  }
}

FiniteLattice lattice_from_json(const json& j, const std::string& path) {
  const std::uint64_t n = natural(field(j, path, "n"), path + ".n");
  const json& rows = array(field(j, path, "leq"), path + ".leq");
  if (rows.size() != n) schema_fail(path + ".leq", "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_path = path + ".leq[" + std::to_string(i) + "]";
    const json& row = array(rows[i], row_path);
    if (row.size() != n) schema_fail(row_path, "expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t v = natural(row[k], row_path + "[" + std::to_string(k) + "]");
      if (v > 1) schema_fail(row_path + "[" + std::to_string(k) + "]", "expected 0 or 1");
      leq[i][k] = v == 1;
    }
  }
  return FiniteLattice::from_order(std::move(leq));
}

BanMap banmap_from_json(const json& j, const std::string& path) {
  const json& t = array(field(j, path, "table"), path + ".table");
  BanMap f;
  for (std::size_t i = 0; i < t.size(); ++i) {
    f.table.push_back(natural(t[i], path + ".table[" + std::to_string(i) + "]"));
  }
  return f;
}

Subspace subspace_from_json(const json& j, const std::string& path) {
  const std::uint64_t p = natural(field(j, path, "modulus"), path + ".modulus");
  const std::uint64_t dim = natural(field(j, path, "dim"), path + ".dim");
  const json& rows = array(field(j, path, "basis"), path + ".basis");
  std::vector<Vec> vectors;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string row_path = path + ".basis[" + std::to_string(i) + "]";
    const json& row = array(rows[i], row_path);
    if (row.size() != dim) schema_fail(row_path, "expected " + std::to_string(dim) + " entries");
    Vec v;
    for (std::size_t k = 0; k < dim; ++k) {
      v.push_back(static_cast<Scalar>(natural(row[k], row_path + "[" + std::to_string(k) + "]")));
    }
    vectors.push_back(std::move(v));
  }
  try {
    return span(VectorSpace{PrimeField(static_cast<Scalar>(p)), dim}, vectors);
  } catch (const std::invalid_argument& e) {
    schema_fail(path, e.what());
  }
}

}  // namespace m3lat
