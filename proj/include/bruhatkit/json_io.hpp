#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "bruhatkit/colmatrix.hpp"
#include "bruhatkit/errors.hpp"
#include "bruhatkit/filtration.hpp"
#include "bruhatkit/flag.hpp"
#include "bruhatkit/permutation.hpp"
#include "bruhatkit/scalar.hpp"

namespace bruhatkit {

using Json = nlohmann::json;

// Scalars travel as exact strings ("3", "2/3", "4 mod 5"); plain JSON
// integers are accepted on input.
inline Scalar scalar_from_json(const Ring& ring, const Json& j) {
  if (j.is_number_integer()) return Scalar::of(ring, j.get<long long>());
  if (j.is_string()) return Scalar::parse(ring, j.get<std::string>());
  throw ParseError("expected a scalar string or integer, got " + j.dump());
}

inline Json scalar_to_json(const Scalar& s) { return s.str(); }

// One-line shorthand [3,1,2] for identity tails; {"patch": ..., "tail": ...}
// otherwise.  Both forms are accepted on input.
inline Json permutation_to_json(const Permutation& sigma) {
  if (sigma.is_finitely_supported()) {
    return Json(sigma.one_line(sigma.max_patch_position()));
  }
  Json patch = Json::object();
  for (const auto& [n, v] : sigma.patch()) patch[std::to_string(n)] = v;
  return Json{{"patch", patch}, {"tail", tail_rule_name(sigma.tail())}};
}

inline Permutation permutation_from_json(const Json& j) {
  if (j.is_array()) {
    std::vector<int> images;
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw ParseError("one-line entries must be integers");
      images.push_back(v.get<int>());
    }
    return Permutation::from_one_line(images);
  }
  if (j.is_object()) {
    TailRule tail = TailRule::identity;
    if (j.contains("tail")) {
      const std::string name = j.at("tail").get<std::string>();
      if (name == "identity") {
        tail = TailRule::identity;
      } else if (name == "paper-rho") {
        tail = TailRule::paper_rho;
      } else {
        throw ParseError("unknown tail rule '" + name + "'");
      }
    }
    std::map<int, int> patch;
    if (j.contains("patch")) {
      for (const auto& [key, value] : j.at("patch").items()) {
        patch[std::stoi(key)] = value.get<int>();
      }
    }
    return Permutation::from_patch(patch, tail);
  }
  throw ParseError("expected a one-line array or a patch object, got " + j.dump());
}

inline Json colmatrix_to_json(const ColMatrix& g) {
  Json block = Json::array();
  for (int i = 1; i <= g.window(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= g.window(); ++j) row.push_back(scalar_to_json(g.entry(i, j)));
    block.push_back(row);
  }
  return Json{{"field", g.ring().name()}, {"window", g.window()}, {"block", block}};
}

inline ColMatrix colmatrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("block")) {
    throw ParseError("matrix JSON needs \"field\" and \"block\" members");
  }
  const Ring ring = Ring::parse(j.at("field").get<std::string>());
  const Json& block = j.at("block");
  if (!block.is_array()) throw ParseError("\"block\" must be an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& jrow : block) {
    std::vector<Scalar> row;
    for (const auto& cell : jrow) row.push_back(scalar_from_json(ring, cell));
    rows.push_back(std::move(row));
  }
  if (j.contains("window") && j.at("window").get<int>() != static_cast<int>(rows.size())) {
    throw ParseError("declared window does not match the block size");
  }
  try {
    return ColMatrix(ring, std::move(rows));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline Json flag_to_json(const Flag& f) {
  Json cols = Json::array();
  const ColMatrix m = f.matrix();
  for (int j = 1; j <= f.dimension(); ++j) {
    Json col = Json::array();
    for (int i = 1; i <= f.dimension(); ++i) col.push_back(scalar_to_json(m.entry(i, j)));
    cols.push_back(col);
  }
  return Json{{"field", f.ring().name()}, {"columns", cols}};
}

inline Flag flag_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("columns")) {
    throw ParseError("flag JSON needs \"field\" and \"columns\" members");
  }
  const Ring ring = Ring::parse(j.at("field").get<std::string>());
  std::vector<Vector> columns;
  for (const auto& jcol : j.at("columns")) {
    Vector col;
    for (const auto& cell : jcol) col.push_back(scalar_from_json(ring, cell));
    columns.push_back(std::move(col));
  }
  try {
    return Flag(ring, std::move(columns));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

// Nonzero cells of a gradation table, with their generator vectors.
inline Json gradation_to_json(const GradationTable& table) {
  Json cells = Json::array();
  for (const auto& p : table.poset().elements()) {
    const Subspace& cell = table.at(p);
    if (cell.dim() == 0) continue;
    Json basis = Json::array();
    for (const auto& v : cell.basis()) {
      Json vec = Json::array();
      for (const auto& s : v) vec.push_back(scalar_to_json(s));
      basis.push_back(vec);
    }
    cells.push_back(Json{{"i", p.i}, {"j", p.j}, {"basis", basis}});
  }
  return cells;
}

}  // namespace bruhatkit
