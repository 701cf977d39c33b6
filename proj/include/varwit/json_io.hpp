#pragma once

#include <json.hpp>

#include "varwit/group.hpp"
#include "varwit/lie.hpp"

namespace varwit {

using Json = nlohmann::ordered_json;

inline Vector vector_from_json(const FieldSpec& f, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("json: expected an array");
  Vector v;
  for (const auto& x : j) {
    if (x.is_number_integer())
      v.push_back(Scalar::of_int(f, x.get<std::int64_t>()));
    else
      v.push_back(Scalar::parse(f, x.get<std::string>()));
  }
  return v;
}

inline Json vector_to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

inline ExactMatrix matrix_from_json(const FieldSpec& f, const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("json: expected a non-empty array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(f, r));
  return ExactMatrix::from_rows(f, rows, rows[0].size());
}

inline Json matrix_to_json(const ExactMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vector_to_json(m.row(i)));
  return j;
}

/// {"field": "Q"|"GF(p)", "dim": n, "labels": [...], "brackets":
///  [{"i": i, "j": j, "coeffs": [{"k": k, "c": "scalar"}]}]}
/// with 0-based indices and only i<j entries.
inline LieAlgebra lie_from_json(const Json& j) {
  FieldSpec f = FieldSpec::parse(j.at("field").get<std::string>());
  std::size_t n = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n)
      throw std::invalid_argument("lie json: label count does not match dim");
  }
  std::vector<LieAlgebra::BracketEntry> entries;
  if (j.contains("brackets")) {
    for (const auto& b : j.at("brackets")) {
      std::size_t i = b.at("i").get<std::size_t>();
      std::size_t jj = b.at("j").get<std::size_t>();
      if (i >= jj)
        throw std::invalid_argument("lie json: bracket entries require i < j");
      if (jj >= n)
        throw std::invalid_argument("lie json: bracket index out of range");
      LieAlgebra::BracketEntry e{i, jj, {}};
      for (const auto& c : b.at("coeffs")) {
        std::size_t k = c.at("k").get<std::size_t>();
        if (k >= n)
          throw std::invalid_argument("lie json: coefficient index out of range");
        const auto& cv = c.at("c");
        Scalar s = cv.is_number_integer()
                       ? Scalar::of_int(f, cv.get<std::int64_t>())
                       : Scalar::parse(f, cv.get<std::string>());
        e.coeffs.emplace_back(k, s);
      }
      entries.push_back(std::move(e));
    }
  }
  return LieAlgebra::from_brackets(f, n, entries, std::move(labels));
}

inline Json lie_to_json(const LieAlgebra& L) {
  Json j;
  j["field"] = L.field().str();
  j["dim"] = L.dim();
  Json labels = Json::array();
  for (std::size_t i = 0; i < L.dim(); ++i) labels.push_back(L.label(i));
  j["labels"] = labels;
  Json brackets = Json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t jj = i + 1; jj < L.dim(); ++jj) {
      Json coeffs = Json::array();
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (!L.c(i, jj, k).is_zero())
          coeffs.push_back({{"k", k}, {"c", L.c(i, jj, k).str()}});
      if (!coeffs.empty())
        brackets.push_back({{"i", i}, {"j", jj}, {"coeffs", coeffs}});
    }
  j["brackets"] = brackets;
  return j;
}

/// {"p": 5, "n": 3, "generators": {"x": [[...]], ...}} with integer entries.
inline MatrixGroup group_from_json(const Json& j) {
  std::int64_t p = j.at("p").get<std::int64_t>();
  std::size_t n = j.at("n").get<std::size_t>();
  std::vector<std::pair<std::string, GpMat>> gens;
  for (const auto& [label, rows] : j.at("generators").items()) {
    auto raw = rows.get<std::vector<std::vector<std::int64_t>>>();
    if (raw.size() != n)
      throw std::invalid_argument("group json: generator '" + label +
                                  "' has wrong size");
    gens.emplace_back(label, GpMat::from_rows(p, raw));
  }
  return MatrixGroup(p, n, std::move(gens));
}

inline Json group_to_json(const MatrixGroup& G) {
  Json j;
  j["p"] = G.p();
  j["n"] = G.n();
  Json gens = Json::object();
  for (const auto& [label, g] : G.generators()) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < G.n(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < G.n(); ++k) row.push_back(g.at(i, k));
      rows.push_back(row);
    }
    gens[label] = rows;
  }
  j["generators"] = gens;
  return j;
}

}  // namespace varwit
