#include "wzw/json_io.hpp"

namespace wzw {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json to_json(const SparseMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (const auto& [c, v] : m.row(i)) entries.push_back(Json::array({i, c, v.str()}));
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const QuotientMap& q) {
  Json j;
  j["ambient_dim"] = q.ambient_dim;
  j["quotient_dim"] = q.quotient_dim;
  j["projection"] = to_json(q.projection);
  j["section"] = to_json(q.section);
  return j;
}

Rational rational_from_json(const Json& j) {
  return Rational::from_string(j.get<std::string>());
}

}  // namespace wzw
