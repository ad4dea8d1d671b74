#include "tsf/json_io.hpp"

#include <stdexcept>

namespace tsf {

Json to_json(const SymFunc &f) {
  Json out = Json::object();
  for (const auto &[lambda, c] : f.coeffs())
    out[lambda.to_string()] = to_string(c);
  return out;
}

Json to_json(const TransitionMatrix &m) {
  Json order = Json::array();
  for (const auto &lambda : enumerate_partitions(m.degree))
    order.push_back(lambda.to_string());
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.entries.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.entries.cols(); ++j)
      row.push_back(to_string(m.entries(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.degree},
              {"source", m.source.to_string()},
              {"target", m.target.to_string()},
              {"order", std::move(order)},
              {"entries", std::move(rows)}};
}

Json to_json(const CycNum &x) {
  Json coeffs = Json::array();
  for (const auto &c : x.coeffs())
    coeffs.push_back(to_string(c));
  return Json{{"order", x.order()}, {"coeffs", std::move(coeffs)}};
}

TransitionMatrix transition_from_json(const Json &j) {
  TransitionMatrix m;
  m.degree = j.at("n").get<int>();
  m.source = BasisTag::parse(j.at("source").get<std::string>());
  m.target = BasisTag::parse(j.at("target").get<std::string>());
  const auto expected = enumerate_partitions(m.degree);
  const auto &order = j.at("order");
  if (order.size() != expected.size())
    throw std::invalid_argument("matrix order header has the wrong length");
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (Partition::parse(order[i].get<std::string>()) != expected[i])
      throw std::invalid_argument("matrix order header is not canonical");
  const auto &rows = j.at("entries");
  m.entries = RatMatrix(expected.size(), expected.size());
  if (rows.size() != expected.size())
    throw std::invalid_argument("matrix has the wrong number of rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != expected.size())
      throw std::invalid_argument("matrix row has the wrong length");
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      m.entries(i, k) = parse_rational(rows[i][k].get<std::string>());
  }
  return m;
}

CycNum cycnum_from_json(const Json &j) {
  const int order = j.at("order").get<int>();
  std::vector<Rational> coeffs;
  for (const auto &c : j.at("coeffs"))
    coeffs.push_back(parse_rational(c.get<std::string>()));
  if (coeffs.size() != static_cast<std::size_t>(euler_phi(order)))
    throw std::invalid_argument("coefficient vector length must be phi(order)");
  return CycNum::from_coeffs(order, std::move(coeffs));
}

} // namespace tsf
