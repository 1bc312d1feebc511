#include "rumin/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace rumin {

namespace {

Rational rational_from(const Json& num, const Json& den)
{
  Rational r(num.get<std::string>() + "/" + den.get<std::string>());
  r.canonicalize();
  return r;
}

}  // namespace

Json env_to_json(const EnvElement& a)
{
  Json out = Json::array();
  for (const auto& [I, c] : a.terms())
    out.push_back({{"multi_index", I}, {"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
  return out;
}

EnvElement env_from_json(int n, const Json& j)
{
  EnvElement a(n);
  for (const auto& term : j) {
    const auto I = term.at("multi_index").get<MultiIndex>();
    if (static_cast<int>(I.size()) != 2 * n + 1) throw std::invalid_argument("env_from_json: multi-index length");
    a.add_term(I, rational_from(term.at("numerator"), term.at("denominator")));
  }
  return a;
}

Json polynomial_to_json(const Polynomial& p)
{
  Json out = Json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({{"exponents", e}, {"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
  return out;
}

Polynomial polynomial_from_json(int nvars, const Json& j)
{
  Polynomial p(nvars);
  for (const auto& term : j) {
    const auto e = term.at("exponents").get<Exponents>();
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("polynomial_from_json: exponent length");
    p.add_term(e, rational_from(term.at("numerator"), term.at("denominator")));
  }
  return p;
}

Json point_to_json(const RealPoint& p)
{
  Json out = Json::array();
  for (int k = 0; k < 2 * p.n() + 1; ++k) out.push_back(p.coord(k));
  return out;
}

Json point_to_json(const ExactPoint& p)
{
  Json out = Json::array();
  for (int k = 0; k < 2 * p.n() + 1; ++k) out.push_back(p.coord(k).get_str());
  return out;
}

RealPoint real_point_from_json(const Json& j)
{
  if (!j.is_array() || j.size() % 2 == 0) throw std::invalid_argument("point: expected an odd-length array");
  const int n = static_cast<int>(j.size() / 2);
  RealPoint p(n);
  for (int k = 0; k <= 2 * n; ++k) p.coord(k) = j[k].get<double>();
  return p;
}

ExactPoint exact_point_from_json(const Json& j)
{
  if (!j.is_array() || j.size() % 2 == 0) throw std::invalid_argument("point: expected an odd-length array");
  const int n = static_cast<int>(j.size() / 2);
  ExactPoint p(n);
  for (int k = 0; k <= 2 * n; ++k) {
    Rational r(j[k].get<std::string>());
    r.canonicalize();
    p.coord(k) = r;
  }
  return p;
}

Json operator_to_json(const OperatorMatrix& A)
{
  Json rows = Json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(env_to_json(A(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", A.n()},
          {"source_degree", A.source_degree()},
          {"target_degree", A.target_degree()},
          {"rows", A.rows()},
          {"cols", A.cols()},
          {"entries", std::move(rows)}};
}

Json check_to_json(const CheckResult& c)
{
  Json j = {{"check", c.name}, {"n", c.n}};
  if (c.h >= 0) j["h"] = c.h;
  j["status"] = c.passed ? "exact-zero" : "nonzero";
  j["passed"] = c.passed;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows)
{
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  char buf[32];
  for (const auto& r : rows) {
    if (r.size() != header.size()) throw std::invalid_argument("write_csv: row length");
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", r[i]);
      os << (i ? "," : "") << buf;
    }
    os << '\n';
  }
}

}  // namespace rumin
