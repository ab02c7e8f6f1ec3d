#include "zform/series.hpp"

namespace zform {

Series to_const_series(const LaurentSeries& s) {
  return map_coefficients(s, [](const NLaurent& c) { return c.to_const(); });
}

Series substitute_N(const Series& s, const Rational& n) {
  return map_coefficients(s, [&](const ConstScalar& c) { return c.substitute_N(n); });
}

Series substitute_N(const LaurentSeries& s, const Rational& n) {
  return map_coefficients(s, [&](const NLaurent& c) { return ConstScalar(c.substitute_N(n)); });
}

bool has_half_N_power(const Series& s) {
  for (const auto& t : s.terms())
    if (t.second.has_half_N_power()) return true;
  return false;
}

bool is_rational(const Series& s) {
  for (const auto& t : s.terms())
    if (!t.second.is_rational()) return false;
  return true;
}

Series bind_couplings(const Series& s, const std::map<CouplingId, Rational>& values) {
  Series r(s.flavor(), s.order());
  for (const auto& [m, c] : s.terms()) {
    std::vector<CouplingMonomial::Factor> kept;
    Rational factor = 1;
    for (const auto& [id, e] : m.factors()) {
      auto it = values.find(id);
      if (it == values.end()) {
        kept.emplace_back(id, e);
      } else {
        factor *= pow(it->second, e);
      }
    }
    r.add_term(CouplingMonomial::from_factors(kept), c * ConstScalar(factor));
  }
  return r;
}

}  // namespace zform
