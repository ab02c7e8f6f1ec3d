#include "zform/potential.hpp"

#include <algorithm>

namespace zform {

Potential Potential::monomial(int k, CouplingId symbol, const Rational& scale) {
  Potential v;
  v.add(k, scale, symbol);
  return v;
}

Potential Potential::numeric(int k, const Rational& scale) {
  Potential v;
  v.add(k, scale);
  return v;
}

Potential& Potential::add(int k, const Rational& scale, std::optional<CouplingId> symbol) {
  require(k >= 1, "potential valency must be positive");
  if (scale == 0) return *this;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->k == k && it->symbol == symbol) {
      it->scale += scale;
      if (it->scale == 0) terms_.erase(it);
      return *this;
    }
  }
  terms_.push_back({k, scale, symbol});
  std::sort(terms_.begin(), terms_.end(), [](const PotentialTerm& a, const PotentialTerm& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.symbol < b.symbol;
  });
  return *this;
}

Potential operator+(Potential a, const Potential& b) {
  for (const auto& t : b.terms_) a.add(t.k, t.scale, t.symbol);
  return a;
}

int Potential::max_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.k);
  return d;
}

bool Potential::all_symbolic() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const PotentialTerm& t) { return t.symbol.has_value(); });
}

const PotentialTerm& Potential::top_term() const {
  require(!terms_.empty(), "zero potential has no top term");
  int d = max_degree();
  const PotentialTerm* top = nullptr;
  for (const auto& t : terms_)
    if (t.k == d) {
      require(top == nullptr, "top degree of the potential must be a single term");
      top = &t;
    }
  return *top;
}

Series Potential::coefficient(const PotentialTerm& t, Flavor f, int order) {
  if (!t.symbol) return Series::constant(f, order, ConstScalar(t.scale));
  return Series::monomial(f, order, CouplingMonomial(*t.symbol), ConstScalar(t.scale));
}

std::string Potential::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += zform::to_string(t.scale);
    if (t.symbol) s += "*" + zform::to_string(*t.symbol);
    s += "/" + std::to_string(t.k) + " x^" + std::to_string(t.k);
  }
  return s;
}

int exact_degree_bound(const Potential& v, int order) {
  if (!v.all_symbolic()) return -1;
  return v.max_degree() * order;
}

std::vector<Series> exp_potential_coeffs(const Potential& v, const ConstScalar& outer,
                                         const ConstScalar& inner, Flavor f, int order, int cap) {
  require(cap >= 0, "negative degree cap");
  // g(x) = sum_k g_k x^k with g_k = outer * c_k / k * inner^k; f' = g' f gives
  // n f_n = sum_k k g_k f_{n-k}.
  std::vector<std::pair<int, Series>> kg;
  for (const auto& t : v.terms()) {
    Series c = Potential::coefficient(t, f, order)
                   .scaled(outer * inner.pow(t.k));  // k g_k
    kg.emplace_back(t.k, c);
  }
  std::vector<Series> out(cap + 1, Series(f, order));
  out[0] = Series::constant(f, order, ConstScalar(1));
  for (int n = 1; n <= cap; ++n) {
    Series acc(f, order);
    for (const auto& [k, c] : kg)
      if (k <= n && !out[n - k].is_zero()) acc += c * out[n - k];
    out[n] = acc.scaled(ConstScalar(Rational(1, n)));
  }
  return out;
}

}  // namespace zform
