#include "zform/nlaurent.hpp"

#include "zform/errors.hpp"

namespace zform {

NLaurent NLaurent::N(int power, const Rational& q) {
  NLaurent r;
  r.add(power, q);
  return r;
}

Rational NLaurent::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NLaurent::add(int power, const Rational& q) {
  if (q == 0) return;
  auto [it, fresh] = terms_.try_emplace(power, q);
  if (!fresh) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

NLaurent& NLaurent::operator+=(const NLaurent& o) {
  for (const auto& [p, q] : o.terms_) add(p, q);
  return *this;
}

NLaurent& NLaurent::operator-=(const NLaurent& o) {
  for (const auto& [p, q] : o.terms_) add(p, -q);
  return *this;
}

NLaurent operator*(const NLaurent& a, const NLaurent& b) {
  NLaurent r;
  for (const auto& [pa, qa] : a.terms_)
    for (const auto& [pb, qb] : b.terms_) r.add(pa + pb, qa * qb);
  return r;
}

NLaurent NLaurent::operator-() const {
  NLaurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

NLaurent NLaurent::inverse() const {
  if (terms_.size() != 1) throw UsageError("Laurent polynomial is not a monomial, cannot invert");
  const auto& [p, q] = *terms_.begin();
  return N(-p, 1 / q);
}

Rational NLaurent::substitute_N(const Rational& n) const {
  require(n > 0, "substitute_N needs a positive value");
  Rational r = 0;
  for (const auto& [p, q] : terms_) r += q * pow(n, p);
  return r;
}

ConstScalar NLaurent::to_const() const {
  ConstScalar r;
  for (const auto& [p, q] : terms_) r += ConstScalar::N(2 * p) * ConstScalar(q);
  return r;
}

}  // namespace zform
