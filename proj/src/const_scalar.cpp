#include "zform/const_scalar.hpp"

#include <algorithm>

#include "zform/errors.hpp"

namespace zform {
namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// Brings exponents into canonical range, moving the surplus into q.
void canonicalize(ConstMonomial& m, Rational& q) {
  int k = floor_div(m.two_half, 2);
  m.two_half -= 2 * k;
  if (k != 0) q *= pow(Rational(2), k);
  int e = ((m.i_pow % 4) + 4) % 4;
  if (e >= 2) {
    q = -q;
    e -= 2;
  }
  m.i_pow = e;
}

ConstMonomial multiply(const ConstMonomial& a, const ConstMonomial& b, Rational& q) {
  ConstMonomial r;
  r.n_half = a.n_half + b.n_half;
  r.pi_half = a.pi_half + b.pi_half;
  r.two_half = a.two_half + b.two_half;
  r.i_pow = a.i_pow + b.i_pow;
  Integer g = gcd(a.radicand, b.radicand);
  r.radicand = (a.radicand / g) * (b.radicand / g);
  if (g != 1) q *= Rational(g);
  canonicalize(r, q);
  return r;
}

}  // namespace

int compare(const ConstMonomial& a, const ConstMonomial& b) {
  if (a.n_half != b.n_half) return a.n_half < b.n_half ? -1 : 1;
  if (a.pi_half != b.pi_half) return a.pi_half < b.pi_half ? -1 : 1;
  if (a.two_half != b.two_half) return a.two_half < b.two_half ? -1 : 1;
  if (a.i_pow != b.i_pow) return a.i_pow < b.i_pow ? -1 : 1;
  return cmp(a.radicand, b.radicand);
}

ConstScalar::ConstScalar(const Rational& q) {
  if (q != 0) terms_.emplace_back(ConstMonomial{}, q);
}

ConstScalar::ConstScalar(const ConstMonomial& m, const Rational& q) { add_term(m, q); }

ConstScalar ConstScalar::N(int half_exp) {
  ConstMonomial m;
  m.n_half = half_exp;
  return ConstScalar(m, 1);
}

ConstScalar ConstScalar::pi(int half_exp) {
  ConstMonomial m;
  m.pi_half = half_exp;
  return ConstScalar(m, 1);
}

ConstScalar ConstScalar::two(int half_exp) {
  ConstMonomial m;
  m.two_half = half_exp;
  return ConstScalar(m, 1);
}

ConstScalar ConstScalar::i(int exp) {
  ConstMonomial m;
  m.i_pow = exp;
  return ConstScalar(m, 1);
}

ConstScalar ConstScalar::sqrt(const Rational& q) {
  require(q > 0, "square root of a non-positive rational");
  // sqrt(a/b) = sqrt(a*b)/b
  Integer prod = q.get_num() * q.get_den();
  Integer root, free;
  squarefree_split(prod, root, free);
  ConstMonomial m;
  Rational coeff(root, q.get_den());
  coeff.canonicalize();
  if (free % 2 == 0) {
    m.two_half = 1;
    free /= 2;
  }
  m.radicand = free;
  return ConstScalar(m, coeff);
}

ConstScalar ConstScalar::power_of(const Rational& n, int half_exp) {
  require(n > 0, "power of a non-positive rational");
  int whole = floor_div(half_exp, 2);
  ConstScalar r(zform::pow(n, whole));
  if (half_exp - 2 * whole == 1) r *= sqrt(n);
  return r;
}

void ConstScalar::add_term(ConstMonomial m, Rational q) {
  canonicalize(m, q);
  if (q == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const ConstMonomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace(it, std::move(m), std::move(q));
  }
}

bool ConstScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational ConstScalar::rational_value() const {
  ensure(is_rational(), "constant is not rational: " + to_string());
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

ConstScalar& ConstScalar::operator+=(const ConstScalar& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

ConstScalar& ConstScalar::operator-=(const ConstScalar& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

ConstScalar operator*(const ConstScalar& a, const ConstScalar& b) {
  ConstScalar r;
  for (const auto& [ma, qa] : a.terms_)
    for (const auto& [mb, qb] : b.terms_) {
      Rational q = qa * qb;
      ConstMonomial m = multiply(ma, mb, q);
      r.add_term(std::move(m), std::move(q));
    }
  return r;
}

ConstScalar& ConstScalar::operator*=(const ConstScalar& o) { return *this = *this * o; }

ConstScalar ConstScalar::operator-() const {
  ConstScalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

bool operator==(const ConstScalar& a, const ConstScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].first == b.terms_[k].first) || a.terms_[k].second != b.terms_[k].second)
      return false;
  return true;
}

ConstScalar ConstScalar::inverse() const {
  if (terms_.size() != 1)
    throw UsageError("constant is not a single monomial, cannot invert: " + to_string());
  const auto& [m, q] = terms_[0];
  ConstMonomial inv;
  inv.n_half = -m.n_half;
  inv.pi_half = -m.pi_half;
  inv.two_half = -m.two_half;
  inv.i_pow = -m.i_pow;
  // 1/sqrt(r) = sqrt(r)/r
  inv.radicand = m.radicand;
  Rational c = 1 / (q * Rational(m.radicand));
  return ConstScalar(inv, c);
}

ConstScalar inverse(const ConstScalar& c) { return c.inverse(); }

ConstScalar ConstScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  ConstScalar r(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

ConstScalar ConstScalar::substitute_N(const Rational& n) const {
  require(n > 0, "substitute_N needs a positive value");
  ConstScalar r;
  for (const auto& [m, q] : terms_) {
    ConstMonomial rest = m;
    rest.n_half = 0;
    r += ConstScalar(rest, q) * power_of(n, m.n_half);
  }
  return r;
}

bool ConstScalar::has_half_N_power() const {
  for (const auto& t : terms_)
    if (t.first.n_half % 2 != 0) return true;
  return false;
}

namespace {

std::string monomial_string(const ConstMonomial& m) {
  std::string s;
  auto half = [&](const char* sym, int e) {
    if (e != 0) s += std::string(" ") + sym + "^{" + std::to_string(e) + "/2}";
  };
  half("N", m.n_half);
  half("pi", m.pi_half);
  half("2", m.two_half);
  if (m.i_pow != 0) s += " i^" + std::to_string(m.i_pow);
  if (m.radicand != 1) s += " sqrt(" + m.radicand.get_str() + ")";
  return s;
}

}  // namespace

std::string ConstScalar::to_string() const {
  if (terms_.empty()) return "0/1";
  std::string s;
  for (size_t k = 0; k < terms_.size(); ++k) {
    if (k) s += " + ";
    s += zform::to_string(terms_[k].second) + monomial_string(terms_[k].first);
  }
  return s;
}

}  // namespace zform
