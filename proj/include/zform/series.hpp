#pragma once

#include <functional>
#include <map>
#include <string>

#include "zform/const_scalar.hpp"
#include "zform/coupling.hpp"
#include "zform/errors.hpp"
#include "zform/nlaurent.hpp"

namespace zform {

// Truncated graded series in coupling symbols; terms of grade above the
// truncation order are never stored.
template <class C>
class CouplingSeries {
 public:
  using Map = std::map<CouplingMonomial, C>;

  CouplingSeries(Flavor f, int order) : flavor_(f), order_(order) {
    require(order >= 0, "truncation order must be non-negative");
  }

  static CouplingSeries constant(Flavor f, int order, const C& c) {
    CouplingSeries s(f, order);
    s.add_term(CouplingMonomial(), c);
    return s;
  }
  static CouplingSeries monomial(Flavor f, int order, const CouplingMonomial& m, const C& c = C(1)) {
    CouplingSeries s(f, order);
    s.add_term(m, c);
    return s;
  }

  Flavor flavor() const { return flavor_; }
  int order() const { return order_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const CouplingMonomial& m, const C& c) {
    if (m.grade() > order_ || c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  C coefficient(const CouplingMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C() : it->second;
  }
  C constant_term() const { return coefficient(CouplingMonomial()); }

  CouplingSeries& operator+=(const CouplingSeries& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  CouplingSeries& operator-=(const CouplingSeries& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend CouplingSeries operator+(CouplingSeries a, const CouplingSeries& b) { return a += b; }
  friend CouplingSeries operator-(CouplingSeries a, const CouplingSeries& b) { return a -= b; }
  CouplingSeries operator-() const {
    CouplingSeries r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend CouplingSeries operator*(const CouplingSeries& a, const CouplingSeries& b) {
    a.check_compatible(b);
    CouplingSeries r(a.flavor_, a.order_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        if (ma.grade() + mb.grade() > a.order_) continue;
        r.add_term(ma * mb, ca * cb);
      }
    return r;
  }
  CouplingSeries& operator*=(const CouplingSeries& o) { return *this = *this * o; }

  CouplingSeries scaled(const C& c) const {
    CouplingSeries r(flavor_, order_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.add_term(m, x * c);
    return r;
  }
  CouplingSeries shifted(const CouplingMonomial& mono) const {
    CouplingSeries r(flavor_, order_);
    for (const auto& [m, x] : terms_) r.add_term(m * mono, x);
    return r;
  }

  // Same terms under a new truncation order (dropping what no longer fits).
  CouplingSeries truncated(int order) const {
    CouplingSeries r(flavor_, order);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

  friend bool operator==(const CouplingSeries& a, const CouplingSeries& b) {
    return a.flavor_ == b.flavor_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  int min_grade() const {
    int g = 0;
    bool first = true;
    for (const auto& t : terms_) {
      if (first || t.first.grade() < g) g = t.first.grade();
      first = false;
    }
    return g;
  }
  bool has_negative_exponent() const {
    for (const auto& t : terms_)
      if (t.first.has_negative_exponent()) return true;
    return false;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string cs = c.to_string();
      bool multi = cs.find(" + ") != std::string::npos;
      s += (multi ? "(" + cs + ")" : cs) + " * " + m.to_string();
    }
    return s;
  }

  void check_compatible(const CouplingSeries& o) const {
    if (flavor_ != o.flavor_)
      throw UsageError("series flavor mismatch: " + zform::to_string(flavor_) + " vs " +
                       zform::to_string(o.flavor_));
    if (order_ != o.order_)
      throw UsageError("series truncation mismatch: " + std::to_string(order_) + " vs " +
                       std::to_string(o.order_));
  }

 private:
  Flavor flavor_;
  int order_;
  Map terms_;
};

using Series = CouplingSeries<ConstScalar>;
using LaurentSeries = CouplingSeries<NLaurent>;

template <class C>
CouplingSeries<C> series_mul(const CouplingSeries<C>& a, const CouplingSeries<C>& b) {
  return a * b;
}

template <class C>
CouplingSeries<C> series_exp(const CouplingSeries<C>& a) {
  for (const auto& t : a.terms())
    if (t.first.grade() < 1)
      throw UsageError("series_exp needs a series without grade-0 part");
  CouplingSeries<C> result = CouplingSeries<C>::constant(a.flavor(), a.order(), C(1));
  CouplingSeries<C> power = result;
  for (int i = 1; i <= a.order(); ++i) {
    power = power * a;
    power = power.scaled(C(Rational(1, i)));
    result += power;
  }
  return result;
}

// log(1 + a) for a series whose constant term is 1.
template <class C>
CouplingSeries<C> series_log(const CouplingSeries<C>& s) {
  CouplingSeries<C> one = CouplingSeries<C>::constant(s.flavor(), s.order(), C(1));
  CouplingSeries<C> a = s - one;
  for (const auto& t : a.terms())
    if (t.first.grade() < 1) throw UsageError("series_log needs constant term exactly 1");
  CouplingSeries<C> result(s.flavor(), s.order()), power = one;
  for (int i = 1; i <= s.order(); ++i) {
    power = power * a;
    result += power.scaled(C(Rational(i % 2 ? 1 : -1, i)));
  }
  return result;
}

template <class C>
CouplingSeries<C> series_inverse(const CouplingSeries<C>& s) {
  for (const auto& t : s.terms())
    if (t.first.grade() < 0 || (t.first.grade() == 0 && !t.first.is_one()))
      throw UsageError("series_inverse needs a plain constant grade-0 part");
  C c0 = s.constant_term();
  if (c0.is_zero()) throw DegenerateFormError("series has vanishing grade-0 part");
  C c0inv = inverse(c0);
  CouplingSeries<C> one = CouplingSeries<C>::constant(s.flavor(), s.order(), C(1));
  CouplingSeries<C> q = one - s.scaled(c0inv);  // grade >= 1
  CouplingSeries<C> result = one, power = one;
  for (int i = 1; i <= s.order(); ++i) {
    power = power * q;
    result += power;
  }
  return result.scaled(c0inv);
}

template <class C, class F>
auto map_coefficients(const CouplingSeries<C>& s, F&& f) {
  using R = decltype(f(std::declval<const C&>()));
  CouplingSeries<R> r(s.flavor(), s.order());
  for (const auto& [m, c] : s.terms()) r.add_term(m, f(c));
  return r;
}

Series to_const_series(const LaurentSeries& s);
Series substitute_N(const Series& s, const Rational& n);
Series substitute_N(const LaurentSeries& s, const Rational& n);
bool has_half_N_power(const Series& s);
// True when every coefficient is a plain rational.
bool is_rational(const Series& s);
// Replaces bound couplings by rational values.
Series bind_couplings(const Series& s, const std::map<CouplingId, Rational>& values);

}  // namespace zform
