#pragma once

#include <map>
#include <string>

#include "zform/const_scalar.hpp"
#include "zform/rational.hpp"

namespace zform {

// Laurent polynomial in a symbolic N with rational coefficients.
class NLaurent {
 public:
  NLaurent() = default;
  NLaurent(const Rational& q) { if (q != 0) terms_[0] = q; }  // NOLINT
  NLaurent(int q) : NLaurent(Rational(q)) {}
  static NLaurent N(int power, const Rational& q = 1);

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int power) const;

  NLaurent& operator+=(const NLaurent& o);
  NLaurent& operator-=(const NLaurent& o);
  friend NLaurent operator+(NLaurent a, const NLaurent& b) { return a += b; }
  friend NLaurent operator-(NLaurent a, const NLaurent& b) { return a -= b; }
  friend NLaurent operator*(const NLaurent& a, const NLaurent& b);
  NLaurent& operator*=(const NLaurent& o) { return *this = *this * o; }
  NLaurent operator-() const;
  friend bool operator==(const NLaurent& a, const NLaurent& b) { return a.terms_ == b.terms_; }

  NLaurent inverse() const;  // single-term only
  Rational substitute_N(const Rational& n) const;
  ConstScalar to_const() const;
  std::string to_string() const { return to_const().to_string(); }

 private:
  void add(int power, const Rational& q);
  std::map<int, Rational> terms_;
};

inline NLaurent inverse(const NLaurent& c) { return c.inverse(); }

}  // namespace zform
