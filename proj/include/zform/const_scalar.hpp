#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zform/rational.hpp"

namespace zform {

// N^{n/2} pi^{p/2} 2^{t/2} i^k sqrt(r). Canonical form keeps t in {0,1},
// k in {0,1} and r odd and squarefree; everything else is folded into the
// rational coefficient of the owning term. The radicand only appears after
// a concrete non-square N has been substituted.
struct ConstMonomial {
  int n_half = 0;
  int pi_half = 0;
  int two_half = 0;
  int i_pow = 0;
  Integer radicand = 1;

  bool is_one() const {
    return n_half == 0 && pi_half == 0 && two_half == 0 && i_pow == 0 && radicand == 1;
  }
};

int compare(const ConstMonomial& a, const ConstMonomial& b);
inline bool operator<(const ConstMonomial& a, const ConstMonomial& b) { return compare(a, b) < 0; }
inline bool operator==(const ConstMonomial& a, const ConstMonomial& b) { return compare(a, b) == 0; }

class ConstScalar {
 public:
  using Term = std::pair<ConstMonomial, Rational>;

  ConstScalar() = default;
  ConstScalar(const Rational& q);  // NOLINT: rationals embed implicitly
  ConstScalar(int q) : ConstScalar(Rational(q)) {}
  ConstScalar(const ConstMonomial& m, const Rational& q);

  static ConstScalar N(int half_exp = 2);
  static ConstScalar pi(int half_exp = 2);
  static ConstScalar two(int half_exp);
  static ConstScalar i(int exp = 1);
  static ConstScalar sqrt(const Rational& q);
  // n^{half_exp/2} for a concrete positive rational n.
  static ConstScalar power_of(const Rational& n, int half_exp);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()
  bool is_single_term() const { return terms_.size() == 1; }

  ConstScalar& operator+=(const ConstScalar& o);
  ConstScalar& operator-=(const ConstScalar& o);
  ConstScalar& operator*=(const ConstScalar& o);
  friend ConstScalar operator+(ConstScalar a, const ConstScalar& b) { return a += b; }
  friend ConstScalar operator-(ConstScalar a, const ConstScalar& b) { return a -= b; }
  friend ConstScalar operator*(const ConstScalar& a, const ConstScalar& b);
  ConstScalar operator-() const;
  friend bool operator==(const ConstScalar& a, const ConstScalar& b);

  ConstScalar pow(int e) const;
  // Reciprocal; only single-term scalars are invertible here.
  ConstScalar inverse() const;
  ConstScalar substitute_N(const Rational& n) const;
  // True when some term carries an odd power of N^{1/2}.
  bool has_half_N_power() const;

  std::string to_string() const;

 private:
  void add_term(ConstMonomial m, Rational q);
  std::vector<Term> terms_;
};

ConstScalar inverse(const ConstScalar& c);
inline ConstScalar substitute_N(const ConstScalar& c, const Rational& n) { return c.substitute_N(n); }

}  // namespace zform
