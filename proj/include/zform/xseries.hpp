#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <vector>

#include "zform/potential.hpp"
#include "zform/series.hpp"

namespace zform {

using Exps = std::vector<std::uint8_t>;

int degree(const Exps& e);

// Sparse polynomial (or truncated power series) in var_count commuting
// variables with series coefficients. trunc is the largest total degree that
// is known; kExact marks a genuine polynomial.
class XSeries {
 public:
  static constexpr int kExact = INT_MAX;
  using Map = std::map<Exps, Series>;

  XSeries(int nvars, Flavor f, int order, int trunc = kExact);

  static XSeries constant(int nvars, const Series& c);
  static XSeries constant(int nvars, Flavor f, int order, const ConstScalar& c);
  static XSeries monomial(const Exps& e, const Series& c);
  static XSeries variable(int nvars, int var, Flavor f, int order);
  // sum_k coeffs[k] x_var^k inside an nvars-variable ring.
  static XSeries univariate(const std::vector<Series>& coeffs, int nvars, int var, int trunc);

  int nvars() const { return nvars_; }
  Flavor flavor() const { return flavor_; }
  int order() const { return order_; }
  int trunc() const { return trunc_; }
  bool exact() const { return trunc_ == kExact; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;  // -1 for zero
  int min_degree() const;  // kExact for zero

  void add_term(const Exps& e, const Series& c);
  Series coefficient(const Exps& e) const;

  XSeries& operator+=(const XSeries& o);
  XSeries& operator-=(const XSeries& o);
  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  XSeries operator-() const;
  friend bool operator==(const XSeries& a, const XSeries& b);

  XSeries scaled(const Series& c) const;
  XSeries scaled(const ConstScalar& c) const;
  XSeries with_trunc(int t) const;  // lowers the truncation, dropping terms
  XSeries homogeneous(int d) const;  // exact degree-d component
  XSeries derivative(int var) const;
  XSeries swap_vars(int i, int j) const;
  XSeries substitute_N(const Rational& n) const;
  // exp of a series with no constant term, kept up to total degree cap.
  XSeries exp(int cap) const;

  Series eval_zero() const;
  void check_compatible(const XSeries& o) const;

 private:
  int nvars_;
  Flavor flavor_;
  int order_;
  int trunc_;
  Map terms_;
};

// Differential operators are polynomials in the derivative symbols; their
// composition is multiplication because all derivatives commute.
using DiffOperator = XSeries;

XSeries apply_op(const DiffOperator& op, const XSeries& f);
// Degree-d component of op applied to f.
XSeries apply_op_component(const DiffOperator& op, const XSeries& f, int d);
// [op f] at zero: sum_e op_e e! f_e.
Series pair_at_zero(const DiffOperator& op, const XSeries& f);

// exp(outer * V(inner * x_var)) in an nvars ring, truncated at total degree
// cap unless the expansion is a polynomial of lower degree.
XSeries exp_potential(const Potential& v, const ConstScalar& outer, const ConstScalar& inner,
                      Flavor f, int order, int cap, int nvars = 1, int var = 0);

// prod_i g(x_i) for a one-variable g.
XSeries tensor_power(const XSeries& g, int nvars);

}  // namespace zform
