#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zform/series.hpp"

namespace zform {

// One term (scale * symbol / k) x^k of V(x); without a symbol the term is a
// plain number and carries grade 0.
struct PotentialTerm {
  int k = 0;
  Rational scale = 1;
  std::optional<CouplingId> symbol;
};

class Potential {
 public:
  Potential() = default;

  static Potential monomial(int k, CouplingId symbol, const Rational& scale = 1);
  static Potential numeric(int k, const Rational& scale = 1);

  Potential& add(int k, const Rational& scale, std::optional<CouplingId> symbol = {});
  friend Potential operator+(Potential a, const Potential& b);

  const std::vector<PotentialTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;
  bool all_symbolic() const;
  const PotentialTerm& top_term() const;

  // scale * symbol as a series (a plain constant for numeric terms).
  static Series coefficient(const PotentialTerm& t, Flavor f, int order);

  std::string to_string() const;

 private:
  std::vector<PotentialTerm> terms_;
};

// Degree in x beyond which exp(outer V(inner x)) vanishes at grade <= order,
// or -1 when V has numeric terms (the exponential is then an infinite series).
int exact_degree_bound(const Potential& v, int order);

// Coefficients f_0..f_cap of exp(outer * V(inner * x)).
std::vector<Series> exp_potential_coeffs(const Potential& v, const ConstScalar& outer,
                                         const ConstScalar& inner, Flavor f, int order, int cap);

}  // namespace zform
