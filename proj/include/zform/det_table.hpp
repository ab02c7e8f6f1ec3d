#pragma once

#include <vector>

#include "zform/series.hpp"

namespace zform {

int permutation_sign(const std::vector<int>& perm);

Series leibniz_det(const std::vector<Series>& m, int n);
// Fraction-free elimination; every pivot must be a unit of the series ring.
Series bareiss_det(const std::vector<Series>& m, int n);
// Leibniz up to size 4, elimination above.
Series determinant(const std::vector<Series>& m, int n);

Rational rational_det(std::vector<Rational> m, int n);

// Square table of series entries. Z = prefactor * coupling_factor * det,
// truncated at target_order. Entries may be computed at a higher internal
// order when coupling_factor has negative exponents.
struct DetTable {
  int size = 0;
  std::vector<Series> entries;
  ConstScalar prefactor = ConstScalar(1);
  CouplingMonomial coupling_factor;
  int target_order = 0;

  DetTable(int n, Flavor f, int internal_order, int target);

  Series& at(int i, int j) { return entries[i * size + j]; }
  const Series& at(int i, int j) const { return entries[i * size + j]; }
  Flavor flavor() const { return entries.front().flavor(); }
  int internal_order() const { return entries.front().order(); }

  Series det() const { return determinant(entries, size); }
  // Asserts that no formal inverse coupling survives and that the
  // coefficients are rational.
  Series z() const;
};

}  // namespace zform
