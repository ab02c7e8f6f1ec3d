#include "zform/det_table.hpp"

#include <algorithm>
#include <numeric>

namespace zform {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Series leibniz_det(const std::vector<Series>& m, int n) {
  require(static_cast<int>(m.size()) == n * n && n >= 1, "determinant needs a square table");
  Series total(m[0].flavor(), m[0].order());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Series prod = Series::constant(total.flavor(), total.order(), ConstScalar(permutation_sign(perm)));
    for (int i = 0; i < n && !prod.is_zero(); ++i) prod = prod * m[i * n + perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Series bareiss_det(const std::vector<Series>& m0, int n) {
  require(static_cast<int>(m0.size()) == n * n && n >= 1, "determinant needs a square table");
  std::vector<Series> m = m0;
  Flavor f = m[0].flavor();
  int order = m[0].order();
  auto unit = [](const Series& s) {
    for (const auto& t : s.terms())
      if (t.first.grade() < 0 || (t.first.grade() == 0 && !t.first.is_one())) return false;
    return !s.constant_term().is_zero() && s.constant_term().is_single_term();
  };
  int sign = 1;
  Series prev = Series::constant(f, order, ConstScalar(1));
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n && piv < 0; ++i)
      if (unit(m[i * n + k])) piv = i;
    if (piv < 0) throw UsageError("fraction-free elimination found no unit pivot");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      sign = -sign;
    }
    Series prev_inv = series_inverse(prev);
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) * prev_inv;
    prev = m[k * n + k];
  }
  return m[n * n - 1].scaled(ConstScalar(sign));
}

Series determinant(const std::vector<Series>& m, int n) {
  return n <= 4 ? leibniz_det(m, n) : bareiss_det(m, n);
}

Rational rational_det(std::vector<Rational> m, int n) {
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && m[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      det = -det;
    }
    det *= m[k * n + k];
    for (int i = k + 1; i < n; ++i) {
      Rational factor = m[i * n + k] / m[k * n + k];
      for (int j = k; j < n; ++j) m[i * n + j] -= factor * m[k * n + j];
    }
  }
  return det;
}

DetTable::DetTable(int n, Flavor f, int internal_order, int target)
    : size(n), entries(static_cast<size_t>(n) * n, Series(f, internal_order)), target_order(target) {
  require(n >= 1, "determinant size must be positive");
  require(target <= internal_order, "target order above the internal order");
}

Series DetTable::z() const {
  Series full = det().shifted(coupling_factor).scaled(prefactor);
  Series r(full.flavor(), target_order);
  for (const auto& [m, c] : full.terms()) {
    if (m.grade() > target_order) continue;
    ensure(!m.has_negative_exponent(),
           "formal inverse coupling survived in the determinant: " + m.to_string());
    ensure(c.is_rational(), "partition function coefficient is not rational: " + c.to_string());
    r.add_term(m, c);
  }
  return r;
}

}  // namespace zform
