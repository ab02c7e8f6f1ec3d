#include "zform/norms.hpp"

#include <algorithm>
#include <numeric>

#include "zform/det_table.hpp"
#include "zform/errors.hpp"
#include "zform/xseries.hpp"

namespace zform {

Rational superfactorial(int n) {
  Rational r = 1;
  for (int j = 1; j <= n; ++j) r *= factorial(j);
  return r;
}

namespace {

ConstScalar npow(int n, int half) { return ConstScalar::power_of(Rational(n), half); }
ConstScalar two_pi() { return ConstScalar(2) * ConstScalar::pi(); }

}  // namespace

ConstScalar norm_const(const std::string& name, int n, int p) {
  require(n >= 1, "normalizations need N >= 1");
  if (name == "a")  // 2^{-N/2} (pi/N)^{-N^2/2}
    return ConstScalar::two(-n) * ConstScalar::pi(-n * n) * npow(n, n * n);
  if (name == "b")  // (2 pi)^{N/2} prod_1^N j! N^{-N^2/2}
    return ConstScalar::two(n) * ConstScalar::pi(n) * ConstScalar(superfactorial(n)) * npow(n, -n * n);
  if (name == "c")  // 2^N (pi/(i N))^{N^2}
    return ConstScalar(pow(Rational(2), n)) * ConstScalar::pi(2 * n * n) *
           ConstScalar::i(-n * n) * npow(n, -2 * n * n);
  if (name == "c1")  // 2 pi/(i N)
    return two_pi() * ConstScalar::i(-1) * npow(n, -2);
  if (name == "d")  // (2 pi/i)^N prod_1^{N-1} j! N^{-N(N+1)/2}
    return (two_pi() * ConstScalar::i(-1)).pow(n) * ConstScalar(superfactorial(n - 1)) *
           npow(n, -n * (n + 1));
  if (name == "e")  // N^{N(N-1)/2} / prod_1^N j!
    return npow(n, n * (n - 1)) * ConstScalar(1 / superfactorial(n));
  if (name == "f") return ConstScalar(1 / superfactorial(n - 1));
  if (name == "h") return ConstScalar(1 / superfactorial(n - 1)) * ConstScalar(sgn_rows(n, p));
  throw UsageError("unknown normalization constant: " + name);
}

RSIndex RSIndex::of(int p, int i) {
  require(p >= 2, "the (r,s) decomposition needs p >= 2");
  require(i >= 0, "row index must be non-negative");
  return {p, i, i / (p - 1), i % (p - 1)};
}

std::vector<int> rs_row_permutation(int n, int p) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    RSIndex a = RSIndex::of(p, x), b = RSIndex::of(p, y);
    return std::make_pair(a.s, a.r) < std::make_pair(b.s, b.r);
  });
  return perm;
}

int sgn_rows(int n, int p) { return permutation_sign(rs_row_permutation(n, p)); }

std::vector<Rational> gaussian_moment_matrix(int n) {
  std::vector<Rational> r(static_cast<size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i + j) % 2 == 0) r[i * n + j] = factorial(i + j) / factorial((i + j) / 2);
  return r;
}

NormalizationChecks normalization_checks(int n) {
  require(n >= 1 && n <= 8, "normalization checks are defined for 1 <= N <= 8");
  NormalizationChecks out;
  Rational det_r = rational_det(gaussian_moment_matrix(n), n);
  out.det_R_closed_form = det_r == pow(Rational(2), n * (n - 1) / 2) * superfactorial(n - 1);

  ConstScalar e = norm_const("e", n);
  ConstScalar inv_e = e.inverse();
  ConstScalar from_r = ConstScalar(factorial(n) * det_r * pow(Rational(2 * n), -n * (n - 1) / 2));
  out.e_from_R = from_r == inv_e;

  // Diagonal table [exp((1/N) d_a d_b) a^i b^j]_0 through the two-variable
  // operator calculus.
  const Flavor f = Flavor::generic;
  XSeries mix(2, f, 0);
  mix.add_term({1, 1}, Series::constant(f, 0, ConstScalar(Rational(1, n))));
  XSeries op = mix.exp(2 * (n - 1));
  std::vector<Rational> diag(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      XSeries g = XSeries::monomial({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)},
                                    Series::constant(f, 0, ConstScalar(1)));
      diag[i * n + j] = pair_at_zero(op, g).constant_term().rational_value();
    }
  out.e_from_two_matrix_diagonal = ConstScalar(factorial(n) * rational_det(diag, n)) == inv_e;

  if (n <= 4) {
    // [exp((1/2N) sum d_i^2) Delta^2]_0 = 1/e_N
    XSeries delta(n, f, 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Exps e(n);
      for (int i = 0; i < n; ++i) e[i] = static_cast<std::uint8_t>(perm[i]);
      delta.add_term(e, Series::constant(f, 0, ConstScalar(permutation_sign(perm))));
    } while (std::next_permutation(perm.begin(), perm.end()));
    XSeries sq = delta * delta;
    XSeries lap(n, f, 0);
    for (int i = 0; i < n; ++i) {
      Exps e(n, 0);
      e[i] = 2;
      lap.add_term(e, Series::constant(f, 0, ConstScalar(Rational(1, 2 * n))));
    }
    Series v = pair_at_zero(lap.exp(std::max(0, sq.max_degree())), sq);
    out.e_from_vandermonde = v.constant_term() == inv_e;
  } else {
    out.e_from_vandermonde = true;
  }
  return out;
}

NormRelations norm_relations(int n) {
  NormRelations r;
  ConstScalar nf(factorial(n));
  ConstScalar b = norm_const("b", n), d = norm_const("d", n),
              e = norm_const("e", n), f = norm_const("f", n), c1 = norm_const("c1", n);
  r.f_vs_e = f * npow(n, n * (n - 1)) == nf * e;
  r.e_vs_d = e * nf * c1.pow(-n) == d.inverse();
  // (N/2pi)^{N/2} = N^{N/2} 2^{-N/2} pi^{-N/2}
  ConstScalar heat = npow(n, n) * ConstScalar::two(-n) * ConstScalar::pi(-n);
  r.f_vs_b = f * heat * npow(n, n * (n - 1)) == nf * b.inverse();
  r.f_vs_d = f * npow(n, n * (n + 1)) * ConstScalar::i(n) * two_pi().pow(-n) == d.inverse();
  Rational det_r = rational_det(gaussian_moment_matrix(n), n);
  r.e_closed_form =
      e.inverse() == ConstScalar(factorial(n) * det_r * pow(Rational(2 * n), -n * (n - 1) / 2));
  return r;
}

}  // namespace zform
