#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "zform/det_table.hpp"
#include "zform/norms.hpp"
#include "zform/potential.hpp"
#include "zform/xseries.hpp"

namespace zform {

struct DetCaps {
  int max_size = 4;
  int max_degree = 64;
};

// A polynomial with series coefficients, lowest degree first.
using SeriesPoly = std::vector<Series>;

// Families of monic polynomials used in place of d^i (rows) and x^j
// (columns); an empty family means the plain monomials.
struct PolyFamilies {
  std::vector<SeriesPoly> rows;
  std::vector<SeriesPoly> cols;
};

// [op_factor exp(N V_op(w_op d)) f_factor exp(N V_f(w_f x))]_0 in one
// variable; an infinite exponential is cut at the degree the other side
// reaches, so at least one potential must be purely symbolic.
Series weighted_pairing(const XSeries& op_factor, const Potential& vop, const ConstScalar& w_op,
                        const XSeries& f_factor, const Potential& vf, const ConstScalar& w_f,
                        Flavor fl, int order, const DetCaps& caps = {});

XSeries poly_x(const SeriesPoly& p);

// [P(d) exp(d^2/2N) Q(x) exp(N V(x))]_0, symbolic in N.
Series slater_one_entry(const SeriesPoly& row, const SeriesPoly& col, const Potential& v, int order,
                        const DetCaps& caps = {});

// Slater entry [P_i(d) exp(N V1(N^{-1/2} d)) Q_j(x) exp(N V2(N^{-1/2} x))]_0,
// symbolic in N.
Series slater_two_entry(const SeriesPoly& row, const SeriesPoly& col, const Potential& v1,
                        const Potential& v2, int order, const DetCaps& caps = {});

DetTable slater_two_diff(int n, const Potential& v1, const Potential& v2, int order,
                         const PolyFamilies& fam = {}, const DetCaps& caps = {});
DetTable hankel_two_integral(int n, const Potential& v1, const Potential& v2, int order,
                             const PolyFamilies& fam = {}, const DetCaps& caps = {});
DetTable slater_one_diff(int n, const Potential& v, int order, const PolyFamilies& fam = {},
                         const DetCaps& caps = {});
DetTable hankel_one_diff(int n, const Potential& v, int order, const PolyFamilies& fam = {},
                         const DetCaps& caps = {});
DetTable hankel_one_integral(int n, const Potential& v, int order, const PolyFamilies& fam = {},
                             const DetCaps& caps = {});

// d^r/dy^r exp(N V1(y/N)) = (N^{1-p} alpha_p)^r S(y) exp(N V1(y/N)); returns
// the coefficients of the monic S, symbolic in N and Laurent in alpha_p.
SeriesPoly s_polynomial(int r, const Potential& v1, Flavor f = Flavor::two);

// [exp(N V1(d/N)) P(x) d^s (Q(x) exp(N V2(x)))]_0, symbolic in N.
Series exchange_bracket(const SeriesPoly& p, int s, const SeriesPoly& q, const Potential& v1,
                        const Potential& v2, int order, const DetCaps& caps = {});

// Entries with the (N^{p-1}/alpha_p)^r row factors; the alpha_p^{-R} part
// lives in coupling_factor and entries are computed at order D + R.
DetTable new_matrix_M(int n, const Potential& v1, const Potential& v2, int order,
                      const DetCaps& caps = {});

bool entry_exchange_check(int r, int s, int j, const Potential& v1, const Potential& v2, int order);

struct ReorganizedTable {
  DetTable table;
  std::vector<int> permutation;  // new row -> old row
  std::vector<int> block_sizes;  // rows per remainder s
  int sign = 1;
};
ReorganizedTable reorganize_rows(const DetTable& m, int p);

SeriesPoly monomial_poly(int degree, Flavor f, int order);
// Monic polynomial of the given degree with random small rational lower
// coefficients (deterministic for a given generator state).
template <class Rng>
SeriesPoly random_monic(int degree, Flavor f, int order, Rng& rng) {
  SeriesPoly p(degree + 1, Series(f, order));
  for (int k = 0; k < degree; ++k) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = static_cast<long>(rng() % 4) + 1;
    Rational c(num);
    c /= den;
    p[k] = Series::constant(f, order, ConstScalar(c));
  }
  p[degree] = Series::constant(f, order, ConstScalar(1));
  return p;
}

}  // namespace zform
