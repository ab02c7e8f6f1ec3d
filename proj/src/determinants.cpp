#include "zform/determinants.hpp"

#include <algorithm>

#include "zform/wick.hpp"

namespace zform {

XSeries poly_x(const SeriesPoly& p) { return XSeries::univariate(p, 1, 0, XSeries::kExact); }

namespace {

void check_size(int n, const DetCaps& caps) {
  require(n >= 1, "determinant size must be positive");
  if (n > caps.max_size)
    throw ResourceError("determinant size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(caps.max_size));
}

const SeriesPoly& pick(const std::vector<SeriesPoly>& fam, int k, SeriesPoly& scratch, Flavor f,
                       int order) {
  if (fam.empty()) {
    scratch = monomial_poly(k, f, order);
    return scratch;
  }
  require(static_cast<int>(fam.size()) > k, "polynomial family too short");
  const SeriesPoly& p = fam[k];
  require(static_cast<int>(p.size()) == k + 1, "family polynomial has the wrong degree");
  require(p[k] == Series::constant(f, order, ConstScalar(1)), "family polynomial is not monic");
  return p;
}

Series concrete(const Series& s, int n) { return substitute_N(s, n); }

// Coefficients of Q(x) exp(N V(x)) as a list, exact.
std::vector<Series> weighted_coeffs(const SeriesPoly& q, const Potential& v, int order, Flavor fl,
                                    const DetCaps& caps) {
  int bound = exact_degree_bound(v, order);
  require(bound >= 0, "the moment route needs symbolic potentials");
  XSeries g = poly_x(q) * exp_potential(v, ConstScalar::N(), ConstScalar(1), fl, order, bound);
  if (g.max_degree() > caps.max_degree) throw ResourceError("moment degree exceeds cap");
  std::vector<Series> out(std::max(0, g.max_degree()) + 1, Series(fl, order));
  for (const auto& [e, c] : g.terms()) out[e[0]] = c;
  return out;
}

}  // namespace

Series weighted_pairing(const XSeries& op_factor, const Potential& vop, const ConstScalar& w_op,
                        const XSeries& f_factor, const Potential& vf, const ConstScalar& w_f,
                        Flavor fl, int order, const DetCaps& caps) {
  bool op_exact = vop.all_symbolic(), f_exact = vf.all_symbolic();
  require(op_exact || f_exact, "at least one potential must be purely symbolic");
  XSeries op(1, fl, order), f(1, fl, order);
  if (op_exact) {
    op = op_factor * exp_potential(vop, ConstScalar::N(), w_op, fl, order, caps.max_degree);
    f = f_factor * exp_potential(vf, ConstScalar::N(), w_f, fl, order,
                                 std::max(0, op.max_degree() + 1));
  } else {
    f = f_factor * exp_potential(vf, ConstScalar::N(), w_f, fl, order, caps.max_degree);
    op = op_factor * exp_potential(vop, ConstScalar::N(), w_op, fl, order,
                                   std::max(0, f.max_degree() + 1));
  }
  if ((op.exact() && op.max_degree() > caps.max_degree) ||
      (f.exact() && f.max_degree() > caps.max_degree))
    throw ResourceError("one-variable degree exceeds cap");
  return pair_at_zero(op, f);
}

SeriesPoly monomial_poly(int degree, Flavor f, int order) {
  SeriesPoly p(degree + 1, Series(f, order));
  p[degree] = Series::constant(f, order, ConstScalar(1));
  return p;
}

Series slater_one_entry(const SeriesPoly& row, const SeriesPoly& col, const Potential& v, int order,
                        const DetCaps& caps) {
  // exp(d^2/2N) = exp(N V1(d/N)) with V1 = x^2/2
  return weighted_pairing(poly_x(row), Potential::numeric(2), ConstScalar::N(-2), poly_x(col), v,
                          ConstScalar(1), Flavor::one, order, caps);
}

Series slater_two_entry(const SeriesPoly& row, const SeriesPoly& col, const Potential& v1,
                        const Potential& v2, int order, const DetCaps& caps) {
  return weighted_pairing(poly_x(row), v1, ConstScalar::N(-1), poly_x(col), v2, ConstScalar::N(-1),
                          Flavor::two, order, caps);
}

DetTable slater_two_diff(int n, const Potential& v1, const Potential& v2, int order,
                         const PolyFamilies& fam, const DetCaps& caps) {
  check_size(n, caps);
  const Flavor fl = Flavor::two;
  DetTable t(n, fl, order, order);
  t.prefactor = norm_const("f", n);
  SeriesPoly a, b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Series e = slater_two_entry(pick(fam.rows, i, a, fl, order), pick(fam.cols, j, b, fl, order),
                                  v1, v2, order, caps);
      t.at(i, j) = concrete(e, n);
    }
  return t;
}

DetTable hankel_two_integral(int n, const Potential& v1, const Potential& v2, int order,
                             const PolyFamilies& fam, const DetCaps& caps) {
  check_size(n, caps);
  const Flavor fl = Flavor::two;
  DetTable t(n, fl, order, order);
  t.prefactor = norm_const("d", n).inverse();
  SeriesPoly a, b;
  for (int i = 0; i < n; ++i) {
    auto u = weighted_coeffs(pick(fam.rows, i, a, fl, order), v1, order, fl, caps);
    for (int j = 0; j < n; ++j) {
      auto w = weighted_coeffs(pick(fam.cols, j, b, fl, order), v2, order, fl, caps);
      Series acc(fl, order);
      for (size_t k = 0; k < std::min(u.size(), w.size()); ++k) {
        if (u[k].is_zero() || w[k].is_zero()) continue;
        int kk = static_cast<int>(k);
        acc += (u[k] * w[k]).scaled(formal_pair_moment(kk, kk, MomentKind::real, Rational(1)));
      }
      t.at(i, j) = concrete(acc, n);
    }
  }
  return t;
}

DetTable slater_one_diff(int n, const Potential& v, int order, const PolyFamilies& fam,
                         const DetCaps& caps) {
  check_size(n, caps);
  const Flavor fl = Flavor::one;
  DetTable t(n, fl, order, order);
  t.prefactor = norm_const("f", n);
  SeriesPoly a, b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Series e = slater_one_entry(pick(fam.rows, i, a, fl, order),
                                  pick(fam.cols, j, b, fl, order), v, order, caps);
      t.at(i, j) = concrete(e, n);
    }
  return t;
}

DetTable hankel_one_diff(int n, const Potential& v, int order, const PolyFamilies& fam,
                         const DetCaps& caps) {
  check_size(n, caps);
  const Flavor fl = Flavor::one;
  DetTable t(n, fl, order, order);
  t.prefactor = ConstScalar(factorial(n)) * norm_const("e", n);
  SeriesPoly a, b;
  XSeries one = XSeries::constant(1, fl, order, ConstScalar(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      XSeries pq = poly_x(pick(fam.rows, i, a, fl, order)) * poly_x(pick(fam.cols, j, b, fl, order));
      Series e = weighted_pairing(one, Potential::numeric(2), ConstScalar::N(-2), pq, v,
                                  ConstScalar(1), fl, order, caps);
      t.at(i, j) = concrete(e, n);
    }
  return t;
}

DetTable hankel_one_integral(int n, const Potential& v, int order, const PolyFamilies& fam,
                             const DetCaps& caps) {
  check_size(n, caps);
  const Flavor fl = Flavor::one;
  DetTable t(n, fl, order, order);
  t.prefactor = ConstScalar(factorial(n)) * norm_const("b", n).inverse();
  SeriesPoly a, b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SeriesPoly pq;
      {
        XSeries prod = poly_x(pick(fam.rows, i, a, fl, order)) * poly_x(pick(fam.cols, j, b, fl, order));
        pq.assign(prod.max_degree() + 1, Series(fl, order));
        for (const auto& [e, c] : prod.terms()) pq[e[0]] = c;
      }
      auto w = weighted_coeffs(pq, v, order, fl, caps);
      Series acc(fl, order);
      for (size_t m = 0; m < w.size(); m += 2) {
        if (w[m].is_zero()) continue;
        int mm = static_cast<int>(m);
        // int y^m exp(-N y^2/2) = sqrt(2 pi/N) (m-1)!! N^{-m/2}
        ConstScalar mom = ConstScalar::two(1) * ConstScalar::pi(1) * ConstScalar::N(-1 - mm) *
                          ConstScalar(double_factorial(mm - 1));
        acc += w[m].scaled(mom);
      }
      t.at(i, j) = concrete(acc, n);
    }
  return t;
}

SeriesPoly s_polynomial(int r, const Potential& v1, Flavor fl) {
  require(r >= 0, "derivative order must be non-negative");
  const PotentialTerm& top = v1.top_term();
  int p = top.k;
  const int order = std::max(r, 0);
  // g'(y) for g(y) = N V1(y/N): sum_k alpha_k N^{1-k} y^{k-1}
  SeriesPoly gp(p, Series(fl, order));
  for (const auto& t : v1.terms())
    gp[t.k - 1] += Potential::coefficient(t, fl, order).scaled(ConstScalar::N(2 - 2 * t.k));
  XSeries gprime = poly_x(gp);
  XSeries pr = XSeries::constant(1, fl, order, ConstScalar(1));
  for (int s = 0; s < r; ++s) pr = pr.derivative(0) + pr * gprime;
  // Divide by (N^{1-p} alpha_p)^r.
  ConstScalar scale = ConstScalar::N(2 * (p - 1) * r) * ConstScalar(pow(top.scale, -r));
  CouplingMonomial shift = top.symbol ? CouplingMonomial(*top.symbol, -r) : CouplingMonomial();
  SeriesPoly s((p - 1) * r + 1, Series(fl, order));
  for (const auto& [e, c] : pr.terms()) {
    require(e[0] <= (p - 1) * r, "S polynomial degree exceeded");
    s[e[0]] = c.shifted(shift).scaled(scale);
  }
  ensure(s.back() == Series::constant(fl, order, ConstScalar(1)),
         "S polynomial is not monic: " + s.back().to_string());
  return s;
}

Series exchange_bracket(const SeriesPoly& p, int s, const SeriesPoly& q, const Potential& v1,
                        const Potential& v2, int order, const DetCaps& caps) {
  const Flavor fl = Flavor::two;
  bool op_exact = v1.all_symbolic(), f_exact = v2.all_symbolic();
  require(op_exact || f_exact, "at least one potential must be purely symbolic");
  auto build_f = [&](int cap) {
    XSeries g = poly_x(q) * exp_potential(v2, ConstScalar::N(), ConstScalar(1), fl, order, cap);
    for (int k = 0; k < s; ++k) g = g.derivative(0);
    return poly_x(p) * g;
  };
  XSeries op(1, fl, order), f(1, fl, order);
  if (op_exact) {
    op = exp_potential(v1, ConstScalar::N(), ConstScalar::N(-2), fl, order, caps.max_degree);
    f = build_f(op.max_degree() + s + static_cast<int>(q.size()) + 1);
  } else {
    f = build_f(caps.max_degree);
    op = exp_potential(v1, ConstScalar::N(), ConstScalar::N(-2), fl, order, f.max_degree() + 1);
  }
  return pair_at_zero(op, f);
}

DetTable new_matrix_M(int n, const Potential& v1, const Potential& v2, int order,
                      const DetCaps& caps) {
  check_size(n, caps);
  const PotentialTerm& top = v1.top_term();
  int p = top.k;
  require(p >= 2, "the (r,s) determinant needs deg V1 >= 2");
  int shift = 0;
  if (top.symbol)
    for (int i = 0; i < n; ++i) shift += RSIndex::of(p, i).r;
  const Flavor fl = Flavor::two;
  int internal = order + shift;
  DetTable t(n, fl, internal, order);
  t.prefactor = norm_const("f", n);
  if (top.symbol) t.coupling_factor = CouplingMonomial(*top.symbol, -shift);
  for (int i = 0; i < n; ++i) {
    RSIndex rs = RSIndex::of(p, i);
    // numeric part of (N^{p-1}/alpha_p)^r
    ConstScalar row = ConstScalar::N(2 * (p - 1) * rs.r) * ConstScalar(pow(top.scale, -rs.r));
    for (int j = 0; j < n; ++j) {
      Series b = exchange_bracket(monomial_poly(rs.r, fl, internal), rs.s,
                                  monomial_poly(j, fl, internal), v1, v2, internal, caps);
      t.at(i, j) = concrete(b.scaled(row), n);
    }
  }
  return t;
}

bool entry_exchange_check(int r, int s, int j, const Potential& v1, const Potential& v2, int order) {
  require(r >= 0 && s >= 0 && j >= 0, "indices must be non-negative");
  require(v1.all_symbolic(), "the exchange check needs a symbolic V1");
  const Flavor fl = Flavor::two;
  // Left side: [exp(d_x d_y) h(y) G(x)]_0 = sum_k k! h_k G_k.
  XSeries e1 = exp_potential(v1, ConstScalar::N(), ConstScalar::N(-2), fl, order, 1 << 20);
  for (int k = 0; k < r; ++k) e1 = e1.derivative(0);
  int hdeg = e1.max_degree() + s;
  XSeries e2 = exp_potential(v2, ConstScalar::N(), ConstScalar(1), fl, order, hdeg + 1);
  Series lhs(fl, order);
  for (const auto& [e, c] : e1.terms()) {
    int k = e[0] + s;
    if (k < j) continue;
    Series gk = e2.coefficient({static_cast<std::uint8_t>(k - j)});
    lhs += (c * gk).scaled(ConstScalar(factorial(k)));
  }
  Series rhs = exchange_bracket(monomial_poly(r, fl, order), s, monomial_poly(j, fl, order), v1,
                                v2, order);
  return lhs == rhs;
}

ReorganizedTable reorganize_rows(const DetTable& m, int p) {
  require(p >= 2, "row reorganization needs p >= 2");
  ReorganizedTable out{m, rs_row_permutation(m.size, p), std::vector<int>(p - 1, 0), 1};
  out.sign = permutation_sign(out.permutation);
  for (int i = 0; i < m.size; ++i) {
    for (int j = 0; j < m.size; ++j) out.table.at(i, j) = m.at(out.permutation[i], j);
    ++out.block_sizes[RSIndex::of(p, i).s];
  }
  out.table.prefactor = m.prefactor * ConstScalar(out.sign);
  return out;
}

}  // namespace zform
