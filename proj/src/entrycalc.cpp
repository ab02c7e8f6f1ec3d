#include "zform/entrycalc.hpp"

#include <functional>

namespace zform {
namespace {

void check_size(int n, const EntryCaps& caps) {
  require(n >= 1, "matrix size must be positive");
  if (n > caps.max_size)
    throw ResourceError("matrix size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(caps.max_size));
}

void check_degree(const XSeries& p, const EntryCaps& caps) {
  if (p.max_degree() > caps.max_degree)
    throw ResourceError("entry degree " + std::to_string(p.max_degree()) + " exceeds cap " +
                        std::to_string(caps.max_degree));
}

// c * N * sum_k coeff_k/k * w^k Tr(X^k), with w a power of N.
XSeries trace_potential(const EntryLayout& layout, int matrix, const Potential& v,
                        const ConstScalar& inner, Flavor f, int order) {
  XSeries g(layout.nvars(), f, order);
  for (const auto& t : v.terms()) {
    Series c = Potential::coefficient(t, f, order)
                   .scaled(ConstScalar::N() * ConstScalar(Rational(1, t.k)) * inner.pow(t.k));
    g += trace_power(layout, matrix, t.k, f, order).poly.scaled(c);
  }
  return g;
}

// sum_{ab} dX_ab dY_ba as a polynomial in derivative symbols.
XSeries mixed_trace(const EntryLayout& layout, int x, int y, Flavor f, int order) {
  XSeries r(layout.nvars(), f, order);
  for (int a = 0; a < layout.n; ++a)
    for (int b = 0; b < layout.n; ++b) {
      Exps e(layout.nvars(), 0);
      ++e[layout.var(x, a, b)];
      ++e[layout.var(y, b, a)];
      r.add_term(e, Series::constant(f, order, ConstScalar(1)));
    }
  return r;
}

Series finish(const Series& z, int n) {
  ensure(!has_half_N_power(z), "half-integer power of N survived: " + z.to_string());
  Series r = substitute_N(z, n);
  ensure(is_rational(r), "partition function coefficient is not rational: " + r.to_string());
  return r;
}

}  // namespace

EntryPoly trace_power(const EntryLayout& layout, int matrix, int k, Flavor f, int order) {
  require(k >= 1, "trace power needs k >= 1");
  XSeries r(layout.nvars(), f, order);
  Series one = Series::constant(f, order, ConstScalar(1));
  std::vector<int> idx(k, 0);
  // Sum over all index cycles i1 -> i2 -> ... -> ik -> i1.
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k) {
      Exps e(layout.nvars(), 0);
      for (int s = 0; s < k; ++s) ++e[layout.var(matrix, idx[s], idx[(s + 1) % k])];
      r.add_term(e, one);
      return;
    }
    for (int a = 0; a < layout.n; ++a) {
      idx[pos] = a;
      rec(pos + 1);
    }
  };
  rec(0);
  return {layout, r};
}

EntryPoly apply_trace_deriv(int matrix, int k, const EntryPoly& p) {
  XSeries op = trace_power(p.layout, matrix, k, p.poly.flavor(), p.poly.order()).poly;
  return {p.layout, apply_op(op, p.poly)};
}

Series z_diff_one(int n, const Potential& v, int order, const EntryCaps& caps) {
  check_size(n, caps);
  EntryLayout layout{n, 1};
  XSeries f = trace_potential(layout, 0, v, ConstScalar(1), Flavor::one, order).exp(caps.max_degree);
  require(f.exact(), "z_diff_one needs symbolic couplings");
  check_degree(f, caps);
  XSeries lap = trace_power(layout, 0, 2, Flavor::one, order).poly.scaled(
      ConstScalar(Rational(1, 2)) * ConstScalar::N(-2));
  XSeries op = lap.exp(std::max(0, f.max_degree()));
  return finish(pair_at_zero(op, f), n);
}

Series z_diff_one_swapped(int n, const Potential& v, int order, const EntryCaps& caps) {
  check_size(n, caps);
  EntryLayout layout{n, 1};
  XSeries op = trace_potential(layout, 0, v, ConstScalar(1), Flavor::one, order).exp(caps.max_degree);
  require(op.exact(), "z_diff_one_swapped needs symbolic couplings");
  check_degree(op, caps);
  XSeries gauss = trace_power(layout, 0, 2, Flavor::one, order)
                      .poly.scaled(ConstScalar(Rational(1, 2)) * ConstScalar::N(-2))
                      .exp(std::max(0, op.max_degree()));
  return finish(pair_at_zero(op, gauss), n);
}

Series z_diff_two(int n, const Potential& v1, const Potential& v2, int order,
                  const EntryCaps& caps) {
  check_size(n, caps);
  EntryLayout layout{n, 2};
  XSeries g = trace_potential(layout, 0, v1, ConstScalar(1), Flavor::two, order) +
              trace_potential(layout, 1, v2, ConstScalar(1), Flavor::two, order);
  XSeries f = g.exp(caps.max_degree);
  require(f.exact(), "z_diff_two needs symbolic couplings");
  check_degree(f, caps);
  XSeries op = mixed_trace(layout, 0, 1, Flavor::two, order)
                   .scaled(ConstScalar::N(-2))
                   .exp(std::max(0, f.max_degree()));
  return finish(pair_at_zero(op, f), n);
}

Series z_diff_two_onematrix(int n, const Potential& v1, const Potential& v2, int order,
                            bool rescaled, const EntryCaps& caps) {
  check_size(n, caps);
  EntryLayout layout{n, 1};
  ConstScalar op_inner = rescaled ? ConstScalar::N(-1) : ConstScalar::N(-2);
  ConstScalar fn_inner = rescaled ? ConstScalar::N(-1) : ConstScalar(1);
  XSeries op = trace_potential(layout, 0, v1, op_inner, Flavor::two, order).exp(caps.max_degree);
  XSeries f = trace_potential(layout, 0, v2, fn_inner, Flavor::two, order).exp(caps.max_degree);
  check_degree(op, caps);
  check_degree(f, caps);
  if (!op.exact()) op = trace_potential(layout, 0, v1, op_inner, Flavor::two, order).exp(f.max_degree());
  if (!f.exact()) f = trace_potential(layout, 0, v2, fn_inner, Flavor::two, order).exp(op.max_degree());
  return finish(pair_at_zero(op, f), n);
}

bool check_central_point(int n, const std::map<int, int>& valencies, const EntryCaps& caps) {
  check_size(n, caps);
  EntryLayout layout{n, 2};
  const Flavor f = Flavor::generic;
  const int order = 0;
  int l = 0;
  XSeries pa = XSeries::constant(layout.nvars(), f, order, ConstScalar(1));
  XSeries rhs_op = pa;
  for (auto [k, cnt] : valencies)
    for (int c = 0; c < cnt; ++c) {
      l += k;
      pa = pa * trace_power(layout, 0, k, f, order).poly;
      rhs_op = rhs_op * trace_power(layout, 1, k, f, order).poly;
    }
  if (l > caps.max_degree) throw ResourceError("central-point degree exceeds cap");
  rhs_op = rhs_op.scaled(ConstScalar(factorial(l)));
  XSeries mix = mixed_trace(layout, 0, 1, f, order);
  XSeries lhs_op = XSeries::constant(layout.nvars(), f, order, ConstScalar(1));
  for (int s = 0; s < l; ++s) lhs_op = lhs_op * mix;

  // Every B-entry monomial of degree <= l.
  int nb = n * n;
  std::vector<int> e(nb, 0);
  bool ok = true;
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (!ok) return;
    if (pos == nb) {
      Exps ex(layout.nvars(), 0);
      for (int s = 0; s < nb; ++s) ex[nb + s] = static_cast<std::uint8_t>(e[s]);
      XSeries g = XSeries::monomial(ex, Series::constant(f, order, ConstScalar(1)));
      XSeries lhs = apply_op(lhs_op, pa * g);
      XSeries rhs = apply_op(rhs_op, g);
      if (!(lhs == rhs)) ok = false;
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[pos] = d;
      rec(pos + 1, left - d);
    }
    e[pos] = 0;
  };
  rec(0, l);
  return ok;
}

}  // namespace zform
