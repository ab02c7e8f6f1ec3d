#include "zform/eigencalc.hpp"

#include <algorithm>
#include <numeric>

#include "zform/norms.hpp"

namespace zform {
namespace {

void check_size(int n, const EigenCaps& caps) {
  require(n >= 1, "eigenvalue count must be positive");
  if (n > caps.max_size)
    throw ResourceError("eigenvalue count " + std::to_string(n) + " exceeds cap " +
                        std::to_string(caps.max_size));
}

Series finish(const Series& z, int n) {
  ensure(!has_half_N_power(z), "half-integer power of N survived: " + z.to_string());
  Series r = substitute_N(z, n);
  ensure(is_rational(r), "partition function coefficient is not rational: " + r.to_string());
  return r;
}

// Operator/function pair where at most one side is an infinite series: the
// infinite side is truncated at the degree the other side reaches.
struct Pair {
  XSeries op;
  XSeries f;
};

Pair build_pair(const Potential& vop, const ConstScalar& op_inner, const XSeries& op_factor,
                const Potential& vf, const ConstScalar& f_inner, const XSeries& f_factor, int n,
                Flavor fl, int order, const EigenCaps& caps) {
  bool op_exact = vop.all_symbolic(), f_exact = vf.all_symbolic();
  require(op_exact || f_exact, "at least one potential must be purely symbolic");
  Pair p{XSeries(n, fl, order), XSeries(n, fl, order)};
  if (op_exact) {
    p.op = op_factor * eigen_weight(vop, op_inner, n, fl, order, caps.max_degree);
    int cap = std::max(0, p.op.max_degree() + f_factor.max_degree());
    p.f = f_factor * eigen_weight(vf, f_inner, n, fl, order, cap);
  } else {
    p.f = f_factor * eigen_weight(vf, f_inner, n, fl, order, caps.max_degree);
    int cap = std::max(0, p.f.max_degree() + op_factor.max_degree());
    p.op = op_factor * eigen_weight(vop, op_inner, n, fl, order, cap);
  }
  if (p.op.exact() && p.op.max_degree() > caps.max_degree)
    throw ResourceError("operator degree exceeds cap");
  if (p.f.exact() && p.f.max_degree() > caps.max_degree)
    throw ResourceError("function degree exceeds cap");
  return p;
}

// Divided, evaluated pairing [Delta^{-1} op (Delta f)]_0 where p.f already
// contains the Vandermonde.
Series divided_pairing(const Pair& p, int n) {
  XSeries g = apply_op_component(p.op, p.f, vandermonde_degree(n));
  return vandermonde_divide(g).eval_zero();
}

}  // namespace

XSeries eigen_weight(const Potential& v, const ConstScalar& inner, int n, Flavor f, int order,
                     int cap) {
  return tensor_power(exp_potential(v, ConstScalar::N(), inner, f, order, cap), n);
}

int vandermonde_degree(int nvars) { return nvars * (nvars - 1) / 2; }

XSeries vandermonde(int nvars, Flavor f, int order) {
  XSeries d(nvars, f, order);
  std::vector<int> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Exps e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = static_cast<std::uint8_t>(perm[i]);
    d.add_term(e, Series::constant(f, order, ConstScalar(permutation_sign(perm))));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return d;
}

bool is_antisymmetric(const XSeries& f) {
  for (int i = 0; i + 1 < f.nvars(); ++i)
    if (!(f.swap_vars(i, i + 1) == -f)) return false;
  if (f.nvars() > 2 && !(f.swap_vars(0, f.nvars() - 1) == -f)) return false;
  return true;
}

XSeries vandermonde_divide(const XSeries& f) {
  require(f.exact(), "Vandermonde division needs a polynomial");
  require(is_antisymmetric(f), "Vandermonde division needs an antisymmetric input");
  XSeries p = f;
  int n = f.nvars();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      // p = (x_j - x_i) q; peel off the top x_j power one term at a time.
      XSeries q(n, f.flavor(), f.order());
      XSeries rest = p;
      while (true) {
        const XSeries::Map::value_type* top = nullptr;
        for (const auto& t : rest.terms())
          if (t.first[j] > 0 && (!top || t.first[j] > top->first[j])) top = &t;
        if (!top) break;
        Exps e = top->first;
        Series c = top->second;
        Exps down = e;
        --down[j];
        q.add_term(down, c);
        Exps shifted = down;
        ++shifted[i];
        rest.add_term(e, -c);
        rest.add_term(shifted, c);
      }
      if (!rest.is_zero()) throw UsageError("Vandermonde division left a nonzero remainder");
      p = q;
    }
  return p;
}

Series z_diag_diff_one(int n, const Potential& v, int order, const EigenCaps& caps) {
  check_size(n, caps);
  const Flavor fl = Flavor::one;
  XSeries delta = vandermonde(n, fl, order);
  XSeries id = XSeries::constant(n, fl, order, ConstScalar(1));
  // exp((1/2N) sum d^2) is exp(N V(N^{-1} d)) with V = x^2/2.
  Pair p = build_pair(Potential::numeric(2), ConstScalar::N(-2), id, v, ConstScalar(1), delta, n,
                      fl, order, caps);
  return finish(divided_pairing(p, n), n);
}

Series z_diag_diff_one_usual(int n, const Potential& v, int order, const EigenCaps& caps) {
  check_size(n, caps);
  const Flavor fl = Flavor::one;
  XSeries delta = vandermonde(n, fl, order);
  XSeries id = XSeries::constant(n, fl, order, ConstScalar(1));
  Pair p = build_pair(Potential::numeric(2), ConstScalar::N(-2), id, v, ConstScalar(1),
                      delta * delta, n, fl, order, caps);
  Series z = finish(pair_at_zero(p.op, p.f), n);
  return z.scaled(norm_const("e", n));
}

Series z_diag_diff_two(int n, const Potential& v1, const Potential& v2, int order,
                       const EigenCaps& caps) {
  check_size(n, caps);
  const Flavor fl = Flavor::two;
  XSeries delta = vandermonde(n, fl, order);
  XSeries id = XSeries::constant(n, fl, order, ConstScalar(1));
  Pair p = build_pair(v1, ConstScalar::N(-1), id, v2, ConstScalar::N(-1), delta, n, fl, order, caps);
  return finish(divided_pairing(p, n), n);
}

Series z_diag_diff_two_ab(int n, const Potential& v1, const Potential& v2, int order,
                          const EigenCaps& caps) {
  check_size(n, caps);
  const Flavor fl = Flavor::two;
  XSeries delta = vandermonde(n, fl, order);
  // F(a) and G(b) stay separate: the operator exp((1/N) sum d_ai d_bi)
  // contracts them coordinate pair by coordinate pair.
  bool fa = v1.all_symbolic(), fb = v2.all_symbolic();
  require(fa || fb, "at least one potential must be purely symbolic");
  XSeries F(n, fl, order), G(n, fl, order);
  if (fa) {
    F = delta * eigen_weight(v1, ConstScalar(1), n, fl, order, caps.max_degree);
    G = delta * eigen_weight(v2, ConstScalar(1), n, fl, order, F.max_degree());
  } else {
    G = delta * eigen_weight(v2, ConstScalar(1), n, fl, order, caps.max_degree);
    F = delta * eigen_weight(v1, ConstScalar(1), n, fl, order, G.max_degree());
  }
  Series acc(fl, order);
  for (const auto& [e, c] : F.terms()) {
    auto it = G.terms().find(e);
    if (it == G.terms().end()) continue;
    int total = 0;
    Rational mult = 1;
    for (auto x : e) {
      total += x;
      mult *= factorial(x);
    }
    ensure(degree(e) <= F.trunc() && degree(e) <= G.trunc(), "pairing beyond truncation");
    acc += (c * it->second).scaled(ConstScalar(mult) * ConstScalar::N(-2 * total));
  }
  return finish(acc, n).scaled(norm_const("e", n));
}

SymmetricExtract symmetric_extract(const std::vector<XSeries>& fs) {
  int n = static_cast<int>(fs.size());
  require(n >= 1, "symmetric_extract needs at least one function");
  const Flavor fl = fs[0].flavor();
  const int order = fs[0].order();
  int dd = vandermonde_degree(n);
  // det(f_j(x_i)) by Leibniz over n variables.
  std::vector<XSeries> embedded;  // f_j(x_i) at index i*n + j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      require(fs[j].nvars() == 1, "symmetric_extract takes one-variable functions");
      XSeries g(n, fl, order, fs[j].trunc());
      Exps e(n, 0);
      for (const auto& [fe, c] : fs[j].terms()) {
        e[i] = fe[0];
        g.add_term(e, c);
      }
      embedded.push_back(g);
    }
  XSeries det(n, fl, order);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    XSeries prod = XSeries::constant(n, fl, order, ConstScalar(permutation_sign(perm)));
    for (int i = 0; i < n; ++i) prod = prod * embedded[i * n + perm[i]];
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  Series divided = vandermonde_divide(det.homogeneous(dd)).eval_zero();

  DetTable table(n, fl, order, order);
  table.prefactor = norm_const("f", n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      require(fs[j].trunc() >= i, "function truncated below the needed derivative");
      table.at(i, j) = fs[j].coefficient(Exps{static_cast<std::uint8_t>(i)}).scaled(ConstScalar(factorial(i)));
    }
  Series derivative = table.det().scaled(table.prefactor);
  ensure(divided == derivative, "symmetric extraction mismatch: " + divided.to_string() + " vs " +
                                    derivative.to_string());
  return {divided, derivative, table};
}

bool laplace_Dk_check(int k, int n, int order) {
  require(k >= 1 && n >= 1 && order >= 0, "bad Laplace check parameters");
  const Flavor fl = Flavor::generic;
  const CouplingId c{'c', 0};
  int nv = 2 * n;  // a_1..a_n, b_1..b_n
  auto entry = [&](int m, int l) {
    XSeries e(nv, fl, order);
    for (int t = 0; t <= order; ++t) {
      Exps ex(nv, 0);
      ex[m] = static_cast<std::uint8_t>(t);
      ex[n + l] = static_cast<std::uint8_t>(t);
      e.add_term(ex, Series::monomial(fl, order, CouplingMonomial(c, t),
                                      ConstScalar(1 / factorial(t))));
    }
    return e;
  };
  XSeries det(nv, fl, order);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    XSeries prod = XSeries::constant(nv, fl, order, ConstScalar(permutation_sign(perm)));
    for (int i = 0; i < n; ++i) prod = prod * entry(i, perm[i]);
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  XSeries lhs(nv, fl, order);
  for (int l = 0; l < n; ++l) {
    XSeries d = det;
    for (int s = 0; s < k; ++s) d = d.derivative(l);
    lhs += d;
  }
  XSeries tr(nv, fl, order);
  for (int l = 0; l < n; ++l) {
    Exps ex(nv, 0);
    ex[n + l] = static_cast<std::uint8_t>(k);
    tr.add_term(ex, Series::monomial(fl, order, CouplingMonomial(c, k)));
  }
  XSeries rhs = tr * det;
  return lhs == rhs;
}

std::vector<Rational> heat_kernel_polynomial(int i, const Rational& n) {
  require(i >= 0, "derivative order must be non-negative");
  // P(x, y) exp(-N (x-y)^2/2); d/dx maps P to P_x - N x P + N y P.
  const Flavor fl = Flavor::generic;
  XSeries p = XSeries::constant(2, fl, 0, ConstScalar(1));
  XSeries x = XSeries::variable(2, 0, fl, 0), y = XSeries::variable(2, 1, fl, 0);
  XSeries ny = y.scaled(ConstScalar(n)) - x.scaled(ConstScalar(n));
  for (int s = 0; s < i; ++s) p = p.derivative(0) + p * ny;
  std::vector<Rational> q(i + 1, Rational(0));
  Rational norm = pow(n, -i);
  for (const auto& [e, c] : p.terms())
    if (e[0] == 0) q[e[1]] = c.constant_term().rational_value() * norm;
  ensure(q[i] == 1, "heat-kernel polynomial is not monic");
  return q;
}

namespace {

// int y^m exp(-N y^2/2) dy at concrete N.
ConstScalar gaussian_moment(int m, int n) {
  if (m % 2) return ConstScalar();
  // sqrt(2 pi / N) (m-1)!! N^{-m/2}
  return ConstScalar::two(1) * ConstScalar::pi(1) * ConstScalar::power_of(Rational(n), -1) *
         ConstScalar(double_factorial(m - 1) * pow(Rational(n), -m / 2));
}

}  // namespace

Series heat_gaussian_entry(int i, int j, int n, const Potential& v2, int order) {
  int bound = exact_degree_bound(v2, order);
  require(bound >= 0, "the heat-kernel route needs a symbolic potential");
  const Flavor fl = Flavor::one;
  auto w = exp_potential_coeffs(v2, ConstScalar(n), ConstScalar(1), fl, order, bound);
  auto q = heat_kernel_polynomial(i, n);
  Series acc(fl, order);
  for (size_t a = 0; a < q.size(); ++a) {
    if (q[a] == 0) continue;
    for (int m = 0; m <= bound; ++m) {
      if (w[m].is_zero()) continue;
      ConstScalar mom = gaussian_moment(static_cast<int>(a) + j + m, n);
      if (mom.is_zero()) continue;
      acc += w[m].scaled(mom * ConstScalar(q[a] * pow(Rational(n), i)));
    }
  }
  // sqrt(N / 2 pi)
  return acc.scaled(ConstScalar::power_of(Rational(n), 1) * ConstScalar::two(-1) *
                    ConstScalar::pi(-1));
}

DetTable heat_table(int n, const Potential& v2, int order) {
  DetTable t(n, Flavor::one, order, order);
  t.prefactor = norm_const("f", n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(i, j) = heat_gaussian_entry(i, j, n, v2, order);
  return t;
}

Series orlov_form(int n, const Potential& v1, const Potential& v2, int order,
                  const EigenCaps& caps) {
  check_size(n, caps);
  const Flavor fl = Flavor::two;
  XSeries delta = vandermonde(n, fl, order);
  Pair p = build_pair(v1, ConstScalar::N(-1), delta, v2, ConstScalar::N(-1), delta, n, fl, order, caps);
  Series z = finish(pair_at_zero(p.op, p.f), n);
  return z.scaled(norm_const("f", n) * ConstScalar(1 / factorial(n)));
}

}  // namespace zform
