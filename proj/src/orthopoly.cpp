#include "zform/orthopoly.hpp"

#include <algorithm>

namespace zform {
namespace {

Series zero(Flavor f, int order) { return Series(f, order); }
Series one(Flavor f, int order) { return Series::constant(f, order, ConstScalar(1)); }

SeriesPoly with_order(const SeriesPoly& p, Flavor f, int order) {
  SeriesPoly out;
  for (const auto& c : p) {
    Series s(f, order);
    for (const auto& [m, v] : c.terms()) s.add_term(m, v);
    out.push_back(s);
  }
  return out;
}

// a - c * b
SeriesPoly axpy(const SeriesPoly& a, const Series& c, const SeriesPoly& b) {
  SeriesPoly out = a;
  if (out.size() < b.size()) out.resize(b.size(), zero(c.flavor(), c.order()));
  for (size_t k = 0; k < b.size(); ++k) out[k] -= c * b[k];
  return out;
}

SeriesPoly times_x(const SeriesPoly& a) {
  SeriesPoly out(a.size() + 1, zero(a[0].flavor(), a[0].order()));
  for (size_t k = 0; k < a.size(); ++k) out[k + 1] = a[k];
  return out;
}

Series pivot_inverse(const Series& h, int k) {
  try {
    return series_inverse(h);
  } catch (const DegenerateFormError&) {
    throw DegenerateFormError("pivot " + std::to_string(k) +
                              " of the Gram matrix has no grade-0 part");
  }
}

}  // namespace

BilinearForm two_matrix_form(int n, const Potential& v1, const Potential& v2, int order,
                             const DetCaps& caps) {
  BilinearForm f{FormKind::biorthogonal, Flavor::two, order, n, {}};
  f.eval = [=](const SeriesPoly& p, const SeriesPoly& q) {
    return substitute_N(slater_two_entry(p, q, v1, v2, order, caps), n);
  };
  return f;
}

BilinearForm one_matrix_form(int n, const Potential& v, int order, const DetCaps& caps) {
  BilinearForm f{FormKind::biorthogonal, Flavor::one, order, n, {}};
  f.eval = [=](const SeriesPoly& p, const SeriesPoly& q) {
    return substitute_N(slater_one_entry(p, q, v, order, caps), n);
  };
  return f;
}

BilinearForm doublebar_form(int n, const Potential& v1, const Potential& v2, int order,
                            const DetCaps& caps) {
  BilinearForm f{FormKind::doublebar, Flavor::two, order, n, {}};
  f.eval = [=](const SeriesPoly& p, const SeriesPoly& q) {
    SeriesPoly pq(p.size() + q.size() - 1, Series(Flavor::two, order));
    for (size_t a = 0; a < p.size(); ++a)
      for (size_t b = 0; b < q.size(); ++b) pq[a + b] += p[a] * q[b];
    return substitute_N(
        exchange_bracket(pq, 0, monomial_poly(0, Flavor::two, order), v1, v2, order, caps), n);
  };
  return f;
}

DetTable gram(const BilinearForm& form, int size) {
  require(size >= 1, "Gram size must be positive");
  DetTable t(size, form.flavor, form.order, form.order);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      t.at(i, j) = form.eval(monomial_poly(i, form.flavor, form.order),
                             monomial_poly(j, form.flavor, form.order));
  return t;
}

Biorthogonal biorthogonalize(const BilinearForm& form, int size) {
  const Flavor fl = form.flavor;
  const int order = form.order;
  DetTable g = gram(form, size);
  // Pairings against the monomial basis are bilinear in the Gram entries.
  auto pair = [&](const SeriesPoly& p, const SeriesPoly& q) {
    Series acc = zero(fl, order);
    for (size_t a = 0; a < p.size(); ++a)
      for (size_t b = 0; b < q.size(); ++b)
        if (!p[a].is_zero() && !q[b].is_zero()) acc += p[a] * g.at(a, b) * q[b];
    return acc;
  };
  Biorthogonal out;
  std::vector<Series> hinv;
  for (int k = 0; k < size; ++k) {
    SeriesPoly p = monomial_poly(k, fl, order), q = p;
    const SeriesPoly basis = p;
    for (int m = 0; m < k; ++m) {
      p = axpy(p, pair(basis, out.q[m]) * hinv[m], out.p[m]);
      q = axpy(q, pair(out.p[m], basis) * hinv[m], out.q[m]);
    }
    p.resize(k + 1, zero(fl, order));
    q.resize(k + 1, zero(fl, order));
    Series h = pair(p, q);
    hinv.push_back(pivot_inverse(h, k));
    out.p.push_back(p);
    out.q.push_back(q);
    out.h.push_back(h);
  }
  return out;
}

Series product_z(const std::vector<Series>& h, int n) {
  require(!h.empty(), "empty pivot list");
  Series z = h.front();
  for (size_t k = 1; k < h.size(); ++k) z = z * h[k];
  return z.scaled(norm_const("f", n));
}

Doublebar doublebar_orthogonalize(const Potential& v1, const Potential& v2, int n, int order,
                                  int size, const DetCaps& caps) {
  BilinearForm form = doublebar_form(n, v1, v2, order, caps);
  Biorthogonal b = biorthogonalize(form, size);
  for (int k = 0; k < size; ++k)
    ensure(b.p[k] == b.q[k], "double-bar form produced distinct left and right families");
  Doublebar d{b.q, b.h, {}};
  for (int k = 0; k + 1 < size; ++k) {
    Series below = k >= 1 ? d.q[k][k - 1] : zero(Flavor::two, order);
    d.beta.push_back(below - d.q[k + 1][k]);
  }
  return d;
}

std::vector<SeriesPoly> recurrence_family(const Doublebar& d) {
  std::vector<SeriesPoly> out;
  if (d.q.empty()) return out;
  const Flavor fl = d.q[0][0].flavor();
  const int order = d.q[0][0].order();
  out.push_back(monomial_poly(0, fl, order));
  for (size_t k = 0; k < d.beta.size(); ++k) {
    SeriesPoly next = axpy(times_x(out[k]), d.beta[k], out[k]);
    if (k >= 1) {
      Series ratio = d.h[k] * series_inverse(d.h[k - 1]);
      next = axpy(next, ratio, out[k - 1]);
    }
    next.resize(k + 2, zero(fl, order));
    out.push_back(next);
  }
  return out;
}

bool check_E_identity(const Potential& v1, const Potential& v2, int r, int j, int n, int order,
                      const std::vector<SeriesPoly>& family) {
  require(r >= 0 && j >= 0, "indices must be non-negative");
  const Flavor fl = Flavor::two;
  auto member = [&](int k) {
    if (family.empty()) return monomial_poly(k, fl, order);
    require(static_cast<int>(family.size()) > k, "polynomial family too short");
    return with_order(family[k], fl, order);
  };
  SeriesPoly qr = member(r), qj = member(j);
  SeriesPoly prod(qr.size() + qj.size() - 1, zero(fl, order));
  for (size_t a = 0; a < qr.size(); ++a)
    for (size_t b = 0; b < qj.size(); ++b) prod[a + b] += qr[a] * qj[b];
  // V1'(d/N) = sum_k c_k N^{1-k} d^{k-1}
  SeriesPoly vprime(v1.max_degree(), zero(fl, order));
  for (const auto& t : v1.terms())
    vprime[t.k - 1] += Potential::coefficient(t, fl, order).scaled(ConstScalar::N(2 - 2 * t.k));
  XSeries one_op = XSeries::constant(1, fl, order, ConstScalar(1));
  Series lhs = weighted_pairing(poly_x(vprime), v1, ConstScalar::N(-2), poly_x(prod), v2,
                                ConstScalar(1), fl, order);
  Series rhs = weighted_pairing(one_op, v1, ConstScalar::N(-2), poly_x(times_x(prod)), v2,
                                ConstScalar(1), fl, order);
  return substitute_N(lhs, n) == substitute_N(rhs, n);
}

DetTable build_W_determinant(int n, const Potential& v1, const Potential& v2, int order,
                             WChoice choice, const std::vector<SeriesPoly>& custom,
                             const DetCaps& caps) {
  require(n >= 1, "determinant size must be positive");
  if (n > caps.max_size) throw ResourceError("determinant size exceeds cap");
  const PotentialTerm& top = v1.top_term();
  const int p = top.k;
  require(p >= 2, "the W determinant needs deg V1 >= 2");
  const Flavor fl = Flavor::two;
  int shift = 0;
  if (top.symbol)
    for (int i = 0; i < n; ++i) shift += RSIndex::of(p, i).r;
  const int internal = order + shift;

  std::vector<SeriesPoly> fam;
  std::vector<Series> h;
  switch (choice) {
    case WChoice::orthogonal: {
      Doublebar d = doublebar_orthogonalize(v1, v2, n, internal, n, caps);
      fam = d.q;
      h = d.h;
      break;
    }
    case WChoice::monomial:
      for (int k = 0; k < n; ++k) fam.push_back(monomial_poly(k, fl, internal));
      break;
    case WChoice::custom:
      require(static_cast<int>(custom.size()) >= n, "custom family too short");
      for (int k = 0; k < n; ++k) {
        require(static_cast<int>(custom[k].size()) == k + 1, "custom polynomial has wrong degree");
        fam.push_back(with_order(custom[k], fl, internal));
        require(fam.back()[k] == one(fl, internal), "custom polynomial is not monic");
      }
      break;
  }

  std::vector<int> perm = rs_row_permutation(n, p);
  DetTable t(n, fl, internal, order);
  t.prefactor = norm_const("f", n) * ConstScalar(permutation_sign(perm));
  if (top.symbol) t.coupling_factor = CouplingMonomial(*top.symbol, -shift);
  for (int row = 0; row < n; ++row) {
    RSIndex rs = RSIndex::of(p, perm[row]);
    ConstScalar factor = ConstScalar::N(2 * (p - 1) * rs.r) * ConstScalar(pow(top.scale, -rs.r));
    for (int j = 0; j < n; ++j) {
      Series e = exchange_bracket(fam[rs.r], rs.s, fam[j], v1, v2, internal, caps);
      t.at(row, j) = substitute_N(e.scaled(factor), n);
    }
    if (choice == WChoice::orthogonal && rs.s == 0)
      for (int j = 0; j < n; ++j) {
        Series expect = j == rs.r ? substitute_N(h[j].scaled(factor), n) : zero(fl, internal);
        ensure(t.at(row, j) == expect, "J0 block is not diagonal in the orthogonal family");
      }
  }
  return t;
}

}  // namespace zform
