#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "zform/eigencalc.hpp"
#include "zform/errors.hpp"
#include "zform/orthopoly.hpp"

using namespace zform;

namespace {

const CouplingId a3{'a', 3}, a4{'a', 4}, b2{'b', 2}, b3{'b', 3}, b4{'b', 4}, l3{'l', 3}, l4{'l', 4};

SeriesPoly combine(const SeriesPoly& a, const SeriesPoly& b, const Rational& c) {
  SeriesPoly r = a.size() >= b.size() ? a : b;
  for (std::size_t k = 0; k < r.size(); ++k) {
    Series x = k < a.size() ? a[k] : Series(r[k].flavor(), r[k].order());
    if (k < b.size()) x += b[k].scaled(ConstScalar(c));
    r[k] = x;
  }
  return r;
}

void check_biorthogonal(const BilinearForm& form, const Biorthogonal& b) {
  const std::size_t n = b.h.size();
  Series unit = Series::constant(form.flavor, form.order, ConstScalar(1));
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(b.p[i].size() == i + 1);
    CHECK(b.q[i].size() == i + 1);
    CHECK(b.p[i].back() == unit);
    CHECK(b.q[i].back() == unit);
    for (std::size_t j = 0; j < n; ++j) {
      Series v = form.eval(b.p[i], b.q[j]);
      if (i == j)
        CHECK(v == b.h[i]);
      else
        CHECK(v.is_zero());
    }
  }
}

}  // namespace

TEST_CASE("Gram matrix of the Gaussian one-matrix form") {
  for (int n = 1; n <= 3; ++n) {
    DetTable g = gram(one_matrix_form(n, Potential(), 0), 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        Rational expect(0);
        if (j >= i && (j - i) % 2 == 0) {
          int m = (j - i) / 2;
          expect = factorial(j) / (pow(Rational(2 * n), m) * factorial(m));
        }
        CHECK(g.at(i, j) == Series::constant(Flavor::one, 0, ConstScalar(expect)));
      }
  }
}

TEST_CASE("Gram entries are the determinant entries") {
  Potential v1 = Potential::monomial(3, a3), v2 = Potential::monomial(3, b3);
  DetTable g = gram(two_matrix_form(2, v1, v2, 2), 2);
  DetTable s = slater_two_diff(2, v1, v2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(g.at(i, j) == s.at(i, j));
  Potential v = Potential::monomial(4, l4);
  DetTable g1 = gram(one_matrix_form(3, v, 2), 3);
  DetTable s1 = slater_one_diff(3, v, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(g1.at(i, j) == s1.at(i, j));
}

TEST_CASE("bilinearity and symmetry") {
  std::mt19937 rng(7);
  Potential v1 = Potential::numeric(2) + Potential::monomial(3, a3), v2 = Potential::monomial(3, b3);
  BilinearForm bar = doublebar_form(2, v1, v2, 2);
  BilinearForm two = two_matrix_form(2, Potential::monomial(3, a3), v2, 2);
  for (int t = 0; t < 4; ++t) {
    SeriesPoly a = random_monic(2, Flavor::two, 2, rng), b = random_monic(3, Flavor::two, 2, rng),
               c = random_monic(1, Flavor::two, 2, rng);
    Rational k(static_cast<int>(rng() % 5) + 1);
    for (const BilinearForm* f : {&bar, &two}) {
      CHECK(f->eval(combine(a, b, k), c) == f->eval(a, c) + f->eval(b, c).scaled(ConstScalar(k)));
      CHECK(f->eval(c, combine(a, b, k)) == f->eval(c, a) + f->eval(c, b).scaled(ConstScalar(k)));
    }
    CHECK(bar.eval(a, b) == bar.eval(b, a));
    CHECK(bar.eval(a, c) == bar.eval(c, a));
  }
}

TEST_CASE("biorthogonal polynomials") {
  for (int n = 1; n <= 3; ++n) {
    BilinearForm f = one_matrix_form(n, Potential(), 1);
    Biorthogonal b = biorthogonalize(f, n);
    check_biorthogonal(f, b);
    for (int i = 0; i < n; ++i) CHECK(b.h[i] == Series::constant(Flavor::one, 1, ConstScalar(factorial(i))));
    CHECK(product_z(b.h, n) == Series::constant(Flavor::one, 1, ConstScalar(1)));
  }
  Potential v1 = Potential::monomial(3, a3), v2 = Potential::monomial(3, b3);
  Potential w1 = Potential::monomial(4, a4), w = Potential::monomial(3, l3) + Potential::monomial(4, l4);
  for (int n = 1; n <= 3; ++n) {
    for (const Potential& p1 : {v1, w1}) {
      BilinearForm f = two_matrix_form(n, p1, v2, 2);
      Biorthogonal b = biorthogonalize(f, n);
      check_biorthogonal(f, b);
      CHECK(product_z(b.h, n) == slater_two_diff(n, p1, v2, 2).z());
    }
    BilinearForm g = one_matrix_form(n, w, 3);
    Biorthogonal b = biorthogonalize(g, n);
    check_biorthogonal(g, b);
    CHECK(product_z(b.h, n) == slater_one_diff(n, w, 3).z());
  }
  BilinearForm f1 = two_matrix_form(1, v1, v2, 2);
  CHECK(biorthogonalize(f1, 1).h[0] == f1.eval({Series::constant(Flavor::two, 2, ConstScalar(1))},
                                                {Series::constant(Flavor::two, 2, ConstScalar(1))}));
  CHECK(oracle::numbers(product_z(biorthogonalize(two_matrix_form(2, v1, v2, 2), 2).h, 2)) ==
        oracle::Numbers{{"1", 1}, {"a3*b3", Rational(5, 3)}});
}

TEST_CASE("double-bar polynomials of the Gaussian weight") {
  for (int n = 1; n <= 3; ++n) {
    Doublebar d = doublebar_orthogonalize(Potential::numeric(2), Potential(), n, 1, 5);
    for (int k = 0; k < 5; ++k)
      CHECK(d.h[k] == Series::constant(Flavor::two, 1, ConstScalar(factorial(k) / pow(Rational(n), k))));
    for (const auto& b : d.beta) CHECK(b.is_zero());
    for (int k = 1; k < 5; ++k) CHECK(d.h[k] == d.h[k - 1].scaled(ConstScalar(Rational(k, n))));
    CHECK(recurrence_family(d) == d.q);
  }
}

TEST_CASE("double-bar form without a Gaussian part is degenerate") {
  CHECK_THROWS_AS(doublebar_orthogonalize(Potential(), Potential(), 1, 1, 3), DegenerateFormError);
  CHECK_THROWS_AS(doublebar_orthogonalize(Potential::monomial(3, a3), Potential::monomial(3, b3), 2, 2, 2),
                  DegenerateFormError);
}

TEST_CASE("double-bar recurrence") {
  Potential v1 = Potential::numeric(2) + Potential::monomial(3, a3);
  for (const Potential& v2 : {Potential::monomial(3, b3), Potential::monomial(2, b2) + Potential::monomial(4, b4)})
    for (int n = 1; n <= 3; ++n) {
      Doublebar d = doublebar_orthogonalize(v1, v2, n, 2, 4);
      BilinearForm f = doublebar_form(n, v1, v2, 2);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          Series v = f.eval(d.q[i], d.q[j]);
          if (i == j)
            CHECK(v == d.h[i]);
          else
            CHECK(v.is_zero());
        }
      CHECK(recurrence_family(d) == d.q);
    }
}

TEST_CASE("exchange identity on orthogonal families") {
  Potential gauss = Potential::numeric(2), cubic = Potential::monomial(3, a3);
  Potential quad2 = Potential::monomial(2, b2), cubic2 = Potential::monomial(3, b3);
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 2; ++r)
      for (int j = 0; j <= 2; ++j) {
        CHECK(check_E_identity(gauss, quad2, r, j, n, 2));
        CHECK(check_E_identity(gauss, cubic2, r, j, n, 2));
        CHECK(check_E_identity(cubic, quad2, r, j, n, 2));
        CHECK(check_E_identity(cubic, cubic2, r, j, n, 2));
      }
  CHECK(check_E_identity(cubic, Potential(), 0, 0, 2, 2));
  Potential v1 = gauss + cubic;
  Doublebar d = doublebar_orthogonalize(v1, cubic2, 2, 2, 3);
  for (int r = 0; r < 3; ++r)
    for (int j = 0; j < 3; ++j) CHECK(check_E_identity(v1, cubic2, r, j, 2, 2, d.q));
}

TEST_CASE("W determinant") {
  Potential v2 = Potential::monomial(3, b3);
  Potential g = Potential::numeric(2) + Potential::monomial(3, a3);
  for (int n = 1; n <= 3; ++n)
    for (int order = 1; order <= 2; ++order) {
      Series m = new_matrix_M(n, g, v2, order).z();
      CHECK(build_W_determinant(n, g, v2, order, WChoice::orthogonal).z() == m);
      CHECK(build_W_determinant(n, g, v2, order, WChoice::monomial).z() == m);
      CHECK(oracle::numbers(m) == oracle::numbers(slater_two_diff(n, g, v2, order).z()));
    }
  Potential c = Potential::monomial(3, a3);
  std::mt19937 rng(31);
  for (int n = 1; n <= 3; ++n) {
    Series z = slater_two_diff(n, c, v2, 2).z();
    CHECK(build_W_determinant(n, c, v2, 2, WChoice::monomial).z() == z);
    std::vector<SeriesPoly> fam;
    for (int r = 0; r < n; ++r) fam.push_back(random_monic(r, Flavor::two, 3, rng));
    CHECK(build_W_determinant(n, c, v2, 2, WChoice::custom, fam).z() == z);
  }
  CHECK(oracle::numbers(build_W_determinant(2, c, v2, 2, WChoice::monomial).z()) ==
        oracle::Numbers{{"1", 1}, {"a3*b3", Rational(5, 3)}});
  CHECK(oracle::numbers(build_W_determinant(3, c, v2, 1, WChoice::monomial).z()) ==
        oracle::at(oracle::z_two({{3, a3}}, {{3, b3}}, 1), 3));
  // p = 2: the one-matrix model with a quartic potential
  Potential q = Potential::monomial(4, b4);
  for (int n = 1; n <= 3; ++n)
    CHECK(oracle::numbers(build_W_determinant(n, Potential::numeric(2), q, 2, WChoice::orthogonal).z()) ==
          oracle::numbers(slater_one_diff(n, q, 2).z()));
}
