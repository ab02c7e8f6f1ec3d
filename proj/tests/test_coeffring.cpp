#include <doctest.h>

#include <random>

#include "zform/nlaurent.hpp"
#include "zform/rational.hpp"
#include "zform/series.hpp"

using namespace zform;

namespace {

const CouplingId l3{'l', 3}, l4{'l', 4};

Series one(int order) { return Series::constant(Flavor::one, order, ConstScalar(1)); }
Series lam(CouplingId id, int order, const ConstScalar& c = ConstScalar(1)) {
  return Series::monomial(Flavor::one, order, CouplingMonomial(id), c);
}

ConstScalar random_scalar(std::mt19937& rng) {
  ConstScalar s;
  int terms = 1 + rng() % 3;
  for (int t = 0; t < terms; ++t) {
    Rational q(static_cast<int>(rng() % 9) - 4, 1 + rng() % 3);
    q.canonicalize();
    ConstScalar m = ConstScalar::N(static_cast<int>(rng() % 5) - 2) *
                    ConstScalar::pi(static_cast<int>(rng() % 3)) *
                    ConstScalar::two(static_cast<int>(rng() % 3)) * ConstScalar::i(rng() % 4);
    s += m * ConstScalar(q);
  }
  return s;
}

Series random_series(std::mt19937& rng, int order, bool constant_free) {
  Series s(Flavor::one, order);
  const CouplingId ids[] = {l3, l4};
  for (int t = 0; t < 4; ++t) {
    int e3 = rng() % 3, e4 = rng() % 2;
    if (constant_free && e3 + e4 == 0) e3 = 1;
    auto m = CouplingMonomial::from_factors({{ids[0], e3}, {ids[1], e4}});
    s.add_term(m, random_scalar(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("7")) == "7/1");
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(binomial(6, 2) == 15);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  Integer root, free;
  squarefree_split(72, root, free);
  CHECK(root == 6);
  CHECK(free == 2);
}

TEST_CASE("const scalar normal form") {
  ConstScalar i = ConstScalar::i();
  CHECK(i * i == ConstScalar(-1));
  CHECK(i.pow(4) == ConstScalar(1));
  CHECK(i.pow(-1) == -i);
  ConstScalar x = ConstScalar::pi() * ConstScalar::N(3) + ConstScalar(Rational(1, 3));
  CHECK((i * i) * x == -x);
  CHECK(ConstScalar::two(2) == ConstScalar(2));
  CHECK(ConstScalar::two(1) * ConstScalar::two(1) == ConstScalar(2));
  CHECK(ConstScalar::sqrt(8) == ConstScalar(2) * ConstScalar::two(1));
  CHECK(ConstScalar::N(-1).inverse() == ConstScalar::N(1));
  CHECK(ConstScalar(0).to_string() == "0/1");
  CHECK((ConstScalar(Rational(3, 2)) * ConstScalar::N(1) * ConstScalar::pi(-1) * ConstScalar::i())
            .to_string() == "3/2 N^{1/2} pi^{-1/2} i^1");
}

TEST_CASE("const scalar ring axioms on random values") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    ConstScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a - a == ConstScalar(0));
  }
}

TEST_CASE("substituting N") {
  ConstScalar s = ConstScalar(2) * ConstScalar::N() + ConstScalar::N(-2);
  CHECK(s.substitute_N(2) == ConstScalar(Rational(9, 2)));
  ConstScalar tau = ConstScalar(2) * ConstScalar::pi() * ConstScalar::i(-1);
  CHECK((tau * ConstScalar::N(-2)).substitute_N(1) == tau);
  CHECK(ConstScalar::N(6).substitute_N(3) == ConstScalar(27));
  CHECK(ConstScalar::N(1).substitute_N(4) == ConstScalar(2));
  CHECK(ConstScalar::N(1).substitute_N(12) == ConstScalar(2) * ConstScalar::sqrt(3));
  CHECK(ConstScalar::N(3).has_half_N_power());
  CHECK(!ConstScalar::N(4).has_half_N_power());

  NLaurent l = NLaurent::N(1, 2) + NLaurent::N(-1);
  CHECK(l.substitute_N(2) == Rational(9, 2));
  CHECK(l.to_string() == "1/1 N^{-2/2} + 2/1 N^{2/2}");
}

TEST_CASE("series product and truncation") {
  Series a = one(1) + lam(l4, 1), b = one(1) - lam(l4, 1);
  CHECK(a * b == one(1));
  std::mt19937 rng(3);
  Series s = random_series(rng, 3, false);
  CHECK(s * one(3) == s);
  Series c = one(2) + lam(l3, 2);
  CHECK(c * c == one(2) + lam(l3, 2, 2) + Series::monomial(Flavor::one, 2, CouplingMonomial(l3, 2)));
  CHECK_THROWS_AS(one(1) * one(2), UsageError);
  CHECK_THROWS_AS(one(1) * Series::constant(Flavor::two, 1, ConstScalar(1)), UsageError);
  CHECK(Series::monomial(Flavor::one, 1, CouplingMonomial(l3, 2)).is_zero());
}

TEST_CASE("series ring axioms on random values") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    Series a = random_series(rng, 3, false), b = random_series(rng, 3, false),
           c = random_series(rng, 3, false);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("series exp and log") {
  CHECK(series_exp(Series(Flavor::one, 3)) == one(3));
  ConstScalar c = ConstScalar(Rational(2, 3)) * ConstScalar::N();
  Series e = series_exp(lam(l4, 2, c));
  Series expect = one(2) + lam(l4, 2, c) +
                  Series::monomial(Flavor::one, 2, CouplingMonomial(l4, 2), c * c * ConstScalar(Rational(1, 2)));
  CHECK(e == expect);
  CHECK(series_exp(lam(l3, 1) + lam(l4, 1)) == one(1) + lam(l3, 1) + lam(l4, 1));
  CHECK_THROWS_AS(series_exp(one(2)), UsageError);

  std::mt19937 rng(5);
  for (int order = 0; order <= 4; ++order)
    for (int t = 0; t < 5; ++t) {
      Series a = random_series(rng, order, true);
      CHECK(series_exp(a) * series_exp(-a) == one(order));
      CHECK(series_log(series_exp(a)) == a);
    }
}

TEST_CASE("series inverse") {
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    Series a = random_series(rng, 3, true) + one(3).scaled(ConstScalar(Rational(3, 2)) * ConstScalar::pi());
    CHECK(a * series_inverse(a) == one(3));
  }
  CHECK_THROWS_AS(series_inverse(lam(l3, 2)), DegenerateFormError);
}

TEST_CASE("coupling monomials") {
  CouplingMonomial m = CouplingMonomial(CouplingId{'a', 3}) * CouplingMonomial(CouplingId{'b', 3}, 2);
  CHECK(m.to_string() == "a3*b3^2");
  CHECK(m.grade() == 3);
  CHECK(CouplingMonomial().to_string() == "1");
  CHECK((m * CouplingMonomial(CouplingId{'a', 3}, -1)).to_string() == "b3^2");
  CHECK(CouplingMonomial(CouplingId{'a', 3}, -1).has_negative_exponent());
  CHECK(parse_coupling("b12") == CouplingId{'b', 12});
  CHECK(CouplingMonomial(l4) < CouplingMonomial(l3, 2));
}

TEST_CASE("canonical serialization") {
  Series s = one(2) + lam(l4, 2, ConstScalar(Rational(9, 4))) +
             lam(l3, 2, ConstScalar::N(2) + ConstScalar(1));
  CHECK(s.to_string() == "1/1 * 1 + (1/1 + 1/1 N^{2/2}) * l3 + 9/4 * l4");
  CHECK(Series(Flavor::one, 2).to_string() == "0");
}

TEST_CASE("binding couplings") {
  Series s = one(2) + lam(l4, 2, ConstScalar(Rational(9, 4))) + lam(l3, 2);
  Series b = bind_couplings(s, {{l4, Rational(2)}});
  CHECK(b == one(2).scaled(ConstScalar(Rational(11, 2))) + lam(l3, 2));
}
