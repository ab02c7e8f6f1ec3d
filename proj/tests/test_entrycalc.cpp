#include <doctest.h>

#include "oracle.hpp"
#include "zform/entrycalc.hpp"
#include "zform/wick.hpp"

using namespace zform;

namespace {

const CouplingId l3{'l', 3}, l4{'l', 4}, a3{'a', 3}, a4{'a', 4}, b2{'b', 2}, b3{'b', 3};

Series one_series(Flavor f, int order) { return Series::constant(f, order, ConstScalar(1)); }

XSeries entry(const EntryLayout& l, int m, int a, int b, Flavor f, int order) {
  return XSeries::variable(l.nvars(), l.var(m, a, b), f, order);
}

}  // namespace

TEST_CASE("trace powers") {
  const Flavor f = Flavor::generic;
  EntryLayout l2{2, 1}, l1{1, 1};
  CHECK(trace_power(l2, 0, 1, f, 0).poly == entry(l2, 0, 0, 0, f, 0) + entry(l2, 0, 1, 1, f, 0));
  XSeries m11 = entry(l1, 0, 0, 0, f, 0);
  CHECK(trace_power(l1, 0, 2, f, 0).poly == m11 * m11);
  XSeries a = entry(l2, 0, 0, 0, f, 0), b = entry(l2, 0, 0, 1, f, 0), c = entry(l2, 0, 1, 0, f, 0),
          d = entry(l2, 0, 1, 1, f, 0);
  CHECK(trace_power(l2, 0, 2, f, 0).poly == a * a + (b * c).scaled(ConstScalar(2)) + d * d);
}

TEST_CASE("trace derivatives") {
  const Flavor f = Flavor::generic;
  EntryLayout l2{2, 1};
  EntryPoly t2 = trace_power(l2, 0, 2, f, 0);
  CHECK(apply_trace_deriv(0, 2, t2).poly == XSeries::constant(4, f, 0, ConstScalar(8)));
  for (int n = 1; n <= 3; ++n) {
    EntryLayout l{n, 1};
    CHECK(apply_trace_deriv(0, 1, trace_power(l, 0, 1, f, 0)).poly ==
          XSeries::constant(n * n, f, 0, ConstScalar(n)));
  }
  EntryPoly constant{l2, XSeries::constant(4, f, 0, ConstScalar(1))};
  CHECK(apply_trace_deriv(0, 2, constant).poly.is_zero());
  EntryPoly t4 = trace_power(l2, 0, 4, f, 0);
  CHECK(apply_trace_deriv(0, 3, t4).poly.max_degree() == 1);
}

TEST_CASE("one-matrix differential formulations") {
  CHECK(z_diff_one(2, Potential(), 2) == one_series(Flavor::one, 2));
  CHECK(z_diff_one_swapped(2, Potential(), 2) == one_series(Flavor::one, 2));
  Potential q = Potential::monomial(4, l4);
  CHECK(oracle::numbers(z_diff_one(1, q, 1)) == oracle::Numbers{{"1", 1}, {"l4", Rational(3, 4)}});
  CHECK(oracle::numbers(z_diff_one(2, q, 1)) == oracle::Numbers{{"1", 1}, {"l4", Rational(9, 4)}});
  CHECK(oracle::numbers(z_diff_one_swapped(1, q, 1)) == oracle::Numbers{{"1", 1}, {"l4", Rational(3, 4)}});
  Potential c = Potential::monomial(3, l3);
  CHECK(z_diff_one_swapped(2, c, 2) == z_diff_one(2, c, 2));
  CHECK(oracle::numbers(z_diff_one(2, c, 2)) == oracle::at(oracle::z_one({{3, l3}}, 2), 2));
}

TEST_CASE("one-matrix differential formulations match the oracle") {
  Potential v = Potential::monomial(3, l3) + Potential::monomial(4, l4);
  auto ex = oracle::z_one({{3, l3}, {4, l4}}, 3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(oracle::numbers(z_diff_one(n, v, 3)) == oracle::at(ex, n));
    CHECK(oracle::numbers(z_diff_one_swapped(n, v, 3)) == oracle::at(ex, n));
  }
}

TEST_CASE("two-matrix differential formulations") {
  Potential v1 = Potential::monomial(3, a3), v2 = Potential::monomial(3, b3);
  CHECK(z_diff_two(2, Potential(), Potential(), 2) == one_series(Flavor::two, 2));
  CHECK(z_diff_two_onematrix(2, Potential(), Potential(), 2) == one_series(Flavor::two, 2));
  CHECK(oracle::numbers(z_diff_two(1, v1, v2, 2)) == oracle::Numbers{{"1", 1}, {"a3*b3", Rational(2, 3)}});
  CHECK(oracle::numbers(z_diff_two(2, v1, v2, 2)) == oracle::Numbers{{"1", 1}, {"a3*b3", Rational(5, 3)}});
  CHECK(z_diff_two_onematrix(1, v1, v2, 2) == z_diff_two(1, v1, v2, 2));
  Potential q1 = Potential::monomial(4, a4), q2 = Potential::monomial(2, b2);
  CHECK(z_diff_two_onematrix(2, q1, q2, 2) == z_diff_two(2, q1, q2, 2));

  Potential w1 = v1 + q1, w2 = v2 + Potential::monomial(4, CouplingId{'b', 4});
  auto ex = oracle::z_two({{3, a3}, {4, a4}}, {{3, b3}, {4, CouplingId{'b', 4}}}, 3);
  for (int n = 1; n <= 2; ++n) {
    int order = n == 1 ? 3 : 2;
    auto expect = oracle::at(order == 3 ? ex : oracle::z_two({{3, a3}, {4, a4}}, {{3, b3}, {4, CouplingId{'b', 4}}}, 2), n);
    CHECK(oracle::numbers(z_diff_two(n, w1, w2, order)) == expect);
    CHECK(oracle::numbers(z_diff_two_onematrix(n, w1, w2, order)) == expect);
  }
}

TEST_CASE("rescaling needs no Jacobian") {
  Potential v1 = Potential::monomial(3, a3) + Potential::monomial(4, a4);
  Potential v2 = Potential::monomial(3, b3) + Potential::monomial(2, b2);
  for (int n = 1; n <= 2; ++n)
    CHECK(z_diff_two_onematrix(n, v1, v2, 2, true) == z_diff_two_onematrix(n, v1, v2, 2, false));
}

TEST_CASE("central point identity") {
  CHECK(check_central_point(2, {{1, 1}}));
  CHECK(check_central_point(2, {{2, 1}}));
  CHECK(check_central_point(2, {{3, 1}}));
  CHECK(check_central_point(1, {{2, 1}, {1, 1}}));
  CHECK(check_central_point(2, {{1, 2}}));
}

TEST_CASE("entry caps") {
  CHECK_THROWS_AS(z_diff_one(5, Potential::monomial(4, l4), 1), ResourceError);
  CHECK_THROWS_AS(z_diff_one(2, Potential::monomial(4, l4), 8), ResourceError);
}
