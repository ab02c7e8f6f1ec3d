#include "zform/rational.hpp"

#include "zform/errors.hpp"

namespace zform {

Integer factorial_int(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational factorial(unsigned n) { return Rational(factorial_int(n)); }

Rational double_factorial(int n) {
  require(n >= -1, "double factorial of negative argument");
  Integer r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return Rational(r);
}

Rational binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational pow(const Rational& x, int e) {
  Rational base = x;
  if (e < 0) {
    require(x != 0, "negative power of zero");
    base = 1 / x;
    e = -e;
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
  std::string str(s);
  require(!str.empty(), "empty rational");
  Rational r;
  if (r.set_str(str, 10) != 0) throw UsageError("not a rational: " + str);
  require(r.get_den() != 0, "zero denominator: " + str);
  r.canonicalize();
  return r;
}

void squarefree_split(const Integer& n, Integer& root, Integer& free) {
  require(n != 0, "squarefree split of zero");
  Integer m = abs(n);
  root = 1;
  free = 1;
  for (Integer p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) root *= p;
    if (e % 2) free *= p;
  }
  free *= m;
}

}  // namespace zform
