#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace zform {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial_int(unsigned n);
Rational factorial(unsigned n);
Rational double_factorial(int n);  // n!! with (-1)!! = 1
Rational binomial(unsigned n, unsigned k);
Rational pow(const Rational& x, int e);

// Always "p/q", e.g. "3/1", "-5/3".
std::string to_string(const Rational& q);
// Accepts "p", "p/q", "-p/q"; result is canonical.
Rational parse_rational(std::string_view s);

// Writes |n| = s^2 * q with q squarefree. n must be nonzero.
void squarefree_split(const Integer& n, Integer& square_root_part, Integer& squarefree);

}  // namespace zform
