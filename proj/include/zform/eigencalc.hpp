#pragma once

#include <vector>

#include "zform/det_table.hpp"
#include "zform/potential.hpp"
#include "zform/xseries.hpp"

namespace zform {

struct EigenCaps {
  int max_size = 4;
  int max_degree = 64;
};

// det(x_i^{j-1}) = prod_{i<j} (x_j - x_i), built by the Leibniz expansion.
XSeries vandermonde(int nvars, Flavor f, int order);
int vandermonde_degree(int nvars);
bool is_antisymmetric(const XSeries& f);
// Exact division by the Vandermonde; f must be an antisymmetric polynomial.
XSeries vandermonde_divide(const XSeries& f);

Series z_diag_diff_one(int n, const Potential& v, int order, const EigenCaps& caps = {});
Series z_diag_diff_one_usual(int n, const Potential& v, int order, const EigenCaps& caps = {});
Series z_diag_diff_two(int n, const Potential& v1, const Potential& v2, int order,
                       const EigenCaps& caps = {});
Series z_diag_diff_two_ab(int n, const Potential& v1, const Potential& v2, int order,
                          const EigenCaps& caps = {});

struct SymmetricExtract {
  Series divided;        // [det(f_j(x_i)) / Delta]_0
  Series derivative;     // f_N det(f_j^{(i-1)}(0))
  DetTable derivative_table;
};
SymmetricExtract symmetric_extract(const std::vector<XSeries>& fs);

bool laplace_Dk_check(int k, int n, int order);

// [d_x^i exp(-N (x-y)^2/2)]_{x=0} = N^i Q_i(y) exp(-N y^2/2); returns the
// coefficients of Q_i at concrete N.
std::vector<Rational> heat_kernel_polynomial(int i, const Rational& n);
// sqrt(N/2pi) int [d_x^i K]_0 y^j exp(N V2(y)) dy at concrete N.
Series heat_gaussian_entry(int i, int j, int n, const Potential& v2, int order);
DetTable heat_table(int n, const Potential& v2, int order);

Series orlov_form(int n, const Potential& v1, const Potential& v2, int order,
                  const EigenCaps& caps = {});

// exp(N V(w x)) for each of n variables, w a power of N kept symbolic.
XSeries eigen_weight(const Potential& v, const ConstScalar& inner, int n, Flavor f, int order,
                     int cap);

}  // namespace zform
