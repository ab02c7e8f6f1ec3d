#pragma once

#include <string>
#include <vector>

#include "zform/const_scalar.hpp"

namespace zform {

Rational superfactorial(int n);  // prod_{j=1}^{n} j!

// a..h normalizations at concrete size n ("c1" is 2 pi/(i N)); "h" needs p.
ConstScalar norm_const(const std::string& name, int n, int p = 2);

// Row index i = (p-1) r + s with 0 <= s <= p-2.
struct RSIndex {
  int p = 2, i = 0, r = 0, s = 0;
  static RSIndex of(int p, int i);
};

// Rows of the size-n (r,s) matrix regrouped by s, then r; perm[new] = old.
std::vector<int> rs_row_permutation(int n, int p);
int sgn_rows(int n, int p);

// R_ij = (i+j)!/((i+j)/2)! for even i+j, the Gaussian moments behind e_N.
std::vector<Rational> gaussian_moment_matrix(int n);
struct NormalizationChecks {
  bool det_R_closed_form = false;
  bool e_from_R = false;
  bool e_from_two_matrix_diagonal = false;
  bool e_from_vandermonde = false;  // only evaluated for n <= 4, true above
  bool all() const { return det_R_closed_form && e_from_R && e_from_two_matrix_diagonal && e_from_vandermonde; }
};
NormalizationChecks normalization_checks(int n);

struct NormRelations {
  bool f_vs_e = false;        // f_N N^{N(N-1)/2} = N! e_N
  bool e_vs_d = false;        // e_N N!/c_1^N = 1/d_N
  bool f_vs_b = false;        // f_N (N/2pi)^{N/2} N^{N(N-1)/2} = N!/b_N
  bool f_vs_d = false;        // f_N N^{N(N+1)/2} i^N/(2pi)^N = 1/d_N
  bool e_closed_form = false; // e_N = N^{N(N-1)/2}/prod_1^N j!
  bool all() const { return f_vs_e && e_vs_d && f_vs_b && f_vs_d && e_closed_form; }
};
NormRelations norm_relations(int n);

}  // namespace zform
