#pragma once

#include <map>

#include "zform/potential.hpp"
#include "zform/xseries.hpp"

namespace zform {

struct EntryCaps {
  int max_size = 4;
  int max_degree = 24;
};

// Commuting indeterminates M_ab (one alphabet) or A_ab, B_ab (two).
struct EntryLayout {
  int n = 1;
  int matrices = 1;

  int nvars() const { return matrices * n * n; }
  int var(int matrix, int a, int b) const { return matrix * n * n + a * n + b; }
};

struct EntryPoly {
  EntryLayout layout;
  XSeries poly;
};

// Tr(X^k) expanded over the entries of matrix `matrix`.
EntryPoly trace_power(const EntryLayout& layout, int matrix, int k, Flavor f, int order);
// sum_{i1..ik} d/dX_{i1 i2} ... d/dX_{ik i1} p
EntryPoly apply_trace_deriv(int matrix, int k, const EntryPoly& p);

Series z_diff_one(int n, const Potential& v, int order, const EntryCaps& caps = {});
Series z_diff_one_swapped(int n, const Potential& v, int order, const EntryCaps& caps = {});
Series z_diff_two(int n, const Potential& v1, const Potential& v2, int order,
                  const EntryCaps& caps = {});
// rescaled = true uses the N^{-1/2} form; false folds the rescaling
// M = sqrt(N) B into the potentials instead.
Series z_diff_two_onematrix(int n, const Potential& v1, const Potential& v2, int order,
                            bool rescaled = true, const EntryCaps& caps = {});

// Operator identity (Tr dA dB)^l prod_k (Tr A^k)^{a_k} = l! prod_k (Tr dB^k)^{a_k}
// tested on every B-entry monomial of degree <= l.
bool check_central_point(int n, const std::map<int, int>& valencies, const EntryCaps& caps = {});

}  // namespace zform
