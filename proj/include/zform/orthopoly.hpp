#pragma once

#include <functional>
#include <vector>

#include "zform/determinants.hpp"

namespace zform {

enum class FormKind { biorthogonal, doublebar };

// Bilinear form on polynomials with series coefficients, evaluated at a
// concrete size n.
struct BilinearForm {
  FormKind kind = FormKind::biorthogonal;
  Flavor flavor = Flavor::two;
  int order = 0;
  int n = 1;
  std::function<Series(const SeriesPoly&, const SeriesPoly&)> eval;
};

// [P(d) exp(N V1(d/sqrt N)) Q(x) exp(N V2(x/sqrt N))]_0
BilinearForm two_matrix_form(int n, const Potential& v1, const Potential& v2, int order,
                             const DetCaps& caps = {});
// [P(d) exp(d^2/2N) Q(x) exp(N V(x))]_0
BilinearForm one_matrix_form(int n, const Potential& v, int order, const DetCaps& caps = {});
// <P||Q> = [exp(N V1(d/N)) P(x) Q(x) exp(N V2(x))]_0
BilinearForm doublebar_form(int n, const Potential& v1, const Potential& v2, int order,
                            const DetCaps& caps = {});

// Entries <x^i | x^j> for 0 <= i, j < size.
DetTable gram(const BilinearForm& form, int size);

struct Biorthogonal {
  std::vector<SeriesPoly> p, q;
  std::vector<Series> h;
};
// Monic P_i, Q_j with <P_i|Q_j> = h_i delta_ij, i, j < size. Throws
// DegenerateFormError when a pivot has no grade-0 part.
Biorthogonal biorthogonalize(const BilinearForm& form, int size);
// f_N prod h_i
Series product_z(const std::vector<Series>& h, int n);

struct Doublebar {
  std::vector<SeriesPoly> q;
  std::vector<Series> h;
  std::vector<Series> beta;  // beta_0 .. beta_{size-2}
};
Doublebar doublebar_orthogonalize(const Potential& v1, const Potential& v2, int n, int order,
                                  int size, const DetCaps& caps = {});
// Q_{k+1} = (x - beta_k) Q_k - (h_k/h_{k-1}) Q_{k-1} regenerates the family.
std::vector<SeriesPoly> recurrence_family(const Doublebar& d);

// [exp(N V1(d/N)) V1'(d/N) F]_0 == [exp(N V1(d/N)) x F]_0 for
// F = Q_r Q_j exp(N V2(x)); an empty family means monomials.
bool check_E_identity(const Potential& v1, const Potential& v2, int r, int j, int n, int order,
                      const std::vector<SeriesPoly>& family = {});

enum class WChoice { orthogonal, monomial, custom };
// Rows regrouped by s with P_r^{(s)} = Q_r; prefactor f_N sgn(N, p).
DetTable build_W_determinant(int n, const Potential& v1, const Potential& v2, int order,
                             WChoice choice, const std::vector<SeriesPoly>& custom = {},
                             const DetCaps& caps = {});

}  // namespace zform
