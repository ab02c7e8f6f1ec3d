#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "zform/potential.hpp"
#include "zform/series.hpp"

namespace zform {

inline constexpr int kDefaultHalfEdgeCap = 16;

// prod_k Tr(M^k)^{n_k}, or prod_k Tr(A^k)^{a_k} Tr(B^k)^{b_k}.
struct TraceMonomial {
  Flavor flavor = Flavor::one;
  std::map<int, int> a;  // valency -> count (the only alphabet for one-matrix)
  std::map<int, int> b;

  static TraceMonomial one(std::map<int, int> counts);
  static TraceMonomial two(std::map<int, int> a, std::map<int, int> b);

  int half_edges_a() const;
  int half_edges_b() const;
  int half_edges() const { return half_edges_a() + half_edges_b(); }
  int vertices() const;
  bool admissible() const;  // even half-edges, or balanced A/B counts
};

// Half-edges are numbered vertex by vertex; sigma rotates inside a vertex,
// alpha is the fixed-point-free involution given by the pairing.
struct Pairing {
  std::vector<int> sigma;
  std::vector<int> alpha;
  std::vector<int> vertex_of;
};

struct RibbonData {
  int V = 0, E = 0, F = 0, K = 0, g = 0;
};

class PairingStream {
 public:
  explicit PairingStream(const TraceMonomial& t, int cap = kDefaultHalfEdgeCap);
  std::optional<Pairing> next();

 private:
  TraceMonomial t_;
  std::vector<int> sigma_, vertex_of_;
  int half_a_ = 0;
  bool done_ = false;
  std::vector<int> choice_;  // one-matrix odometer
  std::vector<int> perm_;    // two-matrix matching
};

RibbonData ribbon_data(const TraceMonomial& t, const Pairing& p);
NLaurent gaussian_expectation(const TraceMonomial& t, int cap = kDefaultHalfEdgeCap);

// Genus-resolved expectation: g -> sum of N^{F-E} over pairings of genus g.
std::map<int, NLaurent> gaussian_expectation_by_genus(const TraceMonomial& t,
                                                      int cap = kDefaultHalfEdgeCap);

LaurentSeries z_integral_one(const Potential& v, int order, int cap = kDefaultHalfEdgeCap);
LaurentSeries z_integral_two(const Potential& v1, const Potential& v2, int order,
                             int cap = kDefaultHalfEdgeCap);

// Coupling monomial -> genus -> contribution to the coefficient of Z.
using GenusTable = std::map<CouplingMonomial, std::map<int, NLaurent>>;
GenusTable genus_table_one(const Potential& v, int order, int cap = kDefaultHalfEdgeCap);
GenusTable genus_table_two(const Potential& v1, const Potential& v2, int order,
                           int cap = kDefaultHalfEdgeCap);

// Columns V, E, F, K, g, N-weight, one row per pairing.
void write_ribbon_tsv(std::ostream& out, const TraceMonomial& t, int cap = kDefaultHalfEdgeCap);

enum class MomentKind { real, imaginary };

// Formal double-Gaussian moment of x^n y^m against exp(-c N x y).
ConstScalar formal_pair_moment(int n, int m, MomentKind kind, const Rational& scale);
ConstScalar formal_pair_moment_scaled(int n, int m, MomentKind kind, const ConstScalar& scale);

// Both sides of the imaginary change of variables for Hankel entry (i, j),
// symbolic in N; the check compares them.
std::pair<Series, Series> imaginary_change_of_variables_sides(const Potential& v1,
                                                              const Potential& v2, int i, int j,
                                                              int order);
bool check_imaginary_change_of_variables(const Potential& v1, const Potential& v2, int i, int j,
                                         int order, int n);

}  // namespace zform
