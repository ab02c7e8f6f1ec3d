#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zform {

enum class Flavor { one, two, generic };

std::string to_string(Flavor f);

// A coupling symbol: 'l' for the one-matrix lambda_k, 'a'/'b' for the
// two-matrix alpha_k/beta_k. Other letters name auxiliary grading symbols
// (index 0 prints as the bare letter).
struct CouplingId {
  char sym = 'l';
  int index = 0;

  friend auto operator<=>(const CouplingId&, const CouplingId&) = default;
};

std::string to_string(CouplingId id);
CouplingId parse_coupling(std::string_view s);

// Product of coupling symbols with integer exponents. Exponents are normally
// non-negative; a negative exponent encodes the formal inverse of a top
// coupling used by the (r,s) determinant.
class CouplingMonomial {
 public:
  using Factor = std::pair<CouplingId, int>;

  CouplingMonomial() = default;
  explicit CouplingMonomial(CouplingId id, int e = 1);
  static CouplingMonomial from_factors(std::vector<Factor> f);

  const std::vector<Factor>& factors() const { return f_; }
  int grade() const { return grade_; }
  int exponent(CouplingId id) const;
  bool is_one() const { return f_.empty(); }
  bool has_negative_exponent() const;
  CouplingMonomial pow(int e) const;

  friend CouplingMonomial operator*(const CouplingMonomial& a, const CouplingMonomial& b);
  friend bool operator==(const CouplingMonomial& a, const CouplingMonomial& b) { return a.f_ == b.f_; }
  // Graded order: total grade first, then lexicographic on the factor list.
  friend bool operator<(const CouplingMonomial& a, const CouplingMonomial& b);

  std::string to_string() const;

 private:
  std::vector<Factor> f_;
  int grade_ = 0;
};

}  // namespace zform
