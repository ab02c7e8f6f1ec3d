#include "zform/coupling.hpp"

#include <algorithm>
#include <cctype>

#include "zform/errors.hpp"

namespace zform {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::one: return "one";
    case Flavor::two: return "two";
    case Flavor::generic: return "generic";
  }
  return "?";
}

std::string to_string(CouplingId id) {
  std::string s(1, id.sym);
  if (id.index != 0) s += std::to_string(id.index);
  return s;
}

CouplingId parse_coupling(std::string_view s) {
  require(!s.empty() && std::isalpha(static_cast<unsigned char>(s[0])),
          "bad coupling symbol: " + std::string(s));
  CouplingId id{s[0], 0};
  if (s.size() > 1) {
    for (char c : s.substr(1))
      require(std::isdigit(static_cast<unsigned char>(c)), "bad coupling symbol: " + std::string(s));
    id.index = std::stoi(std::string(s.substr(1)));
  }
  return id;
}

CouplingMonomial::CouplingMonomial(CouplingId id, int e) {
  if (e != 0) f_.emplace_back(id, e);
  grade_ = e;
}

CouplingMonomial CouplingMonomial::from_factors(std::vector<Factor> f) {
  CouplingMonomial m;
  for (auto& x : f) m = m * CouplingMonomial(x.first, x.second);
  return m;
}

int CouplingMonomial::exponent(CouplingId id) const {
  for (const auto& [i, e] : f_)
    if (i == id) return e;
  return 0;
}

bool CouplingMonomial::has_negative_exponent() const {
  return std::any_of(f_.begin(), f_.end(), [](const Factor& x) { return x.second < 0; });
}

CouplingMonomial CouplingMonomial::pow(int e) const {
  CouplingMonomial r;
  if (e == 0) return r;
  r.f_ = f_;
  for (auto& x : r.f_) x.second *= e;
  r.grade_ = grade_ * e;
  return r;
}

CouplingMonomial operator*(const CouplingMonomial& a, const CouplingMonomial& b) {
  CouplingMonomial r;
  r.f_.reserve(a.f_.size() + b.f_.size());
  size_t i = 0, j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      r.f_.push_back(a.f_[i++]);
    } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
      r.f_.push_back(b.f_[j++]);
    } else {
      int e = a.f_[i].second + b.f_[j].second;
      if (e != 0) r.f_.emplace_back(a.f_[i].first, e);
      ++i;
      ++j;
    }
  }
  r.grade_ = a.grade_ + b.grade_;
  return r;
}

bool operator<(const CouplingMonomial& a, const CouplingMonomial& b) {
  if (a.grade_ != b.grade_) return a.grade_ < b.grade_;
  return a.f_ < b.f_;
}

std::string CouplingMonomial::to_string() const {
  if (f_.empty()) return "1";
  std::string s;
  for (const auto& [id, e] : f_) {
    if (!s.empty()) s += "*";
    s += zform::to_string(id);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace zform
