#include "zform/wick.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace zform {

TraceMonomial TraceMonomial::one(std::map<int, int> counts) {
  TraceMonomial t;
  t.flavor = Flavor::one;
  for (auto& [k, n] : counts)
    if (n > 0) t.a[k] = n;
  return t;
}

TraceMonomial TraceMonomial::two(std::map<int, int> a, std::map<int, int> b) {
  TraceMonomial t;
  t.flavor = Flavor::two;
  for (auto& [k, n] : a)
    if (n > 0) t.a[k] = n;
  for (auto& [k, n] : b)
    if (n > 0) t.b[k] = n;
  return t;
}

int TraceMonomial::half_edges_a() const {
  int l = 0;
  for (auto [k, n] : a) l += k * n;
  return l;
}

int TraceMonomial::half_edges_b() const {
  int l = 0;
  for (auto [k, n] : b) l += k * n;
  return l;
}

int TraceMonomial::vertices() const {
  int v = 0;
  for (auto [k, n] : a) v += n;
  for (auto [k, n] : b) v += n;
  return v;
}

bool TraceMonomial::admissible() const {
  if (flavor == Flavor::one) return half_edges_a() % 2 == 0;
  return half_edges_a() == half_edges_b();
}

PairingStream::PairingStream(const TraceMonomial& t, int cap) : t_(t) {
  int l = t.half_edges();
  if (l > cap)
    throw ResourceError("pairing enumeration needs " + std::to_string(l) +
                        " half-edges, cap is " + std::to_string(cap));
  half_a_ = t.half_edges_a();
  auto add_vertices = [&](const std::map<int, int>& counts) {
    for (auto [k, n] : counts)
      for (int c = 0; c < n; ++c) {
        int first = static_cast<int>(sigma_.size());
        int v = vertex_of_.empty() ? 0 : vertex_of_.back() + 1;
        for (int h = 0; h < k; ++h) {
          sigma_.push_back(first + (h + 1) % k);
          vertex_of_.push_back(v);
        }
      }
  };
  add_vertices(t.a);
  add_vertices(t.b);
  done_ = !t.admissible();
  if (t.flavor == Flavor::one) {
    choice_.assign(l / 2, 0);
  } else {
    perm_.resize(half_a_);
    std::iota(perm_.begin(), perm_.end(), 0);
  }
}

std::optional<Pairing> PairingStream::next() {
  if (done_) return std::nullopt;
  int l = static_cast<int>(sigma_.size());
  Pairing p{sigma_, std::vector<int>(l), vertex_of_};
  if (t_.flavor == Flavor::one) {
    std::vector<int> unpaired(l);
    std::iota(unpaired.begin(), unpaired.end(), 0);
    for (int c : choice_) {
      int h = unpaired[0], h2 = unpaired[1 + c];
      p.alpha[h] = h2;
      p.alpha[h2] = h;
      unpaired.erase(unpaired.begin() + 1 + c);
      unpaired.erase(unpaired.begin());
    }
    int t = static_cast<int>(choice_.size()) - 1;
    for (; t >= 0; --t) {
      if (choice_[t] < l - 2 * t - 2) {
        ++choice_[t];
        std::fill(choice_.begin() + t + 1, choice_.end(), 0);
        break;
      }
    }
    if (t < 0) done_ = true;
  } else {
    for (int h = 0; h < half_a_; ++h) {
      p.alpha[h] = half_a_ + perm_[h];
      p.alpha[half_a_ + perm_[h]] = h;
    }
    if (!std::next_permutation(perm_.begin(), perm_.end())) done_ = true;
  }
  return p;
}

RibbonData ribbon_data(const TraceMonomial& t, const Pairing& p) {
  int l = static_cast<int>(p.sigma.size());
  RibbonData r;
  r.V = t.vertices();
  r.E = l / 2;
  std::vector<char> seen(l, 0);
  for (int h = 0; h < l; ++h) {
    if (seen[h]) continue;
    ++r.F;
    for (int x = h; !seen[x]; x = p.sigma[p.alpha[x]]) seen[x] = 1;
  }
  std::vector<int> parent(r.V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int h = 0; h < l; ++h) parent[find(p.vertex_of[h])] = find(p.vertex_of[p.alpha[h]]);
  for (int v = 0; v < r.V; ++v) r.K += find(v) == v;
  int chi = r.V - r.E + r.F;
  int twice_g = 2 * r.K - chi;
  ensure(twice_g >= 0 && twice_g % 2 == 0,
         "Euler characteristic " + std::to_string(chi) + " incompatible with " +
             std::to_string(r.K) + " components");
  r.g = twice_g / 2;
  return r;
}

std::map<int, NLaurent> gaussian_expectation_by_genus(const TraceMonomial& t, int cap) {
  std::map<int, NLaurent> out;
  PairingStream s(t, cap);
  while (auto p = s.next()) {
    RibbonData r = ribbon_data(t, *p);
    out[r.g] += NLaurent::N(r.F - r.E);
  }
  return out;
}

NLaurent gaussian_expectation(const TraceMonomial& t, int cap) {
  NLaurent total;
  for (auto& [g, w] : gaussian_expectation_by_genus(t, cap)) total += w;
  return total;
}

namespace {

struct Vertex {
  int k;
  Rational scale;
  CouplingId symbol;
  bool second;  // belongs to the B alphabet
};

std::vector<Vertex> vertex_types(const Potential& v, bool second) {
  std::vector<Vertex> out;
  for (const auto& t : v.terms()) {
    require(t.symbol.has_value(),
            "the Wick expansion needs every potential term to carry a coupling symbol");
    out.push_back({t.k, t.scale, *t.symbol, second});
  }
  return out;
}

// Calls fn(counts) for every assignment of vertex counts with total <= order.
void for_each_multiset(const std::vector<Vertex>& types, int order,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> counts(types.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i == types.size()) {
      fn(counts);
      return;
    }
    for (int n = 0; n <= left; ++n) {
      counts[i] = n;
      rec(i + 1, left - n);
    }
    counts[i] = 0;
  };
  rec(0, order);
}

GenusTable genus_table(const std::vector<Vertex>& types, Flavor flavor, int order, int cap) {
  GenusTable table;
  std::map<std::pair<std::map<int, int>, std::map<int, int>>, std::map<int, NLaurent>> cache;
  for_each_multiset(types, order, [&](const std::vector<int>& counts) {
    std::map<int, int> a, b;
    CouplingMonomial mono;
    NLaurent weight = 1;
    for (size_t i = 0; i < types.size(); ++i) {
      int n = counts[i];
      if (n == 0) continue;
      const Vertex& v = types[i];
      (v.second ? b : a)[v.k] += n;
      mono = mono * CouplingMonomial(v.symbol, n);
      weight *= NLaurent::N(n, pow(v.scale / v.k, n) / factorial(n));
    }
    TraceMonomial t = flavor == Flavor::one ? TraceMonomial::one(a) : TraceMonomial::two(a, b);
    if (!t.admissible()) return;
    auto key = std::make_pair(t.a, t.b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, gaussian_expectation_by_genus(t, cap)).first;
    for (const auto& [g, w] : it->second) {
      NLaurent c = weight * w;
      auto& slot = table[mono][g];
      slot += c;
    }
  });
  return table;
}

LaurentSeries series_from_table(const GenusTable& table, Flavor flavor, int order) {
  LaurentSeries z(flavor, order);
  for (const auto& [mono, by_genus] : table)
    for (const auto& [g, c] : by_genus) z.add_term(mono, c);
  return z;
}

}  // namespace

GenusTable genus_table_one(const Potential& v, int order, int cap) {
  return genus_table(vertex_types(v, false), Flavor::one, order, cap);
}

GenusTable genus_table_two(const Potential& v1, const Potential& v2, int order, int cap) {
  auto types = vertex_types(v1, false);
  for (auto& t : vertex_types(v2, true)) types.push_back(t);
  return genus_table(types, Flavor::two, order, cap);
}

LaurentSeries z_integral_one(const Potential& v, int order, int cap) {
  return series_from_table(genus_table_one(v, order, cap), Flavor::one, order);
}

LaurentSeries z_integral_two(const Potential& v1, const Potential& v2, int order, int cap) {
  return series_from_table(genus_table_two(v1, v2, order, cap), Flavor::two, order);
}

void write_ribbon_tsv(std::ostream& out, const TraceMonomial& t, int cap) {
  out << "V\tE\tF\tK\tg\tN-weight\n";
  PairingStream s(t, cap);
  while (auto p = s.next()) {
    RibbonData r = ribbon_data(t, *p);
    out << r.V << '\t' << r.E << '\t' << r.F << '\t' << r.K << '\t' << r.g << '\t'
        << NLaurent::N(r.F - r.E).to_string() << '\n';
  }
}

ConstScalar formal_pair_moment_scaled(int n, int m, MomentKind kind, const ConstScalar& scale) {
  require(n >= 0 && m >= 0, "moment exponents must be non-negative");
  if (n != m) return ConstScalar();
  ConstScalar cN = scale * ConstScalar::N();
  ConstScalar two_pi = ConstScalar(2) * ConstScalar::pi();
  if (kind == MomentKind::real)
    return two_pi * ConstScalar::i(-1) * cN.pow(-(n + 1)) * ConstScalar(factorial(n));
  return two_pi * ConstScalar::i() * (ConstScalar::i() * cN).pow(-(n + 1)) *
         ConstScalar(factorial(n));
}

ConstScalar formal_pair_moment(int n, int m, MomentKind kind, const Rational& scale) {
  require(scale > 0, "moment scale must be positive");
  return formal_pair_moment_scaled(n, m, kind, ConstScalar(scale));
}

std::pair<Series, Series> imaginary_change_of_variables_sides(const Potential& v1,
                                                              const Potential& v2, int i, int j,
                                                              int order) {
  require(i >= 0 && j >= 0, "entry indices must be non-negative");
  // The kernel exp(-i p y) is exp(-i c N p y) with c = 1/N.
  ConstScalar c = ConstScalar::N(-2);
  ConstScalar outer = ConstScalar::N();
  ConstScalar inner = ConstScalar::N(-1);
  // Both expansions are polynomial at grade <= order when the potentials are
  // symbolic; otherwise cap at a generous degree that the moments select.
  int b1 = exact_degree_bound(v1, order), b2 = exact_degree_bound(v2, order);
  require(b1 >= 0 && b2 >= 0, "the moment expansion needs symbolic potentials");
  auto u = exp_potential_coeffs(v1, outer, inner, Flavor::two, order, b1);
  auto w = exp_potential_coeffs(v2, outer, inner, Flavor::two, order, b2);
  Series lhs(Flavor::two, order), rhs(Flavor::two, order);
  for (int n = 0; n <= b1; ++n)
    for (int m = 0; m <= b2; ++m) {
      if (n + i != m + j || u[n].is_zero() || w[m].is_zero()) continue;
      Series uw = u[n] * w[m];
      // (i p)^{n+i} on the left; x^{n+i} on the right.
      lhs += uw.scaled(ConstScalar::i(n + i) *
                       formal_pair_moment_scaled(n + i, m + j, MomentKind::imaginary, c));
      rhs += uw.scaled(ConstScalar::i() * formal_pair_moment_scaled(n + i, m + j, MomentKind::real, c));
    }
  return {lhs, rhs};
}

bool check_imaginary_change_of_variables(const Potential& v1, const Potential& v2, int i, int j,
                                         int order, int n) {
  require(i < n && j < n, "entry indices must be below the matrix size");
  auto [lhs, rhs] = imaginary_change_of_variables_sides(v1, v2, i, j, order);
  return lhs == rhs;
}

}  // namespace zform
