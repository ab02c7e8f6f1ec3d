#include "zform/xseries.hpp"

#include <algorithm>

namespace zform {

int degree(const Exps& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

namespace {

int sat_add(int a, int b) {
  if (a == XSeries::kExact || b == XSeries::kExact) return XSeries::kExact;
  return a + b;
}

Rational falling(int top, int count) {
  Rational r = 1;
  for (int k = 0; k < count; ++k) r *= top - k;
  return r;
}

}  // namespace

XSeries::XSeries(int nvars, Flavor f, int order, int trunc)
    : nvars_(nvars), flavor_(f), order_(order), trunc_(trunc) {
  require(nvars >= 1, "XSeries needs at least one variable");
}

XSeries XSeries::constant(int nvars, const Series& c) {
  XSeries r(nvars, c.flavor(), c.order());
  r.add_term(Exps(nvars, 0), c);
  return r;
}

XSeries XSeries::constant(int nvars, Flavor f, int order, const ConstScalar& c) {
  return constant(nvars, Series::constant(f, order, c));
}

XSeries XSeries::monomial(const Exps& e, const Series& c) {
  XSeries r(static_cast<int>(e.size()), c.flavor(), c.order());
  r.add_term(e, c);
  return r;
}

XSeries XSeries::variable(int nvars, int var, Flavor f, int order) {
  Exps e(nvars, 0);
  e[var] = 1;
  return monomial(e, Series::constant(f, order, ConstScalar(1)));
}

XSeries XSeries::univariate(const std::vector<Series>& coeffs, int nvars, int var, int trunc) {
  require(!coeffs.empty(), "empty coefficient list");
  XSeries r(nvars, coeffs[0].flavor(), coeffs[0].order(), trunc);
  Exps e(nvars, 0);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    e[var] = static_cast<std::uint8_t>(k);
    r.add_term(e, coeffs[k]);
  }
  return r;
}

int XSeries::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, degree(t.first));
  return d;
}

int XSeries::min_degree() const {
  int d = kExact;
  for (const auto& t : terms_) d = std::min(d, degree(t.first));
  return d;
}

void XSeries::add_term(const Exps& e, const Series& c) {
  require(static_cast<int>(e.size()) == nvars_, "exponent vector length mismatch");
  if (c.is_zero() || degree(e) > trunc_) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Series XSeries::coefficient(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Series(flavor_, order_) : it->second;
}

void XSeries::check_compatible(const XSeries& o) const {
  require(nvars_ == o.nvars_, "XSeries variable count mismatch");
  require(flavor_ == o.flavor_ && order_ == o.order_, "XSeries coefficient ring mismatch");
}

XSeries& XSeries::operator+=(const XSeries& o) {
  check_compatible(o);
  trunc_ = std::min(trunc_, o.trunc_);
  for (auto it = terms_.begin(); it != terms_.end();)
    it = degree(it->first) > trunc_ ? terms_.erase(it) : std::next(it);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& o) { return *this += -o; }

XSeries XSeries::operator-() const {
  XSeries r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  a.check_compatible(b);
  int t = std::min(sat_add(a.trunc_, b.is_zero() ? XSeries::kExact : b.min_degree()),
                   sat_add(b.trunc_, a.is_zero() ? XSeries::kExact : a.min_degree()));
  XSeries r(a.nvars_, a.flavor_, a.order_, t);
  Exps e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    int da = degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (t != XSeries::kExact && da + degree(eb) > t) continue;
      for (int k = 0; k < a.nvars_; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const XSeries& a, const XSeries& b) {
  return a.nvars_ == b.nvars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

XSeries XSeries::scaled(const Series& c) const {
  XSeries r(nvars_, flavor_, order_, trunc_);
  for (const auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

XSeries XSeries::scaled(const ConstScalar& c) const {
  XSeries r(nvars_, flavor_, order_, trunc_);
  for (const auto& [e, x] : terms_) r.add_term(e, x.scaled(c));
  return r;
}

XSeries XSeries::with_trunc(int t) const {
  XSeries r(nvars_, flavor_, order_, std::min(t, trunc_));
  for (const auto& [e, x] : terms_) r.add_term(e, x);
  return r;
}

XSeries XSeries::homogeneous(int d) const {
  require(d <= trunc_, "degree " + std::to_string(d) + " lies beyond the truncation");
  XSeries r(nvars_, flavor_, order_);
  for (const auto& [e, x] : terms_)
    if (degree(e) == d) r.add_term(e, x);
  return r;
}

XSeries XSeries::derivative(int var) const {
  XSeries r(nvars_, flavor_, order_, trunc_ == kExact ? kExact : trunc_ - 1);
  for (const auto& [e, x] : terms_) {
    if (e[var] == 0) continue;
    Exps f = e;
    --f[var];
    r.add_term(f, x.scaled(ConstScalar(Rational(e[var]))));
  }
  return r;
}

XSeries XSeries::swap_vars(int i, int j) const {
  XSeries r(nvars_, flavor_, order_, trunc_);
  for (const auto& [e, x] : terms_) {
    Exps f = e;
    std::swap(f[i], f[j]);
    r.add_term(f, x);
  }
  return r;
}

XSeries XSeries::substitute_N(const Rational& n) const {
  XSeries r(nvars_, flavor_, order_, trunc_);
  for (const auto& [e, x] : terms_) r.add_term(e, zform::substitute_N(x, n));
  return r;
}

XSeries XSeries::exp(int cap) const {
  require(coefficient(Exps(nvars_, 0)).is_zero(), "exp needs a vanishing constant term");
  bool nilpotent = true;
  for (const auto& t : terms_)
    for (const auto& m : t.second.terms())
      if (m.first.grade() < 1) nilpotent = false;
  XSeries one = constant(nvars_, flavor_, order_, ConstScalar(1));
  if (nilpotent && exact()) {
    XSeries result = one, power = one;
    for (int m = 1; m <= order_ && !power.is_zero(); ++m) {
      power = (power * *this).scaled(ConstScalar(Rational(1, m)));
      result += power;
    }
    return result;
  }
  int t = std::min(cap, trunc_);
  int low = std::max(1, min_degree());
  XSeries result = one.with_trunc(t), power = result;
  for (int m = 1; m * low <= t; ++m) {
    power = (power * *this).with_trunc(t).scaled(ConstScalar(Rational(1, m)));
    result += power;
  }
  return result;
}

Series XSeries::eval_zero() const {
  require(trunc_ >= 0, "evaluation at zero needs the constant term, which was truncated away");
  return coefficient(Exps(nvars_, 0));
}

namespace {

// Validity of contracting op against f: every pairing term must be known.
void check_pairing(const DiffOperator& op, const XSeries& f, int out_degree) {
  bool op_ok = op.exact() && (f.exact() || f.trunc() >= op.max_degree() + out_degree);
  bool f_ok = f.exact() && op.trunc() >= f.max_degree() - out_degree;
  if (!op_ok && !f_ok)
    throw UsageError("operator application would consult truncated degrees (op trunc " +
                     std::to_string(op.trunc()) + ", function trunc " + std::to_string(f.trunc()) +
                     ")");
}

// Adds op_e * d^e (f_g x^g) = op_e f_g g!/(g-e)! x^{g-e} to out when g >= e.
void act(const Exps& oe, const Series& oc, const Exps& fe, const Series& fc, XSeries& out) {
  Rational mult = 1;
  Exps r(fe.size());
  for (size_t k = 0; k < fe.size(); ++k) {
    if (fe[k] < oe[k]) return;
    mult *= falling(fe[k], oe[k]);
    r[k] = static_cast<std::uint8_t>(fe[k] - oe[k]);
  }
  out.add_term(r, (oc * fc).scaled(ConstScalar(mult)));
}

}  // namespace

XSeries apply_op(const DiffOperator& op, const XSeries& f) {
  op.check_compatible(f);
  int t;
  if (f.exact()) {
    require(op.exact() || op.trunc() >= f.max_degree(),
            "operator truncated below the degree of the function it acts on");
    t = XSeries::kExact;
  } else {
    require(op.exact(), "cannot apply a truncated operator to a truncated function");
    t = f.trunc() - std::max(0, op.max_degree());
  }
  XSeries out(f.nvars(), f.flavor(), f.order(), t);
  for (const auto& [oe, oc] : op.terms())
    for (const auto& [fe, fc] : f.terms()) act(oe, oc, fe, fc, out);
  return out;
}

XSeries apply_op_component(const DiffOperator& op, const XSeries& f, int d) {
  op.check_compatible(f);
  check_pairing(op, f, d);
  std::map<int, std::vector<const XSeries::Map::value_type*>> by_degree;
  for (const auto& t : op.terms()) by_degree[degree(t.first)].push_back(&t);
  XSeries out(f.nvars(), f.flavor(), f.order());
  for (const auto& [fe, fc] : f.terms()) {
    auto it = by_degree.find(degree(fe) - d);
    if (it == by_degree.end()) continue;
    for (const auto* ot : it->second) act(ot->first, ot->second, fe, fc, out);
  }
  return out;
}

Series pair_at_zero(const DiffOperator& op, const XSeries& f) {
  op.check_compatible(f);
  check_pairing(op, f, 0);
  Series acc(f.flavor(), f.order());
  const auto& small = op.terms().size() <= f.terms().size() ? op.terms() : f.terms();
  const XSeries& other = op.terms().size() <= f.terms().size() ? f : op;
  for (const auto& [e, c] : small) {
    auto it = other.terms().find(e);
    if (it == other.terms().end()) continue;
    Rational mult = 1;
    for (auto x : e) mult *= factorial(x);
    acc += (c * it->second).scaled(ConstScalar(mult));
  }
  return acc;
}

XSeries exp_potential(const Potential& v, const ConstScalar& outer, const ConstScalar& inner,
                      Flavor f, int order, int cap, int nvars, int var) {
  int bound = exact_degree_bound(v, order);
  bool exact = bound >= 0 && bound <= cap;
  int top = exact ? bound : cap;
  auto coeffs = exp_potential_coeffs(v, outer, inner, f, order, top);
  return XSeries::univariate(coeffs, nvars, var, exact ? XSeries::kExact : cap);
}

XSeries tensor_power(const XSeries& g, int nvars) {
  require(g.nvars() == 1, "tensor_power needs a one-variable factor");
  XSeries r = XSeries::constant(nvars, g.flavor(), g.order(), ConstScalar(1));
  for (int i = 0; i < nvars; ++i) {
    XSeries gi(nvars, g.flavor(), g.order(), g.trunc());
    Exps e(nvars, 0);
    for (const auto& [ge, c] : g.terms()) {
      e[i] = ge[0];
      gi.add_term(e, c);
    }
    r = r * gi;
  }
  return r;
}

}  // namespace zform
