#include "zform/report.hpp"

#include <algorithm>
#include <sstream>

#include "zform/determinants.hpp"
#include "zform/eigencalc.hpp"
#include "zform/entrycalc.hpp"
#include "zform/norms.hpp"
#include "zform/orthopoly.hpp"

namespace zform {
namespace {

using json = nlohmann::ordered_json;

bool looks_rational(const std::string& s) {
  return !s.empty() && s.find_first_not_of("+-0123456789/") == std::string::npos;
}

std::string coeff_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw UsageError("coefficients must be strings or integers");
}

Series with_flavor(const Series& s, Flavor f) {
  Series out(f, s.order());
  for (const auto& [m, c] : s.terms()) out.add_term(m, c);
  return out;
}

}  // namespace

RunCaps RunCaps::unsafe() { return {1 << 20, 1 << 20, 1 << 20}; }

const std::vector<std::string>& formulation_names(Flavor model) {
  static const std::vector<std::string> one = {
      "wick",       "matrix-diff", "matrix-diff-swapped", "diag-diff",   "diag-diff-usual",
      "slater-diff", "hankel-diff", "hankel-integral",    "heat",        "new-det",
      "orlov",      "orthopoly",   "biorthopoly"};
  static const std::vector<std::string> two = {
      "wick",       "matrix-diff",     "onematrix-diff", "diag-diff", "diag-diff-usual",
      "slater-diff", "hankel-integral", "new-det",        "orlov",     "orthopoly",
      "biorthopoly"};
  return model == Flavor::two ? two : one;
}

Potential parse_potential(const json& j) {
  require(j.is_array(), "a potential is a list of terms");
  Potential v;
  for (const auto& t : j) {
    require(t.is_object() && t.contains("k") && t.contains("coefficient"),
            "potential terms need k and coefficient");
    int k = t.at("k").get<int>();
    require(k >= 1, "valency must be positive");
    std::string c = coeff_text(t.at("coefficient"));
    Rational scale = t.contains("scale") ? parse_rational(coeff_text(t.at("scale"))) : Rational(1);
    if (looks_rational(c))
      v.add(k, scale * parse_rational(c));
    else
      v.add(k, scale, parse_coupling(c));
  }
  return v;
}

ModelConfig parse_config(const json& j) {
  require(j.is_object(), "config must be a JSON object");
  ModelConfig c;
  std::string model = j.value("model", std::string("one"));
  require(model == "one" || model == "two", "model must be one or two");
  c.model = model == "two" ? Flavor::two : Flavor::one;
  require(j.contains("potentials"), "config needs potentials");
  const json& p = j.at("potentials");
  if (c.model == Flavor::one) {
    c.v1 = parse_potential(p.at("V"));
  } else {
    c.v1 = parse_potential(p.at("V1"));
    c.v2 = parse_potential(p.at("V2"));
  }
  require(j.contains("N"), "config needs N");
  if (j.at("N").is_string()) {
    require(j.at("N").get<std::string>() == "symbolic", "N must be a positive integer or symbolic");
  } else {
    c.n = j.at("N").get<int>();
    require(*c.n >= 1, "N must be positive");
  }
  c.order = j.value("order", 0);
  require(c.order >= 0, "order must be non-negative");
  if (j.contains("formulations")) {
    for (const auto& f : j.at("formulations")) c.formulations.push_back(f.get<std::string>());
  } else {
    c.formulations = formulation_names(c.model);
  }
  const auto& known = formulation_names(c.model);
  for (const auto& f : c.formulations)
    require(std::find(known.begin(), known.end(), f) != known.end(),
            "unknown formulation for this model: " + f);
  if (!c.n)
    for (const auto& f : c.formulations)
      require(f == "wick", "symbolic N is only available with wick");
  if (j.contains("bind"))
    for (const auto& [k, v] : j.at("bind").items())
      c.bind[parse_coupling(k)] = parse_rational(coeff_text(v));
  return c;
}

namespace {

Series evaluate_raw(const ModelConfig& c, const std::string& f, const RunCaps& caps) {
  const int D = c.order;
  const bool two = c.model == Flavor::two;
  if (f == "wick") {
    LaurentSeries z = two ? z_integral_two(c.v1, c.v2, D, caps.max_half_edges)
                          : z_integral_one(c.v1, D, caps.max_half_edges);
    return c.n ? substitute_N(z, *c.n) : to_const_series(z);
  }
  const int n = *c.n;
  EntryCaps ec{caps.max_n, std::max(24, caps.max_half_edges)};
  EigenCaps gc{caps.max_n, 64};
  DetCaps dc{caps.max_n, 64};
  // The one-matrix model is the two-matrix model with V1 = x^2/2.
  const Potential gauss = Potential::numeric(2);
  const Potential& w1 = two ? c.v1 : gauss;
  const Potential& w2 = two ? c.v2 : c.v1;
  if (f == "matrix-diff") return two ? z_diff_two(n, c.v1, c.v2, D, ec) : z_diff_one(n, c.v1, D, ec);
  if (f == "matrix-diff-swapped") return z_diff_one_swapped(n, c.v1, D, ec);
  if (f == "onematrix-diff") return z_diff_two_onematrix(n, c.v1, c.v2, D, true, ec);
  if (f == "diag-diff")
    return two ? z_diag_diff_two(n, c.v1, c.v2, D, gc) : z_diag_diff_one(n, c.v1, D, gc);
  if (f == "diag-diff-usual")
    return two ? z_diag_diff_two_ab(n, c.v1, c.v2, D, gc) : z_diag_diff_one_usual(n, c.v1, D, gc);
  if (f == "slater-diff")
    return (two ? slater_two_diff(n, c.v1, c.v2, D, {}, dc) : slater_one_diff(n, c.v1, D, {}, dc)).z();
  if (f == "hankel-diff") return hankel_one_diff(n, c.v1, D, {}, dc).z();
  if (f == "hankel-integral")
    return (two ? hankel_two_integral(n, c.v1, c.v2, D, {}, dc)
                : hankel_one_integral(n, c.v1, D, {}, dc))
        .z();
  if (f == "heat") return heat_table(n, c.v1, D).z();
  if (f == "new-det") return new_matrix_M(n, w1, w2, D, dc).z();
  if (f == "orlov") return orlov_form(n, w1, w2, D, gc);
  if (f == "orthopoly") return build_W_determinant(n, w1, w2, D, WChoice::orthogonal, {}, dc).z();
  if (f == "biorthopoly") {
    if (n > caps.max_n) throw ResourceError("N exceeds cap");
    BilinearForm form = two ? two_matrix_form(n, c.v1, c.v2, D, dc) : one_matrix_form(n, c.v1, D, dc);
    return product_z(biorthogonalize(form, n).h, n);
  }
  throw UsageError("unknown formulation: " + f);
}

}  // namespace

Series evaluate(const ModelConfig& c, const std::string& f, const RunCaps& caps) {
  return with_flavor(evaluate_raw(c, f, caps), c.model);
}

bool Report::all_equal() const {
  for (const auto& row : equal)
    for (bool b : row)
      if (!b) return false;
  return true;
}

Report run(const ModelConfig& c, const RunCaps& caps) {
  if (c.n && *c.n > caps.max_n)
    throw ResourceError("N = " + std::to_string(*c.n) + " exceeds cap " + std::to_string(caps.max_n));
  if (c.order > caps.max_order)
    throw ResourceError("order " + std::to_string(c.order) + " exceeds cap " +
                        std::to_string(caps.max_order));
  Report r;
  r.config = c;
  for (const auto& f : c.formulations) r.results.push_back({f, evaluate(c, f, caps)});
  size_t m = r.results.size();
  r.equal.assign(m, std::vector<bool>(m, true));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) r.equal[i][j] = r.results[i].z == r.results[j].z;
  if (std::find(c.formulations.begin(), c.formulations.end(), "wick") != c.formulations.end())
    r.genus = c.model == Flavor::two ? genus_table_two(c.v1, c.v2, c.order, caps.max_half_edges)
                                     : genus_table_one(c.v1, c.order, caps.max_half_edges);
  return r;
}

namespace {

std::string shown(const Report& r, const Series& z) {
  return r.config.bind.empty() ? z.to_string() : bind_couplings(z, r.config.bind).to_string();
}

json potentials_json(const ModelConfig& c) {
  json p;
  if (c.model == Flavor::two) {
    p["V1"] = c.v1.to_string();
    p["V2"] = c.v2.to_string();
  } else {
    p["V"] = c.v1.to_string();
  }
  return p;
}

}  // namespace

json report_json(const Report& r, bool compare) {
  const ModelConfig& c = r.config;
  json j;
  j["schema"] = 1;
  j["model"] = c.model == Flavor::two ? "two" : "one";
  if (c.n)
    j["N"] = *c.n;
  else
    j["N"] = "symbolic";
  j["order"] = c.order;
  j["potentials"] = potentials_json(c);
  if (!c.bind.empty()) {
    json b;
    for (const auto& [k, v] : c.bind) b[to_string(k)] = to_string(v);
    j["bind"] = b;
  }
  json res = json::array();
  for (const auto& f : r.results) res.push_back({{"formulation", f.name}, {"series", shown(r, f.z)}});
  j["results"] = res;
  if (compare) {
    j["equal"] = r.equal;
    j["all_equal"] = r.all_equal();
  }
  if (r.genus) {
    json g = json::array();
    for (const auto& [mono, by_genus] : *r.genus)
      for (const auto& [genus, w] : by_genus)
        g.push_back({{"monomial", mono.to_string()}, {"genus", genus}, {"weight", w.to_string()}});
    j["genus"] = g;
  }
  return j;
}

std::string report_tsv(const Report& r, bool compare) {
  std::ostringstream out;
  out << "formulation\tseries\n";
  for (const auto& f : r.results) out << f.name << '\t' << shown(r, f.z) << '\n';
  if (compare) {
    out << "\nequal";
    for (const auto& f : r.results) out << '\t' << f.name;
    out << '\n';
    for (size_t i = 0; i < r.results.size(); ++i) {
      out << r.results[i].name;
      for (bool b : r.equal[i]) out << '\t' << (b ? "yes" : "no");
      out << '\n';
    }
    out << "all_equal\t" << (r.all_equal() ? "yes" : "no") << '\n';
  }
  if (r.genus) {
    out << "\nmonomial\tgenus\tweight\n";
    for (const auto& [mono, by_genus] : *r.genus)
      for (const auto& [genus, w] : by_genus)
        out << mono.to_string() << '\t' << genus << '\t' << w.to_string() << '\n';
  }
  return out.str();
}

namespace {

const char* const kNormNames[] = {"a", "b", "c", "c1", "d", "e", "f"};

}  // namespace

json norms_json(int from, int to) {
  require(from >= 1 && from <= to, "bad N range");
  json j;
  j["schema"] = 1;
  json rows = json::array();
  for (int n = from; n <= to; ++n) {
    json row;
    row["N"] = n;
    for (const char* name : kNormNames) row[name] = norm_const(name, n).to_string();
    NormRelations rel = norm_relations(n);
    row["f_vs_e"] = rel.f_vs_e;
    row["e_vs_d"] = rel.e_vs_d;
    row["f_vs_b"] = rel.f_vs_b;
    row["f_vs_d"] = rel.f_vs_d;
    row["e_closed_form"] = rel.e_closed_form;
    if (n <= 8) row["det_R"] = normalization_checks(n).all();
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["all_pass"] = norms_all_pass(from, to);
  return j;
}

std::string norms_tsv(int from, int to) {
  require(from >= 1 && from <= to, "bad N range");
  std::ostringstream out;
  out << "N";
  for (const char* name : kNormNames) out << '\t' << name;
  out << "\trelations\n";
  for (int n = from; n <= to; ++n) {
    out << n;
    for (const char* name : kNormNames) out << '\t' << norm_const(name, n).to_string();
    bool ok = norm_relations(n).all() && (n > 8 || normalization_checks(n).all());
    out << '\t' << (ok ? "pass" : "fail") << '\n';
  }
  return out.str();
}

bool norms_all_pass(int from, int to) {
  for (int n = from; n <= to; ++n) {
    if (!norm_relations(n).all()) return false;
    if (n <= 8 && !normalization_checks(n).all()) return false;
  }
  return true;
}

OrthoReport orthopoly_report(const ModelConfig& c, int size, const RunCaps& caps) {
  require(c.n.has_value(), "orthopoly needs a concrete N");
  if (*c.n > caps.max_n) throw ResourceError("N exceeds cap");
  if (c.order > caps.max_order) throw ResourceError("order exceeds cap");
  require(size >= 1, "size must be positive");
  const Potential gauss = Potential::numeric(2);
  const Potential& w1 = c.model == Flavor::two ? c.v1 : gauss;
  const Potential& w2 = c.model == Flavor::two ? c.v2 : c.v1;
  Doublebar d = doublebar_orthogonalize(w1, w2, *c.n, c.order, size, {caps.max_n, 64});
  OrthoReport r;
  r.h = d.h;
  r.beta = d.beta;
  for (const auto& q : d.q) {
    std::string s;
    for (size_t k = 0; k < q.size(); ++k) {
      if (k) s += " ; ";
      s += q[k].to_string();
    }
    r.q.push_back(s);
  }
  auto rec = recurrence_family(d);
  r.recurrence_exact = rec.size() == d.q.size();
  for (size_t k = 0; k < rec.size() && r.recurrence_exact; ++k) r.recurrence_exact = rec[k] == d.q[k];
  return r;
}

json orthopoly_json(const OrthoReport& r) {
  json j;
  j["schema"] = 1;
  json h = json::array(), b = json::array();
  for (const auto& s : r.h) h.push_back(s.to_string());
  for (const auto& s : r.beta) b.push_back(s.to_string());
  j["h"] = h;
  j["beta"] = b;
  j["Q"] = r.q;
  j["recurrence_exact"] = r.recurrence_exact;
  return j;
}

std::string orthopoly_tsv(const OrthoReport& r) {
  std::ostringstream out;
  out << "n\th\tbeta\tQ\n";
  for (size_t k = 0; k < r.h.size(); ++k)
    out << k << '\t' << r.h[k].to_string() << '\t' << (k < r.beta.size() ? r.beta[k].to_string() : "")
        << '\t' << r.q[k] << '\n';
  out << "recurrence_exact\t" << (r.recurrence_exact ? "yes" : "no") << '\n';
  return out.str();
}

TraceMonomial parse_trace(const std::string& s) {
  auto colon = s.find(':');
  require(colon != std::string::npos, "a trace looks like one:4,4 or two:3/3");
  std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
  auto counts = [](const std::string& list) {
    std::map<int, int> m;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) {
        std::size_t used = 0;
        int k = 0;
        try {
          k = std::stoi(item, &used);
        } catch (const std::exception&) {
        }
        require(used == item.size() && k >= 1, "valencies must be positive integers");
        ++m[k];
      }
    return m;
  };
  if (kind == "one") return TraceMonomial::one(counts(rest));
  require(kind == "two", "trace kind must be one or two");
  auto slash = rest.find('/');
  require(slash != std::string::npos, "two-matrix traces look like two:3/3");
  return TraceMonomial::two(counts(rest.substr(0, slash)), counts(rest.substr(slash + 1)));
}

}  // namespace zform
