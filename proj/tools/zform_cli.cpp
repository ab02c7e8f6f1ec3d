#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "zform/report.hpp"

using namespace zform;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kCaps = 2, kDegenerate = 3, kInput = 4 };

json read_config(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void census_trace(const std::string& text, int cap, bool as_json) {
  TraceMonomial t = parse_trace(text);
  if (!as_json) {
    write_ribbon_tsv(std::cout, t, cap);
    return;
  }
  json rows = json::array();
  PairingStream stream(t, cap);
  while (auto p = stream.next()) {
    RibbonData d = ribbon_data(t, *p);
    rows.push_back({{"V", d.V}, {"E", d.E}, {"F", d.F}, {"K", d.K}, {"g", d.g}});
  }
  json by_genus;
  for (const auto& [g, w] : gaussian_expectation_by_genus(t, cap)) by_genus[std::to_string(g)] = w.to_string();
  emit({{"schema", 1}, {"trace", text}, {"pairings", rows}, {"by_genus", by_genus}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact perturbative expansions of one- and two-matrix models"};
  app.require_subcommand(1);
  std::string format = "json";
  bool unsafe = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--unsafe-caps", unsafe, "Lift the N, order and half-edge caps");

  std::string config_path;
  auto* expand = app.add_subcommand("expand", "Expand Z under each requested formulation");
  expand->add_option("config", config_path, "JSON config file (stdin if omitted)");
  auto* compare = app.add_subcommand("compare", "Expand and compare formulations pairwise");
  compare->add_option("config", config_path, "JSON config file (stdin if omitted)");

  int from = 1, to = 4;
  auto* norms = app.add_subcommand("norms", "Normalization constants and their relations");
  norms->add_option("--from", from, "Smallest N")->check(CLI::PositiveNumber);
  norms->add_option("--to", to, "Largest N")->check(CLI::PositiveNumber);

  int size = 0;
  auto* ortho = app.add_subcommand("orthopoly", "Double-bar orthogonal polynomials and recurrence data");
  ortho->add_option("config", config_path, "JSON config file (stdin if omitted)");
  ortho->add_option("--size", size, "Number of polynomials (default N + 1)");

  std::string trace;
  auto* census = app.add_subcommand("census", "Ribbon-graph census of Wick pairings");
  census->add_option("config", config_path, "JSON config file (stdin if omitted)");
  census->add_option("--trace", trace, "A single trace product, e.g. one:4 or two:3/3");

  CLI11_PARSE(app, argc, argv);
  const RunCaps caps = unsafe ? RunCaps::unsafe() : RunCaps{};
  const bool as_json = format == "json";

  try {
    if (*expand || *compare) {
      bool cmp = static_cast<bool>(*compare);
      Report r = run(parse_config(read_config(config_path)), caps);
      if (as_json)
        emit(report_json(r, cmp));
      else
        std::cout << report_tsv(r, cmp);
      return cmp && !r.all_equal() ? kMismatch : kOk;
    }
    if (*norms) {
      if (!unsafe && to > 8) throw ResourceError("N range above 8 needs --unsafe-caps");
      if (as_json)
        emit(norms_json(from, to));
      else
        std::cout << norms_tsv(from, to);
      return norms_all_pass(from, to) ? kOk : kMismatch;
    }
    if (*ortho) {
      ModelConfig c = parse_config(read_config(config_path));
      require(c.n.has_value(), "orthopoly needs a concrete N");
      OrthoReport r = orthopoly_report(c, size > 0 ? size : *c.n + 1, caps);
      if (as_json)
        emit(orthopoly_json(r));
      else
        std::cout << orthopoly_tsv(r);
      return r.recurrence_exact ? kOk : kMismatch;
    }
    if (*census) {
      if (!trace.empty()) {
        census_trace(trace, caps.max_half_edges, as_json);
        return kOk;
      }
      ModelConfig c = parse_config(read_config(config_path));
      c.formulations = {"wick"};
      Report r = run(c, caps);
      if (as_json)
        emit(report_json(r, false));
      else
        std::cout << report_tsv(r, false);
      return kOk;
    }
  } catch (const ResourceError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCaps;
  } catch (const DegenerateFormError& e) {
    std::cerr << "degenerate form: " << e.what() << '\n';
    return kDegenerate;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
