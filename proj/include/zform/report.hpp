#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zform/potential.hpp"
#include "zform/wick.hpp"

namespace zform {

struct RunCaps {
  int max_n = 4;
  int max_order = 4;
  int max_half_edges = kDefaultHalfEdgeCap;
  static RunCaps unsafe();
};

struct ModelConfig {
  Flavor model = Flavor::one;
  Potential v1;  // the one-matrix potential, or V1
  Potential v2;
  std::optional<int> n;  // empty: symbolic (wick only)
  int order = 0;
  std::vector<std::string> formulations;
  std::map<CouplingId, Rational> bind;
};

const std::vector<std::string>& formulation_names(Flavor model);

ModelConfig parse_config(const nlohmann::ordered_json& j);
Potential parse_potential(const nlohmann::ordered_json& j);

struct FormulationResult {
  std::string name;
  Series z;
};

struct Report {
  ModelConfig config;
  std::vector<FormulationResult> results;
  std::vector<std::vector<bool>> equal;
  std::optional<GenusTable> genus;
  bool all_equal() const;
};

Report run(const ModelConfig& config, const RunCaps& caps = {});
Series evaluate(const ModelConfig& config, const std::string& formulation, const RunCaps& caps);

// Byte-stable renderings; `compare` adds the equality matrix.
nlohmann::ordered_json report_json(const Report& r, bool compare);
std::string report_tsv(const Report& r, bool compare);

nlohmann::ordered_json norms_json(int from, int to);
std::string norms_tsv(int from, int to);
bool norms_all_pass(int from, int to);

struct OrthoReport {
  std::vector<Series> h, beta;
  std::vector<std::string> q;
  bool recurrence_exact = false;
};
OrthoReport orthopoly_report(const ModelConfig& config, int size, const RunCaps& caps);
nlohmann::ordered_json orthopoly_json(const OrthoReport& r);
std::string orthopoly_tsv(const OrthoReport& r);

// "one:4,4" or "two:3,3/3"
TraceMonomial parse_trace(const std::string& s);

}  // namespace zform
