#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "oracle.hpp"
#include "zform/errors.hpp"
#include "zform/report.hpp"

using namespace zform;
using json = nlohmann::ordered_json;

namespace {

const std::string kCubic =
    R"({"model":"two","potentials":{"V1":[{"k":3,"coefficient":"a3"}],"V2":[{"k":3,"coefficient":"b3"}]},)";

json config(const std::string& text) { return json::parse(text); }

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("zform_cli_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome invoke(const std::string& args) {
  std::string cmd = std::string(ZFORM_BINARY) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) o.out.append(buf.data(), got);
  int st = pclose(p);
  o.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return o;
}

}  // namespace

TEST_CASE("config parsing") {
  ModelConfig c = parse_config(config(kCubic + R"("N":2,"order":2,"bind":{"a3":"1/5"}})"));
  CHECK(c.model == Flavor::two);
  CHECK(c.n == 2);
  CHECK(c.order == 2);
  CHECK(c.formulations == formulation_names(Flavor::two));
  CHECK(c.bind.at(CouplingId{'a', 3}) == Rational(1, 5));
  CHECK(c.v1.to_string() == Potential::monomial(3, CouplingId{'a', 3}).to_string());

  ModelConfig s = parse_config(config(kCubic + R"("N":"symbolic","order":2,"formulations":["wick"]})"));
  CHECK_FALSE(s.n.has_value());
  CHECK_THROWS_AS(parse_config(config(kCubic + R"("N":"symbolic","order":2,"formulations":["slater-diff"]})")),
                  UsageError);
  CHECK_THROWS_AS(parse_config(config(kCubic + R"("N":2,"order":2,"formulations":["heat"]})")), UsageError);
  CHECK_THROWS_AS(parse_config(config(R"({"model":"one","N":2})")), UsageError);
  CHECK_THROWS_AS(parse_config(config(R"({"model":"one","potentials":{"V":[{"k":3,"coefficient":"x y"}]},"N":2})")),
                  UsageError);
  Potential p = parse_potential(config(R"([{"k":2,"coefficient":"1/2"},{"k":4,"coefficient":"l4"}])"));
  CHECK(p.terms().size() == 2);
}

TEST_CASE("runs and reports") {
  Report one = run(parse_config(config(R"({"model":"one","potentials":{"V":[]},"N":2,"order":3})")));
  CHECK(one.results.size() == formulation_names(Flavor::one).size());
  for (const auto& r : one.results) CHECK(r.z == Series::constant(Flavor::one, 3, ConstScalar(1)));
  CHECK(one.all_equal());

  Report two = run(parse_config(
      config(kCubic + R"("N":2,"order":2,"formulations":["wick","onematrix-diff","slater-diff","new-det"]})")));
  CHECK(two.all_equal());
  for (const auto& r : two.results)
    CHECK(oracle::numbers(r.z) == oracle::Numbers{{"1", 1}, {"a3*b3", Rational(5, 3)}});
  REQUIRE(two.genus.has_value());

  Report sym = run(parse_config(config(kCubic + R"("N":"symbolic","order":2,"formulations":["wick"]})")));
  REQUIRE(sym.genus.has_value());
  json j = report_json(sym, false);
  CHECK(j["schema"] == 1);
  CHECK(j["results"][0]["series"] == "1/1 * 1 + (1/3 + 1/3 N^{4/2}) * a3*b3");
  json g = j["genus"];
  REQUIRE(g.size() == 3);
  CHECK(g[1]["genus"] == 0);
  CHECK(g[1]["weight"] == "1/3 N^{4/2}");
  CHECK(g[2]["genus"] == 1);
  CHECK(g[2]["weight"] == "1/3");

  Report bound = run(parse_config(
      config(kCubic + R"("N":2,"order":2,"formulations":["slater-diff","wick"],"bind":{"a3":"1/5"}})")));
  CHECK(bound.all_equal());
  CHECK(report_tsv(bound, true).find("slater-diff\t1/1 * 1 + 1/3 * b3\n") != std::string::npos);
  CHECK(report_json(bound, false)["results"][1]["series"] == "1/1 * 1 + 1/3 * b3");

  Report broken = two;
  broken.results[1].z = Series::constant(Flavor::two, 2, ConstScalar(1));
  broken.equal[0][1] = broken.equal[1][0] = false;
  CHECK_FALSE(broken.all_equal());
  CHECK(report_json(broken, true)["all_equal"] == false);
  CHECK(report_tsv(broken, true).find("all_equal\tno") != std::string::npos);
}

TEST_CASE("caps and errors in process") {
  CHECK_THROWS_AS(run(parse_config(config(kCubic + R"("N":5,"order":2,"formulations":["slater-diff"]})"))),
                  ResourceError);
  CHECK_THROWS_AS(run(parse_config(config(kCubic + R"("N":2,"order":5,"formulations":["slater-diff"]})"))),
                  ResourceError);
  CHECK_THROWS_AS(run(parse_config(config(kCubic + R"("N":2,"order":2,"formulations":["orthopoly"]})"))),
                  DegenerateFormError);
  CHECK_NOTHROW(run(parse_config(config(kCubic + R"("N":5,"order":1,"formulations":["slater-diff"]})")),
                    RunCaps::unsafe()));
}

TEST_CASE("norms and orthopoly reports") {
  CHECK(norms_all_pass(1, 8));
  json n = norms_json(1, 4);
  CHECK(n["schema"] == 1);
  CHECK(norms_tsv(1, 4) == norms_tsv(1, 4));
  OrthoReport r = orthopoly_report(
      parse_config(config(R"({"model":"one","potentials":{"V":[{"k":4,"coefficient":"l4"}]},"N":2,"order":1})")), 3,
      RunCaps{});
  CHECK(r.recurrence_exact);
  REQUIRE(r.h.size() == 3);
  CHECK(r.h[0].to_string() == "1/1 * 1 + 3/8 * l4");
  CHECK(r.beta[0].is_zero());
  CHECK(orthopoly_json(r)["schema"] == 1);
}

TEST_CASE("trace specifications") {
  TraceMonomial t = parse_trace("two:3/3");
  CHECK_THROWS_AS(parse_trace("three:4"), UsageError);
  CHECK_THROWS_AS(parse_trace("one:x"), UsageError);
  CHECK_THROWS_AS(parse_trace("one:0"), UsageError);
  CHECK_THROWS_AS(parse_trace("two:3,3"), UsageError);
  CHECK(gaussian_expectation(t) == gaussian_expectation(TraceMonomial::two({{3, 1}}, {{3, 1}})));
  CHECK(gaussian_expectation(parse_trace("one:4")) == gaussian_expectation(TraceMonomial::one({{4, 1}})));
}

TEST_CASE("binary exit codes and byte stability") {
  std::string ok = write_temp(
      "ok", kCubic + R"("N":2,"order":2,"formulations":["wick","onematrix-diff","slater-diff","new-det"]})");
  Outcome a = invoke("compare " + ok);
  CHECK(a.status == 0);
  CHECK(a.out.find("\"all_equal\": true") != std::string::npos);
  Outcome b = invoke("compare " + ok);
  CHECK(a.out == b.out);
  Outcome t1 = invoke("--format tsv compare " + ok), t2 = invoke("--format tsv compare " + ok);
  CHECK(t1.status == 0);
  CHECK(t1.out == t2.out);
  CHECK(t1.out.find("slater-diff\t1/1 * 1 + 5/3 * a3*b3") != std::string::npos);

  CHECK(invoke("compare " + write_temp("caps", kCubic + R"("N":5,"order":1,"formulations":["slater-diff"]})"))
            .status == 2);
  CHECK(invoke("--unsafe-caps expand " + write_temp("caps", kCubic + R"("N":5,"order":1,"formulations":["slater-diff"]})"))
            .status == 0);
  CHECK(invoke("compare " + write_temp("degenerate", kCubic + R"("N":2,"order":2})")).status == 3);
  CHECK(invoke("compare " + write_temp("bad", "{not json")).status == 4);
  CHECK(invoke("compare " + write_temp("symbolic", kCubic + R"("N":"symbolic","order":2})")).status == 4);
  CHECK(invoke("compare /nonexistent/zform.json").status == 4);

  Outcome n = invoke("--format tsv norms --from 1 --to 4");
  CHECK(n.status == 0);
  CHECK(n.out == norms_tsv(1, 4));
  CHECK(invoke("norms --to 9").status == 2);

  Outcome c = invoke("--format tsv census --trace one:4");
  CHECK(c.status == 0);
  std::string expect = "V\tE\tF\tK\tg\tN-weight\n";
  CHECK(c.out.rfind(expect, 0) == 0);
  int g0 = 0, g1 = 0;
  std::size_t pos = expect.size();
  while (pos < c.out.size()) {
    std::size_t end = c.out.find('\n', pos);
    std::string line = c.out.substr(pos, end - pos);
    if (line.find("\t0\t") != std::string::npos) ++g0;
    if (line.find("\t1\t") != std::string::npos && line.find("\t0\t") == std::string::npos) ++g1;
    pos = end + 1;
  }
  CHECK(g0 == 2);
  CHECK(g1 == 1);

  Outcome o = invoke("orthopoly " + write_temp("ortho", R"({"model":"one","potentials":{"V":[{"k":4,"coefficient":"l4"}]},"N":2,"order":1})"));
  CHECK(o.status == 0);
  CHECK(o.out.find("\"schema\": 1") != std::string::npos);
}
