// Command-line front end: parse a model and a property, run one synthesis
// algorithm, print the result (text or JSON), optionally export the
// exploration tree as DOT and validate the answer against the concrete
// oracle on a grid of valuations.
//
// Exit codes: 0 complete, 2 budget exhausted, 1 error or an unexpected
// oracle disagreement.  Timing goes to stderr so stdout stays byte-stable.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "polyparam/dot_export.hpp"
#include "polyparam/grid_check.hpp"
#include "polyparam/json_io.hpp"
#include "polyparam/parser.hpp"
#include "polyparam/synthesis.hpp"

namespace {

namespace pta = polyparam::pta;
namespace synth = polyparam::synth;
namespace grid = polyparam::grid;
namespace io = polyparam::io;
namespace poly = polyparam::poly;

struct OracleMode {
  bool enabled = false;
  size_t rational_samples = 0;
};

OracleMode parse_oracle_mode(const std::string& text) {
  if (text == "off") return {};
  if (text == "integer-grid") return {true, 0};
  const std::string prefix = "grid+rational(";
  if (text.size() > prefix.size() + 1 &&
      text.compare(0, prefix.size(), prefix) == 0 && text.back() == ')') {
    std::string inner = text.substr(prefix.size(),
                                    text.size() - prefix.size() - 1);
    if (!inner.empty() &&
        inner.find_first_not_of("0123456789") == std::string::npos)
      return {true, static_cast<size_t>(std::stoull(inner))};
  }
  throw std::invalid_argument(
      "--oracle-check expects off, integer-grid or grid+rational(N)");
}

std::string point_text(const pta::PTA& a, const std::vector<poly::Rational>& v) {
  std::string s;
  for (size_t j = 0; j < v.size(); ++j) {
    if (j) s += ", ";
    s += a.params[j] + " = " + poly::to_text(v[j]);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameter synthesis for bounded parametric timed automata"};
  std::string model_path, prop_text, algorithm;
  std::string output = "text", dot_path, oracle_text = "off";
  uint64_t budget_value = 0;

  app.add_option("model", model_path, "Model file")->required();
  app.add_option("--prop", prop_text,
                 "Property: EF {locs} | AF {locs} | TP at p = 1, ...")
      ->required();
  app.add_option("--algorithm", algorithm,
                 "rief|riaf|ritp|ef|af|tp|ief|iaf")
      ->required();
  auto* budget_opt = app.add_option(
      "--budget", budget_value,
      "State budget for the reference algorithms (default 10000)");
  app.add_option("--output", output, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--dot", dot_path, "Write the exploration tree as DOT");
  app.add_option("--oracle-check", oracle_text,
                 "off | integer-grid | grid+rational(N)");
  CLI11_PARSE(app, argc, argv);

  try {
    OracleMode oracle_mode = parse_oracle_mode(oracle_text);

    pta::PTA a = pta::parse_model_file(model_path);
    auto report = pta::validate(a);
    for (const auto& w : report.warnings)
      std::cerr << "warning: " << w << "\n";
    if (!report.ok()) {
      for (const auto& e : report.errors) std::cerr << "error: " << e << "\n";
      return 1;
    }
    pta::Property prop = pta::parse_property(prop_text, a);
    auto [kind, variant] = synth::algorithm_from_name(algorithm);
    if (kind != prop.kind)
      throw std::invalid_argument("algorithm '" + algorithm +
                                  "' does not answer this property");

    synth::SynthesisRequest req;
    req.property = kind;
    req.variant = variant;
    req.goals = prop.goals;
    req.v0 = prop.valuation;
    if (budget_opt->count()) req.budget = budget_value;
    req.record_trace = !dot_path.empty();

    synth::SynthesisResult res = synth::run_synthesis(a, req);
    const bool complete = res.status == synth::SynthStatus::Complete;
    const char* status = complete ? "complete" : "budget-exhausted";

    std::optional<grid::GridReport> grid_report;
    if (oracle_mode.enabled) {
      if (complete)
        grid_report = grid::grid_check(a, prop, variant, res.result,
                                       oracle_mode.rational_samples);
      else
        std::cerr << "warning: oracle-check skipped on a partial result\n";
    }

    if (output == "json") {
      nlohmann::json j = io::result_to_json(a, prop, algorithm, res);
      if (grid_report) {
        nlohmann::json g;
        g["integer_points"] = grid_report->integer_points;
        g["rational_points"] = grid_report->rational_points;
        nlohmann::json viols = nlohmann::json::array();
        for (const auto& v : grid_report->violations)
          viols.push_back(
              nlohmann::json{{"point", point_text(a, v.point)},
                             {"in_result", v.in_result},
                             {"oracle", v.oracle_truth},
                             {"expected", v.expected}});
        g["violations"] = viols;
        j["oracle_check"] = g;
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "model: " << a.name << "\n";
      std::cout << "algorithm: " << algorithm << "\n";
      std::cout << "property: " << pta::print_property(prop, a) << "\n";
      std::cout << "result: " << res.result.to_text() << "\n";
      std::cout << "stats: states_explored=" << res.stats.states_explored
                << " passed_hits=" << res.stats.passed_hits
                << " M=" << poly::to_text(res.stats.max_const)
                << " status=" << status << "\n";
      if (grid_report) {
        size_t unexpected = 0;
        for (const auto& v : grid_report->violations)
          if (!v.expected) ++unexpected;
        std::cout << "oracle-check: integer_points="
                  << grid_report->integer_points
                  << " rational_points=" << grid_report->rational_points
                  << " violations=" << grid_report->violations.size()
                  << " unexpected=" << unexpected << "\n";
        for (const auto& v : grid_report->violations)
          std::cout << "violation: (" << point_text(a, v.point)
                    << ") in_result=" << (v.in_result ? "yes" : "no")
                    << " oracle=" << (v.oracle_truth ? "yes" : "no")
                    << (v.expected ? " expected" : " UNEXPECTED") << "\n";
      }
    }
    std::cerr << "time: " << res.stats.wall_ms << " ms\n";

    if (!dot_path.empty()) {
      std::ofstream out(dot_path);
      if (!out) throw std::runtime_error("cannot write " + dot_path);
      out << io::trace_dot(a, *res.trace);
    }

    if (grid_report && !grid_report->ok()) return 1;
    return complete ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
