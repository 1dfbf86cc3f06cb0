// pcmtool: command-line front end for the pairwise comparison toolkit.
//
// Subcommands: weights, consistify, transform, check, demo, gen.
// Exit codes: 0 success / check passed, 1 check failed, 2 parse or validation
// failure, 3 power iteration did not converge, 4 matrix too small to
// consistify.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcm/axioms.hpp"
#include "pcm/io.hpp"
#include "pcm/matrix.hpp"
#include "pcm/transform.hpp"
#include "pcm/weighting.hpp"

namespace {

using pcm::io::json;

struct GlobalOptions {
  std::string format = "text";
  int precision = 6;
  double tol_consistency = 1e-9;
  std::optional<double> tol_weights;  // unset: per-command default
  std::uint64_t seed = 0;

  pcm::ToleranceConfig tolerances(double default_weight_tol = 1e-9) const {
    pcm::ToleranceConfig tol;
    tol.consistency_tol = tol_consistency;
    tol.weight_tol = tol_weights.value_or(default_weight_tol);
    return tol;
  }
};

pcm::PairwiseComparisonMatrix load_matrix(const std::string& path,
                                          const pcm::ToleranceConfig& tol) {
  if (path == "-") return pcm::io::read_matrix(std::cin, tol);
  std::ifstream in(path);
  if (!in) throw pcm::Error("cannot open input file: " + path);
  return pcm::io::read_matrix(in, tol);
}

std::string weights_line(const std::vector<double>& w, int decimals,
                         char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += pcm::io::format_fixed(w[i], decimals);
  }
  return out;
}

void print_matrix(const pcm::PairwiseComparisonMatrix& A,
                  const GlobalOptions& opts) {
  if (opts.format == "csv") {
    std::cout << pcm::io::to_csv(A, opts.precision);
  } else if (opts.format == "json") {
    std::cout << pcm::io::to_json(A).dump() << "\n";
  } else {
    std::cout << pcm::io::to_text(A, opts.precision);
  }
}

std::string triad_text(const pcm::Triad& t) {
  std::ostringstream os;
  os << "(" << t.i + 1 << "," << t.j + 1 << "," << t.k + 1 << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// weights

int cmd_weights(const GlobalOptions& opts, const std::string& input,
                const std::string& method_name) {
  const pcm::ToleranceConfig tol = opts.tolerances();
  const auto A = load_matrix(input, tol);
  if (method_name == "em") {
    const pcm::EmResult result = pcm::em_weights(A);
    if (opts.format == "json") {
      json j{{"method", "em"},
             {"n", A.size()},
             {"weights", result.weights.values()},
             {"lambda_max", result.lambda_max},
             {"iterations", result.iterations}};
      std::cout << j.dump() << "\n";
    } else {
      const char sep = opts.format == "csv" ? ',' : ' ';
      std::cout << weights_line(result.weights.values(), opts.precision, sep)
                << "\n";
      std::cout << (opts.format == "csv" ? "lambda_max," : "lambda_max = ")
                << pcm::io::format_sig(result.lambda_max, opts.precision) << "\n";
      std::cout << (opts.format == "csv" ? "iterations," : "iterations = ")
                << result.iterations << "\n";
    }
    return 0;
  }
  const auto method = pcm::method_by_name(method_name);
  const pcm::WeightVector w = (*method)(A);
  if (opts.format == "json") {
    json j{{"method", method_name}, {"n", A.size()}, {"weights", w.values()}};
    std::cout << j.dump() << "\n";
  } else {
    const char sep = opts.format == "csv" ? ',' : ' ';
    std::cout << weights_line(w.values(), opts.precision, sep) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// consistify

int cmd_consistify(const GlobalOptions& opts, const std::string& input,
                   bool include_identity_steps) {
  const pcm::ToleranceConfig tol = opts.tolerances();
  const auto A = load_matrix(input, tol);
  const pcm::ConsistificationTrace trace = pcm::consistify(A);
  if (opts.format == "json") {
    std::cout << pcm::io::to_json(trace, include_identity_steps).dump() << "\n";
  } else if (opts.format == "csv") {
    std::cout << pcm::io::to_csv(trace.final_matrix(), opts.precision);
  } else {
    std::cout << "initial:\n" << pcm::io::to_text(trace.initial, opts.precision);
    int shown = 0;
    for (const auto& step : trace.steps) {
      if (!include_identity_steps &&
          std::abs(step.transform.alpha - 1.0) <= pcm::kIdentityAlphaTol) {
        continue;
      }
      std::cout << "step " << ++shown << ": triad "
                << triad_text(step.transform.triad) << "  alpha = "
                << pcm::io::format_sig(step.transform.alpha, opts.precision)
                << "\n"
                << pcm::io::to_text(step.result, opts.precision);
    }
    std::cout << "final:\n"
              << pcm::io::to_text(trace.final_matrix(), opts.precision);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// transform

int cmd_transform(const GlobalOptions& opts, const std::string& input,
                  const std::vector<int>& triad_1based,
                  std::optional<double> alpha, bool local) {
  const pcm::ToleranceConfig tol = opts.tolerances();
  const auto A = load_matrix(input, tol);
  const pcm::Triad triad{triad_1based[0] - 1, triad_1based[1] - 1,
                         triad_1based[2] - 1};
  const double a = local ? pcm::local_consistency_alpha(A, triad) : *alpha;
  const auto transformed = pcm::apply_triad_transform(A, {triad, a});
  if (opts.format == "json") {
    json j = pcm::io::to_json(pcm::TriadTransform{triad, a});
    j["matrix"] = pcm::io::to_json(transformed);
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (local) {
    const std::string line =
        "alpha = " + pcm::io::format_sig(a, opts.precision) + "\n";
    std::cout << (opts.format == "csv" ? "# " + line : line);
  }
  print_matrix(transformed, opts);
  return 0;
}

// ---------------------------------------------------------------------------
// check / demo

void print_report_text(const pcm::AxiomReport& report) {
  std::cout << pcm::check_label(report.check) << " " << report.method << ": ";
  if (report.pass) {
    std::cout << "pass (no violation found in " << report.trials
              << " trials)\n";
    return;
  }
  const pcm::AxiomWitness& w = *report.witness;
  std::cout << "fail (violation at trial " << w.trial << ", deviation "
            << pcm::io::format_sig(w.deviation, 6) << ", tol "
            << pcm::io::format_sig(report.weight_tol, 6) << ")\n";
  std::cout << "  matrix:\n";
  std::istringstream lines(pcm::io::to_text(w.matrix, 6));
  std::string line;
  while (std::getline(lines, line)) std::cout << "    " << line << "\n";
  if (w.transform) {
    std::cout << "  transform: triad " << triad_text(w.transform->triad)
              << ", alpha = " << pcm::io::format_sig(w.transform->alpha, 6)
              << "\n";
  }
  if (w.violated) {
    std::cout << "  violated: " << pcm::check_label(*w.violated) << "\n";
  }
  if (!w.expected.empty()) {
    std::cout << "  expected: " << weights_line(w.expected, 6) << "\n";
  }
  if (!w.actual.empty()) {
    std::cout << "  actual:   " << weights_line(w.actual, 6) << "\n";
  }
  if (!w.note.empty()) std::cout << "  note: " << w.note << "\n";
}

int cmd_check(const GlobalOptions& opts, const std::string& method_name,
              const std::string& axiom, int trials) {
  const double default_weight_tol = method_name == "em" ? 1e-6 : 1e-9;
  const pcm::ToleranceConfig tol = opts.tolerances(default_weight_tol);
  const pcm::WeightingMethod method = *pcm::method_by_name(method_name);

  std::vector<pcm::AxiomReport> reports;
  if (axiom == "co" || axiom == "all") {
    reports.push_back(pcm::check_correctness(method, trials, opts.seed, tol));
  }
  if (axiom == "it" || axiom == "all") {
    reports.push_back(pcm::check_it_invariance(method, trials, opts.seed, tol));
  }

  if (opts.format == "json") {
    if (reports.size() == 1) {
      std::cout << pcm::io::to_json(reports.front()).dump() << "\n";
    } else {
      json j = json::array();
      for (const auto& r : reports) j.push_back(pcm::io::to_json(r));
      std::cout << j.dump() << "\n";
    }
  } else if (opts.format == "csv") {
    std::cout << "axiom,method,verdict,trials\n";
    for (const auto& r : reports) {
      std::cout << pcm::check_label(r.check) << "," << r.method << ","
                << (r.pass ? "pass" : "fail") << "," << r.trials << "\n";
    }
  } else {
    for (const auto& r : reports) print_report_text(r);
  }
  for (const auto& r : reports) {
    if (!r.pass) return 1;
  }
  return 0;
}

int cmd_demo(const GlobalOptions& opts, int trials) {
  pcm::ToleranceConfig tol;
  tol.consistency_tol = opts.tol_consistency;
  const pcm::IndependenceTable table =
      pcm::independence_demo(tol, trials, opts.seed, opts.tol_weights);

  if (opts.format == "json") {
    std::cout << pcm::io::to_json(table).dump() << "\n";
  } else if (opts.format == "csv") {
    std::cout << "method,co,it\n";
    for (const auto& row : table.rows) {
      std::cout << row.method << "," << (row.co.pass ? "pass" : "fail") << ","
                << (row.it.pass ? "pass" : "fail") << "\n";
    }
  } else {
    std::cout << "method  CO    IT\n";
    for (const auto& row : table.rows) {
      std::ostringstream line;
      line << row.method;
      line << std::string(8 - row.method.size(), ' ')
           << (row.co.pass ? "pass" : "FAIL") << "  "
           << (row.it.pass ? "pass" : "FAIL") << "\n";
      std::cout << line.str();
    }
    for (const auto& row : table.rows) {
      for (const pcm::AxiomReport* r : {&row.co, &row.it}) {
        if (!r->pass) {
          std::cout << row.method << " " << pcm::check_label(r->check)
                    << " witness: trial " << r->witness->trial << ", deviation "
                    << pcm::io::format_sig(r->witness->deviation, 6) << "\n";
        }
      }
    }
  }
  return table.shows_independence() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const GlobalOptions& opts, int n,
            const std::vector<double>& consistent_weights,
            const std::vector<double>& random_params) {
  if (consistent_weights.empty() == random_params.empty()) {
    throw pcm::Error("gen needs exactly one of --consistent or --random");
  }
  if (!consistent_weights.empty()) {
    if (static_cast<int>(consistent_weights.size()) != n) {
      throw pcm::Error("--consistent needs exactly n weights");
    }
    print_matrix(pcm::consistent_from_weights(
                     pcm::WeightVector::normalized(consistent_weights)),
                 opts);
    return 0;
  }
  const double perturbation = random_params[0];
  const double seed_value = random_params[1];
  if (!(seed_value >= 0) || seed_value != std::floor(seed_value)) {
    throw pcm::Error("--random seed must be a nonnegative integer");
  }
  print_matrix(pcm::random_matrix(n, perturbation,
                                  static_cast<std::uint64_t>(seed_value)),
               opts);
  return 0;
}

int run_guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const pcm::NoConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pcm::TooSmallError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for reciprocal pairwise comparison matrices"};
  app.require_subcommand(1);

  GlobalOptions opts;
  double tol_weights_value = 0.0;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--precision", opts.precision, "printed decimal digits")
      ->check(CLI::Range(2, 17))
      ->capture_default_str();
  app.add_option("--tol-consistency", opts.tol_consistency,
                 "log-space triad residual tolerance")
      ->capture_default_str();
  auto* tol_weights_opt = app.add_option(
      "--tol-weights", tol_weights_value,
      "weight comparison tolerance (default 1e-9, or 1e-6 for em checks)");
  app.add_option("--seed", opts.seed, "seed for randomized checks")
      ->capture_default_str();

  // weights
  auto* weights = app.add_subcommand("weights", "derive priority weights");
  weights->fallthrough();
  std::string weights_input;
  std::string weights_method = "llsm";
  weights->add_option("input", weights_input, "matrix file or - for stdin")
      ->required();
  weights->add_option("--method", weights_method, "weighting method")
      ->check(CLI::IsMember({"llsm", "em", "flat"}))
      ->capture_default_str();

  // consistify
  auto* consistify = app.add_subcommand(
      "consistify", "transform a matrix into a consistent one, with trace");
  consistify->fallthrough();
  std::string consistify_input;
  bool include_identity_steps = true;
  consistify->add_option("input", consistify_input, "matrix file or - for stdin")
      ->required();
  consistify->add_flag("--include-identity-steps,!--skip-identity-steps",
                       include_identity_steps,
                       "keep steps whose alpha is 1 in the output (default on)");

  // transform
  auto* transform =
      app.add_subcommand("transform", "apply one triad transform");
  transform->fallthrough();
  std::string transform_input;
  std::vector<int> transform_triad;
  double transform_alpha = 0.0;
  bool transform_local = false;
  transform->add_option("input", transform_input, "matrix file or - for stdin")
      ->required();
  transform
      ->add_option("--triad", transform_triad, "three 1-based indices i j k")
      ->expected(3)
      ->required();
  auto* alpha_opt =
      transform->add_option("--alpha", transform_alpha, "scale factor");
  transform->add_flag("--local", transform_local,
                      "use the alpha that makes the triad locally consistent");

  // check
  auto* check = app.add_subcommand("check", "property-check a method");
  check->fallthrough();
  std::string check_method;
  std::string check_axiom;
  int check_trials = 200;
  check->add_option("method", check_method, "llsm | em | flat")
      ->check(CLI::IsMember({"llsm", "em", "flat"}))
      ->required();
  check->add_option("axiom", check_axiom, "co | it | all")
      ->check(CLI::IsMember({"co", "it", "all"}))
      ->required();
  check->add_option("--trials", check_trials, "randomized trials per axiom")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // demo
  auto* demo =
      app.add_subcommand("demo", "axiom independence table for all methods");
  demo->fallthrough();
  int demo_trials = 200;
  demo->add_option("--trials", demo_trials, "randomized trials per cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a matrix");
  gen->fallthrough();
  int gen_n = 0;
  std::vector<double> gen_weights;
  std::vector<double> gen_random;
  gen->add_option("n", gen_n, "alternative count")->required();
  gen->add_option("--consistent", gen_weights,
                  "weights inducing a consistent matrix")
      ->expected(-1);
  gen->add_option("--random", gen_random, "perturbation and seed")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (tol_weights_opt->count() > 0) opts.tol_weights = tol_weights_value;

  return run_guarded([&]() -> int {
    if (app.got_subcommand(weights)) {
      return cmd_weights(opts, weights_input, weights_method);
    }
    if (app.got_subcommand(consistify)) {
      return cmd_consistify(opts, consistify_input, include_identity_steps);
    }
    if (app.got_subcommand(transform)) {
      if (transform_local == (alpha_opt->count() > 0)) {
        throw pcm::Error("transform needs exactly one of --alpha or --local");
      }
      std::optional<double> alpha;
      if (alpha_opt->count() > 0) alpha = transform_alpha;
      return cmd_transform(opts, transform_input, transform_triad, alpha,
                           transform_local);
    }
    if (app.got_subcommand(check)) {
      return cmd_check(opts, check_method, check_axiom, check_trials);
    }
    if (app.got_subcommand(demo)) {
      return cmd_demo(opts, demo_trials);
    }
    return cmd_gen(opts, gen_n, gen_weights, gen_random);
  });
}
