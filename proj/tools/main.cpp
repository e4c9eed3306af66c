// skewcomp: exact integer clock skew compensation and its benchmark harness.
//
// Subcommands:
//   compensate  map one hardware-clock value to its compensated clock
//   bench       error statistics vs the binary64 floor baseline, CSV/markdown
//   verify      exhaustive + randomized property suites
//   drift       recursive-accumulation study, proposed vs binary32 backend

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewcomp/experiment.hpp"
#include "skewcomp/verify.hpp"

namespace {

// Counts arrive as "1000000" or "1e6" interchangeably.
std::int64_t parse_count(const std::string& text) {
  std::size_t pos = 0;
  double value = 0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw CLI::ValidationError("not a number: " + text);
  }
  if (pos != text.size()) {
    throw CLI::ValidationError("not a number: " + text);
  }
  if (value < 0 || value > 9.2e18 || value != std::floor(value)) {
    throw CLI::ValidationError("not a non-negative integer: " + text);
  }
  return static_cast<std::int64_t>(value);
}

std::vector<std::int64_t> parse_count_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) values.push_back(parse_count(item));
  }
  if (values.empty()) throw CLI::ValidationError("empty list: " + text);
  return values;
}

skewcomp::RoundingMode parse_rounding(const std::string& name) {
  if (name == "floor") return skewcomp::RoundingMode::Floor;
  if (name == "nearest") return skewcomp::RoundingMode::NearestHalfUp;
  if (name == "ceil") return skewcomp::RoundingMode::Ceil;
  throw CLI::ValidationError("rounding must be floor|nearest|ceil");
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

const char* case_name(skewcomp::RatioCase c) {
  switch (c) {
    case skewcomp::RatioCase::LtOne: return "lt-one";
    case skewcomp::RatioCase::EqOne: return "eq-one";
    case skewcomp::RatioCase::GtOne: return "gt-one";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer clock skew compensation via an extended line-walk"};
  app.require_subcommand(1);

  // --- compensate ---
  auto* cmd_comp = app.add_subcommand("compensate",
                                      "compensate one hardware-clock value");
  std::string arg_i, arg_d, arg_a;
  double eps = 1e-7;
  std::string fp_mode = "binary32";
  std::string convention = "td";
  bool trace = false;
  cmd_comp->add_option("--i", arg_i, "hardware clock (ticks)")->required();
  cmd_comp->add_option("--d", arg_d, "interdeparture ticks D")->required();
  cmd_comp->add_option("--a", arg_a, "interarrival ticks A")->required();
  cmd_comp->add_option("--eps", eps, "precision-loss allowance");
  cmd_comp->add_option("--fp-mode", fp_mode, "window quotient format")
      ->check(CLI::IsMember({"binary32", "binary64"}));
  cmd_comp->add_option("--convention", convention,
                       "decision-variable convention")
      ->check(CLI::IsMember({"origin-zero", "td"}));
  cmd_comp->add_flag("--trace", trace, "print window and walk diagnostics");

  // --- bench ---
  auto* cmd_bench = app.add_subcommand("bench",
                                       "error statistics vs binary64 floor");
  std::string b_d = "1000000", b_samples = "1000000", b_clocks =
      "1e6,1e7,1e8,1e9", b_seed = "1598245262", b_out, b_threads = "1";
  double b_skew = 100.0, b_eps = 1e-7;
  std::string b_rounding = "floor", b_format = "csv", b_convention = "td";
  std::string b_order = "div-last", b_policy = "walk";
  cmd_bench->add_option("--d", b_d, "interdeparture ticks D");
  cmd_bench->add_option("--samples", b_samples, "number of A samples");
  cmd_bench->add_option("--skew-ppm", b_skew, "skew range, ppm");
  cmd_bench->add_option("--eps", b_eps, "precision-loss allowance");
  cmd_bench->add_option("--clocks", b_clocks, "comma list of hardware clocks");
  cmd_bench->add_option("--seed", b_seed, "RNG seed");
  cmd_bench->add_option("--rounding", b_rounding, "integer rounding")
      ->check(CLI::IsMember({"floor", "nearest", "ceil"}));
  cmd_bench->add_option("--format", b_format, "output format")
      ->check(CLI::IsMember({"csv", "markdown"}));
  cmd_bench->add_option("--convention", b_convention, "decision convention")
      ->check(CLI::IsMember({"origin-zero", "td"}));
  cmd_bench->add_option("--order", b_order, "baseline quotient order")
      ->check(CLI::IsMember({"mul-last", "div-last"}));
  cmd_bench->add_option("--policy", b_policy,
                        "candidate policy (window-top is diagnostic)")
      ->check(CLI::IsMember({"walk", "window-top"}));
  cmd_bench->add_option("--threads", b_threads, "worker threads (0 = auto)");
  cmd_bench->add_option("--out", b_out, "output path (default stdout)");

  // --- verify ---
  auto* cmd_verify = app.add_subcommand("verify", "run the property suites");
  std::string v_max_a = "64", v_trials = "100000", v_seed = "1";
  cmd_verify->add_option("--max-a", v_max_a, "exhaustive sweep bound");
  cmd_verify->add_option("--random-trials", v_trials, "randomized trials");
  cmd_verify->add_option("--seed", v_seed, "RNG seed");

  // --- drift ---
  auto* cmd_drift = app.add_subcommand("drift",
                                       "recursive accumulation study");
  std::string dr_rounds = "1000", dr_interval = "1e6", dr_seed = "1598245262",
      dr_out;
  cmd_drift->add_option("--rounds", dr_rounds, "sync rounds");
  cmd_drift->add_option("--interval", dr_interval, "ticks per round");
  cmd_drift->add_option("--seed", dr_seed, "RNG seed");
  cmd_drift->add_option("--out", dr_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_comp) {
      skewcomp::WindowParams params;
      params.epsilon = eps;
      params.fp_mode = fp_mode == "binary64" ? skewcomp::FpFormat::Binary64
                                             : skewcomp::FpFormat::Binary32;
      params.convention = convention == "origin-zero"
                              ? skewcomp::TdConvention::OriginZero
                              : skewcomp::TdConvention::TdConsistent;
      skewcomp::RatioEstimate ratio(parse_count(arg_d), parse_count(arg_a));
      skewcomp::CompensationOutcome out =
          skewcomp::compensate(parse_count(arg_i), ratio, params);
      std::cout << out.j << "\n";
      if (trace) {
        std::cout << "case: " << case_name(out.case_used) << "\n"
                  << "candidates: [" << out.candidate_lo << ", "
                  << out.candidate_lo + out.candidate_count - 1 << "]\n"
                  << "walk: " << out.walk_steps << " steps from x = "
                  << parse_count(arg_i) - out.walk_steps << "\n";
      }
      return 0;
    }

    if (*cmd_bench) {
      skewcomp::ExperimentConfig config;
      config.d = parse_count(b_d);
      config.sample_count = parse_count(b_samples);
      config.skew_ppm = b_skew;
      config.epsilon = b_eps;
      config.clocks = parse_count_list(b_clocks);
      config.seed = static_cast<std::uint64_t>(parse_count(b_seed));
      config.rounding = parse_rounding(b_rounding);
      config.convention = b_convention == "origin-zero"
                              ? skewcomp::TdConvention::OriginZero
                              : skewcomp::TdConvention::TdConsistent;
      config.baseline_order = b_order == "mul-last"
                                  ? skewcomp::QuotientOrder::MulLast
                                  : skewcomp::QuotientOrder::DivLast;
      if (b_policy == "window-top") {
        config.policy = skewcomp::CandidatePolicy::WindowTop;
        config.margin = skewcomp::MarginKind::Additive;
        config.fp_window_mode = skewcomp::FpFormat::Binary64;
      }
      config.threads = static_cast<int>(parse_count(b_threads));
      skewcomp::ResultTable table = skewcomp::run_table(config);
      write_output(b_format == "markdown" ? skewcomp::emit_markdown(table)
                                          : skewcomp::emit_csv(table),
                   b_out);
      return 0;
    }

    if (*cmd_verify) {
      skewcomp::VerifyOptions opts;
      opts.max_a = parse_count(v_max_a);
      opts.random_trials = parse_count(v_trials);
      opts.seed = static_cast<std::uint64_t>(parse_count(v_seed));
      bool all_ok = true;
      for (const auto& result : skewcomp::run_all_suites(opts)) {
        std::cout << (result.passed ? "PASS " : "FAIL ") << result.name
                  << ": " << result.detail << "\n";
        all_ok = all_ok && result.passed;
      }
      return all_ok ? 0 : 1;
    }

    if (*cmd_drift) {
      skewcomp::ExperimentConfig config;
      config.seed = static_cast<std::uint64_t>(parse_count(dr_seed));
      auto series = skewcomp::run_drift(config, parse_count(dr_rounds),
                                        parse_count(dr_interval));
      write_output(skewcomp::emit_drift_csv(series), dr_out);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
