#include "skewcomp/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

#include "skewcomp/sampling.hpp"

namespace skewcomp {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

WindowParams window_params(const ExperimentConfig& config) {
  WindowParams p;
  p.epsilon = config.epsilon;
  p.fp_mode = config.fp_window_mode;
  p.margin = config.margin;
  p.convention = config.convention;
  return p;
}

/// Upper window bound k+l, with the same case split as compensate. Diagnostic
/// policy only; see CandidatePolicy.
std::int64_t window_top(std::int64_t i, std::int64_t d, std::int64_t a,
                        const WindowParams& params) {
  if (d == a) {
    double margin = window_margin(i, params);
    return i + std::min<std::int64_t>(
                   i, static_cast<std::int64_t>(std::floor(margin)));
  }
  if (d < a) {
    CandidateWindow w = candidate_window(i, RatioEstimate(d, a), params);
    return w.k + w.l;
  }
  std::int64_t whole = d / a;
  std::int64_t residual = d % a;
  if (residual == 0) return whole * i;
  CandidateWindow w = candidate_window(i, RatioEstimate(residual, a), params);
  return whole * i + w.k + w.l;
}

std::int64_t run_algorithm(std::int64_t clock, std::int64_t d, std::int64_t a,
                           const ExperimentConfig& config,
                           const WindowParams& params, Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Binary32Baseline:
      return float_compensate(clock, d, a, FpFormat::Binary32, config.rounding,
                              config.baseline_order);
    case Algorithm::Proposed:
      if (config.policy == CandidatePolicy::WindowTop) {
        return window_top(clock, d, a, params);
      }
      return compensate(clock, RatioEstimate(d, a), params).j;
  }
  throw std::logic_error("run_algorithm: bad algorithm");
}

struct CellAccumulator {
  std::int64_t max = std::numeric_limits<std::int64_t>::min();
  std::int64_t min = std::numeric_limits<std::int64_t>::max();
  __int128 sum = 0;
  std::int64_t count = 0;

  void add(std::int64_t err) {
    max = std::max(max, err);
    min = std::min(min, err);
    sum += err;
    ++count;
  }
  void merge(const CellAccumulator& other) {
    if (other.count == 0) return;
    max = std::max(max, other.max);
    min = std::min(min, other.min);
    sum += other.sum;
    count += other.count;
  }
};

}  // namespace

std::vector<std::int64_t> generate_samples(const ExperimentConfig& config) {
  if (config.sample_count <= 0 || config.d <= 0) {
    throw std::invalid_argument("generate_samples: counts must be positive");
  }
  if (config.skew_ppm <= 0 || config.skew_ppm >= 1e6) {
    throw std::invalid_argument("generate_samples: skew_ppm out of range");
  }
  std::vector<std::int64_t> samples;
  samples.reserve(static_cast<std::size_t>(config.sample_count));
  for (std::int64_t n = 0; n < config.sample_count; ++n) {
    double s = uniform_skew(config.seed, static_cast<std::uint64_t>(n),
                            config.skew_ppm);
    std::int64_t a = std::llround(static_cast<double>(config.d) * (1.0 + s));
    if (a <= 0) throw std::runtime_error("generate_samples: degenerate A <= 0");
    samples.push_back(a);
  }
  return samples;
}

ErrorStats run_cell(std::int64_t clock,
                    const std::vector<std::int64_t>& samples,
                    const ExperimentConfig& config, Algorithm algorithm) {
  if (samples.empty()) {
    throw std::invalid_argument("run_cell: no samples");
  }
  WindowParams params = window_params(config);
  int nthreads = resolve_threads(config.threads);
  std::size_t per = (samples.size() + nthreads - 1) / nthreads;

  std::vector<CellAccumulator> parts(nthreads);
  auto worker = [&](int t) {
    std::size_t begin = t * per;
    std::size_t end = std::min(samples.size(), begin + per);
    CellAccumulator acc;
    for (std::size_t n = begin; n < end; ++n) {
      std::int64_t a = samples[n];
      std::int64_t reference =
          float_compensate(clock, config.d, a, FpFormat::Binary64,
                           config.rounding, config.baseline_order);
      std::int64_t alg =
          run_algorithm(clock, config.d, a, config, params, algorithm);
      acc.add(reference - alg);
    }
    parts[t] = acc;
  };

  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  CellAccumulator total;
  for (const auto& p : parts) total.merge(p);
  ErrorStats stats;
  stats.max = total.max;
  stats.min = total.min;
  stats.count = total.count;
  stats.avg = static_cast<double>(total.sum) / static_cast<double>(total.count);
  return stats;
}

ResultTable run_table(const ExperimentConfig& config) {
  std::vector<std::int64_t> samples = generate_samples(config);
  ResultTable table;
  for (Algorithm algorithm :
       {Algorithm::Binary32Baseline, Algorithm::Proposed}) {
    for (std::int64_t clock : config.clocks) {
      std::fprintf(stderr, "cell %s clock=%lld...\n", algorithm_name(algorithm),
                   static_cast<long long>(clock));
      table.rows.push_back(
          {algorithm, clock, run_cell(clock, samples, config, algorithm)});
    }
  }
  return table;
}

std::vector<DriftPoint> run_drift(const ExperimentConfig& config,
                                  std::int64_t rounds,
                                  std::int64_t interval_ticks) {
  if (rounds < 1) throw std::invalid_argument("run_drift: rounds must be >= 1");
  if (interval_ticks < 0) {
    throw std::invalid_argument("run_drift: interval must be >= 0");
  }
  WindowParams params = window_params(config);
  std::vector<DriftPoint> series;
  series.reserve(static_cast<std::size_t>(rounds));
  std::int64_t truth = 0;
  std::int64_t proposed = 0;
  float logical32 = 0.0f;
  for (std::int64_t r = 0; r < rounds; ++r) {
    double s =
        uniform_skew(config.seed, static_cast<std::uint64_t>(r), config.skew_ppm);
    std::int64_t a = std::llround(static_cast<double>(config.d) * (1.0 + s));
    truth += exact_quotient(interval_ticks, config.d, a, config.rounding);
    proposed += compensate(interval_ticks, RatioEstimate(config.d, a), params).j;
    float increment = static_cast<float>(fp_quotient(
        interval_ticks, config.d, a, FpFormat::Binary32, config.baseline_order));
    logical32 += increment;  // binary32 accumulation, as on the sensor node
    std::int64_t drift32 =
        static_cast<std::int64_t>(std::floor(static_cast<double>(logical32))) -
        truth;
    series.push_back({r + 1, proposed - truth, drift32});
  }
  return series;
}

const char* algorithm_name(Algorithm a) {
  return a == Algorithm::Proposed ? "proposed" : "binary32";
}

std::string emit_csv(const ResultTable& table) {
  std::string out = "algorithm,clock,max,min,avg\n";
  char buf[160];
  for (const auto& row : table.rows) {
    std::snprintf(buf, sizeof buf, "%s,%lld,%lld,%lld,%#.6g\n",
                  algorithm_name(row.algorithm),
                  static_cast<long long>(row.clock),
                  static_cast<long long>(row.stats.max),
                  static_cast<long long>(row.stats.min), row.stats.avg);
    out += buf;
  }
  return out;
}

std::string emit_markdown(const ResultTable& table) {
  std::string out =
      "| Algorithm | Hardware clock | Max. | Min. | Avg. |\n"
      "|-----------|----------------|------|------|------|\n";
  char buf[200];
  for (const auto& row : table.rows) {
    std::snprintf(buf, sizeof buf, "| %s | %lld | %lld | %lld | %#.6g |\n",
                  algorithm_name(row.algorithm),
                  static_cast<long long>(row.clock),
                  static_cast<long long>(row.stats.max),
                  static_cast<long long>(row.stats.min), row.stats.avg);
    out += buf;
  }
  return out;
}

std::string emit_drift_csv(const std::vector<DriftPoint>& series) {
  std::string out = "round,proposed_drift,binary32_drift\n";
  char buf[120];
  for (const auto& p : series) {
    std::snprintf(buf, sizeof buf, "%lld,%lld,%lld\n",
                  static_cast<long long>(p.round),
                  static_cast<long long>(p.proposed_drift),
                  static_cast<long long>(p.binary32_drift));
    out += buf;
  }
  return out;
}

}  // namespace skewcomp
