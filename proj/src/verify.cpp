#include "skewcomp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "skewcomp/sampling.hpp"

namespace skewcomp {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string tuple_str(std::int64_t i, std::int64_t d, std::int64_t a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(i=%lld, D=%lld, A=%lld)",
                static_cast<long long>(i), static_cast<long long>(d),
                static_cast<long long>(a));
  return buf;
}

/// Runs `trial` for indices [0, count) across threads; keeps the
/// lowest-index failure message.
template <typename Trial>
VerifyResult parallel_suite(const std::string& name, std::int64_t count,
                            int threads, Trial trial) {
  int nthreads = resolve_threads(threads);
  std::atomic<std::int64_t> first_failure{count};
  std::mutex mu;
  std::string detail;
  auto worker = [&](int t) {
    std::string local;
    for (std::int64_t n = t; n < count; n += nthreads) {
      if (n > first_failure.load(std::memory_order_relaxed)) break;
      if (!trial(n, local)) {
        std::int64_t prev = first_failure.load();
        while (n < prev && !first_failure.compare_exchange_weak(prev, n)) {
        }
        if (n <= first_failure.load()) {
          std::lock_guard<std::mutex> lock(mu);
          if (n == first_failure.load()) detail = local;
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();
  bool ok = first_failure.load() == count;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld trials", static_cast<long long>(count));
  return {name, ok, ok ? buf : detail};
}

bool walk_rounding_holds(std::int64_t da, std::int64_t db, std::string& detail) {
  Slope slope(da, db);
  DecisionVar td = initial_td(slope);
  std::int64_t bound = 2 * da;
  for (std::int64_t x = 0; x <= 3 * da; ++x) {
    if (td.value <= -bound || td.value >= bound) {
      detail = "td=" + std::to_string(td.value) + " at x=" +
               std::to_string(x) + " " + tuple_str(0, db, da);
      return false;
    }
    td = step(td, slope).second;
  }
  return true;
}

/// Random (i, D, A) spanning the benchmark magnitudes: D = 10^6, A within
/// +/-100 ppm, i log-uniform up to 10^9.
struct MagnitudeSample {
  std::int64_t i, d, a;
};

MagnitudeSample magnitude_sample(std::uint64_t seed, std::uint64_t n) {
  double u1 = uniform01(seed, 3 * n);
  double u2 = uniform01(seed, 3 * n + 1);
  double u3 = uniform01(seed, 3 * n + 2);
  std::int64_t d = 1'000'000;
  std::int64_t a =
      std::llround(static_cast<double>(d) * (1.0 + (2.0 * u1 - 1.0) * 1e-4));
  // i from 0 to 1e9, log-uniform with a small mass at the exact row values.
  std::int64_t i;
  if (u3 < 0.1) {
    const std::int64_t rows[4] = {1'000'000, 10'000'000, 100'000'000,
                                  1'000'000'000};
    i = rows[static_cast<int>(u3 * 40) & 3];
  } else {
    i = static_cast<std::int64_t>(std::pow(10.0, u2 * 9.0));
  }
  return {i, d, a};
}

}  // namespace

VerifyResult verify_walk_rounding_exhaustive(const VerifyOptions& opts) {
  for (std::int64_t da = 2; da <= opts.max_a; ++da) {
    for (std::int64_t db = 1; db < da; ++db) {
      std::string detail;
      if (!walk_rounding_holds(da, db, detail)) {
        return {"walk-rounding-exhaustive", false, detail};
      }
    }
  }
  return {"walk-rounding-exhaustive", true,
          "all slopes with delta_a <= " + std::to_string(opts.max_a)};
}

VerifyResult verify_walk_rounding_randomized(const VerifyOptions& opts) {
  return parallel_suite(
      "walk-rounding-randomized", opts.random_trials, opts.threads,
      [&](std::int64_t n, std::string& detail) {
        std::uint64_t idx = static_cast<std::uint64_t>(n);
        std::int64_t da =
            2 + static_cast<std::int64_t>(uniform01(opts.seed, 2 * idx) *
                                          (1'000'000 - 2));
        std::int64_t db = 1 + static_cast<std::int64_t>(
                                  uniform01(opts.seed, 2 * idx + 1) *
                                  static_cast<double>(da - 1));
        if (db >= da) db = da - 1;
        return walk_rounding_holds(da, db, detail);
      });
}

VerifyResult verify_nearest_lattice(const VerifyOptions& opts) {
  for (std::int64_t da = 2; da <= opts.max_a; ++da) {
    for (std::int64_t db = 1; db < da; ++db) {
      Slope slope(da, db);
      auto walk = reference_walk(slope, 3 * da);
      for (std::int64_t x = 0; x < static_cast<std::int64_t>(walk.size());
           ++x) {
        std::int64_t y = walk[static_cast<std::size_t>(x)];
        std::int64_t twice_residual = 2 * (x * db - y * da);
        if (twice_residual < -da || twice_residual > da) {
          return {"nearest-lattice", false,
                  "residual " + std::to_string(twice_residual) + " at x=" +
                      std::to_string(x) + " " + tuple_str(x, db, da)};
        }
        // Ties resolve upward: the walk equals exact half-up rounding.
        if (y != exact_quotient(x, db, da, RoundingMode::NearestHalfUp)) {
          return {"nearest-lattice", false,
                  "walk y != half-up oracle at " + tuple_str(x, db, da)};
        }
      }
    }
  }
  return {"nearest-lattice", true,
          "all slopes with delta_a <= " + std::to_string(opts.max_a)};
}

VerifyResult verify_periodicity(const VerifyOptions& opts) {
  for (std::int64_t da = 2; da <= opts.max_a; ++da) {
    for (std::int64_t db = 1; db < da; ++db) {
      auto walk = reference_walk(Slope(da, db), 3 * da);
      for (std::int64_t x = 0; x + da < static_cast<std::int64_t>(walk.size());
           ++x) {
        if (walk[static_cast<std::size_t>(x + da)] !=
            walk[static_cast<std::size_t>(x)] + db) {
          return {"periodicity", false,
                  "y[x+period] != y[x]+delta_b at x=" + std::to_string(x) +
                      " " + tuple_str(x, db, da)};
        }
      }
    }
  }
  return {"periodicity", true,
          "all slopes with delta_a <= " + std::to_string(opts.max_a)};
}

VerifyResult verify_convention_consistency(const VerifyOptions& opts) {
  for (std::int64_t da = 2; da <= opts.max_a; ++da) {
    for (std::int64_t db = 1; db < da; ++db) {
      Slope slope(da, db);
      DecisionVar td = initial_td(slope);
      std::int64_t y = 0;
      for (std::int64_t x = 0; x <= 3 * da; ++x) {
        DecisionVar ext = otd({x, y}, slope, TdConvention::TdConsistent);
        if (ext.value != td.value) {
          return {"convention-consistency", false,
                  "otd != td at x=" + std::to_string(x) + " " +
                      tuple_str(x, db, da)};
        }
        auto [movement, next] = step(td, slope);
        if (movement == Movement::Diagonal) ++y;
        td = next;
      }
    }
  }
  return {"convention-consistency", true,
          "all slopes with delta_a <= " + std::to_string(opts.max_a)};
}

VerifyResult verify_oracle_equivalence(const VerifyOptions& opts) {
  for (std::int64_t a = 2; a <= opts.max_a; ++a) {
    for (std::int64_t d = 1; d < a; ++d) {
      auto walk = reference_walk(Slope(a, d), 4 * a);
      for (std::int64_t i = 0; i <= 4 * a; ++i) {
        CompensationOutcome out = compensate_case1(i, RatioEstimate(d, a));
        if (out.j != walk[static_cast<std::size_t>(i)]) {
          return {"oracle-equivalence", false,
                  "case1 j=" + std::to_string(out.j) + " walk y=" +
                      std::to_string(walk[static_cast<std::size_t>(i)]) + " " +
                      tuple_str(i, d, a)};
        }
      }
    }
  }
  return {"oracle-equivalence", true,
          "all slopes with A <= " + std::to_string(opts.max_a) +
              ", i <= 4A"};
}

VerifyResult verify_backward_reachability(const VerifyOptions& opts) {
  std::int64_t cap = std::min<std::int64_t>(opts.max_a, 16);
  for (std::int64_t da = 2; da <= cap; ++da) {
    for (std::int64_t db = 1; db < da; ++db) {
      Slope slope(da, db);
      auto walk = reference_walk(slope, da);
      for (std::int64_t i = 1; i <= da; ++i) {
        std::int64_t j = walk[static_cast<std::size_t>(i)];
        for (std::int64_t k = 0; k < i; ++k) {
          // (k, l) can reach (i, j) only if the climb j - l fits in the
          // remaining i - k steps and never has to descend.
          std::int64_t lo = std::max<std::int64_t>(0, j - (i - k));
          std::int64_t hi = std::min(j, k);
          for (std::int64_t l = lo; l <= hi; ++l) {
            DecisionVar td = otd({k, l}, slope);
            std::int64_t y = l;
            for (std::int64_t x = k; x < i; ++x) {
              auto [movement, next] = step(td, slope);
              if (movement == Movement::Diagonal) ++y;
              td = next;
            }
            if (y != j) {
              return {"backward-reachability", false,
                      "start (" + std::to_string(k) + "," + std::to_string(l) +
                          ") reached y=" + std::to_string(y) + " not j=" +
                          std::to_string(j) + " " + tuple_str(i, db, da)};
            }
          }
        }
      }
    }
  }
  return {"backward-reachability", true,
          "all slopes with delta_a <= " + std::to_string(cap)};
}

VerifyResult verify_nearest_bound(const VerifyOptions& opts) {
  return parallel_suite(
      "nearest-bound", opts.random_trials, opts.threads,
      [&](std::int64_t n, std::string& detail) {
        MagnitudeSample smp =
            magnitude_sample(opts.seed ^ 0x7B17ULL, static_cast<std::uint64_t>(n));
        std::int64_t i = smp.i, d = smp.d, a = smp.a;
        std::int64_t j = compensate(i, RatioEstimate(d, a)).j;
        std::int64_t floor_exact = exact_quotient(i, d, a, RoundingMode::Floor);
        std::int64_t diff = j - floor_exact;
        if (diff < -1 || diff > 1) {
          detail = "j=" + std::to_string(j) + " floor=" +
                   std::to_string(floor_exact) + " " + tuple_str(i, d, a);
          return false;
        }
        // Nearest-lattice form of the bound, exact in 128-bit integers.
        __int128 residual = 2 * (static_cast<__int128>(i) * d -
                                 static_cast<__int128>(j) * a);
        if (residual < -a || residual > a) {
          detail = "2|iD-jA| > A " + tuple_str(i, d, a);
          return false;
        }
        return true;
      });
}

VerifyResult verify_window_robustness(const VerifyOptions& opts) {
  return parallel_suite(
      "window-robustness", opts.random_trials, opts.threads,
      [&](std::int64_t n, std::string& detail) {
        MagnitudeSample smp =
            magnitude_sample(opts.seed ^ 0x77ULL, static_cast<std::uint64_t>(n));
        std::int64_t d = smp.d, a = smp.a, i = smp.i;
        // Reduce to the case-1 sub-slope compensate() walks.
        std::int64_t base = 0, d1 = d;
        if (d >= a) {
          base = (d / a);
          d1 = d % a;
          if (d1 == 0) return true;
        }
        std::int64_t true_j =
            exact_quotient(i, d1, a, RoundingMode::NearestHalfUp);
        for (FpFormat fmt : {FpFormat::Binary32, FpFormat::Binary64}) {
          WindowParams params;
          params.fp_mode = fmt;
          CandidateWindow w = candidate_window(i, RatioEstimate(d1, a), params);
          if (true_j < w.k || true_j > w.k + w.l) {
            detail = "true j=" + std::to_string(true_j) + " outside [" +
                     std::to_string(w.k) + "," + std::to_string(w.k + w.l) +
                     "] " + tuple_str(i, d, a) +
                     (fmt == FpFormat::Binary32 ? " binary32" : " binary64");
            return false;
          }
        }
        (void)base;
        return true;
      });
}

std::vector<VerifyResult> run_all_suites(const VerifyOptions& opts) {
  std::vector<VerifyResult> results;
  results.push_back(verify_walk_rounding_exhaustive(opts));
  results.push_back(verify_nearest_lattice(opts));
  results.push_back(verify_periodicity(opts));
  results.push_back(verify_convention_consistency(opts));
  results.push_back(verify_oracle_equivalence(opts));
  results.push_back(verify_backward_reachability(opts));
  results.push_back(verify_nearest_bound(opts));
  results.push_back(verify_window_robustness(opts));
  results.push_back(verify_walk_rounding_randomized(opts));
  return results;
}

}  // namespace skewcomp
