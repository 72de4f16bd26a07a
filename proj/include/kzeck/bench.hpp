#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "kzeck/core_sequences.hpp"
#include "kzeck/sr_solver.hpp"

namespace kzeck {

struct SampleSpec {
  int k;
  long norm_bound;
  long count;
  std::uint64_t seed;
};

/// `count` vectors uniform on the nonzero points of the box ||v||_inf <= norm_bound
/// (a draw of 0 is redrawn). mt19937_64 seeded with `seed`.
std::vector<VecZ> sample_vectors(const SampleSpec& spec);

struct BenchRecord {
  int k;
  VecZ v;
  Strategy strategy;
  std::optional<long> j_value;  // absent for the reference strategy
  std::size_t sr_length;
  std::uint64_t op_count;
  std::chrono::nanoseconds wall_time;
};

inline constexpr Strategy kBenchStrategies[] = {Strategy::small_steps, Strategy::large_steps, Strategy::reference};

/// One record per (vector, strategy). Every run gets a fresh context, so the
/// op count includes generating the k-bonacci terms it needs. Throws
/// StrategyMismatch if two strategies disagree on an SR.
std::vector<BenchRecord> run_benchmark(const SampleSpec& spec,
                                       std::span<const Strategy> strategies = kBenchStrategies);

/// Single instrumented run on a fresh context.
BenchRecord bench_one(int k, const VecZ& v, Strategy strategy);

/// Header: k,v1..v_{k-1},strategy,j,sr_length,op_count,wall_ns
void write_bench_csv(std::ostream& os, int k, std::span<const BenchRecord> records);

struct ScatterPoint {
  VecZ v;
  double norm_l2;
  long j_lsb;
  double bound;
  bool violated;
};

struct ScatterResult {
  std::vector<ScatterPoint> points;
  std::vector<VecZ> violations;
  /// max over points of j_lsb / (c ln ||v||_2 + d)
  double max_ratio;
};

/// Checks j_lsb <= c ln||v||_2 + d over every nonzero v with ||v||_inf <= norm_bound
/// (sample == nullopt) or over a uniform sample of that box.
ScatterResult jbound_scatter(int k, long norm_bound, std::optional<SampleSpec> sample, double c, double d);

/// Header: norm_l2,j_lsb,bound,violated
void write_scatter_csv(std::ostream& os, const ScatterResult& result);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

struct JMedians {
  double small_steps;
  double large_steps;
};

/// Median j_ssb and j_lsb over a uniform sample.
JMedians median_j_bounds(const SampleSpec& spec);

}  // namespace kzeck
