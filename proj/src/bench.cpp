#include "kzeck/bench.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "kzeck/errors.hpp"

namespace kzeck {

std::vector<VecZ> sample_vectors(const SampleSpec& spec) {
  if (spec.k < 3) throw ValidationError("sampling requires k >= 3");
  if (spec.norm_bound < 1) throw ValidationError("norm bound must be positive");
  if (spec.count < 0) throw ValidationError("count must be nonnegative");
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<long> coord(-spec.norm_bound, spec.norm_bound);
  std::vector<VecZ> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  while (static_cast<long>(out.size()) < spec.count) {
    VecZ v(static_cast<std::size_t>(spec.k - 1));
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] = coord(rng);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

BenchRecord bench_one(int k, const VecZ& v, Strategy strategy) {
  KBonacciContext ctx(k);
  ctx.reset_op_count();
  BenchRecord rec{k, v, strategy, std::nullopt, 0, 0, {}};
  const auto start = std::chrono::steady_clock::now();
  IndexSet sr;
  switch (strategy) {
    case Strategy::small_steps: {
      const long j = small_steps_bound(ctx, v).value;
      sr = vector_greedy(ctx, v, j + 1);
      rec.j_value = j;
      break;
    }
    case Strategy::large_steps: {
      const long j = large_steps_decomposition(ctx, v).bound.value;
      sr = vector_greedy(ctx, v, j + 1);
      rec.j_value = j;
      break;
    }
    case Strategy::reference:
      sr = reference_recursive_sr(ctx, v);
      break;
    case Strategy::brute_force:
      sr = find_sr(ctx, v, Strategy::brute_force);
      break;
  }
  rec.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  rec.sr_length = sr.size();
  rec.op_count = ctx.op_count();
  return rec;
}

std::vector<BenchRecord> run_benchmark(const SampleSpec& spec, std::span<const Strategy> strategies) {
  std::vector<BenchRecord> out;
  for (const VecZ& v : sample_vectors(spec)) {
    std::optional<IndexSet> agreed;
    KBonacciContext check_ctx(spec.k);
    for (Strategy s : strategies) {
      BenchRecord rec = bench_one(spec.k, v, s);
      // Re-derive the SR on a shared context for the cross-strategy comparison.
      const IndexSet sr = find_sr(check_ctx, v, s);
      if (sr.size() != rec.sr_length || (agreed && sr != *agreed)) {
        throw StrategyMismatch("strategies disagree on the SR of " + v.to_string());
      }
      agreed = sr;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

void write_bench_csv(std::ostream& os, int k, std::span<const BenchRecord> records) {
  os << "k";
  for (int i = 1; i < k; ++i) os << ",v" << i;
  os << ",strategy,j,sr_length,op_count,wall_ns\n";
  for (const BenchRecord& r : records) {
    os << r.k;
    for (const BigInt& e : r.v.entries()) os << ',' << e;
    os << ',' << to_string(r.strategy) << ',';
    if (r.j_value) os << *r.j_value;
    os << ',' << r.sr_length << ',' << r.op_count << ',' << r.wall_time.count() << '\n';
  }
}

ScatterResult jbound_scatter(int k, long norm_bound, std::optional<SampleSpec> sample, double c, double d) {
  if (k < 3) throw ValidationError("scatter requires k >= 3");
  std::vector<VecZ> vectors;
  if (sample) {
    SampleSpec spec = *sample;
    spec.k = k;
    spec.norm_bound = norm_bound;
    vectors = sample_vectors(spec);
  } else {
    if (norm_bound < 1) throw ValidationError("norm bound must be positive");
    const std::size_t dim = static_cast<std::size_t>(k - 1);
    std::vector<long> digits(dim, -norm_bound);
    while (true) {
      VecZ v(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] = digits[i];
      if (!v.is_zero()) vectors.push_back(std::move(v));
      std::size_t i = 0;
      while (i < dim && digits[i] == norm_bound) digits[i++] = -norm_bound;
      if (i == dim) break;
      ++digits[i];
    }
  }

  KBonacciContext ctx(k);
  ScatterResult out{{}, {}, 0.0};
  out.points.reserve(vectors.size());
  for (VecZ& v : vectors) {
    const double norm = std::sqrt(l2_squared(v).get_d());
    const long j = large_steps_decomposition(ctx, v).bound.value;
    const double bound = c * std::log(norm) + d;
    const bool violated = static_cast<double>(j) > bound;
    out.max_ratio = std::max(out.max_ratio, static_cast<double>(j) / bound);
    if (violated) out.violations.push_back(v);
    out.points.push_back({std::move(v), norm, j, bound, violated});
  }
  return out;
}

void write_scatter_csv(std::ostream& os, const ScatterResult& result) {
  os << "norm_l2,j_lsb,bound,violated\n";
  const auto old_precision = os.precision(10);
  for (const ScatterPoint& p : result.points) {
    os << p.norm_l2 << ',' << p.j_lsb << ',' << p.bound << ',' << (p.violated ? 1 : 0) << '\n';
  }
  os.precision(old_precision);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw ValidationError("slope needs two or more paired points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

namespace {

double median(std::vector<long> values) {
  if (values.empty()) throw ValidationError("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2) return static_cast<double>(values[mid]);
  return 0.5 * static_cast<double>(values[mid - 1] + values[mid]);
}

}  // namespace

JMedians median_j_bounds(const SampleSpec& spec) {
  KBonacciContext ctx(spec.k);
  std::vector<long> small, large;
  for (const VecZ& v : sample_vectors(spec)) {
    small.push_back(small_steps_bound(ctx, v).value);
    large.push_back(large_steps_decomposition(ctx, v).bound.value);
  }
  return {median(std::move(small)), median(std::move(large))};
}

}  // namespace kzeck
