#include "kzeck/sr_solver.hpp"

#include <algorithm>
#include <string>

#include "kzeck/errors.hpp"
#include "kzeck/scalar_greedy.hpp"

namespace kzeck {

namespace {

long to_long(const BigInt& x, const char* what) {
  if (!x.fits_slong_p()) throw ValidationError(std::string(what) + " does not fit in a machine word");
  return x.get_si();
}

void require_nonzero(const KBonacciContext& ctx, const VecZ& v) {
  ctx.check_dim(v);
  if (v.is_zero()) throw ZeroVector();
}

long most_negative(const VecZ& v) {
  long m = 0;
  for (const BigInt& e : v.entries()) m = std::min(m, to_long(e, "vector entry"));
  return m;
}

// Consecutive depths that must all lie outside the candidate ball before the
// nearest-vector scan stops. The backward norms oscillate at small depths; the
// stopping rule is checked against long prefixes in the unit tests.
long scan_window(int k) { return 2L * k + 2; }

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::small_steps: return "small_steps";
    case Strategy::large_steps: return "large_steps";
    case Strategy::reference: return "reference";
    case Strategy::brute_force: return "brute_force";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "small" || name == "small_steps") return Strategy::small_steps;
  if (name == "large" || name == "large_steps") return Strategy::large_steps;
  if (name == "reference") return Strategy::reference;
  if (name == "brute" || name == "brute_force") return Strategy::brute_force;
  return std::nullopt;
}

long Decomposition::term_count() const {
  long n = 0;
  for (const auto& [i, c] : counts) n += c;
  return n;
}

long Decomposition::max_index() const { return counts.empty() ? 0 : counts.rbegin()->first; }

VecZ Decomposition::evaluate(const KBonacciContext& ctx) const {
  VecZ sum(ctx.dim());
  for (const auto& [i, c] : counts) {
    const VecZ& x = ctx.vector(i);
    for (std::size_t d = 0; d < ctx.dim(); ++d) sum[d] += c * x[d];
  }
  return sum;
}

Decomposition small_steps_decomposition(const KBonacciContext& ctx, const VecZ& v) {
  require_nonzero(ctx, v);
  Decomposition out;
  out.provenance = Strategy::small_steps;
  const long vm = most_negative(v);
  if (vm < 0) out.counts[ctx.k()] = -vm;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const long steps = to_long(v[i], "vector entry") - vm;
    if (steps > 0) out.counts[static_cast<long>(i) + 1] += steps;
  }
  ctx.count_ops(v.dim());
  return out;
}

JBound small_steps_bound(const KBonacciContext& ctx, const VecZ& v) {
  require_nonzero(ctx, v);
  const long k = ctx.k();
  const long vm = most_negative(v);
  long sum = 0;
  for (const BigInt& e : v.entries()) sum += to_long(e, "vector entry") - vm;
  ctx.count_ops(v.dim());
  if (vm < 0) return {-vm * k + sum * k, Strategy::small_steps};
  return {k * sum - 1, Strategy::small_steps};
}

std::optional<NearestVector> nearest_kbonacci_vector(const KBonacciContext& ctx, const VecZ& v) {
  ctx.check_dim(v);
  const BigInt norm = l2_squared(v);
  if (sgn(norm) == 0) return std::nullopt;
  const BigInt radius = 4 * norm;
  std::optional<NearestVector> best;
  long outside = 0;
  for (long depth = 1; outside < scan_window(ctx.k()); ++depth) {
    const VecZ& x = ctx.vector(depth);
    ctx.count_ops();
    if (l2_squared(x) > radius) {
      ++outside;
      continue;
    }
    outside = 0;
    BigInt dist = l2_squared(v - x);
    ctx.count_ops(ctx.dim() + 1);
    if (!best || dist < best->distance_squared) best = NearestVector{depth, std::move(dist)};
  }
  return best;
}

LargeStepsResult large_steps_decomposition(const KBonacciContext& ctx, const VecZ& v) {
  require_nonzero(ctx, v);
  LargeStepsResult out;
  out.decomposition.provenance = Strategy::large_steps;
  VecZ current = v;
  BigInt norm = l2_squared(current);
  out.norms_squared.push_back(norm);
  while (sgn(norm) > 0) {
    auto nearest = nearest_kbonacci_vector(ctx, current);
    ctx.count_ops();
    if (!nearest || nearest->distance_squared >= norm) break;
    current -= ctx.vector(nearest->depth);
    norm = nearest->distance_squared;
    out.descent.push_back(nearest->depth);
    out.decomposition.counts[nearest->depth] += 1;
    out.norms_squared.push_back(norm);
  }
  if (!current.is_zero()) {
    for (const auto& [i, c] : small_steps_decomposition(ctx, current).counts) {
      out.decomposition.counts[i] += c;
    }
  }
  const long n_terms = out.decomposition.term_count();
  out.bound = {ctx.k() * (n_terms - 1) + out.decomposition.max_index(), Strategy::large_steps};
  return out;
}

IndexSet vector_greedy(const KBonacciContext& ctx, const VecZ& v, long j) {
  ctx.check_dim(v);
  if (j < 1) throw ValidationError("vector_greedy requires j >= 1");
  const BigInt residue = project_Sn(ctx, v, j + 1);
  const ScalarIndexSet scalar = greedy_decompose(ctx, residue);
  std::vector<long> depths;
  depths.reserve(scalar.indices.size());
  for (long l : scalar.indices) depths.push_back(j + 1 - l);
  IndexSet sr(std::move(depths));
  if (!is_satisfying(sr, ctx.k()) || evaluate_vector(ctx, sr) != v) {
    throw JBoundTooSmall("vector greedy with j = " + std::to_string(j) + " did not reproduce " +
                         v.to_string());
  }
  ctx.count_ops(v.dim());
  return sr;
}

IndexSet find_sr(const KBonacciContext& ctx, const VecZ& v, Strategy strategy) {
  ctx.check_dim(v);
  if (v.is_zero()) return {};
  switch (strategy) {
    case Strategy::small_steps:
      return vector_greedy(ctx, v, small_steps_bound(ctx, v).value + 1);
    case Strategy::large_steps:
      return vector_greedy(ctx, v, large_steps_decomposition(ctx, v).bound.value + 1);
    case Strategy::reference:
      return reference_recursive_sr(ctx, v);
    case Strategy::brute_force: {
      // Deepen the cap one depth at a time; the first cap with a match is J(v).
      const long bound = large_steps_decomposition(ctx, v).bound.value;
      for (long cap = 1; cap < bound; ++cap) {
        try {
          return brute_force_sr(ctx, v, cap);
        } catch (const NotFound&) {
        }
      }
      return brute_force_sr(ctx, v, bound);
    }
  }
  throw ValidationError("unknown strategy");
}

namespace {

class Normalizer {
 public:
  Normalizer(const KBonacciContext& ctx, CoefficientVector c, const NormalizeOptions& opts)
      : ctx_(ctx), k_(ctx.k()), c_(std::move(c)), opts_(opts) {
    if (opts_.check_value) value_ = evaluate_coefficients(ctx_, c_);
  }

  IndexSet run() {
    while (true) {
      const auto violation = shallowest_violation();
      if (!violation) break;
      const auto [index, is_two] = *violation;
      if (is_two) split(index);
      carry(index);
    }
    return c_.to_index_set();
  }

 private:
  // (index, true) for a coefficient >= 2, (index, false) for the start of k
  // consecutive nonzero coefficients.
  std::optional<std::pair<long, bool>> shallowest_violation() const {
    const auto& coeffs = c_.coeffs();
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
      ctx_.count_ops();
      if (it->second >= 2) return std::pair{it->first, true};
      auto run_end = it;
      long len = 1;
      for (auto next = std::next(it); next != coeffs.end() && len < k_; ++next) {
        if (next->first != run_end->first + 1) break;
        run_end = next;
        ++len;
      }
      if (len == k_) return std::pair{it->first, false};
    }
    return std::nullopt;
  }

  // c_i -= 1; c_{i+1..i+k} += 1.
  void split(long i) {
    c_.add(i, -1);
    for (long d = 1; d <= k_; ++d) c_.add(i + d, 1);
    after_rewrite();
  }

  // Window i..i+k-1 collapses to i-1, or disappears when i = 1.
  void carry(long i) {
    for (long d = 0; d < k_; ++d) c_.add(i + d, -1);
    if (i > 1) c_.add(i - 1, 1);
    after_rewrite();
  }

  void after_rewrite() {
    ctx_.count_ops(static_cast<std::uint64_t>(k_));
    if (++rewrites_ > opts_.max_rewrites) {
      throw NormalizationDiverged("normalization exceeded " + std::to_string(opts_.max_rewrites) +
                                  " rewrites");
    }
    if (opts_.check_value && evaluate_coefficients(ctx_, c_) != value_) {
      throw InvariantError("normalization rewrite changed the represented vector");
    }
  }

  const KBonacciContext& ctx_;
  const long k_;
  CoefficientVector c_;
  NormalizeOptions opts_;
  VecZ value_;
  long rewrites_ = 0;
};

}  // namespace

IndexSet normalize(const KBonacciContext& ctx, CoefficientVector c, const NormalizeOptions& opts) {
  if (ctx.k() < 3) throw ValidationError("vector representations require k >= 3");
  return Normalizer(ctx, std::move(c), opts).run();
}

IndexSet reference_recursive_sr(const KBonacciContext& ctx, const VecZ& v) {
  ctx.check_dim(v);
  if (ctx.k() < 3) throw ValidationError("vector representations require k >= 3");
  // Walk v down to 0, remembering which term each step removed.
  std::vector<long> peeled;
  VecZ current = v;
  while (!current.is_zero()) {
    std::optional<std::size_t> positive;
    for (std::size_t i = 0; i < current.dim(); ++i) {
      ctx.count_ops();
      if (sgn(current[i]) > 0) {
        positive = i;
        break;
      }
    }
    if (positive) {
      current[*positive] -= 1;
      peeled.push_back(static_cast<long>(*positive) + 1);
    } else {
      for (std::size_t i = 0; i < current.dim(); ++i) current[i] += 1;
      peeled.push_back(ctx.k());
    }
    ctx.count_ops(current.dim());
  }
  // Rebuild: SR(v) = normalize(SR(w) + X_{-term}), innermost first.
  IndexSet sr;
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    CoefficientVector c(sr);
    c.add(*it, 1);
    sr = normalize(ctx, std::move(c));
  }
  return sr;
}

namespace {

struct BruteForce {
  int k;
  long max_index;
  std::vector<std::vector<long long>> vectors;  // vectors[i] = X_{-i}
  std::vector<long long> target;
  std::vector<long> chosen;
  std::vector<std::vector<long>> matches;

  void search(long depth, int run, std::vector<long long>& sum) {
    if (depth > max_index) {
      if (sum == target) matches.push_back(chosen);
      return;
    }
    search(depth + 1, 0, sum);
    if (run + 1 < k) {
      const auto& x = vectors[static_cast<std::size_t>(depth)];
      for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += x[d];
      chosen.push_back(depth);
      search(depth + 1, run + 1, sum);
      chosen.pop_back();
      for (std::size_t d = 0; d < sum.size(); ++d) sum[d] -= x[d];
    }
  }
};

}  // namespace

IndexSet brute_force_sr(const KBonacciContext& ctx, const VecZ& v, long max_index) {
  ctx.check_dim(v);
  if (max_index < 0) throw ValidationError("max_index must be nonnegative");
  BruteForce bf{ctx.k(), max_index, {}, {}, {}, {}};
  bf.vectors.reserve(static_cast<std::size_t>(max_index) + 1);
  for (long i = 0; i <= max_index; ++i) {
    std::vector<long long> x;
    for (const BigInt& e : ctx.vector(i).entries()) x.push_back(to_long(e, "k-bonacci vector entry"));
    bf.vectors.push_back(std::move(x));
  }
  for (const BigInt& e : v.entries()) bf.target.push_back(to_long(e, "vector entry"));
  std::vector<long long> sum(v.dim(), 0);
  bf.search(1, 0, sum);
  if (bf.matches.empty()) {
    throw NotFound("no SR of " + v.to_string() + " with depths <= " + std::to_string(max_index));
  }
  if (bf.matches.size() > 1) {
    throw MultipleFound("several SRs of " + v.to_string() + " found; uniqueness violated");
  }
  return IndexSet(bf.matches.front());
}

}  // namespace kzeck
