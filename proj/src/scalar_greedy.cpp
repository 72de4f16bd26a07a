#include "kzeck/scalar_greedy.hpp"

#include <algorithm>

#include "kzeck/errors.hpp"

namespace kzeck {

ScalarIndexSet greedy_decompose(const KBonacciContext& ctx, const BigInt& m) {
  if (m < 0) throw ValidationError("greedy_decompose requires m >= 0");
  ScalarIndexSet out;
  BigInt rest = m;
  long l = 0;
  while (sgn(rest) > 0) {
    if (l == 0) {
      l = ctx.max_index_at_most(rest);
    } else {
      // After taking x_l the remainder is below x_l, so scan down from l-1.
      --l;
      while (ctx.number(l) > rest) {
        ctx.count_ops();
        --l;
      }
      ctx.count_ops();
    }
    rest -= ctx.number(l);
    ctx.count_ops();
    out.indices.push_back(l);
  }
  std::reverse(out.indices.begin(), out.indices.end());
  return out;
}

namespace {

// Can `remaining` be written with exactly `terms` values x_l, l in [2, top]?
bool reachable(const KBonacciContext& ctx, const BigInt& remaining, long top, int terms) {
  if (terms == 0) return sgn(remaining) == 0;
  if (sgn(remaining) <= 0) return false;
  for (long l = top; l >= 2; --l) {
    const BigInt& x = ctx.number(l);
    if (x > remaining) continue;
    // Largest usable term times the number of slots left must cover the remainder.
    if (x * terms < remaining) return false;
    if (reachable(ctx, remaining - x, l, terms - 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<int> scalar_min_summands_bruteforce(const KBonacciContext& ctx, const BigInt& m,
                                                  long max_index, int budget) {
  if (m < 0) throw ValidationError("m must be nonnegative");
  for (int size = 0; size <= budget; ++size) {
    if (reachable(ctx, m, max_index, size)) return size;
  }
  return std::nullopt;
}

}  // namespace kzeck
