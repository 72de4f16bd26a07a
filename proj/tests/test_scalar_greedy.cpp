#include <doctest.h>

#include <map>

#include "kzeck/errors.hpp"
#include "kzeck/scalar_greedy.hpp"
#include "oracles.hpp"

using namespace kzeck;

TEST_CASE("greedy examples") {
  KBonacciContext ctx(3);
  // 17808 = 10609 + 5768 + 927 + 504 = x_17 + x_16 + x_13 + x_12
  CHECK(greedy_decompose(ctx, 17808).indices == std::vector<long>{12, 13, 16, 17});
  CHECK(greedy_decompose(ctx, 51).indices == std::vector<long>{5, 8});
  CHECK(greedy_decompose(ctx, 0).indices.empty());
  CHECK_THROWS_AS(greedy_decompose(ctx, -1), ValidationError);
}

TEST_CASE("greedy is a valid decomposition") {
  for (int k = 2; k <= 4; ++k) {
    KBonacciContext ctx(k);
    const auto xs = oracle::kbonacci(k, 40);
    for (long m = 0; m <= 5000; ++m) {
      const auto idx = greedy_decompose(ctx, m).indices;
      mpz_class sum = 0;
      int run = 0;
      for (std::size_t p = 0; p < idx.size(); ++p) {
        CHECK(idx[p] >= 2);
        if (p > 0) {
          CHECK(idx[p] > idx[p - 1]);
          run = idx[p] == idx[p - 1] + 1 ? run + 1 : 1;
        } else {
          run = 1;
        }
        CHECK(run < k);
        sum += xs[static_cast<std::size_t>(idx[p])];
      }
      CHECK(sum == m);
    }
  }
}

TEST_CASE("scalar decomposition is unique") {
  // Enumerate every admissible index set in [2, 16] and count how often each value appears.
  const auto xs = oracle::kbonacci(3, 16);
  std::map<long, int> seen;
  for (std::uint64_t mask = 0; mask < (1U << 15); ++mask) {
    if (oracle::has_run(mask, 3)) continue;
    long v = 0;
    for (int b = 0; b < 15; ++b) {
      if (mask >> b & 1) v += xs[static_cast<std::size_t>(b + 2)].get_si();
    }
    ++seen[v];
  }
  KBonacciContext ctx(3);
  for (long m = 0; m <= 2000; ++m) {
    CHECK(seen[m] == 1);
  }
}

TEST_CASE("bounded brute force") {
  KBonacciContext ctx(3);
  CHECK(scalar_min_summands_bruteforce(ctx, 51, 10, 4) == 2);
  CHECK(scalar_min_summands_bruteforce(ctx, 0, 10, 4) == 0);
  CHECK(scalar_min_summands_bruteforce(ctx, 7, 10, 4) == 1);
  CHECK_FALSE(scalar_min_summands_bruteforce(ctx, 51, 10, 1).has_value());
}

TEST_CASE("greedy uses the fewest summands") {
  KBonacciContext ctx(3);
  for (long m = 1; m <= 500; ++m) {
    const int g = static_cast<int>(greedy_decompose(ctx, m).indices.size());
    CHECK(scalar_min_summands_bruteforce(ctx, m, 14, g) == g);
  }
}
