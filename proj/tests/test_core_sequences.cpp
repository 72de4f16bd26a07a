#include <doctest.h>

#include "kzeck/core_sequences.hpp"
#include "kzeck/errors.hpp"
#include "oracles.hpp"

using namespace kzeck;

TEST_CASE("scalar examples") {
  KBonacciContext ctx(3);
  CHECK(ctx.number(19) == 35890);
  CHECK(ctx.number(0) == 0);
  CHECK(ctx.number(13) == 927);
  CHECK(ctx.number(-1) == 0);
  CHECK_THROWS_AS(ctx.number(-2), IndexOutOfDomain);
}

TEST_CASE("scalars match the naive recurrence") {
  for (int k = 2; k <= 6; ++k) {
    KBonacciContext ctx(k);
    const auto expected = oracle::kbonacci(k, 80);
    for (int n = 0; n <= 80; ++n) CHECK(ctx.number(n) == expected[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("recurrence replay") {
  for (int k = 2; k <= 5; ++k) {
    KBonacciContext ctx(k);
    for (long n = 2; n <= 60; ++n) {
      BigInt s = 0;
      for (long j = 1; j <= k; ++j) s += ctx.number(n - j);
      CHECK(ctx.number(n) == s);
    }
  }
}

TEST_CASE("vector examples") {
  KBonacciContext ctx(3);
  CHECK(ctx.vector(4) == VecZ{2, 0});
  CHECK(ctx.vector(0) == VecZ{0, 0});
  CHECK(ctx.vector(7) == VecZ{5, 1});
  CHECK(ctx.vector(5) == VecZ{-1, 2});
  CHECK_THROWS_AS(ctx.vector(-1), IndexOutOfDomain);
  KBonacciContext two(2);
  CHECK_THROWS_AS(two.vector(1), ValidationError);
}

TEST_CASE("vectors satisfy the forward recurrence") {
  for (int k = 3; k <= 5; ++k) {
    KBonacciContext ctx(k);
    VecZ minus_ones(static_cast<std::size_t>(k - 1));
    for (std::size_t i = 0; i < minus_ones.dim(); ++i) minus_ones[i] = -1;
    CHECK(ctx.vector(k) == minus_ones);
    for (long m = k; m <= 40; ++m) {
      VecZ s(static_cast<std::size_t>(k - 1));
      for (long j = 0; j < k; ++j) s += ctx.vector(m - j);
      CHECK(ctx.vector(m - k) == s);
    }
    const auto naive = oracle::kbonacci_vectors(k, 40);
    for (long m = 0; m <= 40; ++m) {
      for (std::size_t c = 0; c + 1 < static_cast<std::size_t>(k); ++c) {
        CHECK(ctx.vector(m)[c] == static_cast<long>(naive[static_cast<std::size_t>(m)][c]));
      }
    }
  }
}

TEST_CASE("vector norms") {
  auto n = vector_norms(VecZ{2, -2});
  CHECK(n.l1 == 4);
  CHECK(n.linf == 2);
  CHECK(n.l2_squared == 8);
  n = vector_norms(VecZ{0, 0});
  CHECK(n.l1 == 0);
  CHECK(n.linf == 0);
  CHECK(n.l2_squared == 0);
  n = vector_norms(VecZ{5, 1});
  CHECK(n.l1 == 6);
  CHECK(n.linf == 5);
  CHECK(n.l2_squared == 26);
}

TEST_CASE("max_index_at_most") {
  KBonacciContext ctx(3);
  CHECK(ctx.max_index_at_most(35890) == 19);
  CHECK(ctx.max_index_at_most(35889) == 18);
  CHECK(ctx.max_index_at_most(1) == 2);
  CHECK(ctx.max_index_at_most(BigInt("1000000000000000000000000")) > 80);
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(KBonacciContext(1), ValidationError);
  KBonacciContext ctx(3);
  CHECK_THROWS_AS(ctx.check_dim(VecZ{1, 2, 3}), DimensionMismatch);
  CHECK_NOTHROW(ctx.check_dim(VecZ{1, 2}));
}

TEST_CASE("big indices stay exact") {
  KBonacciContext ctx(3);
  const auto naive = oracle::kbonacci(3, 300);
  CHECK(ctx.number(300) == naive[300]);
  CHECK(ctx.number(300) == ctx.number(299) + ctx.number(298) + ctx.number(297));
}
