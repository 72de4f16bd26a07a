#include <doctest.h>

#include <random>
#include <set>

#include "kzeck/errors.hpp"
#include "kzeck/representations.hpp"
#include "kzeck/statistics.hpp"
#include "oracles.hpp"

using namespace kzeck;

TEST_CASE("IndexSet construction") {
  const IndexSet s{7, 1, 4, 3};
  CHECK(s.indices() == std::vector<long>{1, 3, 4, 7});
  CHECK(s.to_string() == "{1,3,4,7}");
  CHECK(IndexSet{}.to_string() == "{}");
  CHECK_THROWS_AS(IndexSet({1, 1}), ValidationError);
  CHECK_THROWS_AS(IndexSet({0, 2}), ValidationError);
  CHECK(nlohmann::json(s).dump() == "[1,3,4,7]");
  CHECK(nlohmann::json::parse("[4,1]").get<IndexSet>() == IndexSet{1, 4});
}

TEST_CASE("is_satisfying") {
  CHECK(is_satisfying(IndexSet{1, 3, 4, 7}, 3));
  CHECK_FALSE(is_satisfying(IndexSet{1, 2, 3}, 3));
  CHECK(is_satisfying(IndexSet{}, 3));
  CHECK(is_satisfying(IndexSet{1, 2, 3}, 4));
  CHECK_FALSE(is_satisfying(IndexSet{5, 6, 7, 8}, 4));
}

TEST_CASE("evaluate_vector") {
  KBonacciContext ctx(3);
  CHECK(evaluate_vector(ctx, IndexSet{1, 3, 4, 7}) == VecZ{7, 0});
  CHECK(evaluate_vector(ctx, IndexSet{}) == VecZ{0, 0});
  CHECK(evaluate_vector(ctx, IndexSet{2, 3, 6, 7}) == VecZ{2, -2});
}

TEST_CASE("max_index_J") {
  CHECK(max_index_J(IndexSet{1, 3, 4, 7}) == 7);
  CHECK(max_index_J(IndexSet{}) == 0);
  CHECK(max_index_J(IndexSet{2}) == 2);
  KBonacciContext ctx(3);
  CHECK(evaluate_vector(ctx, IndexSet{2}) == VecZ{0, 1});
}

TEST_CASE("project_Sn examples") {
  KBonacciContext ctx(3);
  CHECK(project_Sn(ctx, VecZ{2, -2}, 19) == 17808);
  CHECK(project_Sn(ctx, VecZ{3, 0}, 9) == 51);
  CHECK(project_Sn(ctx, VecZ{0, 0}, 9) == 0);
  CHECK_THROWS_AS(project_Sn(ctx, VecZ{1, 0, 0}, 9), DimensionMismatch);
}

TEST_CASE("f and its inverse") {
  KBonacciContext ctx(3);
  CHECK(sr_to_integer_f(ctx, IndexSet{}) == 0);
  CHECK(sr_to_integer_f(ctx, IndexSet{1}) == 1);
  CHECK(sr_to_integer_f(ctx, IndexSet{1, 3, 4, 7}) == 56);
  CHECK(integer_to_sr_f_inverse(ctx, 0) == IndexSet{});
  CHECK(integer_to_sr_f_inverse(ctx, 56) == IndexSet{1, 3, 4, 7});
  CHECK(integer_to_sr_f_inverse(ctx, 1) == IndexSet{1});
  CHECK_THROWS_AS(sr_to_integer_f(ctx, IndexSet{1, 2, 3}), NotSatisfying);
}

TEST_CASE("f round trip over all satisfying sets") {
  for (int k = 3; k <= 4; ++k) {
    KBonacciContext ctx(k);
    for (std::uint64_t mask = 0; mask < (1U << 12); ++mask) {
      if (oracle::has_run(mask, k)) continue;
      const IndexSet s(oracle::mask_indices(mask));
      CHECK(integer_to_sr_f_inverse(ctx, sr_to_integer_f(ctx, s)) == s);
    }
  }
}

TEST_CASE("f is a bijection onto an initial segment") {
  // Satisfying sets with depths <= n map onto [0, x_{n+2}).
  KBonacciContext ctx(3);
  const int n = 12;
  std::set<BigInt> image;
  for (std::uint64_t mask = 0; mask < (1U << n); ++mask) {
    if (oracle::has_run(mask, 3)) continue;
    image.insert(sr_to_integer_f(ctx, IndexSet(oracle::mask_indices(mask))));
  }
  CHECK(BigInt(static_cast<unsigned long>(image.size())) == ctx.number(n + 2));
  CHECK(*image.rbegin() + 1 == ctx.number(n + 2));
}

TEST_CASE("projection is linear") {
  std::mt19937_64 rng(7);
  for (int k = 3; k <= 4; ++k) {
    KBonacciContext ctx(k);
    for (int trial = 0; trial < 300; ++trial) {
      const long n = std::uniform_int_distribution<long>(k, 25)(rng);
      std::uint64_t mask;
      do {
        mask = rng() & ((std::uint64_t{1} << (n - 1)) - 1);
      } while (oracle::has_run(mask, k));
      const IndexSet s(oracle::mask_indices(mask));
      BigInt expected = 0;
      for (long i : s.indices()) expected += ctx.number(n - i);
      mpz_fdiv_r(expected.get_mpz_t(), expected.get_mpz_t(), ctx.number(n).get_mpz_t());
      CHECK(project_Sn(ctx, evaluate_vector(ctx, s), n) == expected);
    }
  }
}

TEST_CASE("projection bijects D_{n-2} onto [0, x_n)") {
  // With depths <= n-2 the image is all of [0, x_n), each value once.
  KBonacciContext ctx(3);
  const long n = 10;
  std::set<BigInt> image;
  long count = 0;
  for (std::uint64_t mask = 0; mask < (1U << (n - 2)); ++mask) {
    if (oracle::has_run(mask, 3)) continue;
    ++count;
    image.insert(project_Sn(ctx, evaluate_vector(ctx, IndexSet(oracle::mask_indices(mask))), n));
  }
  CHECK(static_cast<long>(image.size()) == count);
  CHECK(BigInt(count) == ctx.number(n));

  // Allowing depth n-1 as well gives more sets than residues mod x_n.
  long wider = 0;
  for (std::uint64_t mask = 0; mask < (1U << (n - 1)); ++mask) wider += !oracle::has_run(mask, 3);
  CHECK(BigInt(wider) > ctx.number(n));
}

TEST_CASE("layer cardinalities") {
  for (int k = 3; k <= 4; ++k) {
    KBonacciContext ctx(k);
    const int top = k == 3 ? 20 : 14;
    for (int n = 1; n <= top; ++n) {
      std::uint64_t count = 0;
      for_each_layer_word(k, n, [&](std::uint32_t) { ++count; });
      CHECK(BigInt(static_cast<unsigned long>(count)) == ctx.number(n + 2) - ctx.number(n + 1));
    }
  }
}

TEST_CASE("CoefficientVector") {
  CoefficientVector c{{1, 2}, {4, 1}};
  CHECK(c.get(1) == 2);
  CHECK(c.get(2) == 0);
  CHECK(c.total() == 3);
  c.add(1, -2);
  CHECK(c.get(1) == 0);
  CHECK(c.coeffs().size() == 1);
  CHECK_THROWS_AS(c.add(4, -2), ValidationError);
  KBonacciContext ctx(3);
  CHECK(evaluate_coefficients(ctx, CoefficientVector{{1, 2}}) == VecZ{2, 0});
  CHECK(is_nsr(CoefficientVector{{1, 2}, {3, 1}}, 3));
  CHECK_FALSE(is_nsr(CoefficientVector{{1, 1}, {2, 1}, {3, 1}}, 3));
}
