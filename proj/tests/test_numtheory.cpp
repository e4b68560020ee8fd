#include <gtest/gtest.h>

#include <random>

#include "asmax/fp_matrix.hpp"
#include "asmax/numtheory.hpp"

using namespace asmax;

TEST(NumTheory, PrimesAndFactors) {
  EXPECT_TRUE(nt::is_prime(2));
  EXPECT_TRUE(nt::is_prime(3));
  EXPECT_FALSE(nt::is_prime(1));
  EXPECT_FALSE(nt::is_prime(91));
  EXPECT_TRUE(nt::is_prime(2305843009213693951ULL));
  EXPECT_FALSE(nt::is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_EQ(nt::prime_factors(3 * 3 * 5 * 7 * 7 * 101), (std::vector<std::uint64_t>{3, 5, 7, 101}));
  // 3^40 - 1 needs rho beyond trial division
  const auto f = nt::prime_factors(12157665459056928800ULL);
  std::uint64_t rest = 12157665459056928800ULL;
  for (auto p : f) {
    EXPECT_TRUE(nt::is_prime(p));
    while (rest % p == 0) rest /= p;
  }
  EXPECT_EQ(rest, 1u);
}

TEST(NumTheory, ModularHelpers) {
  EXPECT_EQ(nt::powmod(3, 4, 7), 4u);
  EXPECT_EQ(nt::inv_mod(3, 7), 5u);
  EXPECT_EQ(nt::mult_order_mod(2, 7), 3u);
  EXPECT_EQ(nt::mult_order_mod(3, 7), 6u);
  EXPECT_EQ(nt::gcd(12, 18), 6u);
  EXPECT_EQ(nt::lcm(4, 6), 12u);
  EXPECT_EQ(nt::v2(24), 3);
  EXPECT_EQ(nt::v2(0), 64);
  EXPECT_EQ(nt::log_exact(243, 3), 5);
  EXPECT_FALSE(nt::log_exact(244, 3).has_value());
  EXPECT_EQ(nt::checked_pow(3, 39).value(), 4052555153018976267ULL);
  EXPECT_FALSE(nt::checked_pow(3, 41).has_value());
}

TEST(FpMatrix, NullspaceAndSolve) {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int trial = 0; trial < 20; ++trial) {
      FpMatrix A(p, 4, 6);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 6; ++c) A(r, c) = static_cast<Coeff>(rng() % p);
      const auto ns = A.nullspace();
      EXPECT_EQ(ns.size() + A.rank(), 6u);
      for (const auto& v : ns)
        for (auto x : A.apply(v)) EXPECT_EQ(x, 0u);
      FpVector x(6);
      for (auto& v : x) v = static_cast<Coeff>(rng() % p);
      const FpVector b = A.apply(x);
      const auto sol = A.solve(b);
      ASSERT_TRUE(sol.has_value());
      EXPECT_EQ(A.apply(*sol), b);
      const auto left = A.left_nullspace();
      const FpMatrix At = A.transpose();
      for (const auto& y : left)
        for (auto v : At.apply(y)) EXPECT_EQ(v, 0u);
    }
  }
}

TEST(FpMatrix, InconsistentSystem) {
  FpMatrix A(3, 2, 2);
  A(0, 0) = 1;
  A(1, 0) = 1;
  const FpVector b{1, 2};
  EXPECT_FALSE(A.solve(b).has_value());
}
