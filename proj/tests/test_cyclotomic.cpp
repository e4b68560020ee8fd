#include <gtest/gtest.h>

#include <random>

#include "asmax/cyclotomic.hpp"
#include "asmax/gf.hpp"

using namespace asmax;

namespace {

CycInt random_cyc(std::uint32_t p0, std::mt19937_64& rng) {
  CycInt x(p0);
  for (std::uint32_t t = 0; t < p0; ++t) x += CycInt::zeta_pow(p0, t) * mpz_class(static_cast<long>(rng() % 41) - 20);
  return x;
}

CycInt signed_q(std::uint32_t p0, const FieldCtx& K) {
  // (-1/q) q
  const bool minus = p0 % 4 == 3 && K.degree() % 2 == 1;
  const mpz_class q(static_cast<unsigned long>(K.order()));
  return CycInt::integer(p0, minus ? mpz_class(-q) : q);
}

}  // namespace

TEST(CycInt, RingAxioms) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p0 : {3u, 5u, 7u, 11u}) {
    for (int t = 0; t < 100; ++t) {
      const CycInt a = random_cyc(p0, rng), b = random_cyc(p0, rng), c = random_cyc(p0, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, CycInt(p0));
      EXPECT_EQ(a.pow(3), a * a * a);
    }
  }
}

TEST(CycInt, ZetaRelations) {
  for (std::uint32_t p0 : {3u, 5u, 7u, 11u}) {
    EXPECT_EQ(CycInt::zeta_pow(p0, p0), CycInt::integer(p0, 1));
    EXPECT_EQ(CycInt::zeta_pow(p0, -1), CycInt::zeta_pow(p0, p0 - 1));
    CycInt sum(p0);
    for (std::uint32_t t = 0; t < p0; ++t) sum += CycInt::zeta_pow(p0, t);
    EXPECT_TRUE(sum.is_zero());
    // reduction mod Phi_p0 is idempotent: rebuilding from coefficients changes nothing
    const CycInt z = CycInt::zeta_pow(p0, p0 - 1) * mpz_class(3) + CycInt::integer(p0, 2);
    CycInt rebuilt(p0);
    for (std::size_t i = 0; i < z.coeffs().size(); ++i)
      rebuilt += CycInt::zeta_pow(p0, static_cast<std::int64_t>(i)) * z.coeffs()[i];
    EXPECT_EQ(rebuilt, z);
    EXPECT_TRUE(CycInt::integer(p0, 5).is_rational());
    EXPECT_FALSE(CycInt::zeta_pow(p0, 1).is_rational());
  }
}

TEST(CycInt, AdditiveCharacter) {
  std::mt19937_64 rng(12);
  for (auto [p0, m] : std::vector<std::pair<std::uint32_t, int>>{{3, 2}, {5, 2}, {7, 3}}) {
    const FieldPtr K = make_field(p0, m);
    const CharSpec chr{K->generator()};
    for (int t = 0; t < 50; ++t) {
      const FFElem x = K->random(rng), y = K->random(rng);
      EXPECT_EQ(psi_q_eval(chr, K->add(x, y)), psi_q_eval(chr, x) * psi_q_eval(chr, y));
    }
  }
}

TEST(GaussSum, SquareLaw) {
  for (std::uint32_t p0 : {3u, 5u, 7u, 11u}) {
    for (int f0 = 1; f0 <= 4; ++f0) {
      const FieldPtr K = make_field(p0, f0);
      const GaussSum g = gauss_sum(CharSpec{K->one()});
      EXPECT_EQ(g.value * g.value, signed_q(p0, *K)) << "p0=" << p0 << " f0=" << f0;
      if (f0 % 2 == 0) {
        EXPECT_EQ(g.value, hasse_davenport_value(p0, f0)) << "p0=" << p0 << " f0=" << f0;
      }
    }
  }
}

TEST(GaussSum, LambdaDependence) {
  // G(psi_lambda) = (lambda / q) G(psi_1), exhaustive for q <= 81
  for (auto [p0, m] : std::vector<std::pair<std::uint32_t, int>>{{3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
    const FieldPtr K = make_field(p0, m);
    const CycInt g1 = gauss_sum(CharSpec{K->one()}).value;
    for (std::uint64_t i = 1; i < K->order(); ++i) {
      const FFElem lam = K->from_index(i);
      const CycInt gl = gauss_sum(CharSpec{lam}).value;
      EXPECT_EQ(gl, K->legendre(lam) > 0 ? g1 : -g1);
    }
  }
}

TEST(GaussSum, LiftedMatchesDirect) {
  const FieldPtr K = make_field(3, 5);
  for (std::uint64_t i : {1u, 2u, 7u}) {
    const CharSpec chr{K->from_index(i)};
    const GaussSum direct = gauss_sum(chr);
    const GaussSum lifted = gauss_sum(chr, 1);
    EXPECT_TRUE(direct.direct);
    EXPECT_FALSE(lifted.direct);
    EXPECT_EQ(direct.value, lifted.value);
  }
}

TEST(CycInt, PowerSums) {
  const std::uint32_t p0 = 5;
  const std::vector<CycInt> taus{CycInt::zeta_pow(p0, 1), CycInt::zeta_pow(p0, 4)};
  EXPECT_EQ(cyc_pow_sum(taus, 5), CycInt::integer(p0, 2));
  EXPECT_EQ(cyc_pow_sum(taus, 1), CycInt::zeta_pow(p0, 1) + CycInt::zeta_pow(p0, 4));
}
