#include <gtest/gtest.h>

#include <numeric>

#include <random>

#include "asmax/error.hpp"
#include "asmax/lfunction.hpp"
#include "asmax/linearized.hpp"
#include "test_matrix.hpp"

using namespace asmax;

namespace {

LinPoly random_poly(const FieldCtx& K, int s, int deg, std::mt19937_64& rng) {
  LinPoly L = LinPoly::zero(K, s);
  L.a.resize(static_cast<std::size_t>(deg) + 1, K.zero());
  for (auto& c : L.a) c = K.random(rng);
  if (K.is_zero(L.a.back())) L.a.back() = K.one();
  return L;
}

}  // namespace

TEST(Linearized, Additivity) {
  std::mt19937_64 rng(21);
  const FieldPtr K = make_field(5, 4);
  for (int t = 0; t < 50; ++t) {
    const LinPoly L = random_poly(*K, 1, 3, rng);
    const FFElem x = K->random(rng), y = K->random(rng);
    EXPECT_EQ(eval(L, K->add(x, y)), K->add(eval(L, x), eval(L, y)));
    EXPECT_EQ(eval(L, K->scale(x, 3)), K->scale(eval(L, x), 3));
  }
}

TEST(Linearized, ComposeAndDivide) {
  std::mt19937_64 rng(22);
  for (auto [p0, m, s] : std::vector<std::tuple<std::uint32_t, int, int>>{{3, 6, 1}, {5, 4, 2}, {7, 3, 1}}) {
    const FieldPtr K = make_field(p0, m);
    for (int t = 0; t < 20; ++t) {
      const LinPoly A = random_poly(*K, s, 2, rng), B = random_poly(*K, s, 3, rng);
      const LinPoly AB = ore_compose(A, B);
      const FFElem x = K->random(rng);
      EXPECT_EQ(eval(AB, x), eval(A, eval(B, x)));
      const auto [Q, Rm] = ore_right_divide(AB, B);
      EXPECT_TRUE(Rm.is_zero());
      EXPECT_EQ(Q, A);
      const LinPoly N = random_poly(*K, s, 5, rng);
      const auto [Q2, R2] = ore_right_divide(N, B);
      EXPECT_LT(R2.degree(), B.degree());
      for (int k = 0; k < 5; ++k) {
        const FFElem y = K->random(rng);
        EXPECT_EQ(eval(N, y), K->add(eval(Q2, eval(B, y)), eval(R2, y)));
      }
    }
  }
}

TEST(Linearized, CocycleIdentity) {
  // f_R(x,y)^p - f_R(x,y) = -x^{p^e} E_R(y) + x R(y) + y R(x)
  std::mt19937_64 rng(23);
  for (const auto& ns : fixtures::curve_matrix()) {
    const ResolvedCurve c = resolve(ns.spec);
    const LinPoly& R = c.R;
    const FieldCtx& K = *R.field;
    const LinPoly E = e_r(R);
    const int e = R.degree();
    for (int t = 0; t < 1000; ++t) {
      const FFElem x = K.random(rng), y = K.random(rng);
      const FFElem f = f_r(R, x, y);
      const FFElem lhs = K.sub(K.frobenius(f, R.s), f);
      const FFElem rhs = K.add(K.sub(K.mul(x, eval(R, y)), K.mul(K.frobenius(x, static_cast<std::int64_t>(R.s) * e), eval(E, y))),
                               K.mul(y, eval(R, x)));
      ASSERT_EQ(lhs, rhs) << ns.name;
    }
  }
}

TEST(Linearized, KernelDimension) {
  for (const auto& ns : fixtures::curve_matrix()) {
    const ResolvedCurve c = resolve(ns.spec);
    const LinPoly E = e_r(c.R);
    const int d = splitting_degree(E, 4 * kMaxDegree);
    ASSERT_GT(d, 0) << ns.name;
    const int m = std::lcm(d, c.base->degree());
    if (m > kMaxDegree) continue;
    const FieldPtr L = make_field(c.spec.p0, m);
    const LinPoly EL = L.get() == c.base.get() ? E : embed(E, SubfieldEmbed(c.base, L));
    EXPECT_EQ(kernel(EL).dimension(), 2 * c.e * c.spec.s) << ns.name;
  }
}

TEST(Linearized, SubspacePolynomialRoundTrip) {
  // exhaustive over pairs of F_p-basis vectors, dim <= 2
  for (auto [p0, m, s] : std::vector<std::tuple<std::uint32_t, int, int>>{{3, 2, 1}, {3, 4, 2}, {5, 2, 1}, {7, 2, 1}}) {
    const FieldPtr K = make_field(p0, m);
    const std::uint64_t q = K->order();
    for (std::uint64_t i = 1; i < q; ++i) {
      for (std::uint64_t j = i; j < q; j += (q > 49 ? 7 : 1)) {
        const KernelSpace W = fp_span(*K, s, {K->from_index(i), K->from_index(j)});
        const LinPoly P = subspace_poly(W, s);
        const KernelSpace back = kernel(P);
        ASSERT_EQ(back.dimension(), W.dimension());
        for (const auto& w : W.basis) ASSERT_TRUE(K->is_zero(eval(P, w)));
        EXPECT_EQ(P.lead(), K->one());
      }
    }
  }
}

TEST(Linearized, SplittingAndIntersection) {
  const FieldPtr K = make_field(3, 6);
  // x^{3^2} - x splits over F_9 only
  const LinPoly L = LinPoly::frobenius_minus_identity(*K, 1, 2);
  EXPECT_EQ(splitting_degree(L, 12), 2);
  const KernelSpace W = kernel(L);
  EXPECT_EQ(W.dimension(), 2);
  EXPECT_EQ(intersect_subfield(W, 1).dimension(), 1);
  EXPECT_THROW(splitting_degree(LinPoly::zero(*K, 1), 4), Error);
}
