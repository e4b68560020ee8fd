#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "asmax/criteria.hpp"
#include "asmax/numtheory.hpp"
#include "asmax/heisenberg.hpp"
#include "asmax/lfunction.hpp"
#include "test_matrix.hpp"

using namespace asmax;

namespace {

struct VR {
  FieldPtr field;
  LinPoly R;
  std::vector<FFElem> basis;  // over F_{p0}
};

// V_R inside its splitting field, with R carried along.
std::optional<VR> v_r(const ResolvedCurve& c) {
  const LinPoly E = e_r(c.R);
  const int d = std::lcm(splitting_degree(E, 4 * kMaxDegree), c.base->degree());
  if (d <= 0 || d > 24) return std::nullopt;
  VR out;
  out.field = make_field(c.spec.p0, d);
  if (out.field.get() == c.base.get()) {
    out.R = c.R;
  } else {
    out.R = embed(c.R, SubfieldEmbed(c.base, out.field));
  }
  out.basis = kernel(e_r(out.R)).basis;
  return out;
}

FFElem combo(const FieldCtx& K, const std::vector<FFElem>& basis, std::mt19937_64& rng) {
  FFElem acc = K.zero();
  for (const auto& b : basis) acc = K.add(acc, K.scale(b, static_cast<std::uint32_t>(rng() % K.p0())));
  return acc;
}

}  // namespace

TEST(Heisenberg, SymplecticFormOnVR) {
  std::mt19937_64 rng(31);
  for (const auto& ns : fixtures::curve_matrix()) {
    const auto v = v_r(resolve(ns.spec));
    if (!v) continue;
    const FieldCtx& K = *v->field;
    const int s = ns.spec.s;
    const std::size_t n = v->basis.size();
    FpMatrix gram(K.p0(), n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const FFElem w = symplectic_form(v->R, v->basis[i], v->basis[j]);
        ASSERT_TRUE(K.in_subfield(w, s)) << ns.name;
        gram(i, j) = K.relative_trace(w, s, 1).c[0];
      }
    EXPECT_EQ(gram.rank(), n) << ns.name << ": omega degenerate";
    for (int t = 0; t < 50; ++t) {
      const FFElem x = combo(K, v->basis, rng);
      EXPECT_TRUE(K.is_zero(symplectic_form(v->R, x, x))) << ns.name;
    }
  }
}

TEST(Heisenberg, GroupLawAssociative) {
  std::mt19937_64 rng(32);
  for (const auto& ns : fixtures::curve_matrix()) {
    const auto v = v_r(resolve(ns.spec));
    if (!v) continue;
    const FieldCtx& K = *v->field;
    for (int t = 0; t < 100; ++t) {
      HeisenbergElem a{combo(K, v->basis, rng), K.random(rng)};
      HeisenbergElem b{combo(K, v->basis, rng), K.random(rng)};
      HeisenbergElem c{combo(K, v->basis, rng), K.random(rng)};
      const auto l = heis_mul(v->R, heis_mul(v->R, a, b), c);
      const auto r = heis_mul(v->R, a, heis_mul(v->R, b, c));
      ASSERT_EQ(l.v, r.v);
      ASSERT_EQ(l.t, r.t) << ns.name;
    }
  }
}

TEST(Heisenberg, AbelianSubgroupInvariants) {
  std::mt19937_64 rng(33);
  for (const auto& ns : fixtures::curve_matrix()) {
    CurveContext ctx(resolve(ns.spec), RunConfig{});
    const EigenvalueSet* eig = ctx.formula();
    ASSERT_NE(eig, nullptr) << ns.name << ": " << ctx.reason();
    const auto& c = ctx.curve();
    for (const AbelianData& d : eig->abelian) {
      const FieldCtx& K = *d.field;
      EXPECT_EQ(d.dim(), c.e * c.spec.s) << ns.name;
      const LinPoly E = e_r(d.R);
      for (const auto& a : d.basis) EXPECT_TRUE(K.is_zero(eval(E, a))) << ns.name;
      for (const auto& a : d.basis)
        for (const auto& b : d.basis) EXPECT_TRUE(K.is_zero(symplectic_form(d.R, a, b))) << ns.name;
      for (const auto& coef : d.F_A.a) EXPECT_TRUE(K.in_subfield(coef, d.s * d.n)) << ns.name;
      const LinPoly xq = LinPoly::frobenius_minus_identity(K, d.s, d.n);
      EXPECT_EQ(ore_compose(d.a, d.F_A), xq) << ns.name;
      EXPECT_EQ(ore_compose(d.F_A, d.a), xq) << ns.name;
      bool checked = false;
      EXPECT_EQ(c_a(d.R, d.F_A, d.basis, &checked), d.c_A) << ns.name;
      if (K.order() <= (1u << 20)) EXPECT_TRUE(checked) << ns.name;
      EXPECT_EQ(d.character_count(), *nt::checked_pow(c.p, static_cast<unsigned>(c.e)));
      // the section x -> (x, f_R(x,x)/2) is a homomorphism on Abar
      for (int t = 0; t < 30; ++t) {
        const FFElem x = combo(K, d.basis, rng), y = combo(K, d.basis, rng);
        const auto prod = heis_mul(d.R, heis_section(d.R, x), heis_section(d.R, y));
        const auto sum = heis_section(d.R, K.add(x, y));
        EXPECT_EQ(prod.v, sum.v);
        EXPECT_EQ(prod.t, sum.t) << ns.name;
      }
    }
    EXPECT_EQ(eig->list.size(), 2 * c.genus) << ns.name;
  }
}

TEST(Heisenberg, ConditionForms) {
  for (const auto& ns : fixtures::curve_matrix()) {
    CurveContext ctx(resolve(ns.spec), RunConfig{});
    const EigenvalueSet* eig = ctx.formula();
    ASSERT_NE(eig, nullptr);
    const AbelianData& d = eig->abelian.front();
    if (!d.in_Fq || ns.spec.r != 1) continue;
    const AstResult a = condition_ast(d, *eig);
    EXPECT_EQ(a.direct, a.character) << ns.name;
  }
}

TEST(Heisenberg, CharacterEta) {
  // psi_q(eta x) = chi(a(x)) for every x, exhaustively on small fields
  for (const auto& ns : fixtures::curve_matrix()) {
    CurveContext ctx(resolve(ns.spec), RunConfig{});
    const EigenvalueSet* eig = ctx.formula();
    ASSERT_NE(eig, nullptr);
    const AbelianData& d = eig->abelian.front();
    const FieldCtx& K = *d.field;
    if (!d.in_Fq || K.order() > 6561 || ns.spec.r != 1) continue;
    const FFElem lambda = K.one();
    for (std::uint64_t idx = 0; idx < std::min<std::uint64_t>(d.character_count(), 9); ++idx) {
      const auto chi = character_from_index(d, idx);
      const FFElem eta = eta_of_char(d, chi, lambda);
      for (std::uint64_t i = 0; i < K.order(); ++i) {
        const FFElem x = K.from_index(i);
        ASSERT_EQ(K.prime_trace(K.mul(eta, x)), xi_prime_exponent(d, chi, x)) << ns.name;
      }
    }
  }
}
