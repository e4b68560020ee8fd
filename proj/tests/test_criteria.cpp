#include <gtest/gtest.h>

#include "asmax/criteria.hpp"
#include "asmax/error.hpp"
#include "asmax/numtheory.hpp"
#include "test_matrix.hpp"

using namespace asmax;

namespace {

RunConfig small_cfg() {
  RunConfig cfg;
  cfg.cap = 1'000'000;
  return cfg;
}

const PredictionItem* at(const CriterionReport& r, int degree) {
  for (const auto& p : r.predictions)
    if (p.degree == degree) return &p;
  return nullptr;
}

}  // namespace

TEST(Criteria, Family214SevenThree) {
  const Family214 fam = build_family_214(7, 1, 3, {1});
  EXPECT_EQ(fam.g, (std::vector<Coeff>{1, 1, 1}));
  EXPECT_EQ(fam.k, (std::vector<int>{1}));
  CurveContext ctx(resolve(fam.spec), small_cfg());
  const auto rep = thm_214(fam, ctx);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.hypotheses_met);
  ASSERT_NE(at(rep, 6), nullptr);
  EXPECT_EQ(at(rep, 6)->verdict, Prediction::Maximal);
  EXPECT_EQ(at(rep, 6)->oracle, Verdict::Maximal);
  EXPECT_EQ(at(rep, 3)->verdict, Prediction::Neither);
  EXPECT_EQ(rep.extra["count_F_{7^6}"], 132056);
}

TEST(Criteria, Family214FiveFour) {
  const Family214 fam = build_family_214(5, 1, 4, {0});
  CurveContext ctx(resolve(fam.spec), small_cfg());
  const auto rep = thm_214(fam, ctx);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.extra["M"], nlohmann::json({2}));
  EXPECT_EQ(at(rep, 4)->verdict, Prediction::Minimal);
  EXPECT_EQ(at(rep, 4)->oracle, Verdict::Minimal);
  EXPECT_EQ(rep.extra["count_F_{5^4}"], 126);
}

TEST(Criteria, Family214Grid) {
  // M-set criterion against the condition on every admissible small instance
  int checked = 0;
  for (std::uint32_t p0 : {3u, 5u, 7u, 11u, 13u}) {
    for (int n = 2; n <= 6; ++n) {
      if ((p0 - 1) % static_cast<std::uint32_t>(n)) continue;
      for (int e = 1; 2 * e < n; ++e) {
        const std::uint64_t total = *nt::checked_pow(p0, static_cast<unsigned>(e));
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          std::vector<std::int64_t> c(static_cast<std::size_t>(e));
          std::uint64_t t = idx;
          for (auto& v : c) {
            v = static_cast<std::int64_t>(t % p0);
            t /= p0;
          }
          Family214 fam;
          try {
            fam = build_family_214(p0, 1, n, c);
          } catch (const Error&) {
            continue;
          }
          RunConfig cfg = small_cfg();
          cfg.cap = 200'000;
          CurveContext ctx(resolve(fam.spec), cfg);
          const auto rep = thm_214(fam, ctx);
          EXPECT_TRUE(rep.ok()) << p0 << " " << n << " " << nlohmann::json(c).dump();
          ++checked;
        }
      }
    }
  }
  EXPECT_GE(checked, 8);
}

TEST(Criteria, Family214Errors) {
  try {
    build_family_214(7, 1, 4, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadCongruence);
  }
  try {
    build_family_214(7, 1, 3, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDividing);
  }
}

TEST(Criteria, PowerCoefficientGrid) {
  const FieldPtr K = make_field(3, 2);
  int maximal = 0;
  for (std::uint64_t i = 1; i < K->order(); ++i) {
    const FFElem a = K->from_index(i);
    const auto v = K->to_vector(a);
    CurveSpec sp = fixtures::make_spec(3, 1, 2, {fixtures::co(0), CoeffSpec::vector({v[0], v[1]})});
    CurveContext ctx(resolve(sp), small_cfg());
    const auto pp = prop_pp(ctx);
    EXPECT_TRUE(pp.ok());
    const bool coeff = K->is_zero(K->add(K->pow(a, 3), a));
    EXPECT_EQ(pp.extra["coefficient_condition"], coeff);
    EXPECT_EQ(pp.extra["trace_identity"], coeff);
    const auto cnt = ctx.count(2);
    ASSERT_TRUE(cnt.has_value());
    if (coeff) {
      ++maximal;
      EXPECT_EQ(cnt->projective, 28u);
    }
    sp.r = 2;
    CurveContext ctx2(resolve(sp), small_cfg());
    const auto c1 = prop_c1(ctx2);
    EXPECT_TRUE(c1.ok());
    EXPECT_NE(ctx2.oracle_verdict(2), Verdict::Maximal);
  }
  EXPECT_EQ(maximal, 2);
}

TEST(Criteria, LcCharacteristicThree) {
  RunConfig cfg = small_cfg();
  cfg.cap = 2'000'000;
  cfg.kmax = 18;
  const auto rep = thm_lc(3, 1, cfg);
  EXPECT_TRUE(rep.ok());
  for (const auto& p : rep.predictions) {
    ASSERT_TRUE(p.formula.has_value());
    const bool max = p.degree == 6 || p.degree == 18;
    EXPECT_EQ(*p.formula == Verdict::Maximal, max) << p.degree;
    if (p.degree == 12) EXPECT_EQ(*p.formula, Verdict::Minimal);
  }
}

TEST(Criteria, TwistFamilies) {
  const RunConfig cfg = small_cfg();
  EXPECT_TRUE(thm_mp(TwistParams{3, 1, 1}, cfg).ok());
  EXPECT_TRUE(thm_mp(TwistParams{5, 1, 1}, cfg).ok());
  EXPECT_TRUE(cor_ccc(TwistParams{5, 1, 1}, cfg).ok());
  for (std::uint32_t p0 : {3u, 5u, 11u}) EXPECT_TRUE(cor_minus2(p0, 1, cfg).ok()) << p0;
  EXPECT_THROW(build_twist(TwistParams{5, 1, 4}), Error);
  EXPECT_THROW(build_twist(TwistParams{5, 1, 0}), Error);
}

TEST(Criteria, CharThree) {
  const auto rep = cor_char3(small_cfg());
  EXPECT_TRUE(rep.ok());
  bool saw = false;
  for (const auto& p : rep.predictions)
    if (p.degree == 4 && p.verdict == Prediction::Maximal) {
      saw = true;
      EXPECT_EQ(p.oracle, Verdict::Maximal);
    }
  EXPECT_TRUE(saw);
}

TEST(Criteria, NeverMaximalAtFive) {
  RunConfig cfg = small_cfg();
  cfg.kmax = 8;
  const auto rep = cor_lcc2(5, 4, cfg);
  EXPECT_TRUE(rep.ok());
  for (const auto& p : rep.predictions) {
    if (p.oracle) EXPECT_NE(*p.oracle, Verdict::Maximal);
  }
  EXPECT_TRUE(rep.extra["lcc"].contains("obstruction"));
}

TEST(Criteria, CurveCriteriaOnMatrix) {
  for (const auto& ns : fixtures::curve_matrix()) {
    CurveContext ctx(resolve(ns.spec), small_cfg());
    for (const auto& r : curve_criteria(ctx)) EXPECT_TRUE(r.ok()) << ns.name << " " << r.id;
  }
}
