#include <gtest/gtest.h>

#include <sstream>

#include "asmax/error.hpp"
#include "asmax/report.hpp"
#include "test_matrix.hpp"

using namespace asmax;

TEST(Report, SpecRoundTrip) {
  for (const auto& ns : fixtures::curve_matrix()) {
    const json j = to_json(ns.spec);
    EXPECT_EQ(canonical(spec_from_json(j)), canonical(ns.spec)) << ns.name;
  }
  const auto s = spec_from_json(json::parse(R"({"p0":3,"n":2,"R":[0,"g^2",[1,2]],"zeta":null})"));
  EXPECT_EQ(s.R[1].kind, CoeffSpec::Kind::GeneratorPower);
  EXPECT_EQ(s.R[2].coords, (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(s.s, 1);
  EXPECT_EQ(s.r, 1);
}

TEST(Report, SpecRejections) {
  for (const char* bad : {R"({"p0":3})", R"({"p0":3,"R":[]})", R"({"p0":3,"R":["h^2"]})", R"({"p0":3,"R":[1],"x":1})",
                          R"({"p0":-3,"R":[1]})", R"({"p0":3,"R":[1.5]})", R"([1,2])"}) {
    try {
      spec_from_json(json::parse(bad));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidSpec) << bad;
    }
  }
}

TEST(Report, ConfigCarriesVersion) {
  RunConfig cfg;
  const json j = to_json(cfg);
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["cap"], cfg.cap);
  EXPECT_TRUE(j["cache"].is_null());
}

TEST(Report, TsvHeader) {
  VerdictRow row;
  row.k = 1;
  row.degree = 6;
  row.verdict = Verdict::Maximal;
  row.evidence = Evidence::Both;
  row.count = mpz_class(892);
  row.bound_hi = 892;
  row.bound_lo = 568;
  std::ostringstream os;
  write_tsv(os, {row});
  EXPECT_EQ(os.str(), "k\tverdict\tevidence\tcount\tbound_hi\tbound_lo\n1\tMaximal\tboth\t892\t892\t568\n");
}

TEST(Report, Reproducible) {
  const auto spec = fixtures::curve_matrix().front().spec;
  CurveContext a(resolve(spec), RunConfig{}), b(resolve(spec), RunConfig{});
  EXPECT_EQ(to_json(*a.formula()).dump(), to_json(*b.formula()).dump());
  const auto ra = curve_criteria(a), rb = curve_criteria(b);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) EXPECT_EQ(to_json(ra[i]).dump(), to_json(rb[i]).dump());
}
