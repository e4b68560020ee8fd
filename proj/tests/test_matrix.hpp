#pragma once

#include <string>
#include <vector>

#include "asmax/criteria.hpp"

namespace asmax::fixtures {

struct NamedSpec {
  std::string name;
  CurveSpec spec;
};

inline CoeffSpec co(std::int64_t v) { return CoeffSpec::integer(v); }
inline CoeffSpec gp(std::int64_t k) { return CoeffSpec::gen_pow(k); }

inline CurveSpec make_spec(std::uint32_t p0, int s, int n, std::vector<CoeffSpec> R, int r = 1) {
  CurveSpec c;
  c.p0 = p0;
  c.s = s;
  c.n = n;
  c.R = std::move(R);
  c.r = r;
  return c;
}

// Curves across every family the criteria cover; all have the formula path.
inline std::vector<NamedSpec> curve_matrix() {
  std::vector<NamedSpec> m{
      {"lc_p3", make_spec(3, 1, 1, {co(1), co(2)})},
      {"lc_p3_n2", make_spec(3, 1, 2, {co(1), co(2)})},
      {"lc_p3_n3", make_spec(3, 1, 3, {co(1), co(2)})},
      {"lc_p3_n6", make_spec(3, 1, 6, {co(1), co(2)})},
      {"lc_p5_n3", make_spec(5, 1, 3, {co(1), co(2)})},
      {"family_p5_n4", make_spec(5, 1, 4, {co(0), co(2)})},
      {"family_p7_n3", make_spec(7, 1, 3, {co(1), co(2)})},
      {"pp_p3_max", make_spec(3, 1, 2, {co(0), gp(2)})},
      {"p3_gpow", make_spec(3, 1, 1, {gp(1), co(1)})},
      {"p3_n2_mixed", make_spec(3, 1, 2, {co(1), co(1)})},
      {"p3_n4_mono", make_spec(3, 1, 4, {co(0), co(1)})},
      {"p3_n4_e2", make_spec(3, 1, 4, {co(1), co(0), co(1)})},
      {"p3_n6_e2", make_spec(3, 1, 6, {co(0), co(1), co(1)})},
      {"p5_n2_mixed", make_spec(5, 1, 2, {co(1), co(1)})},
      {"p5_n4_mono", make_spec(5, 1, 4, {co(0), co(1)})},
      {"p5_n4_e2", make_spec(5, 1, 4, {co(1), co(0), co(1)})},
      {"p7_n2_mixed", make_spec(7, 1, 2, {co(1), co(1)})},
      {"p7_n4_mono", make_spec(7, 1, 4, {co(0), co(1)})},
      {"p3_n5", make_spec(3, 1, 5, {co(1), co(2)})},
      {"p9_s2", make_spec(3, 2, 1, {co(1), co(2)})},
      {"gen_p3_r2", make_spec(3, 1, 4, {co(1), co(0), co(1)}, 2)},
      {"gen_p5_r2", make_spec(5, 1, 4, {co(1), co(0), co(1)}, 2)},
  };
  CurveSpec c3 = make_spec(3, 1, 1, {co(1), co(2)});
  c3.zeta = ZetaSpec{{2, 0, 1, 0, 1}, 0};
  m.push_back({"char3_twist", c3});
  m.push_back({"twist_p5_a1", build_twist(TwistParams{5, 1, 1}).spec});
  return m;
}

}  // namespace asmax::fixtures
