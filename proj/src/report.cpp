#include "asmax/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "asmax/error.hpp"

namespace asmax {

namespace {

std::uint64_t u64(const json& j, const char* key) {
  require(j.contains(key) && j[key].is_number_integer() && j[key].get<std::int64_t>() >= 0, Errc::InvalidSpec,
          std::string("expected a non-negative integer for '") + key + "'");
  return j[key].get<std::uint64_t>();
}

CoeffSpec coeff_from_json(const json& v) {
  if (v.is_number_integer()) return CoeffSpec::integer(v.get<std::int64_t>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    require(s.rfind("g^", 0) == 0 && s.size() > 2, Errc::InvalidSpec, "coefficient string must be g^k, got " + s);
    std::size_t used = 0;
    std::int64_t k = 0;
    try {
      k = std::stoll(s.substr(2), &used);
    } catch (const std::exception&) {
      fail(Errc::InvalidSpec, "bad exponent in " + s);
    }
    require(used == s.size() - 2, Errc::InvalidSpec, "bad exponent in " + s);
    return CoeffSpec::gen_pow(k);
  }
  if (v.is_array()) {
    std::vector<std::int64_t> c;
    for (const auto& x : v) {
      require(x.is_number_integer(), Errc::InvalidSpec, "coordinate vectors hold integers");
      c.push_back(x.get<std::int64_t>());
    }
    return CoeffSpec::vector(std::move(c));
  }
  fail(Errc::InvalidSpec, "coefficient must be an integer, \"g^k\" or a coordinate list");
}

json coeff_to_json(const CoeffSpec& c) {
  switch (c.kind) {
    case CoeffSpec::Kind::Integer:
      return c.value;
    case CoeffSpec::Kind::GeneratorPower:
      return "g^" + std::to_string(c.value);
    case CoeffSpec::Kind::Vector:
      return c.coords;
  }
  return nullptr;
}

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json opt_verdict(const std::optional<Verdict>& v) { return v ? json(verdict_name(*v)) : json(nullptr); }

}  // namespace

json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json to_json(const CountResult& r) {
  json j{{"degree", r.degree}, {"p0", r.p0},           {"Q", r.Q},
         {"affine", r.affine}, {"projective", r.projective}, {"genus", r.genus}};
  j["weil_slack"] = r.weil_slack ? json(r.weil_slack->get_str()) : json(nullptr);
  return j;
}

CountResult count_result_from_json(const json& j) {
  CountResult r;
  r.degree = j.at("degree").get<int>();
  r.p0 = j.at("p0").get<std::uint32_t>();
  r.Q = j.at("Q").get<std::uint64_t>();
  r.affine = j.at("affine").get<std::uint64_t>();
  r.projective = j.at("projective").get<std::uint64_t>();
  r.genus = j.at("genus").get<std::uint64_t>();
  if (j.contains("weil_slack") && j["weil_slack"].is_string()) r.weil_slack = mpz_class(j["weil_slack"].get<std::string>());
  return r;
}

CurveSpec spec_from_json(const json& j) {
  require(j.is_object(), Errc::InvalidSpec, "curve spec must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    require(k == "p0" || k == "s" || k == "n" || k == "R" || k == "r" || k == "zeta", Errc::InvalidSpec,
            "unknown spec field '" + k + "'");
  }
  CurveSpec s;
  s.p0 = static_cast<std::uint32_t>(u64(j, "p0"));
  s.s = j.contains("s") ? static_cast<int>(u64(j, "s")) : 1;
  s.n = j.contains("n") ? static_cast<int>(u64(j, "n")) : 1;
  s.r = j.contains("r") ? static_cast<int>(u64(j, "r")) : 1;
  require(j.contains("R") && j["R"].is_array() && !j["R"].empty(), Errc::InvalidSpec, "R must be a non-empty list");
  for (const auto& c : j["R"]) s.R.push_back(coeff_from_json(c));
  if (j.contains("zeta") && !j["zeta"].is_null()) {
    const auto& z = j["zeta"];
    require(z.is_object() && z.contains("minpoly") && z["minpoly"].is_array(), Errc::InvalidSpec,
            "zeta needs a minpoly list");
    ZetaSpec zs;
    zs.minpoly = z["minpoly"].get<std::vector<std::int64_t>>();
    zs.which_root = z.contains("which_root") ? z["which_root"].get<int>() : 0;
    s.zeta = zs;
  }
  return s;
}

json to_json(const CurveSpec& spec) {
  json R = json::array();
  for (const auto& c : spec.R) R.push_back(coeff_to_json(c));
  json j{{"p0", spec.p0}, {"s", spec.s}, {"n", spec.n}, {"R", R}, {"r", spec.r}};
  if (spec.zeta)
    j["zeta"] = json{{"minpoly", spec.zeta->minpoly}, {"which_root", spec.zeta->which_root}};
  else
    j["zeta"] = nullptr;
  return j;
}

std::string canonical(const CurveSpec& spec) { return to_json(spec).dump(); }

std::string canonical(const DOCurve& c) {
  json terms = json::array();
  for (const auto& t : c.terms) terms.push_back({elem_json(t.coef), t.u, t.v});
  return json{{"field", field_json(*c.field)}, {"as", c.as_exponent}, {"terms", terms}}.dump();
}

json field_json(const FieldCtx& F) {
  return json{{"p0", F.p0()}, {"degree", F.degree()}, {"modulus", F.modulus()}};
}

json elem_json(const FFElem& x) {
  const int m = x.field ? x.field->degree() : 0;
  return std::vector<Coeff>(x.c.begin(), x.c.begin() + m);
}

json to_json(const LinPoly& L) {
  json a = json::array();
  for (const auto& c : L.a) a.push_back(elem_json(c));
  return json{{"s", L.s}, {"coeffs", a}};
}

json to_json(const AbelianData& d) {
  json basis = json::array();
  for (const auto& b : d.basis) basis.push_back(elem_json(b));
  json j{{"field", field_json(*d.field)},
         {"path", d.path},
         {"dim_over_p0", d.dim()},
         {"basis", basis},
         {"F_A", to_json(d.F_A)},
         {"a", to_json(d.a)},
         {"c_A", elem_json(d.c_A)},
         {"c_A_product_checked", d.c_A_product_checked},
         {"A_in_Fq", d.in_Fq},
         {"A_in_Fq2", d.A_in_Fq2}};
  if (!d.exponents.empty()) j["exponents"] = d.exponents;
  return j;
}

json to_json(const EigenvalueSet& eig) {
  json taus = json::array();
  for (const auto& [t, mult] : distinct_taus(eig)) {
    json coeffs = json::array();
    for (const auto& c : t.coeffs()) coeffs.push_back(mpz_json(c));
    taus.push_back({{"tau", t.to_string()}, {"coeffs", coeffs}, {"multiplicity", mult}});
  }
  json ab = json::array();
  for (const auto& a : eig.abelian) ab.push_back(to_json(a));
  return json{{"q", eig.q},         {"f0", eig.f0},     {"p0", eig.p0},
              {"genus", eig.genus}, {"count", eig.list.size()}, {"gauss_direct", eig.gauss_direct},
              {"distinct", taus},   {"abelian", ab}};
}

json to_json(const CriterionReport& r) {
  json checks = json::array();
  for (const auto& c : r.checklist) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  json preds = json::array();
  for (const auto& p : r.predictions)
    preds.push_back({{"prediction", prediction_name(p.verdict)},
                     {"degree", p.degree},
                     {"field", p.field},
                     {"formula", opt_verdict(p.formula)},
                     {"oracle", opt_verdict(p.oracle)},
                     {"formula_ok", opt_bool(p.formula_ok)},
                     {"oracle_ok", opt_bool(p.oracle_ok)}});
  return json{{"id", r.id},
              {"citation", r.citation},
              {"hypotheses_met", r.hypotheses_met},
              {"checklist", checks},
              {"predictions", preds},
              {"consistent_with_formula", opt_bool(r.consistent_with_formula)},
              {"consistent_with_oracle", opt_bool(r.consistent_with_oracle)},
              {"failed", r.failed},
              {"ok", r.ok()},
              {"notes", r.notes},
              {"extra", r.extra}};
}

json to_json(const RunConfig& cfg) {
  return json{{"version", kVersion},     {"cap", cfg.cap},         {"budget", cfg.budget},
              {"cache", cfg.use_cache ? json(cfg.cache_path) : json(nullptr)},
              {"format", cfg.format},    {"threads", cfg.threads}, {"seed", cfg.seed},
              {"kmax", cfg.kmax},        {"lpoly_cap", cfg.lpoly_cap}};
}

json to_json(const VerdictRow& row) {
  return json{{"k", row.k},
              {"degree", row.degree},
              {"verdict", verdict_name(row.verdict)},
              {"evidence", evidence_name(row.evidence)},
              {"count", row.count ? mpz_json(*row.count) : json(nullptr)},
              {"bound_hi", mpz_json(row.bound_hi)},
              {"bound_lo", mpz_json(row.bound_lo)}};
}

void write_tsv(std::ostream& os, const std::vector<VerdictRow>& rows) {
  os << "k\tverdict\tevidence\tcount\tbound_hi\tbound_lo\n";
  for (const auto& r : rows)
    os << r.k << '\t' << verdict_name(r.verdict) << '\t' << evidence_name(r.evidence) << '\t'
       << (r.count ? r.count->get_str() : std::string("-")) << '\t' << r.bound_hi.get_str() << '\t'
       << r.bound_lo.get_str() << '\n';
}

void write_pretty(std::ostream& os, const std::vector<VerdictRow>& rows) {
  os << std::left << std::setw(5) << "k" << std::setw(10) << "verdict" << std::setw(9) << "evidence" << std::setw(22)
     << "count" << "bounds\n";
  for (const auto& r : rows)
    os << std::setw(5) << r.k << std::setw(10) << verdict_name(r.verdict) << std::setw(9)
       << evidence_name(r.evidence) << std::setw(22) << (r.count ? r.count->get_str() : std::string("-")) << '['
       << r.bound_lo.get_str() << ", " << r.bound_hi.get_str() << "]\n";
}

void write_pretty(std::ostream& os, const CriterionReport& r) {
  os << r.id << "  " << r.citation << "\n";
  for (const auto& c : r.checklist)
    os << "  [" << (c.pass ? "x" : " ") << "] " << c.name << (c.witness.empty() ? "" : "  (" + c.witness + ")")
       << "\n";
  if (!r.hypotheses_met) os << "  hypotheses not met\n";
  for (const auto& p : r.predictions) {
    os << "  " << std::left << std::setw(12) << prediction_name(p.verdict) << std::setw(12) << p.field;
    os << " formula " << (p.formula ? verdict_name(*p.formula) : std::string("-"));
    if (p.formula_ok) os << (*p.formula_ok ? " ok" : " MISMATCH");
    os << "  oracle " << (p.oracle ? verdict_name(*p.oracle) : std::string("-"));
    if (p.oracle_ok) os << (*p.oracle_ok ? " ok" : " MISMATCH");
    os << "\n";
  }
  for (const auto& [k, v] : r.extra.items())
    if (v.is_primitive()) os << "  " << k << " = " << v.dump() << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  os << "  result: " << (r.ok() ? "consistent" : "INCONSISTENT") << "\n";
}

}  // namespace asmax
