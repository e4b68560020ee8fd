#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asmax/config.hpp"
#include "asmax/oracle.hpp"

namespace asmax {

// Lazily evaluated formula and oracle data for one curve.
class CurveContext {
 public:
  CurveContext(ResolvedCurve c, RunConfig cfg, std::shared_ptr<ResultCache> cache = nullptr);

  const ResolvedCurve& curve() const { return curve_; }
  const RunConfig& config() const { return cfg_; }
  const DOCurve& do_curve() const { return do_; }

  // Null when the formula path is unavailable; reason() says why.
  const EigenvalueSet* formula();
  const std::string& reason();

  // Over F_{p0^degree}; nullopt above the cap or when degree is not a multiple of fb.
  std::optional<CountResult> count(int degree);
  // Oracle L-polynomial over the base field, when its g counts are affordable.
  const std::vector<mpz_class>* oracle_lpoly();

  // Verdicts over F_{p0^degree}, degree a multiple of fb.
  std::optional<Verdict> formula_verdict(int degree);
  std::optional<Verdict> oracle_verdict(int degree);
  bool oracle_feasible(int degree) const;

 private:
  ResolvedCurve curve_;
  RunConfig cfg_;
  std::shared_ptr<ResultCache> cache_;
  DOCurve do_;
  bool formula_tried_ = false;
  std::optional<EigenvalueSet> eig_;
  std::string reason_;
  std::map<int, CountResult> counts_;
  bool lpoly_tried_ = false;
  std::optional<std::vector<mpz_class>> lpoly_;
};

enum class Prediction { Maximal, Minimal, Neither, NotMaximal, NoStatement };
std::string prediction_name(Prediction p);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct PredictionItem {
  Prediction verdict = Prediction::NoStatement;
  int degree = 0;  // over F_{p0^degree}
  std::string field;
  std::optional<Verdict> formula, oracle;
  std::optional<bool> formula_ok, oracle_ok;
};

struct CriterionReport {
  std::string id;
  std::string citation;
  std::vector<CheckItem> checklist;
  bool hypotheses_met = false;
  std::vector<PredictionItem> predictions;
  std::optional<bool> consistent_with_formula, consistent_with_oracle;
  std::vector<std::string> notes;
  nlohmann::json extra = nlohmann::json::object();
  bool failed = false;  // an asserted equivalence or identity did not hold

  bool ok() const {
    return !failed && consistent_with_formula.value_or(true) && consistent_with_oracle.value_or(true);
  }
};

std::string field_name(std::uint32_t p0, int degree);

// Condition (ast) in its direct form and its character form; both must agree.
struct AstResult {
  bool direct = false;
  bool character = false;
  std::string witness;  // failing lambda, coefficient vector
  std::uint64_t annihilator_dim = 0;
};
AstResult condition_ast(const AbelianData& d, const EigenvalueSet& eig);

struct Family214 {
  std::uint32_t p0 = 3;
  int s = 1;
  int n = 1;
  int e = 1;
  std::vector<std::int64_t> c;  // c_0 .. c_{e-1} as integers mod p0 (F_p = F_{p0} when s = 1)
  std::vector<Coeff> g;         // g(x), low degree first
  std::vector<int> k;           // 0 < k_1 < ... < k_e < n/2
  CurveSpec spec;
};

Family214 build_family_214(std::uint32_t p0, int s, int n, const std::vector<std::int64_t>& c);

// Parameters of the twist family for R = 2x^p + x.
struct TwistParams {
  std::uint32_t p0 = 3;
  int s = 1;
  std::uint64_t alpha = 1;  // in F_{p0} subset F_p
};

struct TwistData {
  std::uint64_t beta = 0;
  std::uint64_t d1 = 0, d2 = 0, d = 0;
  CurveSpec spec;  // C_{zeta R}
  FieldPtr field;  // F_{p^d}
  FFElem xi, zeta;
};

TwistData build_twist(const TwistParams& tp);
ZetaSpec zeta_spec_of(const FFElem& z);

CriterionReport thm_cpq(CurveContext& ctx);
CriterionReport thm_ttbb(CurveContext& ctx);
CriterionReport thm_ttb3(CurveContext& ctx);
CriterionReport thm_ttb4(CurveContext& ctx);
CriterionReport thm_214(const Family214& fam, CurveContext& ctx);
CriterionReport prop_split(CurveContext& ctx);
CriterionReport prop_pp(CurveContext& ctx);
CriterionReport prop_c1(CurveContext& ctx);
CriterionReport conjecture_check(CurveContext& ctx);
CriterionReport thm_mp(const TwistParams& tp, const RunConfig& cfg);
CriterionReport cor_ccc(const TwistParams& tp, const RunConfig& cfg);
CriterionReport thm_lc(std::uint32_t p0, int s, const RunConfig& cfg);
CriterionReport cor_minus2(std::uint32_t p0, int s, const RunConfig& cfg);
CriterionReport thm_lcc(const TwistParams& tp, int r, const RunConfig& cfg);
CriterionReport cor_lcc2(std::uint32_t p0, int r, const RunConfig& cfg);
CriterionReport cor_char3(const RunConfig& cfg, int kmax = 5);

// Cache shared by every context built from one RunConfig (null when caching is off).
std::shared_ptr<ResultCache> cache_for(const RunConfig& cfg);

// Every criterion whose inputs are a single curve.
std::vector<CriterionReport> curve_criteria(CurveContext& ctx);

}  // namespace asmax
