#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "asmax/config.hpp"
#include "asmax/criteria.hpp"

namespace asmax {

using nlohmann::json;

json to_json(const CountResult& r);
CountResult count_result_from_json(const json& j);

// {p0, s, n, R: [int | "g^k" | [coords]], r, zeta: {minpoly, which_root} | null}
CurveSpec spec_from_json(const json& j);
json to_json(const CurveSpec& spec);
std::string canonical(const CurveSpec& spec);
std::string canonical(const DOCurve& c);

json field_json(const FieldCtx& F);
json elem_json(const FFElem& x);
json mpz_json(const mpz_class& v);  // number when it fits in 64 bits, else a decimal string
json to_json(const LinPoly& L);
json to_json(const AbelianData& d);
json to_json(const EigenvalueSet& eig);
json to_json(const CriterionReport& r);
json to_json(const RunConfig& cfg);

// k, verdict, evidence, count, bound_hi, bound_lo
struct VerdictRow {
  std::uint64_t k = 0;
  int degree = 0;
  Verdict verdict = Verdict::Neither;
  Evidence evidence = Evidence::Formula;
  std::optional<mpz_class> count;
  mpz_class bound_hi, bound_lo;
};

json to_json(const VerdictRow& row);
void write_tsv(std::ostream& os, const std::vector<VerdictRow>& rows);
void write_pretty(std::ostream& os, const std::vector<VerdictRow>& rows);
void write_pretty(std::ostream& os, const CriterionReport& r);

}  // namespace asmax
