#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "asmax/cyclotomic.hpp"
#include "asmax/heisenberg.hpp"

namespace asmax {

enum class Verdict { Maximal, Minimal, Neither };
enum class Evidence { Formula, Oracle, Both };

std::string verdict_name(Verdict v);
std::string evidence_name(Evidence e);

// One coefficient of R as written in a spec: an integer, g^k in the
// coefficient field, or an explicit coordinate vector.
struct CoeffSpec {
  enum class Kind { Integer, GeneratorPower, Vector };
  Kind kind = Kind::Integer;
  std::int64_t value = 0;
  std::vector<std::int64_t> coords;

  static CoeffSpec integer(std::int64_t v) { return {Kind::Integer, v, {}}; }
  static CoeffSpec gen_pow(std::int64_t k) { return {Kind::GeneratorPower, k, {}}; }
  static CoeffSpec vector(std::vector<std::int64_t> c) { return {Kind::Vector, 0, std::move(c)}; }
};

struct ZetaSpec {
  std::vector<std::int64_t> minpoly;  // over F_{p0}, low degree first
  int which_root = 0;
};

struct CurveSpec {
  std::uint32_t p0 = 3;
  int s = 1;
  int n = 1;
  std::vector<CoeffSpec> R;  // a_0 .. a_e over F_q, q = p^n
  int r = 1;
  std::optional<ZetaSpec> zeta;
};

// The curve z^{p^r} - z = x zeta R(x) over its base field F_{p0^fb},
// fb = lcm(n s, [F_{p0}(zeta) : F_{p0}]).
struct ResolvedCurve {
  CurveSpec spec;
  FieldPtr coeff_field;
  FieldPtr zeta_field;
  FieldPtr base;
  FFElem zeta;
  LinPoly R;  // zeta R over the base field
  int fb = 1;
  int n_base = 1;  // base order is p^n_base
  std::uint64_t p = 3;
  std::uint64_t q = 3;
  int e = 0;
  std::uint64_t genus = 0;
};

ResolvedCurve resolve(const CurveSpec& spec);

// p^e (p^r - 1) / 2.
std::uint64_t genus(std::uint64_t p, int e, int r);

struct Eigenvalue {
  FFElem twist;          // zeta' in F_{p^r}^x (1 when r = 1)
  FFElem lambda;         // selects psi
  std::vector<Coeff> chi;
  FFElem eta;
  std::uint32_t phase = 0;  // exponent t in psi_q(-eta^2/(4 c_A)) = zeta_{p0}^t
  int sign = 1;             // (2 a_e / q)
  CycInt tau;
};

struct EigenvalueSet {
  std::uint64_t q = 0;
  int f0 = 0;
  std::uint32_t p0 = 0;
  std::uint64_t genus = 0;
  std::vector<Eigenvalue> list;
  std::vector<AbelianData> abelian;  // one per twist
  bool gauss_direct = true;
};

struct LfOptions {
  std::uint64_t budget = 100000;
  std::uint64_t gauss_direct_cap = std::uint64_t{1} << 24;
  // Ambient fields above this order are not built for the Lagrangian fallback.
  std::uint64_t ambient_cap = std::uint64_t{1} << 40;
  // Generalized curves: largest F_{p^r}^x enumerated.
  std::uint64_t max_twists = 4096;
};

// tau for the character (lambda, chi) of the given abelian data.
Eigenvalue tau_eigenvalue(const AbelianData& d, const FFElem& lambda, const std::vector<Coeff>& chi,
                          const GaussSum& g);

// Throws FormulaPathUnavailable (with the reason) when no usable Lagrangian exists.
EigenvalueSet eigenvalues(const ResolvedCurve& c, const LfOptions& opt = {});

// Distinct tau values with multiplicities.
std::vector<std::pair<CycInt, std::uint64_t>> distinct_taus(const EigenvalueSet& eig);

mpz_class power_sum(const EigenvalueSet& eig, std::uint64_t k);
std::vector<mpz_class> power_sums(const EigenvalueSet& eig, std::uint64_t kmax);

// Verdict over F_{q^k} from tau^k.
Verdict classify(const EigenvalueSet& eig, std::uint64_t k);

// Coefficients of L(T), lowest degree first; degree 2g.
std::vector<mpz_class> l_polynomial(const EigenvalueSet& eig, std::uint64_t max_degree = 4096);

// Newton identities in both directions.
std::vector<mpz_class> lpoly_from_power_sums(const std::vector<mpz_class>& S, std::uint64_t g, const mpz_class& q);
std::vector<mpz_class> power_sums_from_lpoly(const std::vector<mpz_class>& L, std::uint64_t kmax);

// q^k + 1 - S_k.
mpz_class predicted_count(const mpz_class& q, std::uint64_t k, const mpz_class& S_k);

// Verdict for a point count over a field of order Q = p0^m with genus g.
Verdict verdict_from_count(const mpz_class& count, std::uint32_t p0, std::uint64_t m, std::uint64_t g);

// Maximal-or-minimal gate: sqrt(p0^m) integral.
bool half_integral(std::uint64_t m);

// Order of tau / sqrt(q) as a root of unity (requires f0 even).
std::uint64_t normalized_order(const CycInt& tau, std::uint32_t p0, int f0);

}  // namespace asmax
