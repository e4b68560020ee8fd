#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "asmax/lfunction.hpp"

namespace asmax {

// coef * x^{p0^u} * x^{p0^v}
struct DOTerm {
  FFElem coef;
  int u = 0;
  int v = 0;
};

// z^{p0^as_exponent} - z = sum of terms; the right side is a Dembowski-Ostrom polynomial.
struct DOCurve {
  FieldPtr field;
  std::vector<DOTerm> terms;
  int as_exponent = 1;
  std::uint64_t genus = 0;
};

DOCurve do_curve(const ResolvedCurve& c);

struct OracleOptions {
  std::uint64_t cap = 200'000'000;  // field elements
  int threads = 0;                  // 0: OpenMP default
};

struct CountResult {
  int degree = 0;  // count over F_{p0^degree}
  std::uint32_t p0 = 0;
  std::uint64_t Q = 0;
  std::uint64_t affine = 0;
  std::uint64_t projective = 0;
  std::uint64_t genus = 0;
  std::optional<mpz_class> weil_slack;  // Q + 1 + 2 g sqrt(Q) - count, for even degree
  bool cached = false;
};

// Parallel kernel: quadratic forms cutting out the image of z -> z^P - z, evaluated
// along generator powers.
std::uint64_t count_affine(const DOCurve& c, int degree, const OracleOptions& opt = {});
// Serial reference: index order, field arithmetic and a subfield trace test.
std::uint64_t count_affine_serial(const DOCurve& c, int degree, const OracleOptions& opt = {});

CountResult count_points(const DOCurve& c, int degree, const OracleOptions& opt = {});

// Hasse-Weil: |count - (Q + 1)| <= 2 g sqrt(Q), checked exactly.
bool within_weil(const CountResult& r);

Verdict classify_by_counts(const CountResult& r);

// L-polynomial over F_{p0^base_degree} from the counts over its first g extensions.
std::vector<mpz_class> oracle_lpoly(const std::vector<CountResult>& counts, std::uint32_t p0, int base_degree,
                                    std::uint64_t g);

struct PredictionCheck {
  std::uint64_t k = 0;
  std::uint64_t count = 0;
  mpz_class predicted;
  bool ok = false;
};

// count(k) = q^k + 1 - sum tau^k; throws Mismatch listing the distinct eigenvalues.
std::vector<PredictionCheck> verify_predictions(const EigenvalueSet& eig, const DOCurve& c,
                                                const std::vector<std::uint64_t>& ks, const OracleOptions& opt = {});

std::uint64_t fnv1a(const std::string& text);

// JSONL rows keyed by (key hash, degree).
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  std::optional<CountResult> find(std::uint64_t key, int degree) const;
  void store(std::uint64_t key, const CountResult& r);

 private:
  std::string path_;
  mutable std::mutex mu_;
};

}  // namespace asmax
