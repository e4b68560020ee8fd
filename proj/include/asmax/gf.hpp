#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "asmax/fp_matrix.hpp"

namespace asmax {

// 3^39 < 2^62 < 3^40, so every admissible odd-characteristic field fits.
inline constexpr int kMaxDegree = 40;
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 62;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

struct FFElem {
  const FieldCtx* field = nullptr;
  std::array<Coeff, kMaxDegree> c{};

  bool operator==(const FFElem&) const = default;
};

class FieldCtx {
 public:
  std::uint32_t p0() const { return p0_; }
  int degree() const { return m_; }
  std::uint64_t order() const { return q_; }
  const std::vector<Coeff>& modulus() const { return modulus_; }
  const FFElem& generator() const { return gen_; }
  const std::vector<std::uint64_t>& order_factors() const { return factors_; }

  FFElem zero() const;
  FFElem one() const;
  FFElem from_int(std::int64_t v) const;
  FFElem from_coeffs(std::span<const std::int64_t> coeffs) const;
  FFElem from_index(std::uint64_t idx) const;
  FFElem from_vector(std::span<const Coeff> v) const;
  std::uint64_t index(const FFElem& x) const;
  FpVector to_vector(const FFElem& x) const;
  FFElem random(std::mt19937_64& rng) const;

  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem scale(const FFElem& a, std::uint32_t s) const;
  FFElem inv(const FFElem& a) const;
  FFElem pow(const FFElem& a, std::uint64_t e) const;
  bool is_zero(const FFElem& a) const;

  // x -> x^{p0^k}, k reduced mod m.
  FFElem frobenius(const FFElem& x, std::int64_t k) const;
  const FpMatrix& frobenius_matrix(int k) const { return frob_[static_cast<std::size_t>(k)]; }

  // Multiplication-by-a as an F_{p0}-linear map.
  FpMatrix mul_matrix(const FFElem& a) const;

  // Tr_{F_{p0^m}/F_{p0^d}}.
  FFElem trace_to(const FFElem& x, int d) const;
  // Tr_{F_{p0^big}/F_{p0^small}} for x lying in the subfield of degree big.
  FFElem relative_trace(const FFElem& x, int big, int small) const;
  // Tr_{F_{p0^m}/F_{p0}} as an integer in [0, p0).
  std::uint32_t prime_trace(const FFElem& x) const;
  const FpVector& prime_trace_row() const { return trace_row_; }

  int legendre(const FFElem& x) const;
  bool in_subfield(const FFElem& x, int d) const;
  std::vector<FFElem> subfield_basis(int d) const;
  std::vector<FFElem> subfield_elements(int d) const;
  FFElem subfield_generator(int d) const;
  std::uint64_t mult_order(const FFElem& x) const;

  // Roots in this field of a polynomial with coefficients here (low degree first),
  // sorted by index.
  std::vector<FFElem> roots(const std::vector<FFElem>& poly) const;
  std::vector<FFElem> roots_of_prime_poly(std::span<const std::int64_t> poly) const;

 private:
  friend FieldPtr make_field(std::uint64_t p0, int m);
  FieldCtx() = default;
  void check_same(const FFElem& a) const;

  std::uint32_t p0_ = 0;
  int m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<Coeff> modulus_;
  FFElem gen_;
  std::vector<std::uint64_t> factors_;
  std::vector<FpMatrix> frob_;
  FpVector trace_row_;
};

// Deterministic and cached: repeated calls return the same context.
FieldPtr make_field(std::uint64_t p0, int m);

// Lexicographically smallest monic irreducible of degree m (c_0 compared first).
std::vector<Coeff> smallest_irreducible(std::uint32_t p0, int m);
bool is_irreducible(std::uint32_t p0, const std::vector<Coeff>& monic);

FFElem operator+(const FFElem& a, const FFElem& b);
FFElem operator-(const FFElem& a, const FFElem& b);
FFElem operator-(const FFElem& a);
FFElem operator*(const FFElem& a, const FFElem& b);

FFElem trace_to(const FFElem& x, int d);
FFElem frobenius(const FFElem& x, std::int64_t k);
int legendre(const FFElem& x);

// Embedding of F_{p0^d} into F_{p0^m}, d | m, sending the small field's
// polynomial generator to the smallest-index root of its modulus.
class SubfieldEmbed {
 public:
  SubfieldEmbed(FieldPtr small, FieldPtr big);

  const FieldPtr& small() const { return small_; }
  const FieldPtr& big() const { return big_; }
  const FFElem& image_of_generator() const { return theta_; }

  FFElem map(const FFElem& x) const;
  std::optional<FFElem> preimage(const FFElem& y) const;

 private:
  FieldPtr small_, big_;
  FFElem theta_;
  FpMatrix matrix_;
};

}  // namespace asmax
