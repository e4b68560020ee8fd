#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "asmax/gf.hpp"

namespace asmax {

// Element of Z[zeta_{p0}] in the basis 1, zeta, ..., zeta^{p0-2}.
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(std::uint32_t p0);
  static CycInt integer(std::uint32_t p0, const mpz_class& v);
  static CycInt zeta_pow(std::uint32_t p0, std::int64_t t);

  std::uint32_t p0() const { return p0_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  bool is_rational() const;
  const mpz_class& rational_value() const;
  bool is_zero() const;

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt operator*(const mpz_class& s) const;
  CycInt& operator+=(const CycInt& o);
  bool operator==(const CycInt& o) const;
  bool operator<(const CycInt& o) const;

  CycInt pow(std::uint64_t k) const;
  std::string to_string() const;

 private:
  std::uint32_t p0_ = 0;
  std::vector<mpz_class> c_;
};

// psi_{lambda,q}(x) = zeta^{Tr_{q/p0}(lambda x)}; lambda must be nonzero.
struct CharSpec {
  FFElem lambda;
};

CycInt psi_q_eval(const CharSpec& chr, const FFElem& x);

struct GaussSum {
  CycInt value;
  bool direct = true;  // false: lifted from F_{p0} and scaled by (lambda/q)
};

// G(psi_q) = -sum_x psi_q(x^2). Direct summation when q <= direct_cap.
GaussSum gauss_sum(const CharSpec& chr, std::uint64_t direct_cap = std::uint64_t{1} << 24);

// (-1)^{f0 (p0-1)/4} p0^{f0/2}.
CycInt hasse_davenport_value(std::uint32_t p0, int f0);

CycInt cyc_pow_sum(const std::vector<CycInt>& taus, std::uint64_t k);

}  // namespace asmax
