#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Word-size number theory used by field construction and the criteria.
namespace asmax::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Distinct prime factors, ascending (trial division, then Pollard rho).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

// 2-adic valuation; v2(0) is defined as 64.
int v2(std::uint64_t n);

// Multiplicative order of a in (Z/p)^x for prime p, a != 0 mod p.
std::uint64_t mult_order_mod(std::uint64_t a, std::uint64_t p);

// Integer m with p0^m == q, if q is a power of p0.
std::optional<int> log_exact(std::uint64_t q, std::uint64_t p0);

}  // namespace asmax::nt
