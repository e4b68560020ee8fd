#include "asmax/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "asmax/error.hpp"
#include "asmax/numtheory.hpp"

namespace asmax {

namespace {

using PPoly = std::vector<Coeff>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& f, std::uint32_t p) {
  ptrim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = nt::inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t t = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = static_cast<Coeff>((a[shift + j] + (p - t) * f[j]) % p);
    }
    ptrim(a);
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  PPoly r(acc.begin(), acc.end());
  return pmod(std::move(r), f, p);
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& f, std::uint32_t p) {
  PPoly r{1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    e >>= 1;
    if (e) base = pmulmod(base, base, f, p);
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PPoly psub_x(PPoly a, std::uint32_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  ptrim(a);
  return a;
}

// x^{p0^k} mod f by k successive p0-th powers.
PPoly frob_power_of_x(int k, const PPoly& f, std::uint32_t p) {
  PPoly h = pmod(PPoly{0, 1}, f, p);
  for (int i = 0; i < k; ++i) h = ppowmod(h, p, f, p);
  return h;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
  const std::uint32_t p = a.prime();
  FpMatrix c(p, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Coeff>((c(i, j) + aik * b(k, j)) % p);
    }
  }
  return c;
}

// Polynomials over a FieldCtx, low degree first.
using FPoly = std::vector<FFElem>;

void ftrim(const FieldCtx& K, FPoly& a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

FPoly fmod(const FieldCtx& K, FPoly a, const FPoly& f) {
  ftrim(K, a);
  const std::size_t df = f.size() - 1;
  const FFElem lead_inv = K.inv(f.back());
  while (a.size() > df) {
    const FFElem t = K.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = K.sub(a[shift + j], K.mul(t, f[j]));
    ftrim(K, a);
  }
  return a;
}

FPoly fdiv(const FieldCtx& K, FPoly a, const FPoly& f) {
  ftrim(K, a);
  const std::size_t df = f.size() - 1;
  if (a.size() <= df) return {};
  FPoly quo(a.size() - df, K.zero());
  const FFElem lead_inv = K.inv(f.back());
  while (a.size() > df) {
    const FFElem t = K.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - df;
    quo[shift] = t;
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = K.sub(a[shift + j], K.mul(t, f[j]));
    ftrim(K, a);
  }
  return quo;
}

FPoly fmulmod(const FieldCtx& K, const FPoly& a, const FPoly& b, const FPoly& f) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (K.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
  return fmod(K, std::move(r), f);
}

FPoly fpowmod(const FieldCtx& K, FPoly base, std::uint64_t e, const FPoly& f) {
  FPoly r{K.one()};
  r = fmod(K, std::move(r), f);
  base = fmod(K, std::move(base), f);
  while (e) {
    if (e & 1) r = fmulmod(K, r, base, f);
    e >>= 1;
    if (e) base = fmulmod(K, base, base, f);
  }
  return r;
}

FPoly fmonic(const FieldCtx& K, FPoly a) {
  ftrim(K, a);
  if (a.empty()) return a;
  const FFElem li = K.inv(a.back());
  for (auto& c : a) c = K.mul(c, li);
  return a;
}

FPoly fgcd(const FieldCtx& K, FPoly a, FPoly b) {
  ftrim(K, a);
  ftrim(K, b);
  while (!b.empty()) {
    FPoly r = fmod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(K, std::move(a));
}

void split_roots(const FieldCtx& K, const FPoly& g, std::mt19937_64& rng, std::vector<FFElem>& out) {
  const std::size_t d = g.size() - 1;
  if (d == 0) return;
  if (d == 1) {
    out.push_back(K.neg(K.mul(g[0], K.inv(g[1]))));
    return;
  }
  const std::uint64_t half = (K.order() - 1) / 2;
  for (;;) {
    FPoly lin{K.random(rng), K.one()};
    FPoly h = fpowmod(K, lin, half, g);
    if (h.empty()) h.push_back(K.zero());
    h[0] = K.sub(h[0], K.one());
    FPoly c = fgcd(K, g, h);
    if (c.size() > 1 && c.size() < g.size()) {
      split_roots(K, c, rng, out);
      split_roots(K, fmonic(K, fdiv(K, g, c)), rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(std::uint32_t p0, const std::vector<Coeff>& monic) {
  const int m = static_cast<int>(monic.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  if (monic[0] == 0) return false;
  PPoly xpm = frob_power_of_x(m, monic, p0);
  if (psub_x(xpm, p0).size() != 0) return false;
  for (auto l : nt::prime_factors(static_cast<std::uint64_t>(m))) {
    PPoly h = psub_x(frob_power_of_x(m / static_cast<int>(l), monic, p0), p0);
    PPoly g = pgcd(monic, h, p0);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<Coeff> smallest_irreducible(std::uint32_t p0, int m) {
  if (m == 1) return {0, 1};
  std::vector<Coeff> f(static_cast<std::size_t>(m) + 1, 0);
  f[static_cast<std::size_t>(m)] = 1;
  f[0] = 1;
  for (;;) {
    if (is_irreducible(p0, f)) return f;
    int i = m - 1;
    while (i >= 0) {
      if (++f[static_cast<std::size_t>(i)] < p0) break;
      f[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    require(i >= 0, Errc::DegreeTooLarge, "no irreducible polynomial found");
  }
}

FieldPtr make_field(std::uint64_t p0, int m) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, FieldPtr> cache;
  require(p0 >= 2 && nt::is_prime(p0), Errc::NonPrimeP0, std::to_string(p0) + " is not prime");
  require(p0 < 65536, Errc::DegreeTooLarge, "characteristic above 2^16");
  require(m >= 1 && m <= kMaxDegree, Errc::DegreeTooLarge, "degree " + std::to_string(m));
  auto q = nt::checked_pow(p0, static_cast<unsigned>(m));
  require(q && *q < kMaxFieldOrder, Errc::DegreeTooLarge,
          std::to_string(p0) + "^" + std::to_string(m) + " exceeds 2^62");
  std::lock_guard lock(mu);
  if (auto it = cache.find({p0, m}); it != cache.end()) return it->second;

  std::shared_ptr<FieldCtx> K(new FieldCtx());
  K->p0_ = static_cast<std::uint32_t>(p0);
  K->m_ = m;
  K->q_ = *q;
  K->modulus_ = smallest_irreducible(K->p0_, m);
  K->factors_ = nt::prime_factors(*q - 1);

  FpMatrix f1(K->p0_, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  FpMatrix id(K->p0_, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    id(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = 1;
    FFElem ej = K->zero();
    ej.c[static_cast<std::size_t>(j)] = 1;
    const FFElem img = K->pow(ej, p0);
    for (int i = 0; i < m; ++i) f1(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = img.c[static_cast<std::size_t>(i)];
  }
  K->frob_.push_back(id);
  for (int k = 1; k < m; ++k) K->frob_.push_back(mat_mul(f1, K->frob_.back()));

  K->trace_row_.assign(static_cast<std::size_t>(m), 0);
  for (int j = 0; j < m; ++j) {
    FFElem ej = K->zero();
    ej.c[static_cast<std::size_t>(j)] = 1;
    K->trace_row_[static_cast<std::size_t>(j)] = K->trace_to(ej, 1).c[0];
  }

  for (std::uint64_t idx = 1; idx < *q; ++idx) {
    const FFElem x = K->from_index(idx);
    bool primitive = true;
    for (auto l : K->factors_) {
      if (K->pow(x, (*q - 1) / l) == K->one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      K->gen_ = x;
      break;
    }
  }
  cache[{p0, m}] = K;
  return K;
}

void FieldCtx::check_same(const FFElem& a) const {
  if (a.field != this) fail(Errc::FieldMismatch, "element belongs to a different field");
}

FFElem FieldCtx::zero() const {
  FFElem z;
  z.field = this;
  return z;
}

FFElem FieldCtx::one() const { return from_int(1); }

FFElem FieldCtx::from_int(std::int64_t v) const {
  FFElem z = zero();
  std::int64_t r = v % static_cast<std::int64_t>(p0_);
  if (r < 0) r += p0_;
  z.c[0] = static_cast<Coeff>(r);
  return z;
}

FFElem FieldCtx::from_coeffs(std::span<const std::int64_t> coeffs) const {
  require(coeffs.size() <= static_cast<std::size_t>(m_), Errc::InvalidSpec, "too many coefficients for field element");
  FFElem z = zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t r = coeffs[i] % static_cast<std::int64_t>(p0_);
    if (r < 0) r += p0_;
    z.c[i] = static_cast<Coeff>(r);
  }
  return z;
}

FFElem FieldCtx::from_index(std::uint64_t idx) const {
  FFElem z = zero();
  for (int i = 0; i < m_ && idx; ++i) {
    z.c[static_cast<std::size_t>(i)] = static_cast<Coeff>(idx % p0_);
    idx /= p0_;
  }
  return z;
}

FFElem FieldCtx::from_vector(std::span<const Coeff> v) const {
  FFElem z = zero();
  for (std::size_t i = 0; i < v.size() && i < static_cast<std::size_t>(m_); ++i) z.c[i] = v[i] % p0_;
  return z;
}

std::uint64_t FieldCtx::index(const FFElem& x) const {
  std::uint64_t idx = 0;
  for (int i = m_ - 1; i >= 0; --i) idx = idx * p0_ + x.c[static_cast<std::size_t>(i)];
  return idx;
}

FpVector FieldCtx::to_vector(const FFElem& x) const {
  return FpVector(x.c.begin(), x.c.begin() + m_);
}

FFElem FieldCtx::random(std::mt19937_64& rng) const {
  FFElem z = zero();
  for (int i = 0; i < m_; ++i) z.c[static_cast<std::size_t>(i)] = static_cast<Coeff>(rng() % p0_);
  return z;
}

FFElem FieldCtx::add(const FFElem& a, const FFElem& b) const {
  check_same(a);
  check_same(b);
  FFElem z = zero();
  for (int i = 0; i < m_; ++i) {
    const std::size_t u = static_cast<std::size_t>(i);
    const Coeff s = a.c[u] + b.c[u];
    z.c[u] = s >= p0_ ? s - p0_ : s;
  }
  return z;
}

FFElem FieldCtx::sub(const FFElem& a, const FFElem& b) const {
  check_same(a);
  check_same(b);
  FFElem z = zero();
  for (int i = 0; i < m_; ++i) {
    const std::size_t u = static_cast<std::size_t>(i);
    z.c[u] = a.c[u] >= b.c[u] ? a.c[u] - b.c[u] : a.c[u] + p0_ - b.c[u];
  }
  return z;
}

FFElem FieldCtx::neg(const FFElem& a) const {
  check_same(a);
  FFElem z = zero();
  for (int i = 0; i < m_; ++i) {
    const std::size_t u = static_cast<std::size_t>(i);
    z.c[u] = a.c[u] ? p0_ - a.c[u] : 0;
  }
  return z;
}

FFElem FieldCtx::mul(const FFElem& a, const FFElem& b) const {
  check_same(a);
  check_same(b);
  const std::size_t m = static_cast<std::size_t>(m_);
  const std::uint64_t p = p0_;
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t ai = a.c[i];
    if (!ai) continue;
    for (std::size_t j = 0; j < m; ++j) prod[i + j] += ai * b.c[j];
  }
  if (m > 1) {
    for (std::size_t i = 2 * m - 2; i >= m; --i) {
      const std::uint64_t t = prod[i] % p;
      if (t) {
        const std::size_t base = i - m;
        for (std::size_t j = 0; j < m; ++j) prod[base + j] += (p - t) * modulus_[j];
      }
    }
  }
  FFElem z = zero();
  for (std::size_t i = 0; i < m; ++i) z.c[i] = static_cast<Coeff>(prod[i] % p);
  return z;
}

FFElem FieldCtx::scale(const FFElem& a, std::uint32_t s) const {
  check_same(a);
  FFElem z = zero();
  const std::uint64_t sv = s % p0_;
  for (int i = 0; i < m_; ++i) z.c[static_cast<std::size_t>(i)] = static_cast<Coeff>(a.c[static_cast<std::size_t>(i)] * sv % p0_);
  return z;
}

FFElem FieldCtx::inv(const FFElem& a) const {
  require(!is_zero(a), Errc::ZeroInput, "inverse of zero");
  return pow(a, q_ - 2);
}

FFElem FieldCtx::pow(const FFElem& a, std::uint64_t e) const {
  FFElem r = one();
  FFElem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

bool FieldCtx::is_zero(const FFElem& a) const {
  for (int i = 0; i < m_; ++i)
    if (a.c[static_cast<std::size_t>(i)]) return false;
  return true;
}

FFElem FieldCtx::frobenius(const FFElem& x, std::int64_t k) const {
  check_same(x);
  k %= m_;
  if (k < 0) k += m_;
  if (k == 0) return x;
  const FpMatrix& F = frob_[static_cast<std::size_t>(k)];
  FFElem z = zero();
  const std::size_t m = static_cast<std::size_t>(m_);
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m; ++j) acc += std::uint64_t{F(i, j)} * x.c[j];
    z.c[i] = static_cast<Coeff>(acc % p0_);
  }
  return z;
}

FpMatrix FieldCtx::mul_matrix(const FFElem& a) const {
  const std::size_t m = static_cast<std::size_t>(m_);
  FpMatrix M(p0_, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    FFElem ej = zero();
    ej.c[j] = 1;
    const FFElem img = mul(a, ej);
    for (std::size_t i = 0; i < m; ++i) M(i, j) = img.c[i];
  }
  return M;
}

FFElem FieldCtx::trace_to(const FFElem& x, int d) const {
  require(d >= 1 && m_ % d == 0, Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(m_));
  return relative_trace(x, m_, d);
}

FFElem FieldCtx::relative_trace(const FFElem& x, int big, int small) const {
  require(small >= 1 && big % small == 0 && m_ % big == 0, Errc::NotADivisor, "trace degrees do not divide");
  FFElem acc = zero();
  for (int i = 0; i < big / small; ++i) acc = add(acc, frobenius(x, static_cast<std::int64_t>(small) * i));
  return acc;
}

std::uint32_t FieldCtx::prime_trace(const FFElem& x) const {
  std::uint64_t acc = 0;
  for (int i = 0; i < m_; ++i) acc += std::uint64_t{trace_row_[static_cast<std::size_t>(i)]} * x.c[static_cast<std::size_t>(i)];
  return static_cast<std::uint32_t>(acc % p0_);
}

int FieldCtx::legendre(const FFElem& x) const {
  require(p0_ != 2, Errc::EvenCharacteristic, "quadratic character needs odd characteristic");
  require(!is_zero(x), Errc::ZeroInput, "quadratic character of zero");
  const FFElem v = pow(x, (q_ - 1) / 2);
  return v == one() ? 1 : -1;
}

bool FieldCtx::in_subfield(const FFElem& x, int d) const {
  require(d >= 1 && m_ % d == 0, Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(m_));
  return frobenius(x, d) == x;
}

std::vector<FFElem> FieldCtx::subfield_basis(int d) const {
  require(d >= 1 && m_ % d == 0, Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(m_));
  const std::size_t m = static_cast<std::size_t>(m_);
  FpMatrix A = frob_[static_cast<std::size_t>(d % m_)];
  for (std::size_t i = 0; i < m; ++i) A(i, i) = (A(i, i) + p0_ - 1) % p0_;
  std::vector<FFElem> out;
  for (const auto& v : A.nullspace()) out.push_back(from_vector(v));
  return out;
}

std::vector<FFElem> FieldCtx::subfield_elements(int d) const {
  const auto basis = subfield_basis(d);
  const auto count = nt::checked_pow(p0_, static_cast<unsigned>(d));
  require(count && *count <= (std::uint64_t{1} << 26), Errc::TooLarge, "subfield too large to enumerate");
  std::vector<FFElem> out;
  out.reserve(*count);
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    FFElem acc = zero();
    std::uint64_t t = idx;
    for (const auto& b : basis) {
      const auto digit = static_cast<std::uint32_t>(t % p0_);
      t /= p0_;
      if (digit) acc = add(acc, scale(b, digit));
    }
    out.push_back(acc);
  }
  return out;
}

FFElem FieldCtx::subfield_generator(int d) const {
  require(d >= 1 && m_ % d == 0, Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(m_));
  const std::uint64_t qd = *nt::checked_pow(p0_, static_cast<unsigned>(d));
  return pow(gen_, (q_ - 1) / (qd - 1));
}

std::uint64_t FieldCtx::mult_order(const FFElem& x) const {
  require(!is_zero(x), Errc::ZeroInput, "order of zero");
  std::uint64_t ord = q_ - 1;
  for (auto l : factors_) {
    while (ord % l == 0 && pow(x, ord / l) == one()) ord /= l;
  }
  return ord;
}

std::vector<FFElem> FieldCtx::roots(const std::vector<FFElem>& poly) const {
  FPoly f = fmonic(*this, poly);
  require(!f.empty(), Errc::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<FFElem> out;
  if (f.size() == 1) return out;
  FPoly xq = fpowmod(*this, FPoly{zero(), one()}, q_, f);
  if (xq.size() < 2) xq.resize(2, zero());
  xq[1] = sub(xq[1], one());
  FPoly g = fgcd(*this, f, xq);
  std::mt19937_64 rng(0x5eedULL);
  split_roots(*this, g, rng, out);
  std::sort(out.begin(), out.end(), [this](const FFElem& a, const FFElem& b) { return index(a) < index(b); });
  return out;
}

std::vector<FFElem> FieldCtx::roots_of_prime_poly(std::span<const std::int64_t> poly) const {
  std::vector<FFElem> f;
  for (auto c : poly) f.push_back(from_int(c));
  return roots(f);
}

FFElem operator+(const FFElem& a, const FFElem& b) { return a.field->add(a, b); }
FFElem operator-(const FFElem& a, const FFElem& b) { return a.field->sub(a, b); }
FFElem operator-(const FFElem& a) { return a.field->neg(a); }
FFElem operator*(const FFElem& a, const FFElem& b) { return a.field->mul(a, b); }

FFElem trace_to(const FFElem& x, int d) { return x.field->trace_to(x, d); }
FFElem frobenius(const FFElem& x, std::int64_t k) { return x.field->frobenius(x, k); }
int legendre(const FFElem& x) { return x.field->legendre(x); }

SubfieldEmbed::SubfieldEmbed(FieldPtr small, FieldPtr big)
    : small_(std::move(small)), big_(std::move(big)), matrix_(big_->p0(), static_cast<std::size_t>(big_->degree()),
                                                              static_cast<std::size_t>(small_->degree())) {
  require(small_->p0() == big_->p0(), Errc::FieldMismatch, "embedding between different characteristics");
  const int d = small_->degree();
  const int m = big_->degree();
  require(m % d == 0, Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(m));
  std::vector<std::int64_t> modulus(small_->modulus().begin(), small_->modulus().end());
  const auto rts = big_->roots_of_prime_poly(modulus);
  require(!rts.empty(), Errc::Mismatch, "small modulus has no root in the big field");
  theta_ = rts.front();
  FFElem pw = big_->one();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < m; ++i) matrix_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = pw.c[static_cast<std::size_t>(i)];
    pw = big_->mul(pw, theta_);
  }
  std::mt19937_64 rng(0xe3bedULL);
  for (int t = 0; t < 8; ++t) {
    const FFElem a = small_->random(rng);
    const FFElem b = small_->random(rng);
    require(map(small_->mul(a, b)) == big_->mul(map(a), map(b)), Errc::Mismatch, "embedding is not multiplicative");
    require(map(small_->add(a, b)) == big_->add(map(a), map(b)), Errc::Mismatch, "embedding is not additive");
  }
}

FFElem SubfieldEmbed::map(const FFElem& x) const {
  if (x.field != small_.get()) fail(Errc::FieldMismatch, "embedding source mismatch");
  return big_->from_vector(matrix_.apply(small_->to_vector(x)));
}

std::optional<FFElem> SubfieldEmbed::preimage(const FFElem& y) const {
  if (y.field != big_.get()) fail(Errc::FieldMismatch, "embedding target mismatch");
  auto sol = matrix_.solve(big_->to_vector(y));
  if (!sol) return std::nullopt;
  return small_->from_vector(*sol);
}

}  // namespace asmax
