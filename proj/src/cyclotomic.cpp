#include "asmax/cyclotomic.hpp"

#include <sstream>

#include "asmax/error.hpp"

namespace asmax {

CycInt::CycInt(std::uint32_t p0) : p0_(p0), c_(p0 - 1) {}

CycInt CycInt::integer(std::uint32_t p0, const mpz_class& v) {
  CycInt r(p0);
  r.c_[0] = v;
  return r;
}

CycInt CycInt::zeta_pow(std::uint32_t p0, std::int64_t t) {
  CycInt r(p0);
  std::int64_t e = t % static_cast<std::int64_t>(p0);
  if (e < 0) e += p0;
  if (e == static_cast<std::int64_t>(p0) - 1) {
    for (auto& x : r.c_) x = -1;
  } else {
    r.c_[static_cast<std::size_t>(e)] = 1;
  }
  return r;
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const mpz_class& CycInt::rational_value() const {
  require(is_rational(), Errc::Mismatch, "cyclotomic value is not a rational integer: " + to_string());
  return c_[0];
}

bool CycInt::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt r = *this;
  r += o;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  require(p0_ == o.p0_, Errc::MixedP0, "cyclotomic integers over different p0");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  require(p0_ == o.p0_, Errc::MixedP0, "cyclotomic integers over different p0");
  const std::size_t p = p0_;
  std::vector<mpz_class> full(p);
  for (std::size_t i = 0; i + 1 < p; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j + 1 < p; ++j) {
      if (o.c_[j] == 0) continue;
      full[(i + j) % p] += c_[i] * o.c_[j];
    }
  }
  CycInt r(p0_);
  for (std::size_t i = 0; i + 1 < p; ++i) r.c_[i] = full[i] - full[p - 1];
  return r;
}

CycInt CycInt::operator*(const mpz_class& s) const {
  CycInt r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

bool CycInt::operator==(const CycInt& o) const { return p0_ == o.p0_ && c_ == o.c_; }

bool CycInt::operator<(const CycInt& o) const {
  if (p0_ != o.p0_) return p0_ < o.p0_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

CycInt CycInt::pow(std::uint64_t k) const {
  CycInt r = integer(p0_, 1);
  CycInt b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    mpz_class a = abs(c_[i]);
    if (i == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycInt psi_q_eval(const CharSpec& chr, const FFElem& x) {
  const FieldCtx& K = *chr.lambda.field;
  if (x.field != &K) fail(Errc::FieldMismatch, "character and argument live in different fields");
  return CycInt::zeta_pow(K.p0(), K.prime_trace(K.mul(chr.lambda, x)));
}

GaussSum gauss_sum(const CharSpec& chr, std::uint64_t direct_cap) {
  const FieldCtx& K = *chr.lambda.field;
  const std::uint32_t p0 = K.p0();
  require(!K.is_zero(chr.lambda), Errc::ZeroInput, "trivial character");
  if (K.order() > direct_cap) {
    // Hasse-Davenport lift from F_{p0}, then the (lambda/q) twist.
    const FieldPtr Fp = make_field(p0, 1);
    GaussSum base = gauss_sum(CharSpec{Fp->one()});
    CycInt v = base.value.pow(static_cast<std::uint64_t>(K.degree()));
    if (K.legendre(chr.lambda) < 0) v = -v;
    return {v, false};
  }
  std::vector<std::uint64_t> hist(p0, 0);
  const std::size_t m = static_cast<std::size_t>(K.degree());
  // Trace of lambda * x^2 as a quadratic form in the coordinates of x.
  std::vector<std::uint64_t> Q(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      FFElem ea = K.zero(), eb = K.zero();
      ea.c[a] = 1;
      eb.c[b] = 1;
      Q[a * m + b] = K.prime_trace(K.mul(chr.lambda, K.mul(ea, eb)));
    }
  }
  std::vector<std::uint32_t> x(m, 0);
  for (std::uint64_t idx = 0; idx < K.order(); ++idx) {
    std::uint64_t acc = 0;
    for (std::size_t a = 0; a < m; ++a) {
      if (!x[a]) continue;
      std::uint64_t inner = 0;
      for (std::size_t b = 0; b < m; ++b) inner += Q[a * m + b] * x[b];
      acc += (inner % p0) * x[a];
    }
    ++hist[acc % p0];
    for (std::size_t a = 0; a < m; ++a) {
      if (++x[a] < p0) break;
      x[a] = 0;
    }
  }
  CycInt g(p0);
  for (std::uint32_t t = 0; t < p0; ++t) g += CycInt::zeta_pow(p0, t) * mpz_class(static_cast<unsigned long>(hist[t]));
  return {-g, true};
}

CycInt hasse_davenport_value(std::uint32_t p0, int f0) {
  require(f0 % 2 == 0, Errc::OddF0, "f0 = " + std::to_string(f0) + " is odd");
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), p0, static_cast<unsigned long>(f0 / 2));
  const std::uint64_t ex = static_cast<std::uint64_t>(f0) * (p0 - 1) / 4;
  if (ex % 2) v = -v;
  return CycInt::integer(p0, v);
}

CycInt cyc_pow_sum(const std::vector<CycInt>& taus, std::uint64_t k) {
  if (taus.empty()) return CycInt();
  CycInt acc(taus.front().p0());
  for (const auto& t : taus) {
    require(t.p0() == acc.p0(), Errc::MixedP0, "eigenvalues over different p0");
    acc += t.pow(k);
  }
  return acc;
}

}  // namespace asmax
