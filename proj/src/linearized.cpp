#include "asmax/linearized.hpp"

#include <string>

#include "asmax/error.hpp"
#include "asmax/numtheory.hpp"

namespace asmax {

namespace {

void check_field(const LinPoly& L, const FFElem& x) {
  if (x.field != L.field) fail(Errc::FieldMismatch, "argument and coefficients live in different fields");
}

FpMatrix columns(const FieldCtx& K, const std::vector<FFElem>& vs) {
  FpMatrix M(K.p0(), static_cast<std::size_t>(K.degree()), vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (int i = 0; i < K.degree(); ++i) M(static_cast<std::size_t>(i), j) = vs[j].c[static_cast<std::size_t>(i)];
  return M;
}

}  // namespace

LinPoly LinPoly::zero(const FieldCtx& K, int s) {
  LinPoly L;
  L.field = &K;
  L.s = s;
  return L;
}

LinPoly LinPoly::monomial(const FieldCtx& K, int s, int i, const FFElem& c) {
  LinPoly L = zero(K, s);
  L.a.assign(static_cast<std::size_t>(i) + 1, K.zero());
  L.a[static_cast<std::size_t>(i)] = c;
  L.trim();
  return L;
}

LinPoly LinPoly::frobenius_minus_identity(const FieldCtx& K, int s, int n) {
  LinPoly L = zero(K, s);
  L.a.assign(static_cast<std::size_t>(n) + 1, K.zero());
  L.a[static_cast<std::size_t>(n)] = K.one();
  L.a[0] = K.sub(L.a[0], K.one());
  L.trim();
  return L;
}

FFElem LinPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return field->zero();
  return a[static_cast<std::size_t>(i)];
}

void LinPoly::trim() {
  while (!a.empty() && field->is_zero(a.back())) a.pop_back();
}

bool LinPoly::operator==(const LinPoly& o) const {
  LinPoly x = *this, y = o;
  x.trim();
  y.trim();
  return x.field == y.field && x.s == y.s && x.a == y.a;
}

FFElem eval(const LinPoly& L, const FFElem& x) {
  check_field(L, x);
  const FieldCtx& K = *L.field;
  FFElem acc = K.zero();
  FFElem xp = x;
  for (std::size_t i = 0; i < L.a.size(); ++i) {
    if (!K.is_zero(L.a[i])) acc = K.add(acc, K.mul(L.a[i], xp));
    xp = K.frobenius(xp, L.s);
  }
  return acc;
}

FpMatrix to_matrix(const LinPoly& L) {
  const FieldCtx& K = *L.field;
  std::vector<FFElem> imgs;
  for (int j = 0; j < K.degree(); ++j) {
    FFElem e = K.zero();
    e.c[static_cast<std::size_t>(j)] = 1;
    imgs.push_back(eval(L, e));
  }
  return columns(K, imgs);
}

LinPoly e_r(const LinPoly& R) {
  require(!R.is_zero(), Errc::ZeroPolynomial, "E_R of the zero polynomial");
  const FieldCtx& K = *R.field;
  const int e = R.degree();
  LinPoly E = LinPoly::zero(K, R.s);
  E.a.assign(static_cast<std::size_t>(2 * e) + 1, K.zero());
  for (int j = 0; j <= 2 * e; ++j) {
    FFElem v = K.zero();
    if (j >= e) v = K.add(v, K.frobenius(R.a[static_cast<std::size_t>(j - e)], static_cast<std::int64_t>(R.s) * e));
    if (j <= e) v = K.add(v, K.frobenius(R.a[static_cast<std::size_t>(e - j)], static_cast<std::int64_t>(R.s) * j));
    E.a[static_cast<std::size_t>(j)] = v;
  }
  E.trim();
  return E;
}

FFElem f_r(const LinPoly& R, const FFElem& x, const FFElem& y) {
  check_field(R, x);
  check_field(R, y);
  const int e = R.degree();
  require(e >= 1, Errc::DegreeZero, "f_R needs e >= 1");
  const FieldCtx& K = *R.field;
  const FFElem xRy = K.mul(x, eval(R, y));
  FFElem acc = K.zero();
  for (int i = 0; i < e; ++i) {
    const FFElem base = K.mul(K.mul(R.a[static_cast<std::size_t>(i)], K.frobenius(x, static_cast<std::int64_t>(R.s) * i)), y);
    for (int j = 0; j <= e - i - 1; ++j) acc = K.add(acc, K.frobenius(base, static_cast<std::int64_t>(R.s) * j));
    acc = K.add(acc, K.frobenius(xRy, static_cast<std::int64_t>(R.s) * i));
  }
  return K.neg(acc);
}

KernelSpace kernel(const LinPoly& L) {
  const FieldCtx& K = *L.field;
  KernelSpace W{&K, {}};
  for (const auto& v : to_matrix(L).nullspace()) W.basis.push_back(K.from_vector(v));
  return W;
}

KernelSpace intersect_subfield(const KernelSpace& W, int d) {
  const FieldCtx& K = *W.field;
  std::vector<FFElem> diffs;
  for (const auto& w : W.basis) diffs.push_back(K.sub(K.frobenius(w, d), w));
  KernelSpace out{&K, {}};
  if (W.basis.empty()) return out;
  for (const auto& coef : columns(K, diffs).nullspace()) {
    FFElem acc = K.zero();
    for (std::size_t i = 0; i < coef.size(); ++i)
      if (coef[i]) acc = K.add(acc, K.scale(W.basis[i], coef[i]));
    out.basis.push_back(acc);
  }
  return out;
}

int coefficient_degree(const LinPoly& L) {
  const FieldCtx& K = *L.field;
  for (int c = 1; c <= K.degree(); ++c) {
    if (K.degree() % c) continue;
    bool ok = true;
    for (const auto& x : L.a) ok = ok && K.in_subfield(x, c);
    if (ok) return c;
  }
  return K.degree();
}

int splitting_degree(const LinPoly& L, int bound) {
  require(!L.is_zero(), Errc::ZeroPolynomial, "splitting degree of the zero polynomial");
  const FieldCtx& K = *L.field;
  require(!K.is_zero(L.a[0]), Errc::ZeroConstantTerm, "polynomial is not separable");
  const int c = coefficient_degree(L);
  const int d = L.degree() * L.s;
  if (d == 0) return c;
  // Work with x^{p0^j} coefficients.
  std::vector<FFElem> l(static_cast<std::size_t>(d) + 1, K.zero());
  for (int i = 0; i <= L.degree(); ++i) l[static_cast<std::size_t>(i * L.s)] = L.a[static_cast<std::size_t>(i)];
  const FFElem lead_inv = K.inv(l.back());
  std::vector<FFElem> r(static_cast<std::size_t>(d), K.zero());
  r[0] = K.one();
  for (int k = 1; k <= bound; ++k) {
    std::vector<FFElem> nr(static_cast<std::size_t>(d) + 1, K.zero());
    for (int j = 0; j < d; ++j) nr[static_cast<std::size_t>(j) + 1] = K.frobenius(r[static_cast<std::size_t>(j)], 1);
    const FFElem top = nr.back();
    if (!K.is_zero(top)) {
      const FFElem t = K.mul(top, lead_inv);
      for (int j = 0; j <= d; ++j) nr[static_cast<std::size_t>(j)] = K.sub(nr[static_cast<std::size_t>(j)], K.mul(t, l[static_cast<std::size_t>(j)]));
    }
    nr.pop_back();
    r = std::move(nr);
    if (k % c) continue;
    bool is_x = r[0] == K.one();
    for (int j = 1; j < d && is_x; ++j) is_x = K.is_zero(r[static_cast<std::size_t>(j)]);
    if (is_x) return k;
  }
  fail(Errc::BoundExceeded, "splitting degree exceeds bound " + std::to_string(bound));
}

KernelSpace fp_span(const FieldCtx& K, int s, const std::vector<FFElem>& vectors) {
  const auto fpb = K.subfield_basis(s);
  std::vector<FFElem> gens;
  for (const auto& v : vectors)
    for (const auto& c : fpb) gens.push_back(K.mul(c, v));
  KernelSpace out{&K, {}};
  if (gens.empty()) return out;
  FpMatrix M = columns(K, gens).transpose();
  const auto piv = M.rref();
  for (std::size_t i = 0; i < piv.size(); ++i) {
    FpVector row(M.row(i).begin(), M.row(i).end());
    out.basis.push_back(K.from_vector(row));
  }
  return out;
}

std::vector<FFElem> fp_basis(const KernelSpace& W, int s) {
  const FieldCtx& K = *W.field;
  require(K.degree() % s == 0, Errc::NotFpStable, "F_p is not a subfield of the ambient field");
  const KernelSpace closure = fp_span(K, s, W.basis);
  require(closure.dimension() == W.dimension(), Errc::NotFpStable, "subspace is not closed under F_p");
  std::vector<FFElem> chosen;
  int rank = 0;
  for (const auto& w : W.basis) {
    auto trial = chosen;
    trial.push_back(w);
    const int r = fp_span(K, s, trial).dimension();
    if (r == rank + s) {
      chosen = std::move(trial);
      rank = r;
    }
  }
  require(rank == W.dimension(), Errc::NotFpStable, "could not extract an F_p-basis");
  return chosen;
}

LinPoly subspace_poly(const KernelSpace& W, int s) {
  const FieldCtx& K = *W.field;
  LinPoly P = LinPoly::monomial(K, s, 0, K.one());
  const std::uint64_t p = *nt::checked_pow(K.p0(), static_cast<unsigned>(s));
  for (const auto& v : fp_basis(W, s)) {
    const FFElem u = eval(P, v);
    LinPoly step = LinPoly::zero(K, s);
    step.a = {K.neg(K.pow(u, p - 1)), K.one()};
    P = ore_compose(step, P);
  }
  return P;
}

LinPoly ore_compose(const LinPoly& A, const LinPoly& B) {
  require(A.s == B.s, Errc::StepMismatch, "composition of polynomials with different steps");
  require(A.field == B.field, Errc::FieldMismatch, "composition across fields");
  const FieldCtx& K = *A.field;
  LinPoly C = LinPoly::zero(K, A.s);
  if (A.is_zero() || B.is_zero()) return C;
  C.a.assign(A.a.size() + B.a.size() - 1, K.zero());
  for (std::size_t i = 0; i < A.a.size(); ++i) {
    if (K.is_zero(A.a[i])) continue;
    for (std::size_t j = 0; j < B.a.size(); ++j) {
      const FFElem bj = K.frobenius(B.a[j], static_cast<std::int64_t>(A.s) * static_cast<std::int64_t>(i));
      C.a[i + j] = K.add(C.a[i + j], K.mul(A.a[i], bj));
    }
  }
  C.trim();
  return C;
}

std::pair<LinPoly, LinPoly> ore_right_divide(const LinPoly& N, const LinPoly& D) {
  require(N.s == D.s, Errc::StepMismatch, "division of polynomials with different steps");
  require(!D.is_zero(), Errc::DivisionByZero, "division by the zero polynomial");
  const FieldCtx& K = *N.field;
  LinPoly Q = LinPoly::zero(K, N.s);
  LinPoly Rm = N;
  Rm.trim();
  const int d = D.degree();
  if (Rm.degree() >= d) Q.a.assign(static_cast<std::size_t>(Rm.degree() - d) + 1, K.zero());
  while (!Rm.is_zero() && Rm.degree() >= d) {
    const int shift = Rm.degree() - d;
    const FFElem denom = K.frobenius(D.lead(), static_cast<std::int64_t>(N.s) * shift);
    const FFElem t = K.mul(Rm.lead(), K.inv(denom));
    Q.a[static_cast<std::size_t>(shift)] = t;
    for (int j = 0; j <= d; ++j) {
      const FFElem dj = K.frobenius(D.a[static_cast<std::size_t>(j)], static_cast<std::int64_t>(N.s) * shift);
      Rm.a[static_cast<std::size_t>(j + shift)] = K.sub(Rm.a[static_cast<std::size_t>(j + shift)], K.mul(t, dj));
    }
    Rm.trim();
  }
  Q.trim();
  return {Q, Rm};
}

LinPoly embed(const LinPoly& L, const SubfieldEmbed& emb) {
  LinPoly out = LinPoly::zero(*emb.big(), L.s);
  for (const auto& c : L.a) out.a.push_back(emb.map(c));
  return out;
}

}  // namespace asmax
