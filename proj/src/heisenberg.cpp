#include "asmax/heisenberg.hpp"

#include <functional>
#include <string>

#include "asmax/error.hpp"
#include "asmax/numtheory.hpp"

namespace asmax {

namespace {

FFElem omega(const LinPoly& R, const FFElem& x, const FFElem& y) {
  return R.field->sub(f_r(R, x, y), f_r(R, y, x));
}

bool isotropic(const LinPoly& R, const std::vector<FFElem>& basis) {
  const FieldCtx& K = *R.field;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!K.is_zero(omega(R, basis[i], basis[j]))) return false;
  return true;
}

FFElem combination(const FieldCtx& K, const std::vector<FFElem>& basis, std::uint64_t idx) {
  FFElem acc = K.zero();
  for (const auto& b : basis) {
    const auto digit = static_cast<std::uint32_t>(idx % K.p0());
    idx /= K.p0();
    if (digit) acc = K.add(acc, K.scale(b, digit));
  }
  return acc;
}

struct LagrangianSearch {
  const LinPoly& R;
  int s;
  int target;
  std::vector<FFElem> space;  // F_{p0}-basis of the candidate pool
  std::function<std::vector<FFElem>(const FFElem&)> closure;
  std::uint64_t budget;
  std::uint64_t used = 0;
  std::vector<FFElem> found_gens;
  // Preferred Lagrangians; the first other one is kept as a fallback.
  std::function<bool(const std::vector<FFElem>&)> accept = nullptr;
  std::vector<FFElem> fallback;
  std::uint64_t fallback_at = 0;

  static constexpr std::uint64_t kPreferenceWindow = 5000;

  bool run() {
    if (static_cast<int>(space.size()) < target) return false;
    if (dfs({}, {}, 1)) return true;
    if (fallback.empty()) return false;
    found_gens = fallback;
    return true;
  }

  bool exhausted() const {
    return used > budget || (!fallback.empty() && used > fallback_at + kPreferenceWindow);
  }

  bool dfs(const std::vector<FFElem>& gens, const std::vector<FFElem>& basis, std::uint64_t start) {
    if (static_cast<int>(basis.size()) == target) {
      if (!accept || accept(basis)) {
        found_gens = gens;
        return true;
      }
      if (fallback.empty()) {
        fallback = gens;
        fallback_at = used;
      }
      return false;
    }
    const FieldCtx& K = *R.field;
    const auto total = nt::checked_pow(K.p0(), static_cast<unsigned>(space.size()));
    const std::uint64_t limit = total ? *total : ~std::uint64_t{0};
    for (std::uint64_t idx = start; idx < limit; ++idx) {
      ++used;
      if (exhausted()) return false;
      const FFElem v = combination(K, space, idx);
      auto trial = gens;
      for (const auto& w : closure(v)) trial.push_back(w);
      const KernelSpace span = fp_span(K, s, trial);
      if (span.dimension() <= static_cast<int>(basis.size()) || span.dimension() > target) continue;
      if (!isotropic(R, span.basis)) continue;
      if (dfs(trial, span.basis, idx + 1)) return true;
      if (exhausted()) return false;
    }
    return false;
  }
};

bool eigenvector_path(const LinPoly& R, const LinPoly& E, int n, AbelianData& out) {
  const FieldCtx& K = *R.field;
  const int s = R.s;
  const int e = R.degree();
  const std::uint64_t p = *nt::checked_pow(K.p0(), static_cast<unsigned>(s));
  if ((p - 1) % static_cast<std::uint64_t>(n) != 0) return false;
  for (const auto& c : R.a)
    if (!K.in_subfield(c, s)) return false;
  const std::uint64_t q = K.order();
  const FFElem alpha = K.pow(K.generator(), (q - 1) / (static_cast<std::uint64_t>(n) * (p - 1)));
  const FFElem zeta = K.pow(alpha, p - 1);
  std::vector<int> cands;
  for (int k = 0; k < n; ++k)
    if (K.is_zero(eval(E, K.pow(alpha, static_cast<std::uint64_t>(k))))) cands.push_back(k);
  std::vector<int> chosen;
  std::function<bool(std::size_t)> pick = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == e) return true;
    for (std::size_t i = from; i < cands.size(); ++i) {
      const int k = cands[i];
      bool ok = (2 * k) % n != 0;
      for (int c : chosen) ok = ok && (k + c) % n != 0;
      if (!ok) continue;
      chosen.push_back(k);
      if (pick(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!pick(0)) return false;
  LinPoly F = LinPoly::monomial(K, s, 0, K.one());
  for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
    LinPoly f = LinPoly::zero(K, s);
    f.a = {K.neg(K.pow(zeta, static_cast<std::uint64_t>(*it))), K.one()};
    F = ore_compose(f, F);
  }
  out.fp_basis.clear();
  for (int k : chosen) out.fp_basis.push_back(K.pow(alpha, static_cast<std::uint64_t>(k)));
  out.F_A = F;
  out.exponents = chosen;
  out.alpha = alpha;
  out.path = "eigenvector";
  return true;
}

}  // namespace

HeisenbergElem heis_mul(const LinPoly& R, const HeisenbergElem& a, const HeisenbergElem& b) {
  const FieldCtx& K = *R.field;
  return {K.add(a.v, b.v), K.add(K.add(a.t, b.t), f_r(R, a.v, b.v))};
}

HeisenbergElem heis_section(const LinPoly& R, const FFElem& x) {
  const FieldCtx& K = *R.field;
  return {x, K.mul(f_r(R, x, x), K.inv(K.from_int(2)))};
}

FFElem symplectic_form(const LinPoly& R, const FFElem& x, const FFElem& y) {
  const LinPoly E = e_r(R);
  require(R.field->is_zero(eval(E, x)) && R.field->is_zero(eval(E, y)), Errc::NotInKernel,
          "symplectic form evaluated outside V_R");
  return omega(R, x, y);
}

std::uint64_t AbelianData::character_count() const {
  return *nt::checked_pow(field->p0(), static_cast<unsigned>(dim()));
}

bool a_in_fq2(const LinPoly& R, const std::vector<FFElem>& abar_basis, int s) {
  const FieldCtx& K = *R.field;
  std::vector<FFElem> Rb;
  for (const auto& b : abar_basis) Rb.push_back(eval(R, b));
  for (std::size_t i = 0; i < abar_basis.size(); ++i) {
    if (!K.is_zero(K.trace_to(K.mul(abar_basis[i], Rb[i]), s))) return false;
    for (std::size_t j = i + 1; j < abar_basis.size(); ++j) {
      const FFElem pol = K.add(K.mul(abar_basis[i], Rb[j]), K.mul(abar_basis[j], Rb[i]));
      if (!K.is_zero(K.trace_to(pol, s))) return false;
    }
  }
  return true;
}

FFElem c_a(const LinPoly& R, const LinPoly& F_A, const std::vector<FFElem>& abar_basis, bool* product_checked) {
  const FieldCtx& K = *R.field;
  require(!F_A.is_zero() && !K.is_zero(F_A.a[0]), Errc::ZeroConstantTerm, "F_A has zero constant term");
  const int e = R.degree();
  FFElem cA = K.mul(R.lead(), K.inv(K.mul(K.from_int(2), F_A.a[0])));
  if (e % 2) cA = K.neg(cA);
  bool checked = false;
  const auto count = nt::checked_pow(K.p0(), static_cast<unsigned>(abar_basis.size()));
  if (count && *count <= (std::uint64_t{1} << 20)) {
    FFElem prod = K.one();
    for (std::uint64_t idx = 1; idx < *count; ++idx) prod = K.mul(prod, combination(K, abar_basis, idx));
    FFElem alt = K.mul(K.mul(R.lead(), K.inv(K.from_int(2))), K.inv(prod));
    if (e % 2) alt = K.neg(alt);
    require(alt == cA, Errc::Mismatch, "product and constant-term forms of c_A disagree");
    checked = true;
  }
  if (product_checked) *product_checked = checked;
  return cA;
}

LinPoly complement_poly(const LinPoly& F_A, int n) {
  const LinPoly N = LinPoly::frobenius_minus_identity(*F_A.field, F_A.s, n);
  auto [Q, Rm] = ore_right_divide(N, F_A);
  require(Rm.is_zero(), Errc::NonzeroRemainder, "x^q - x is not right-divisible by F_A");
  require(ore_compose(F_A, Q) == N, Errc::NonzeroRemainder, "F_A o a differs from x^q - x");
  return Q;
}

AbelianData find_abelian(const LinPoly& R, const AbelianOptions& opt) {
  const FieldCtx& K = *R.field;
  require(K.p0() != 2, Errc::HypothesisViolated, "p0 = 2");
  require(!R.is_zero() && R.degree() >= 1, Errc::DegreeZero, "e = 0");
  const int s = R.s;
  require(K.degree() % s == 0, Errc::FieldMismatch, "F_p is not contained in the coefficient field");
  const int n = K.degree() / s;
  const int e = R.degree();
  const LinPoly E = e_r(R);

  AbelianData d;
  d.field = &K;
  d.s = s;
  d.n = n;
  d.R = R;

  bool found = opt.allow_eigenvector && eigenvector_path(R, E, n, d);
  if (!found) {
    LagrangianSearch search{R, s, e * s, kernel(E).basis, [](const FFElem& v) { return std::vector<FFElem>{v}; },
                            opt.budget, 0, {}, nullptr, {}, 0};
    search.accept = [&R, s](const std::vector<FFElem>& b) { return a_in_fq2(R, b, s); };
    if (search.run()) {
      d.fp_basis = fp_basis(fp_span(K, s, search.found_gens), s);
      d.F_A = subspace_poly(fp_span(K, s, search.found_gens), s);
      d.path = "isotropic-search";
      found = true;
    }
  }
  if (found) {
    d.basis = fp_span(K, s, d.fp_basis).basis;
    d.in_Fq = true;
  } else {
    require(opt.ambient != nullptr, Errc::NoFrobeniusStableLagrangian,
            "no Lagrangian inside V_R cap F_q within budget " + std::to_string(opt.budget));
    const SubfieldEmbed& emb = *opt.ambient;
    const FieldCtx& M = *emb.big();
    const LinPoly RM = embed(R, emb);
    const int mq = K.degree();
    LagrangianSearch search{RM, s, e * s, kernel(e_r(RM)).basis,
                            [&M, mq](const FFElem& v) {
                              std::vector<FFElem> orbit{v};
                              for (FFElem w = M.frobenius(v, mq); !(w == v); w = M.frobenius(w, mq)) orbit.push_back(w);
                              return orbit;
                            },
                            opt.budget, 0, {}, nullptr, {}, 0};
    require(search.run(), Errc::NoFrobeniusStableLagrangian,
            "no Frobenius-stable Lagrangian within budget " + std::to_string(opt.budget));
    const KernelSpace span = fp_span(M, s, search.found_gens);
    d.field = &M;
    d.R = RM;
    d.fp_basis = fp_basis(span, s);
    d.basis = span.basis;
    d.F_A = subspace_poly(span, s);
    d.path = "frobenius-stable";
    d.in_Fq = false;
    for (const auto& c : d.F_A.a)
      require(M.in_subfield(c, mq), Errc::NotFpStable, "F_A is not defined over F_q");
  }

  const FieldCtx& W = *d.field;
  require(isotropic(d.R, d.basis), Errc::Mismatch, "Abar is not isotropic");
  const LinPoly Ed = e_r(d.R);
  for (const auto& b : d.basis) require(W.is_zero(eval(Ed, b)), Errc::NotInKernel, "Abar is not inside V_R");
  for (const auto& b : d.basis) require(W.is_zero(eval(d.F_A, b)), Errc::Mismatch, "F_A does not vanish on Abar");
  require(kernel(d.F_A).dimension() == e * s || !d.in_Fq, Errc::Mismatch, "Ker F_A has the wrong dimension");

  d.c_A = c_a(d.R, d.F_A, d.basis, &d.c_A_product_checked);
  if (!d.in_Fq) return d;

  d.A_in_Fq2 = a_in_fq2(R, d.basis, s);
  d.a = complement_poly(d.F_A, n);
  d.ker_a = kernel(d.a).basis;

  const std::size_t m = static_cast<std::size_t>(K.degree());
  const std::size_t es = d.basis.size();
  FpMatrix B(K.p0(), m, es);
  for (std::size_t j = 0; j < es; ++j)
    for (std::size_t i = 0; i < m; ++i) B(i, j) = d.basis[j].c[i];
  d.a_coords = FpMatrix(K.p0(), es, m);
  for (std::size_t j = 0; j < m; ++j) {
    FFElem ej = K.zero();
    ej.c[j] = 1;
    const auto coords = B.solve(K.to_vector(eval(d.a, ej)));
    require(coords.has_value(), Errc::Mismatch, "a(x) leaves Abar");
    for (std::size_t i = 0; i < es; ++i) d.a_coords(i, j) = (*coords)[i];
  }
  FpMatrix T(K.p0(), m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      FFElem ej = K.zero(), ek = K.zero();
      ej.c[j] = 1;
      ek.c[k] = 1;
      T(j, k) = K.prime_trace(K.mul(ej, ek));
    }
  }
  for (std::size_t i = 0; i < es; ++i) {
    FpVector rhs(d.a_coords.row(i).begin(), d.a_coords.row(i).end());
    const auto sol = T.solve(rhs);
    require(sol.has_value(), Errc::SingularTraceSystem, "trace pairing is singular");
    d.eta_unit.push_back(K.from_vector(*sol));
  }
  return d;
}

std::vector<Coeff> character_from_index(const AbelianData& d, std::uint64_t idx) {
  std::vector<Coeff> chi(d.basis.size(), 0);
  for (auto& c : chi) {
    c = static_cast<Coeff>(idx % d.field->p0());
    idx /= d.field->p0();
  }
  return chi;
}

FFElem eta_of_char(const AbelianData& d, const std::vector<Coeff>& chi, const FFElem& lambda) {
  require(d.in_Fq && !d.eta_unit.empty(), Errc::FormulaPathUnavailable, "character solve needs Abar inside F_q");
  const FieldCtx& K = *d.field;
  FFElem eta = K.zero();
  for (std::size_t i = 0; i < chi.size(); ++i)
    if (chi[i]) eta = K.add(eta, K.scale(d.eta_unit[i], chi[i]));
  return K.mul(eta, K.inv(lambda));
}

std::uint32_t xi_prime_exponent(const AbelianData& d, const std::vector<Coeff>& chi, const FFElem& x) {
  const FieldCtx& K = *d.field;
  const auto coords = d.a_coords.apply(K.to_vector(x));
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) acc += std::uint64_t{chi[i]} * coords[i];
  return static_cast<std::uint32_t>(acc % K.p0());
}

}  // namespace asmax
