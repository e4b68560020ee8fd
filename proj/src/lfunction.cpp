#include "asmax/lfunction.hpp"

#include <exception>
#include <functional>
#include <map>
#include <memory>

#include "asmax/error.hpp"
#include "asmax/numtheory.hpp"

namespace asmax {

namespace {

mpz_class mpz_pow(std::uint64_t base, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, static_cast<unsigned long>(e));
  return r;
}

FFElem parse_coeff(const FieldCtx& K, const CoeffSpec& c) {
  switch (c.kind) {
    case CoeffSpec::Kind::Integer:
      return K.from_int(c.value);
    case CoeffSpec::Kind::GeneratorPower: {
      const std::uint64_t ord = K.order() - 1;
      std::int64_t k = c.value % static_cast<std::int64_t>(ord);
      if (k < 0) k += static_cast<std::int64_t>(ord);
      return K.pow(K.generator(), static_cast<std::uint64_t>(k));
    }
    case CoeffSpec::Kind::Vector:
      require(c.coords.size() <= static_cast<std::size_t>(K.degree()), Errc::InvalidSpec,
              "coefficient vector longer than the field degree");
      return K.from_coeffs(c.coords);
  }
  fail(Errc::InvalidSpec, "unknown coefficient kind");
}

// Identity when the degrees agree, so spec coordinates keep their meaning.
std::function<FFElem(const FFElem&)> embedder(const FieldPtr& small, const FieldPtr& big) {
  if (small.get() == big.get()) return [](const FFElem& x) { return x; };
  auto emb = std::make_shared<SubfieldEmbed>(small, big);
  return [emb](const FFElem& x) { return emb->map(x); };
}

LinPoly scaled(const LinPoly& R, const FFElem& c) {
  LinPoly out = R;
  for (auto& a : out.a) a = R.field->mul(a, c);
  return out;
}

std::vector<FFElem> nonzero_subfield(const FieldCtx& K, int d) {
  std::vector<FFElem> out;
  for (const auto& x : K.subfield_elements(d))
    if (!K.is_zero(x)) out.push_back(x);
  return out;
}

AbelianData abelian_for(const LinPoly& R, const LfOptions& opt) {
  const FieldCtx& K = *R.field;
  AbelianOptions ao;
  ao.budget = opt.budget;
  try {
    return find_abelian(R, ao);
  } catch (const Error& err) {
    if (err.code() != Errc::NoFrobeniusStableLagrangian) throw;
  }
  // Nothing inside F_q: look in the field where V_R splits, only to report why.
  const int split = splitting_degree(e_r(R), kMaxDegree);
  const auto M = static_cast<int>(nt::lcm(static_cast<std::uint64_t>(split), static_cast<std::uint64_t>(K.degree())));
  const auto order = nt::checked_pow(K.p0(), static_cast<unsigned>(M));
  if (split <= 0 || M > kMaxDegree || !order || *order > opt.ambient_cap)
    fail(Errc::FormulaPathUnavailable, "no Lagrangian inside V_R cap F_q; splitting field too large to search");
  FieldPtr small = make_field(K.p0(), K.degree());
  SubfieldEmbed emb(small, make_field(K.p0(), M));
  ao.ambient = &emb;
  AbelianData d;
  try {
    d = find_abelian(R, ao);
  } catch (const Error& err) {
    if (err.code() == Errc::NoFrobeniusStableLagrangian)
      fail(Errc::FormulaPathUnavailable, std::string("no Frobenius-stable Lagrangian: ") + err.what());
    throw;
  }
  fail(Errc::FormulaPathUnavailable,
       "the Frobenius-stable Lagrangian found (" + d.path + ") does not lie in F_q, so A is not inside F_q^2");
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Maximal:
      return "Maximal";
    case Verdict::Minimal:
      return "Minimal";
    case Verdict::Neither:
      return "Neither";
  }
  return "?";
}

std::string evidence_name(Evidence e) {
  switch (e) {
    case Evidence::Formula:
      return "formula";
    case Evidence::Oracle:
      return "oracle";
    case Evidence::Both:
      return "both";
  }
  return "?";
}

std::uint64_t genus(std::uint64_t p, int e, int r) {
  const auto pe = nt::checked_pow(p, static_cast<unsigned>(e));
  const auto pr = nt::checked_pow(p, static_cast<unsigned>(r));
  require(pe && pr && *pr - 1 <= ~std::uint64_t{0} / *pe, Errc::TooLarge, "genus overflows 64 bits");
  return *pe * (*pr - 1) / 2;
}

ResolvedCurve resolve(const CurveSpec& spec) {
  require(nt::is_prime(spec.p0), Errc::NonPrimeP0, std::to_string(spec.p0) + " is not prime");
  require(spec.p0 != 2, Errc::InvalidSpec, "characteristic 2 is not supported");
  require(spec.s >= 1 && spec.n >= 1 && spec.r >= 1, Errc::InvalidSpec, "s, n and r must be positive");
  require(!spec.R.empty(), Errc::ZeroPolynomial, "R has no coefficients");

  ResolvedCurve c;
  c.spec = spec;
  const int mc = spec.n * spec.s;
  c.coeff_field = make_field(spec.p0, mc);
  std::vector<FFElem> coeffs;
  for (const auto& cs : spec.R) coeffs.push_back(parse_coeff(*c.coeff_field, cs));
  require(!c.coeff_field->is_zero(coeffs.back()), Errc::InvalidSpec, "leading coefficient a_e is zero");

  int dz = 1;
  FFElem zeta_small;
  if (spec.zeta) {
    std::vector<Coeff> mp;
    for (auto v : spec.zeta->minpoly) {
      std::int64_t r = v % static_cast<std::int64_t>(spec.p0);
      mp.push_back(static_cast<Coeff>(r < 0 ? r + spec.p0 : r));
    }
    require(mp.size() >= 2 && mp.back() == 1, Errc::InvalidSpec, "zeta minimal polynomial must be monic of degree >= 1");
    require(is_irreducible(spec.p0, mp), Errc::InvalidSpec, "zeta minimal polynomial is reducible over F_p0");
    dz = static_cast<int>(mp.size()) - 1;
    c.zeta_field = make_field(spec.p0, dz);
    const auto roots = c.zeta_field->roots_of_prime_poly(spec.zeta->minpoly);
    require(spec.zeta->which_root >= 0 && static_cast<std::size_t>(spec.zeta->which_root) < roots.size(),
            Errc::InvalidSpec, "which_root out of range");
    zeta_small = roots[static_cast<std::size_t>(spec.zeta->which_root)];
  } else {
    c.zeta_field = make_field(spec.p0, 1);
    zeta_small = c.zeta_field->one();
  }

  c.fb = static_cast<int>(nt::lcm(static_cast<std::uint64_t>(mc), static_cast<std::uint64_t>(dz)));
  c.base = make_field(spec.p0, c.fb);
  const auto emb_coeff = embedder(c.coeff_field, c.base);
  c.zeta = embedder(c.zeta_field, c.base)(zeta_small);

  c.R = LinPoly::zero(*c.base, spec.s);
  for (const auto& a : coeffs) c.R.a.push_back(c.base->mul(c.zeta, emb_coeff(a)));
  c.n_base = c.fb / spec.s;
  c.p = *nt::checked_pow(spec.p0, static_cast<unsigned>(spec.s));
  c.q = c.base->order();
  c.e = c.R.degree();
  c.genus = genus(c.p, c.e, spec.r);
  return c;
}

Eigenvalue tau_eigenvalue(const AbelianData& d, const FFElem& lambda, const std::vector<Coeff>& chi,
                          const GaussSum& g) {
  require(d.in_Fq && d.A_in_Fq2, Errc::HypothesisViolated, "A is not inside F_q^2");
  const FieldCtx& K = *d.field;
  require(K.p0() != 2, Errc::HypothesisViolated, "p0 = 2");
  Eigenvalue ev;
  ev.lambda = lambda;
  ev.chi = chi;
  ev.eta = eta_of_char(d, chi, lambda);
  const FFElem eta1 = K.mul(ev.eta, lambda);
  const FFElem denom = K.mul(K.mul(K.from_int(4), d.c_A), lambda);
  ev.phase = K.prime_trace(K.neg(K.mul(K.mul(eta1, eta1), K.inv(denom))));
  ev.sign = K.legendre(K.mul(K.from_int(2), d.R.lead()));
  require(K.legendre(d.c_A) == ev.sign, Errc::Mismatch, "(c_A/q) differs from (2 a_e/q)");
  CycInt v = CycInt::zeta_pow(K.p0(), ev.phase) * g.value;
  ev.tau = ev.sign < 0 ? -v : v;
  return ev;
}

EigenvalueSet eigenvalues(const ResolvedCurve& c, const LfOptions& opt) {
  const FieldCtx& K = *c.base;
  require(K.p0() != 2, Errc::FormulaPathUnavailable, "p0 = 2");
  require(c.e >= 1, Errc::FormulaPathUnavailable, "e = 0");
  const int s = c.spec.s;
  const int r = c.spec.r;
  require(c.fb % (s * r) == 0, Errc::SubfieldViolation,
          "F_{p^r} is not contained in the base field (r = " + std::to_string(r) + ")");

  EigenvalueSet out;
  out.q = c.q;
  out.f0 = c.fb;
  out.p0 = K.p0();
  out.genus = c.genus;

  if (r > 1) {
    const auto pr = nt::checked_pow(c.p, static_cast<unsigned>(r));
    require(pr && *pr - 1 <= opt.max_twists, Errc::FormulaPathUnavailable,
            "F_{p^r}^x has more than " + std::to_string(opt.max_twists) + " twists");
  }
  const std::vector<FFElem> twists = r == 1 ? std::vector<FFElem>{K.one()} : nonzero_subfield(K, s * r);
  const std::vector<FFElem> lambdas = r == 1 ? nonzero_subfield(K, s) : std::vector<FFElem>{K.one()};

  std::vector<GaussSum> gauss;
  const mpz_class q_mpz = mpz_pow(K.p0(), static_cast<std::uint64_t>(c.fb));
  // (-1/q) q
  const bool minus = K.p0() % 4 == 3 && c.fb % 2 == 1;
  const CycInt g_sq = CycInt::integer(K.p0(), minus ? mpz_class(-q_mpz) : q_mpz);
  for (const auto& l : lambdas) {
    gauss.push_back(gauss_sum(CharSpec{l}, opt.gauss_direct_cap));
    require(gauss.back().value * gauss.back().value == g_sq, Errc::Mismatch, "G(psi_q)^2 != (-1/q) q");
    out.gauss_direct = out.gauss_direct && gauss.back().direct;
  }

  for (const auto& z : twists) {
    AbelianData d = abelian_for(scaled(c.R, z), opt);
    if (!d.A_in_Fq2) fail(Errc::FormulaPathUnavailable, "Lagrangian inside F_q found but A is not inside F_q^2");
    const std::uint64_t nchars = d.character_count();
    for (std::size_t li = 0; li < lambdas.size(); ++li) {
      std::vector<Eigenvalue> block(nchars);
      std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(nchars); ++idx) {
        try {
          const auto chi = character_from_index(d, static_cast<std::uint64_t>(idx));
          block[static_cast<std::size_t>(idx)] = tau_eigenvalue(d, lambdas[li], chi, gauss[li]);
          block[static_cast<std::size_t>(idx)].twist = z;
        } catch (...) {
#pragma omp critical
          err = std::current_exception();
        }
      }
      if (err) std::rethrow_exception(err);
      for (auto& ev : block) out.list.push_back(std::move(ev));
    }
    out.abelian.push_back(std::move(d));
  }
  require(out.list.size() == 2 * c.genus, Errc::Mismatch, "eigenvalue count differs from 2g");
  return out;
}

std::vector<std::pair<CycInt, std::uint64_t>> distinct_taus(const EigenvalueSet& eig) {
  std::map<CycInt, std::uint64_t> m;
  for (const auto& ev : eig.list) ++m[ev.tau];
  return {m.begin(), m.end()};
}

std::vector<mpz_class> power_sums(const EigenvalueSet& eig, std::uint64_t kmax) {
  const auto dt = distinct_taus(eig);
  std::vector<mpz_class> S(kmax + 1);
  S[0] = static_cast<unsigned long>(eig.list.size());
  std::vector<CycInt> powv;
  powv.assign(dt.size(), CycInt::integer(eig.p0, 1));
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    CycInt acc(eig.p0);
    for (std::size_t i = 0; i < dt.size(); ++i) {
      powv[i] = powv[i] * dt[i].first;
      acc += powv[i] * mpz_class(static_cast<unsigned long>(dt[i].second));
    }
    S[k] = acc.rational_value();
  }
  return S;
}

mpz_class power_sum(const EigenvalueSet& eig, std::uint64_t k) {
  CycInt acc(eig.p0);
  for (const auto& [t, m] : distinct_taus(eig)) acc += t.pow(k) * mpz_class(static_cast<unsigned long>(m));
  return acc.rational_value();
}

Verdict classify(const EigenvalueSet& eig, std::uint64_t k) {
  if ((static_cast<std::uint64_t>(eig.f0) * k) % 2) return Verdict::Neither;
  const mpz_class half = mpz_pow(eig.p0, static_cast<std::uint64_t>(eig.f0) * k / 2);
  const CycInt plus = CycInt::integer(eig.p0, half);
  const CycInt minus = CycInt::integer(eig.p0, -half);
  bool all_max = true, all_min = true;
  for (const auto& [t, m] : distinct_taus(eig)) {
    const CycInt tk = t.pow(k);
    all_max = all_max && tk == minus;
    all_min = all_min && tk == plus;
  }
  if (all_max) return Verdict::Maximal;
  if (all_min) return Verdict::Minimal;
  return Verdict::Neither;
}

std::vector<mpz_class> lpoly_from_power_sums(const std::vector<mpz_class>& S, std::uint64_t g, const mpz_class& q) {
  require(S.size() > g, Errc::Mismatch, "not enough power sums");
  std::vector<mpz_class> c(2 * g + 1);
  c[0] = 1;
  for (std::uint64_t i = 1; i <= g; ++i) {
    mpz_class acc = 0;
    for (std::uint64_t j = 1; j <= i; ++j) acc += S[j] * c[i - j];
    require(acc % static_cast<unsigned long>(i) == 0, Errc::Mismatch, "Newton identity is not integral");
    c[i] = -acc / static_cast<unsigned long>(i);
  }
  mpz_class qp = 1;
  for (std::uint64_t i = g; i-- > 0;) {
    qp *= q;
    c[2 * g - i] = qp * c[i];
  }
  return c;
}

std::vector<mpz_class> power_sums_from_lpoly(const std::vector<mpz_class>& L, std::uint64_t kmax) {
  std::vector<mpz_class> S(kmax + 1);
  S[0] = static_cast<unsigned long>(L.size() - 1);
  auto coeff = [&](std::uint64_t i) { return i < L.size() ? L[i] : mpz_class(0); };
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    mpz_class acc = -mpz_class(static_cast<unsigned long>(k)) * coeff(k);
    for (std::uint64_t j = 1; j < k; ++j) acc -= coeff(j) * S[k - j];
    S[k] = acc;
  }
  return S;
}

std::vector<mpz_class> l_polynomial(const EigenvalueSet& eig, std::uint64_t max_degree) {
  const std::uint64_t two_g = eig.list.size();
  require(two_g <= max_degree, Errc::TooLarge, "L-polynomial degree " + std::to_string(two_g) + " above cap");
  const std::uint64_t g = two_g / 2;
  const auto S = power_sums(eig, two_g);
  const mpz_class q = mpz_pow(eig.p0, static_cast<std::uint64_t>(eig.f0));
  auto L = lpoly_from_power_sums(S, g, q);
  // The mirrored half must reproduce the remaining power sums.
  const auto back = power_sums_from_lpoly(L, two_g);
  for (std::uint64_t k = 1; k <= two_g; ++k)
    require(back[k] == S[k], Errc::Mismatch, "functional equation fails at power sum " + std::to_string(k));
  return L;
}

mpz_class predicted_count(const mpz_class& q, std::uint64_t k, const mpz_class& S_k) {
  mpz_class qk;
  mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
  return qk + 1 - S_k;
}

bool half_integral(std::uint64_t m) { return m % 2 == 0; }

Verdict verdict_from_count(const mpz_class& count, std::uint32_t p0, std::uint64_t m, std::uint64_t g) {
  if (!half_integral(m)) return Verdict::Neither;
  const mpz_class h = mpz_pow(p0, m / 2);
  const mpz_class Q = h * h;
  const mpz_class span = 2 * mpz_class(static_cast<unsigned long>(g)) * h;
  if (count == Q + 1 + span) return Verdict::Maximal;
  if (count == Q + 1 - span) return Verdict::Minimal;
  return Verdict::Neither;
}

std::uint64_t normalized_order(const CycInt& tau, std::uint32_t p0, int f0) {
  require(f0 % 2 == 0, Errc::OddF0, "sqrt(q) is irrational for odd f0");
  for (std::uint64_t j : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{p0}, 2 * std::uint64_t{p0}}) {
    if (tau.pow(j) == CycInt::integer(p0, mpz_pow(p0, static_cast<std::uint64_t>(f0) / 2 * j))) return j;
  }
  fail(Errc::Mismatch, "tau / sqrt(q) is not a root of unity of order dividing 2 p0");
}

}  // namespace asmax
