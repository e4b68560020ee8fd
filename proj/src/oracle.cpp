#include "asmax/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <omp.h>

#include "asmax/error.hpp"
#include "asmax/numtheory.hpp"
#include "asmax/report.hpp"

namespace asmax {

namespace {

struct Prepared {
  FieldPtr F;
  std::uint32_t p0 = 0;
  std::size_t m = 0;
  int d = 0;  // kernel of z -> z^P - z is F_{p0^d}
  std::uint64_t fiber = 1;
  std::vector<DOTerm> terms;  // embedded into F
};

Prepared prepare(const DOCurve& c, int degree, const OracleOptions& opt) {
  require(degree >= 1 && degree % c.field->degree() == 0, Errc::FieldMismatch,
          "count field must contain the coefficient field");
  const auto Q = nt::checked_pow(c.field->p0(), static_cast<unsigned>(degree));
  require(Q && *Q <= opt.cap && degree <= kMaxDegree, Errc::TooLarge,
          "field of degree " + std::to_string(degree) + " exceeds the enumeration cap " + std::to_string(opt.cap));
  Prepared P;
  P.F = make_field(c.field->p0(), degree);
  P.p0 = c.field->p0();
  P.m = static_cast<std::size_t>(degree);
  P.d = static_cast<int>(nt::gcd(static_cast<std::uint64_t>(c.as_exponent), static_cast<std::uint64_t>(degree)));
  P.fiber = *nt::checked_pow(P.p0, static_cast<unsigned>(P.d));
  std::optional<SubfieldEmbed> emb;
  if (c.field.get() != P.F.get()) emb.emplace(c.field, P.F);
  for (const auto& t : c.terms) P.terms.push_back({emb ? emb->map(t.coef) : t.coef, t.u, t.v});
  return P;
}

FFElem rhs(const Prepared& P, const FFElem& x) {
  const FieldCtx& F = *P.F;
  FFElem acc = F.zero();
  for (const auto& t : P.terms) acc = F.add(acc, F.mul(t.coef, F.mul(F.frobenius(x, t.u), F.frobenius(x, t.v))));
  return acc;
}

}  // namespace

DOCurve do_curve(const ResolvedCurve& c) {
  DOCurve out;
  out.field = c.base;
  out.as_exponent = c.spec.s * c.spec.r;
  out.genus = c.genus;
  for (int i = 0; i <= c.R.degree(); ++i) {
    const FFElem& a = c.R.a[static_cast<std::size_t>(i)];
    if (!c.base->is_zero(a)) out.terms.push_back({a, 0, c.spec.s * i});
  }
  return out;
}

std::uint64_t count_affine(const DOCurve& c, int degree, const OracleOptions& opt) {
  const Prepared P = prepare(c, degree, opt);
  const FieldCtx& F = *P.F;
  const std::size_t m = P.m;
  const std::uint32_t p0 = P.p0;

  // Functionals vanishing exactly on the image of z -> z^P - z.
  FpMatrix L = F.frobenius_matrix(c.as_exponent % degree);
  for (std::size_t i = 0; i < m; ++i) L(i, i) = (L(i, i) + p0 - 1) % p0;
  const auto ells = L.left_nullspace();
  require(static_cast<int>(ells.size()) == P.d, Errc::Mismatch, "image codimension differs from the kernel dimension");

  // Upper-triangular quadratic form per functional.
  const std::size_t nf = ells.size();
  std::vector<std::uint64_t> C(nf * m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      FFElem ea = F.zero(), eb = F.zero();
      ea.c[a] = 1;
      eb.c[b] = 1;
      FFElem v = F.zero();
      for (const auto& t : P.terms) v = F.add(v, F.mul(t.coef, F.mul(F.frobenius(ea, t.u), F.frobenius(eb, t.v))));
      for (std::size_t j = 0; j < nf; ++j) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < m; ++i) s += std::uint64_t{ells[j][i]} * v.c[i];
        const std::size_t lo = std::min(a, b), hi = std::max(a, b);
        auto& slot = C[(j * m + lo) * m + hi];
        slot = (slot + s) % p0;
      }
    }
  }

  const FpMatrix G = F.mul_matrix(F.generator());
  std::vector<std::uint32_t> Gd(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) Gd[i * m + j] = G(i, j);

  const std::uint64_t nonzero = F.order() - 1;
  int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(nonzero, std::uint64_t(threads) * 16));
  std::uint64_t hits = 1;  // x = 0

#pragma omp parallel for schedule(dynamic, 1) reduction(+ : hits) num_threads(threads)
  for (std::int64_t ch = 0; ch < static_cast<std::int64_t>(chunks); ++ch) {
    const std::uint64_t lo = nonzero * static_cast<std::uint64_t>(ch) / chunks;
    const std::uint64_t hi = nonzero * static_cast<std::uint64_t>(ch + 1) / chunks;
    const FFElem start = F.pow(F.generator(), lo);
    std::vector<std::uint32_t> x(start.c.begin(), start.c.begin() + static_cast<std::ptrdiff_t>(m)), nx(m);
    std::uint64_t local = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      bool in_image = true;
      for (std::size_t j = 0; j < nf && in_image; ++j) {
        const std::uint64_t* Cj = &C[j * m * m];
        std::uint64_t acc = 0;
        for (std::size_t a = 0; a < m; ++a) {
          if (!x[a]) continue;
          std::uint64_t inner = 0;
          for (std::size_t b = a; b < m; ++b) inner += Cj[a * m + b] * x[b];
          acc += (inner % p0) * x[a];
        }
        in_image = acc % p0 == 0;
      }
      if (in_image) ++local;
      for (std::size_t r = 0; r < m; ++r) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < m; ++k) s += std::uint64_t{Gd[r * m + k]} * x[k];
        nx[r] = static_cast<std::uint32_t>(s % p0);
      }
      x.swap(nx);
    }
    hits += local;
  }
  return hits * P.fiber;
}

std::uint64_t count_affine_serial(const DOCurve& c, int degree, const OracleOptions& opt) {
  const Prepared P = prepare(c, degree, opt);
  const FieldCtx& F = *P.F;
  std::uint64_t hits = 0;
  for (std::uint64_t idx = 0; idx < F.order(); ++idx)
    if (F.is_zero(F.trace_to(rhs(P, F.from_index(idx)), P.d))) ++hits;
  return hits * P.fiber;
}

CountResult count_points(const DOCurve& c, int degree, const OracleOptions& opt) {
  CountResult r;
  r.degree = degree;
  r.p0 = c.field->p0();
  r.affine = count_affine(c, degree, opt);
  r.Q = *nt::checked_pow(r.p0, static_cast<unsigned>(degree));
  r.projective = r.affine + 1;
  r.genus = c.genus;
  if (degree % 2 == 0) {
    mpz_class h;
    mpz_ui_pow_ui(h.get_mpz_t(), r.p0, static_cast<unsigned long>(degree / 2));
    r.weil_slack = h * h + 1 + 2 * mpz_class(static_cast<unsigned long>(r.genus)) * h -
                   mpz_class(static_cast<unsigned long>(r.projective));
  }
  return r;
}

bool within_weil(const CountResult& r) {
  // (N - Q - 1)^2 <= 4 g^2 Q
  mpz_class dev = mpz_class(static_cast<unsigned long>(r.projective)) - mpz_class(static_cast<unsigned long>(r.Q)) - 1;
  mpz_class g = static_cast<unsigned long>(r.genus);
  return dev * dev <= 4 * g * g * mpz_class(static_cast<unsigned long>(r.Q));
}

Verdict classify_by_counts(const CountResult& r) {
  return verdict_from_count(mpz_class(static_cast<unsigned long>(r.projective)), r.p0,
                            static_cast<std::uint64_t>(r.degree), r.genus);
}

std::vector<mpz_class> oracle_lpoly(const std::vector<CountResult>& counts, std::uint32_t p0, int base_degree,
                                    std::uint64_t g) {
  require(counts.size() >= g, Errc::Mismatch, "oracle L-polynomial needs g counts");
  std::vector<mpz_class> S(g + 1);
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p0, static_cast<unsigned long>(base_degree));
  for (std::uint64_t k = 1; k <= g; ++k) {
    const auto& r = counts[k - 1];
    require(r.degree == base_degree * static_cast<int>(k), Errc::Mismatch, "counts out of order");
    mpz_class qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
    S[k] = qk + 1 - mpz_class(static_cast<unsigned long>(r.projective));
  }
  return lpoly_from_power_sums(S, g, q);
}

std::vector<PredictionCheck> verify_predictions(const EigenvalueSet& eig, const DOCurve& c,
                                                const std::vector<std::uint64_t>& ks, const OracleOptions& opt) {
  std::vector<PredictionCheck> out;
  const mpz_class q = static_cast<unsigned long>(eig.q);
  for (auto k : ks) {
    PredictionCheck pc;
    pc.k = k;
    pc.count = count_points(c, eig.f0 * static_cast<int>(k), opt).projective;
    pc.predicted = predicted_count(q, k, power_sum(eig, k));
    pc.ok = pc.predicted == mpz_class(static_cast<unsigned long>(pc.count));
    if (!pc.ok) {
      std::ostringstream os;
      os << "count over F_{q^" << k << "} is " << pc.count << " but the eigenvalues predict " << pc.predicted.get_str()
         << "; distinct tau:";
      for (const auto& [t, mult] : distinct_taus(eig)) os << " [" << t.to_string() << "] x" << mult;
      fail(Errc::Mismatch, os.str());
    }
    out.push_back(pc);
  }
  return out;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

std::optional<CountResult> ResultCache::find(std::uint64_t key, int degree) const {
  std::lock_guard lock(mu_);
  std::ifstream in(path_);
  std::string line;
  std::optional<CountResult> hit;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key") || !j.contains("degree")) continue;
    if (j["key"].get<std::string>() != std::to_string(key) || j["degree"].get<int>() != degree) continue;
    hit = count_result_from_json(j);
    hit->cached = true;
  }
  return hit;
}

void ResultCache::store(std::uint64_t key, const CountResult& r) {
  std::lock_guard lock(mu_);
  std::ofstream out(path_, std::ios::app);
  nlohmann::json j = to_json(r);
  j["key"] = std::to_string(key);
  out << j.dump() << '\n';
}

}  // namespace asmax
