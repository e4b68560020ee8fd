// asmax: classify curves, verify criteria, search families, count points.

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>
#include <json.hpp>

#include "asmax/criteria.hpp"
#include "asmax/error.hpp"
#include "asmax/linearized.hpp"
#include "asmax/numtheory.hpp"
#include "asmax/report.hpp"

using namespace asmax;
using u64 = std::uint64_t;

namespace {

enum Exit { kOk = 0, kUsage = 2, kInconsistent = 3, kRefused = 4 };

int exit_for(Errc c) {
  switch (c) {
    case Errc::Mismatch:
      return kInconsistent;
    case Errc::TooLarge:
    case Errc::BudgetExceeded:
    case Errc::FieldTooLarge:
    case Errc::DegreeTooLarge:
    case Errc::BoundExceeded:
      return kRefused;
    default:
      return kUsage;
  }
}

struct SpecArgs {
  std::string file;
  std::uint32_t p0 = 0;
  int s = 1, n = 1, r = 1;
  std::string R;
  std::string zeta;
  int which_root = 0;

  bool given() const { return !file.empty() || !R.empty(); }
};

void add_spec_options(CLI::App* sub, SpecArgs& a) {
  sub->add_option("--spec", a.file, "curve spec JSON file");
  sub->add_option("--p0", a.p0, "characteristic");
  sub->add_option("--s", a.s, "p = p0^s");
  sub->add_option("--n", a.n, "q = p^n");
  sub->add_option("--R", a.R, "coefficients a_0,a_1,... as integers or g^k");
  sub->add_option("--r", a.r, "z^{p^r} - z");
  sub->add_option("--zeta", a.zeta, "minimal polynomial of zeta over F_p0, low degree first");
  sub->add_option("--which-root", a.which_root, "root index of the zeta minimal polynomial");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    out.push_back(tok);
  }
  return out;
}

std::int64_t parse_int(const std::string& tok, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    fail(Errc::InvalidSpec, "malformed " + what + " entry '" + tok + "'");
  }
  require(used == tok.size(), Errc::InvalidSpec, "malformed " + what + " entry '" + tok + "'");
  return v;
}

CurveSpec build_spec(const SpecArgs& a) {
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    require(static_cast<bool>(in), Errc::InvalidSpec, "cannot open " + a.file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(Errc::InvalidSpec, std::string("bad JSON in ") + a.file + ": " + e.what());
    }
    return spec_from_json(j);
  }
  require(a.p0 != 0, Errc::InvalidSpec, "--p0 is required without --spec");
  require(!a.R.empty(), Errc::InvalidSpec, "--R is required without --spec");
  CurveSpec s;
  s.p0 = a.p0;
  s.s = a.s;
  s.n = a.n;
  s.r = a.r;
  for (const auto& tok : split_csv(a.R)) {
    require(!tok.empty(), Errc::InvalidSpec, "empty entry in --R");
    if (tok.rfind("g^", 0) == 0)
      s.R.push_back(CoeffSpec::gen_pow(parse_int(tok.substr(2), "--R")));
    else
      s.R.push_back(CoeffSpec::integer(parse_int(tok, "--R")));
  }
  if (!a.zeta.empty()) {
    ZetaSpec z;
    for (const auto& tok : split_csv(a.zeta)) z.minpoly.push_back(parse_int(tok, "--zeta"));
    z.which_root = a.which_root;
    s.zeta = z;
  }
  return s;
}

nlohmann::json header(const RunConfig& cfg) {
  return nlohmann::json{{"tool", "asmax"}, {"version", kVersion}, {"config", to_json(cfg)}};
}

void pretty_header(std::ostream& os, const RunConfig& cfg) {
  os << "asmax " << kVersion << "  cap=" << cfg.cap << " budget=" << cfg.budget << " kmax=" << cfg.kmax
     << " threads=" << cfg.threads << " seed=" << cfg.seed
     << " cache=" << (cfg.use_cache ? cfg.cache_path : std::string("off")) << "\n";
}

void bounds(VerdictRow& row, std::uint32_t p0, u64 g) {
  mpz_class Q;
  mpz_ui_pow_ui(Q.get_mpz_t(), p0, static_cast<unsigned long>(row.degree));
  mpz_class span = 4 * mpz_class(static_cast<unsigned long>(g)) * mpz_class(static_cast<unsigned long>(g)) * Q;
  span = sqrt(span);
  row.bound_hi = Q + 1 + span;
  row.bound_lo = Q + 1 - span;
}

// One row per k with degree fb*k; formula and direct counts are compared exactly.
std::vector<VerdictRow> verdict_rows(CurveContext& ctx, std::vector<std::string>& mismatches,
                                     std::vector<std::string>& gaps) {
  const auto& c = ctx.curve();
  const EigenvalueSet* eig = ctx.formula();
  std::vector<VerdictRow> rows;
  for (u64 k = 1; k <= ctx.config().kmax; ++k) {
    VerdictRow row;
    row.k = k;
    row.degree = c.fb * static_cast<int>(k);
    std::optional<Verdict> fv, ov;
    std::optional<mpz_class> fcount, ocount;
    if (eig) {
      fv = classify(*eig, k);
      fcount = predicted_count(mpz_class(static_cast<unsigned long>(eig->q)), k, power_sum(*eig, k));
    }
    if (ctx.oracle_feasible(row.degree)) {
      if (auto cnt = ctx.count(row.degree)) {
        ocount = mpz_class(static_cast<unsigned long>(cnt->projective));
        ov = classify_by_counts(*cnt);
      }
    }
    if (!ov) ov = ctx.oracle_verdict(row.degree);
    if (fcount && ocount && *fcount != *ocount)
      mismatches.push_back("k=" + std::to_string(k) + ": formula count " + fcount->get_str() + ", oracle count " +
                           ocount->get_str());
    if (fv && ov && *fv != *ov)
      mismatches.push_back("k=" + std::to_string(k) + ": formula " + verdict_name(*fv) + ", oracle " +
                           verdict_name(*ov));
    if (!fv && !ov) {
      gaps.push_back("k=" + std::to_string(k));
      continue;
    }
    row.verdict = fv ? *fv : *ov;
    row.evidence = fv && ov ? Evidence::Both : (fv ? Evidence::Formula : Evidence::Oracle);
    row.count = ocount ? ocount : fcount;
    bounds(row, c.spec.p0, c.genus);
    rows.push_back(row);
  }
  return rows;
}

std::string poly_str(const std::vector<mpz_class>& L, std::size_t show) {
  std::string out;
  for (std::size_t i = 0; i < L.size() && i < show; ++i) {
    if (i) out += ", ";
    out += L[i].get_str();
  }
  if (L.size() > show) out += ", ... (" + std::to_string(L.size()) + " coefficients)";
  return "[" + out + "]";
}

nlohmann::json mpz_list(const std::vector<mpz_class>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(mpz_json(x));
  return j;
}

int cmd_classify(const SpecArgs& sa, const RunConfig& cfg) {
  const CurveSpec spec = build_spec(sa);
  CurveContext ctx(resolve(spec), cfg, cache_for(cfg));
  const auto& c = ctx.curve();

  std::optional<int> split;
  try {
    const int d = splitting_degree(e_r(c.R), 4 * kMaxDegree * c.fb);
    if (d > 0) split = d;
  } catch (const Error&) {
  }

  const EigenvalueSet* eig = ctx.formula();
  std::optional<std::vector<mpz_class>> lpoly;
  std::string lpoly_source;
  if (eig && 2 * c.genus <= cfg.lpoly_cap) {
    lpoly = l_polynomial(*eig, cfg.lpoly_cap);
    lpoly_source = "formula";
  } else if (const auto* L = ctx.oracle_lpoly()) {
    lpoly = *L;
    lpoly_source = "oracle";
  }

  std::vector<std::string> mismatches, gaps;
  const auto rows = verdict_rows(ctx, mismatches, gaps);
  if (eig && lpoly_source == "formula")
    if (const auto* L = ctx.oracle_lpoly(); L && *L != *lpoly) mismatches.push_back("formula and oracle L-polynomials differ");

  auto reports = curve_criteria(ctx);
  bool reports_ok = true;
  for (const auto& r : reports) reports_ok = reports_ok && r.ok();

  nlohmann::json certs = nlohmann::json::array();
  for (const auto& row : rows)
    if (row.evidence == Evidence::Both && row.count)
      certs.push_back({{"k", row.k}, {"degree", row.degree}, {"count", mpz_json(*row.count)}});

  const bool consistent = mismatches.empty() && reports_ok;
  if (cfg.format == "json") {
    auto j = header(cfg);
    j["command"] = "classify";
    j["spec"] = to_json(spec);
    j["base_field"] = field_json(*c.base);
    j["genus"] = c.genus;
    j["splitting_degree"] = split ? nlohmann::json(*split) : nlohmann::json(nullptr);
    if (eig) {
      j["eigenvalues"] = to_json(*eig);
    } else {
      j["eigenvalues"] = nullptr;
      j["fallback"] = ctx.reason();
    }
    j["l_polynomial"] = lpoly ? nlohmann::json{{"source", lpoly_source}, {"coeffs", mpz_list(*lpoly)}}
                              : nlohmann::json(nullptr);
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& r : rows) jr.push_back(to_json(r));
    j["verdicts"] = jr;
    j["unresolved"] = gaps;
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& r : reports) jc.push_back(to_json(r));
    j["criteria"] = jc;
    j["certifications"] = certs;
    j["mismatches"] = mismatches;
    j["consistent"] = consistent;
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    write_tsv(std::cout, rows);
  } else {
    pretty_header(std::cout, cfg);
    std::cout << "curve  " << canonical(spec) << "\n";
    std::cout << "base field  F_" << c.spec.p0 << "^" << c.fb << "  modulus "
              << nlohmann::json(c.base->modulus()).dump() << "\n";
    std::cout << "genus  " << c.genus << "\n";
    std::cout << "V_R splitting degree  " << (split ? std::to_string(*split) : std::string("-")) << "\n";
    if (eig) {
      for (const auto& a : eig->abelian)
        std::cout << "abelian subgroup  path " << a.path << ", dim " << a.dim() << ", c_A "
                  << elem_json(a.c_A).dump() << "\n";
      const auto taus = distinct_taus(*eig);
      std::cout << "eigenvalues  " << eig->list.size() << " total, " << taus.size() << " distinct\n";
      std::size_t shown = 0;
      for (const auto& [t, m] : taus) {
        if (shown++ == 8) {
          std::cout << "  ...\n";
          break;
        }
        std::cout << "  " << t.to_string() << "  x" << m << "\n";
      }
    } else {
      std::cout << "formula path unavailable, oracle fallback: " << ctx.reason() << "\n";
    }
    if (lpoly) std::cout << "L-polynomial (" << lpoly_source << ")  " << poly_str(*lpoly, 12) << "\n";
    std::cout << "\n";
    write_pretty(std::cout, rows);
    if (!gaps.empty()) std::cout << "no verdict at " << nlohmann::json(gaps).dump() << "\n";
    std::cout << "\n";
    for (const auto& r : reports) write_pretty(std::cout, r);
    for (const auto& row : certs)
      std::cout << "certified  k=" << row["k"] << " count " << row["count"] << " (formula = oracle)\n";
    for (const auto& m : mismatches) std::cout << "MISMATCH  " << m << "\n";
  }
  return consistent ? kOk : kInconsistent;
}

// Runs cells in parallel and keeps them in grid order.
template <class T>
std::vector<T> run_cells(std::size_t n, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> err(n);
#pragma omp parallel for schedule(dynamic, 1) if (n > 1)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      out[i] = fn(i);
    } catch (...) {
      err[i] = std::current_exception();
    }
  }
  for (auto& e : err)
    if (e) std::rethrow_exception(e);
  return out;
}

struct Cell {
  nlohmann::json params;
  std::optional<CriterionReport> report;
  std::string skipped;
};

struct VerifyArgs {
  std::string theorem;
  std::uint32_t p = 0;
  int s = 1, n = 0, e = 1, f = 1, r = 0;
  std::string c;
  std::optional<u64> alpha;
  SpecArgs spec;
};

CurveSpec coeff_spec(std::uint32_t p0, int s, int n, int e, const FFElem& a) {
  CurveSpec sp;
  sp.p0 = p0;
  sp.s = s;
  sp.n = n;
  for (int i = 0; i < e; ++i) sp.R.push_back(CoeffSpec::integer(0));
  const auto v = a.field->to_vector(a);
  sp.R.push_back(CoeffSpec::vector(std::vector<std::int64_t>(v.begin(), v.end())));
  return sp;
}

std::vector<u64> alphas(const VerifyArgs& va) {
  if (va.alpha) return {*va.alpha};
  std::vector<u64> out;
  for (u64 a = 1; a + 1 < va.p; ++a) out.push_back(a);
  return out;
}

std::vector<Cell> verify_cells(const VerifyArgs& va, const RunConfig& cfg) {
  const std::string& id = va.theorem;
  const auto need_p = [&] { require(va.p != 0, Errc::InvalidSpec, "--p is required for " + id); };
  const auto single = [&](const std::function<CriterionReport(CurveContext&)>& fn) {
    CurveContext ctx(resolve(build_spec(va.spec)), cfg, cache_for(cfg));
    Cell cell;
    cell.params = to_json(ctx.curve().spec);
    cell.report = fn(ctx);
    return std::vector<Cell>{cell};
  };

  if (id == "cpq" || id == "ttbb" || id == "ttb3" || id == "ttb4" || id == "split" || id == "conj" ||
      ((id == "pp" || id == "c1") && va.spec.given())) {
    require(va.spec.given(), Errc::InvalidSpec, id + " needs a curve (--spec or --p0/--R)");
    if (id == "cpq") return single(thm_cpq);
    if (id == "ttbb") return single(thm_ttbb);
    if (id == "ttb3") return single(thm_ttb3);
    if (id == "ttb4") return single(thm_ttb4);
    if (id == "split") return single(prop_split);
    if (id == "conj") return single(conjecture_check);
    if (id == "pp") return single(prop_pp);
    return single(prop_c1);
  }
  if (id == "pp" || id == "c1") {
    need_p();
    const int n = 2 * va.f;
    const FieldPtr K = make_field(va.p, va.s * n);
    const u64 cells = K->order() - 1;
    require(cells <= cfg.budget, Errc::BudgetExceeded, std::to_string(cells) + " cells exceed the budget");
    const int r = va.r ? va.r : (id == "c1" ? 2 : 1);
    return run_cells<Cell>(cells, [&](std::size_t i) {
      CurveSpec sp = coeff_spec(va.p, va.s, n, va.f, K->from_index(i + 1));
      sp.r = r;
      CurveContext ctx(resolve(sp), cfg, cache_for(cfg));
      Cell cell;
      cell.params = {{"a_f", elem_json(K->from_index(i + 1))}, {"r", r}, {"spec", to_json(sp)}};
      cell.report = id == "pp" ? prop_pp(ctx) : prop_c1(ctx);
      return cell;
    });
  }
  if (id == "t214") {
    need_p();
    require(va.n >= 1, Errc::InvalidSpec, "--n is required for t214");
    std::vector<std::vector<std::int64_t>> cs;
    if (!va.c.empty()) {
      std::vector<std::int64_t> c;
      for (const auto& tok : split_csv(va.c)) c.push_back(parse_int(tok, "--c"));
      cs.push_back(c);
    } else {
      const u64 total = *nt::checked_pow(va.p, static_cast<unsigned>(va.e));
      require(total <= cfg.budget, Errc::BudgetExceeded, std::to_string(total) + " cells exceed the budget");
      for (u64 idx = 0; idx < total; ++idx) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(va.e));
        u64 t = idx;
        for (int j = va.e - 1; j >= 0; --j) {
          c[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(t % va.p);
          t /= va.p;
        }
        cs.push_back(c);
      }
    }
    const bool explicit_c = !va.c.empty();
    return run_cells<Cell>(cs.size(), [&](std::size_t i) {
      Cell cell;
      cell.params = {{"p0", va.p}, {"s", va.s}, {"n", va.n}, {"e", va.e}, {"c", cs[i]}};
      try {
        const Family214 fam = build_family_214(va.p, va.s, va.n, cs[i]);
        CurveContext ctx(resolve(fam.spec), cfg, cache_for(cfg));
        cell.report = thm_214(fam, ctx);
      } catch (const Error& e) {
        if (explicit_c || e.code() == Errc::BadCongruence) throw;
        if (e.code() != Errc::NotDividing && e.code() != Errc::HypothesisViolated) throw;
        cell.skipped = e.what();
      }
      return cell;
    });
  }
  if (id == "mp" || id == "ccc" || id == "lcc") {
    need_p();
    const auto as = alphas(va);
    const int r = va.r ? va.r : 2;
    return run_cells<Cell>(as.size(), [&](std::size_t i) {
      const TwistParams tp{va.p, va.s, as[i]};
      Cell cell;
      cell.params = {{"p0", va.p}, {"s", va.s}, {"alpha", as[i]}};
      if (id == "lcc") cell.params["r"] = r;
      cell.report = id == "mp" ? thm_mp(tp, cfg) : id == "ccc" ? cor_ccc(tp, cfg) : thm_lcc(tp, r, cfg);
      return cell;
    });
  }
  Cell cell;
  if (id == "lc" || id == "minus2") {
    need_p();
    cell.params = {{"p0", va.p}, {"s", va.s}};
    cell.report = id == "lc" ? thm_lc(va.p, va.s, cfg) : cor_minus2(va.p, va.s, cfg);
  } else if (id == "lcc2") {
    need_p();
    const int r = va.r ? va.r : 4;
    cell.params = {{"p0", va.p}, {"r", r}};
    cell.report = cor_lcc2(va.p, r, cfg);
  } else if (id == "char3") {
    cell.params = nlohmann::json::object();
    cell.report = cor_char3(cfg, static_cast<int>(std::min<u64>(cfg.kmax, 5)));
  } else {
    fail(Errc::UnknownTheorem, "unknown theorem id '" + id + "'");
  }
  return {cell};
}

int cmd_verify(const VerifyArgs& va, const RunConfig& cfg) {
  const auto cells = verify_cells(va, cfg);
  bool ok = true;
  std::size_t run = 0;
  for (const auto& c : cells)
    if (c.report) {
      ++run;
      ok = ok && c.report->ok();
    }
  if (cfg.format == "json") {
    auto j = header(cfg);
    j["command"] = "verify";
    j["theorem"] = va.theorem;
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& c : cells) {
      nlohmann::json e{{"params", c.params}};
      if (c.report)
        e["report"] = to_json(*c.report);
      else
        e["skipped"] = c.skipped;
      jc.push_back(e);
    }
    j["cells"] = jc;
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    std::cout << "cell\tid\tprediction\tfield\tformula\toracle\tok\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!cells[i].report) continue;
      const auto& r = *cells[i].report;
      for (const auto& p : r.predictions)
        std::cout << i << '\t' << r.id << '\t' << prediction_name(p.verdict) << '\t' << p.field << '\t'
                  << (p.formula ? verdict_name(*p.formula) : "-") << '\t'
                  << (p.oracle ? verdict_name(*p.oracle) : "-") << '\t'
                  << (p.formula_ok.value_or(true) && p.oracle_ok.value_or(true) ? "yes" : "no") << '\n';
    }
  } else {
    pretty_header(std::cout, cfg);
    for (const auto& c : cells) {
      if (!c.report) continue;
      std::cout << "cell " << c.params.dump() << "\n";
      write_pretty(std::cout, *c.report);
    }
    std::cout << va.theorem << ": " << run << " cell(s) checked, " << cells.size() - run << " outside the hypotheses, "
              << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kInconsistent;
}

struct SearchArgs {
  std::string family;
  std::uint32_t pmax = 13;
  int nmax = 6, emax = 1, dmax = 4, s = 1;
  bool oracle = false;
};

std::vector<std::uint32_t> odd_primes(std::uint32_t pmax) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 3; p <= pmax; p += 2)
    if (nt::is_prime(p)) out.push_back(p);
  return out;
}

// Verdicts from the formula for k = 1..kmax; oracle confirmation when requested.
nlohmann::json certify(CurveContext& ctx, bool oracle, bool& consistent) {
  nlohmann::json found = nlohmann::json::array();
  if (!ctx.formula()) return found;
  const int fb = ctx.curve().fb;
  for (u64 k = 1; k <= ctx.config().kmax; ++k) {
    const int deg = fb * static_cast<int>(k);
    const auto fv = ctx.formula_verdict(deg);
    if (!fv || *fv == Verdict::Neither) continue;
    nlohmann::json cert{{"degree", deg}, {"field", field_name(ctx.curve().spec.p0, deg)},
                        {"verdict", verdict_name(*fv)}, {"evidence", "formula"}};
    if (oracle && ctx.oracle_feasible(deg))
      if (auto cnt = ctx.count(deg)) {
        const Verdict ov = classify_by_counts(*cnt);
        cert["evidence"] = "both";
        cert["count"] = cnt->projective;
        if (ov != *fv) {
          cert["oracle"] = verdict_name(ov);
          consistent = false;
        }
      }
    found.push_back(cert);
  }
  return found;
}

struct SearchCell {
  nlohmann::json params;
  std::function<nlohmann::json(bool&)> run;
};

std::vector<SearchCell> search_grid(const SearchArgs& sa, const RunConfig& cfg) {
  std::vector<SearchCell> grid;
  const auto ctx_for = [cfg](const CurveSpec& sp) { return CurveContext(resolve(sp), cfg, cache_for(cfg)); };
  if (sa.family == "t214") {
    for (auto p0 : odd_primes(sa.pmax)) {
      const u64 p = *nt::checked_pow(p0, static_cast<unsigned>(sa.s));
      for (int n = 2; n <= sa.nmax; ++n) {
        if ((p - 1) % static_cast<u64>(n)) continue;
        for (int e = 1; e <= sa.emax && 2 * e < n; ++e) {
          const u64 total = *nt::checked_pow(p0, static_cast<unsigned>(e));
          for (u64 idx = 0; idx < total; ++idx) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(e));
            u64 t = idx;
            for (int j = e - 1; j >= 0; --j) {
              c[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(t % p0);
              t /= p0;
            }
            SearchCell cell;
            cell.params = {{"p0", p0}, {"s", sa.s}, {"n", n}, {"e", e}, {"c", c}};
            cell.run = [=](bool& consistent) -> nlohmann::json {
              Family214 fam;
              try {
                fam = build_family_214(p0, sa.s, n, c);
              } catch (const Error& err) {
                if (err.code() == Errc::NotDividing || err.code() == Errc::HypothesisViolated) return nullptr;
                throw;
              }
              CurveContext ctx = ctx_for(fam.spec);
              const auto* eig = ctx.formula();
              if (!eig) return nullptr;
              const auto& ab = eig->abelian.front();
              if (!ab.in_Fq || !condition_ast(ab, *eig).direct) return nullptr;
              auto certs = certify(ctx, sa.oracle, consistent);
              if (certs.empty()) return nullptr;
              return {{"spec", to_json(fam.spec)}, {"k_i", fam.k}, {"certificates", certs}};
            };
            grid.push_back(cell);
          }
        }
      }
    }
  } else if (sa.family == "twists") {
    for (auto p0 : odd_primes(sa.pmax)) {
      for (int m = 1; m <= sa.dmax; ++m) {
        const FieldPtr F = make_field(p0, m);
        for (u64 idx = 1; idx < F->order(); ++idx) {
          const FFElem z = F->from_index(idx);
          bool exact = true;
          for (int d = 1; d < m && exact; ++d)
            if (m % d == 0 && F->in_subfield(z, d)) exact = false;
          if (!exact) continue;
          bool rep = true;
          for (int j = 1; j < m && rep; ++j)
            if (F->index(F->frobenius(z, j)) < idx) rep = false;
          if (!rep) continue;
          const ZetaSpec zs = zeta_spec_of(z);
          SearchCell cell;
          cell.params = {{"p0", p0}, {"s", sa.s}, {"degree", m}, {"zeta_minpoly", zs.minpoly},
                         {"which_root", zs.which_root}};
          cell.run = [=](bool& consistent) -> nlohmann::json {
            CurveSpec sp;
            sp.p0 = p0;
            sp.s = sa.s;
            sp.n = 1;
            sp.R = {CoeffSpec::integer(1), CoeffSpec::integer(2)};
            sp.zeta = zs;
            CurveContext ctx = ctx_for(sp);
            auto certs = certify(ctx, sa.oracle, consistent);
            if (certs.empty()) return nullptr;
            return {{"spec", to_json(sp)}, {"certificates", certs}};
          };
          grid.push_back(cell);
        }
      }
    }
  } else if (sa.family == "monomial") {
    for (auto p0 : odd_primes(sa.pmax)) {
      const u64 p = *nt::checked_pow(p0, static_cast<unsigned>(sa.s));
      for (int n = 1; n <= sa.nmax; ++n) {
        const u64 q = *nt::checked_pow(p, static_cast<unsigned>(n));
        for (int e = 1; e <= sa.emax; ++e) {
          const u64 reps = std::min<u64>(q - 1, *nt::checked_pow(p, static_cast<unsigned>(e)) + 1);
          for (u64 k = 0; k < reps; ++k) {
            CurveSpec sp;
            sp.p0 = p0;
            sp.s = sa.s;
            sp.n = n;
            for (int i = 0; i < e; ++i) sp.R.push_back(CoeffSpec::integer(0));
            sp.R.push_back(CoeffSpec::gen_pow(static_cast<std::int64_t>(k)));
            SearchCell cell;
            cell.params = {{"p0", p0}, {"s", sa.s}, {"n", n}, {"e", e}, {"a", "g^" + std::to_string(k)}};
            cell.run = [=](bool& consistent) -> nlohmann::json {
              CurveContext ctx = ctx_for(sp);
              auto certs = certify(ctx, sa.oracle, consistent);
              if (certs.empty()) return nullptr;
              return {{"spec", to_json(sp)}, {"certificates", certs}};
            };
            grid.push_back(cell);
          }
        }
      }
    }
  } else {
    fail(Errc::InvalidSpec, "unknown family '" + sa.family + "' (t214, twists, monomial)");
  }
  return grid;
}

int cmd_search(const SearchArgs& sa, RunConfig cfg) {
  if (!sa.oracle) cfg.cap = 0;
  const auto grid = search_grid(sa, cfg);
  const std::size_t n = std::min<std::size_t>(grid.size(), cfg.budget);
  std::vector<nlohmann::json> found(n);
  std::vector<char> ok(n, 1);
  std::vector<std::exception_ptr> err(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      bool consistent = true;
      found[i] = grid[i].run(consistent);
      ok[i] = consistent;
    } catch (...) {
      err[i] = std::current_exception();
    }
  }
  bool all_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (err[i]) {
      try {
        std::rethrow_exception(err[i]);
      } catch (const Error& e) {
        if (e.code() == Errc::Mismatch) throw;
        found[i] = nullptr;
      }
    }
    if (found[i].is_null()) continue;
    nlohmann::json line{{"family", sa.family}, {"params", grid[i].params}, {"version", kVersion}};
    line.update(found[i]);
    line["consistent"] = static_cast<bool>(ok[i]);
    all_ok = all_ok && ok[i];
    std::cout << line.dump() << "\n";
  }
  std::cout.flush();
  require(n == grid.size(), Errc::BudgetExceeded,
          std::to_string(grid.size()) + " cells, budget " + std::to_string(cfg.budget) + "; partial results flushed");
  return all_ok ? kOk : kInconsistent;
}

int cmd_count(const SpecArgs& sa, std::optional<u64> k, std::optional<int> degree, const RunConfig& cfg) {
  const CurveSpec spec = build_spec(sa);
  CurveContext ctx(resolve(spec), cfg, cache_for(cfg));
  const auto& c = ctx.curve();
  require(k.has_value() != degree.has_value(), Errc::InvalidSpec, "give exactly one of --k and --degree");
  const int deg = degree ? *degree : c.fb * static_cast<int>(*k);
  require(deg >= 1 && deg % c.fb == 0, Errc::InvalidSpec,
          "degree " + std::to_string(deg) + " is not a multiple of the base degree " + std::to_string(c.fb));
  require(deg <= kMaxDegree, Errc::TooLarge, "F_" + std::to_string(c.spec.p0) + "^" + std::to_string(deg));
  require(ctx.oracle_feasible(deg), Errc::TooLarge,
          field_name(c.spec.p0, deg) + " exceeds the enumeration cap " + std::to_string(cfg.cap));
  const auto r = ctx.count(deg);
  require(r.has_value(), Errc::TooLarge, "count refused");
  if (cfg.format == "json") {
    auto j = header(cfg);
    j["command"] = "count";
    j["spec"] = to_json(spec);
    j["result"] = to_json(*r);
    j["verdict"] = verdict_name(classify_by_counts(*r));
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    std::cout << "degree\tQ\taffine\tprojective\tgenus\tverdict\n"
              << r->degree << '\t' << r->Q << '\t' << r->affine << '\t' << r->projective << '\t' << r->genus << '\t'
              << verdict_name(classify_by_counts(*r)) << '\n';
  } else {
    pretty_header(std::cout, cfg);
    std::cout << "curve  " << canonical(spec) << "\n"
              << field_name(c.spec.p0, deg) << "  affine " << r->affine << "  projective " << r->projective
              << "  genus " << r->genus << "  " << verdict_name(classify_by_counts(*r)) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact L-polynomials and maximality criteria for Artin-Schreier curves"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  std::string cache;
  bool no_cache = false;
  app.add_option("--cap", cfg.cap, "oracle enumeration cap (field elements)")->capture_default_str();
  app.add_option("--budget", cfg.budget, "search budget (Lagrangian candidates, grid cells)")->capture_default_str();
  app.add_option("--cache", cache, "result cache JSONL path (enables caching)");
  app.add_flag("--no-cache", no_cache, "disable the result cache");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "OpenMP threads (0: default)")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--kmax", cfg.kmax, "largest k in verdict tables")->capture_default_str();
  app.add_option("--lpoly-cap", cfg.lpoly_cap, "largest L-polynomial degree expanded")->capture_default_str();

  SpecArgs classify_spec;
  auto* classify = app.add_subcommand("classify", "L-polynomial, verdict table and criteria for one curve");
  add_spec_options(classify, classify_spec);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "instantiate a criterion and check it against the oracle");
  verify->add_option("--theorem", va.theorem,
                     "cpq ttbb ttb3 ttb4 t214 split pp c1 conj mp ccc lc minus2 lcc lcc2 char3")
      ->required();
  verify->add_option("--p", va.p, "p0");
  verify->add_option("--s", va.s);
  verify->add_option("--n", va.n);
  verify->add_option("--e", va.e);
  verify->add_option("--f", va.f);
  verify->add_option("--r", va.r);
  verify->add_option("--c", va.c, "c_0,...,c_{e-1} mod p0");
  verify->add_option("--alpha", va.alpha);
  verify->add_option("--spec", va.spec.file, "curve spec JSON file");
  verify->add_option("--p0", va.spec.p0);
  verify->add_option("--R", va.spec.R);
  verify->add_option("--zeta", va.spec.zeta);
  verify->add_option("--which-root", va.spec.which_root);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "stream certified maximal and minimal curves as JSONL");
  search->add_option("--family", sa.family, "t214, twists or monomial")->required();
  search->add_option("--pmax", sa.pmax)->capture_default_str();
  search->add_option("--nmax", sa.nmax)->capture_default_str();
  search->add_option("--emax", sa.emax)->capture_default_str();
  search->add_option("--dmax", sa.dmax, "largest degree of zeta over F_p0")->capture_default_str();
  search->add_option("--s", sa.s)->capture_default_str();
  search->add_flag("--oracle", sa.oracle, "confirm each certificate by counting");

  SpecArgs count_spec;
  std::optional<u64> count_k;
  std::optional<int> count_degree;
  auto* count = app.add_subcommand("count", "projective point count over an extension");
  add_spec_options(count, count_spec);
  count->add_option("--k", count_k, "count over the degree-k extension of the base field");
  count->add_option("--degree", count_degree, "count over F_{p0^degree}");

  for (auto* sub : {classify, verify, search, count}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  if (!cache.empty()) {
    cfg.cache_path = cache;
    cfg.use_cache = true;
  }
  if (no_cache) cfg.use_cache = false;
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
  // Keep the verify grid and the count kernel from oversubscribing.
  omp_set_max_active_levels(1);
  if (va.spec.p0 == 0 && va.p != 0) va.spec.p0 = va.p;
  va.spec.s = va.s;
  va.spec.n = va.n ? va.n : 1;
  va.spec.r = va.r ? va.r : 1;

  try {
    if (*classify) return cmd_classify(classify_spec, cfg);
    if (*verify) return cmd_verify(va, cfg);
    if (*search) return cmd_search(sa, cfg);
    return cmd_count(count_spec, count_k, count_degree, cfg);
  } catch (const Error& e) {
    std::cout.flush();
    std::cerr << "asmax: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "asmax: " << e.what() << "\n";
    return kInconsistent;
  }
}
