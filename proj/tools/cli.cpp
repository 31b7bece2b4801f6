#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>

#include "ltf/arith.hpp"
#include "ltf/errors.hpp"
#include "ltf/extension.hpp"
#include "ltf/intpoly.hpp"
#include "ltf/newton.hpp"
#include "ltf/pnmatrix.hpp"
#include "ltf/psiq.hpp"
#include "ltf/serialize.hpp"
#include "ltf/series.hpp"
#include "ltf/spancheck.hpp"

namespace ltf::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct RunConfig {
  std::int64_t p = 3;
  int d = 2;
  std::string kind = "ram";
  std::size_t max_n = 0;
  std::size_t max_deg = 10;
  std::int64_t a = 0;
  std::size_t size = 8;
  std::size_t max_k = 20;
  int max_m = 10;
  std::size_t count = 10;
  int precision = 0;
  std::string coeffs;
  std::string out = "-";
  unsigned threads = 0;
  std::size_t window = 0;
  bool window_set = false;
  std::string engine = "fast";
  std::string inject_fault;
};

// Serializes phase lines from worker threads.
class PhaseLog {
 public:
  explicit PhaseLog(std::ostream& err) : err_(err) {}
  void operator()(const std::string& name, double seconds) {
    std::lock_guard<std::mutex> lock(mu_);
    err_ << "phase," << name << ',' << seconds << '\n';
  }
  template <class Fn>
  auto timed(const std::string& name, Fn&& fn) {
    const auto t0 = Clock::now();
    auto result = fn();
    (*this)(name, std::chrono::duration<double>(Clock::now() - t0).count());
    return result;
  }

 private:
  std::ostream& err_;
  std::mutex mu_;
};

ExtensionSpec spec_of(const RunConfig& cfg) { return make_extension(cfg.p, cfg.d, parse_kind(cfg.kind)); }

void emit(const RunConfig& cfg, std::ostream& out, const std::string& data) {
  if (cfg.out == "-") {
    out << data;
    out.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file '" + cfg.out + "'");
  f << data;
  if (!f) throw ValidationError("failed writing '" + cfg.out + "'");
}

PolyL read_coeffs(const RunConfig& cfg, const Field& f) {
  if (cfg.coeffs.empty()) throw ValidationError("--coeffs FILE is required");
  std::ifstream in(cfg.coeffs);
  if (!in) throw ValidationError("cannot open coefficient file '" + cfg.coeffs + "'");
  return read_poly_csv(f, in);
}

std::string valuation_cell(const Valuation& v) { return v.is_infinite() ? "inf" : std::to_string(v.value()); }

int cmd_span_check(const RunConfig& cfg, std::ostream& out, PhaseLog& log) {
  const ExtensionSpec spec = spec_of(cfg);
  if (cfg.max_n < 1) throw ValidationError("--max-n must be >= 1");
  SpanOptions opts;
  opts.threads = cfg.threads;
  opts.window = cfg.window_set ? cfg.window : static_cast<std::size_t>(cfg.d);
  if (cfg.engine == "exact") opts.engine = SpanOptions::Engine::exact;
  else if (cfg.engine != "fast") throw ValidationError("--engine must be fast or exact");
  opts.on_phase = [&log](const std::string& name, double s) { log(name, s); };
  const SpanReport rep = log.timed("total", [&] { return run_span_check(spec, cfg.max_n, opts); });
  emit(cfg, out, span_report_csv(rep));
  return ok;
}

int cmd_pn(const RunConfig& cfg, std::ostream& out, PhaseLog& log) {
  const ExtensionSpec spec = spec_of(cfg);
  std::ostringstream os;
  os << "n,degree,coeff\n";
  log.timed("pn", [&] {
    for (std::size_t n = 0; n <= cfg.max_deg; ++n) {
      const PolyL P = pn_poly(spec, n);
      for (std::size_t k = 0; k < P.size(); ++k)
        if (!P.coeff(k).is_zero()) os << n << ',' << k << ',' << format_elem(P.coeff(k)) << '\n';
    }
    return 0;
  });
  emit(cfg, out, os.str());
  return ok;
}

int cmd_matrices(const RunConfig& cfg, std::ostream& out, PhaseLog& log) {
  const ExtensionSpec spec = spec_of(cfg);
  if (cfg.size < 1) throw ValidationError("--size must be >= 1");
  const UTMatrix<FieldElem> r = log.timed("r", [&] { return r_matrix(spec, cfg.a, cfg.size); });
  std::ostringstream os;
  os << "i,j,r\n";
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i; j < r.size(); ++j) os << i << ',' << j << ',' << format_elem(r.at(i, j)) << '\n';
  emit(cfg, out, os.str());
  return ok;
}

int cmd_psi(const RunConfig& cfg, std::ostream& out, PhaseLog& log) {
  const ExtensionSpec spec = spec_of(cfg);
  const auto mono = log.timed("psi", [&] { return psi_monomials(spec, cfg.max_k); });
  std::ostringstream os;
  os << "k,result_poly\n";
  for (std::size_t k = 0; k < mono.size(); ++k) os << k << ',' << format_poly(mono[k]) << '\n';
  emit(cfg, out, os.str());
  return ok;
}

int cmd_psi_int(const RunConfig& cfg, std::ostream& out, PhaseLog& log) {
  const ExtensionSpec spec = spec_of(cfg);
  const PolyL f = read_coeffs(cfg, spec.field());
  const PsiTrace tr = log.timed("psi_int", [&] { return psi_int_test(spec, f); });
  std::ostringstream os;
  os << "iterate,degree,min_val,integral\n";
  for (std::size_t i = 0; i < tr.iterates.size(); ++i) {
    const auto deg = tr.iterates[i].degree();
    os << i << ',' << (deg ? std::to_string(*deg) : std::string("-1")) << ',' << valuation_cell(tr.min_vals[i]) << ','
       << (tr.min_vals[i] < Valuation(0) ? "no" : "yes") << '\n';
  }
  emit(cfg, out, os.str());
  return ok;
}

int cmd_newton(const RunConfig& cfg, std::ostream& out, PhaseLog& log) {
  const ExtensionSpec spec = spec_of(cfg);
  emit(cfg, out, log.timed("newton", [&] { return newton_csv(spec, cfg.max_m); }));
  return ok;
}

PiOrdering ordering_for(const ExtensionSpec& spec, std::size_t count, const RunConfig& cfg) {
  PiOrderingOptions opts;
  opts.threads = cfg.threads;
  return cfg.precision > 0 ? build_pi_ordering(spec, count, cfg.precision, opts)
                           : build_pi_ordering(spec, count, opts);
}

int cmd_pi_ordering(const RunConfig& cfg, std::ostream& out, PhaseLog& log) {
  const ExtensionSpec spec = spec_of(cfg);
  const PiOrdering ord = log.timed("pi_ordering", [&] { return ordering_for(spec, cfg.count, cfg); });
  std::ostringstream os;
  os << "k,point,achieved_val,wq\n";
  for (std::size_t k = 0; k < ord.points.size(); ++k)
    os << k << ',' << format_elem(ord.points[k]) << ',' << ord.achieved_vals[k] << ','
       << w_q(spec, static_cast<std::int64_t>(k)) << '\n';
  emit(cfg, out, os.str());
  return ok;
}

int cmd_int_check(const RunConfig& cfg, std::ostream& out, PhaseLog& log) {
  const ExtensionSpec spec = spec_of(cfg);
  const PolyL g = read_coeffs(cfg, spec.field());
  const std::size_t count = g.degree().value_or(0) + 1;
  const IntMembership res = log.timed("int_check", [&] {
    return int_membership(spec, g, ordering_for(spec, count, cfg));
  });
  std::ostringstream os;
  os << "k,lambda,valuation,integral\n";
  for (std::size_t k = 0; k < res.lambda.size(); ++k) {
    const Valuation v = res.lambda[k].valuation();
    os << k << ',' << format_elem(res.lambda[k]) << ',' << valuation_cell(v) << ','
       << (v < Valuation(0) ? "no" : "yes") << '\n';
  }
  emit(cfg, out, os.str());
  return ok;
}

// ---- selfcheck ----

struct Check {
  std::string name;
  std::function<std::string()> run;  // returns "pass" or "skip"; throws on failure
};

void require(bool cond, const std::string& name, const std::string& what) {
  if (!cond) throw ConsistencyError(name, what);
}

FieldElem random_elem(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  std::vector<mpq_class> c;
  for (int i = 0; i < f.degree(); ++i) {
    mpq_class x(num(rng), den(rng));
    x.canonicalize();
    c.push_back(x);
  }
  return f.from_coeffs(std::move(c));
}

std::vector<Check> selfcheck_suite(const ExtensionSpec& spec, const RunConfig& cfg) {
  const Field& F = spec.field();
  const std::int64_t q = spec.q;
  const std::size_t qm1 = static_cast<std::size_t>(q - 1);
  std::vector<Check> checks;

  checks.push_back({"FieldArithmetic", [&spec, &cfg, &F, q, qm1] {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      const FieldElem x = random_elem(F, rng), y = random_elem(F, rng);
      require((x * y).valuation() == x.valuation() + y.valuation(), "FieldArithmetic", "v(xy) != v(x) + v(y)");
      if (!x.is_zero()) require((x * x.inverse()).is_one(), "FieldArithmetic", "x * x^-1 != 1");
    }
    return std::string("pass");
  }});
  checks.push_back({"ResidueGroup", [&spec, &cfg, &F, q, qm1] {
    for (int m = 0; m <= 6; ++m) {
      mpz_class prod = 1;
      for (const auto& c : residue_group_structure(spec, m)) prod *= c;
      require(prod == pow_mpz(q, static_cast<unsigned long>(m)), "ResidueGroup", "|o_L/pi^m| != q^m");
      if (m >= 1) require(order_of_one(spec, m) == order_of_one_snf(spec, m), "ResidueGroup", "order of 1");
    }
    return std::string("pass");
  }});
  checks.push_back({"GroupLaw", [&spec, &cfg, &F, q, qm1] {
    for (Coordinate c : {Coordinate::ST, Coordinate::COL}) {
      const BiSeries G = group_law(spec, c, 8);
      for (int i = 0; i <= 8; ++i)
        for (int j = 0; i + j <= 8; ++j)
          require(G.coeff(i, j) == G.coeff(j, i), "GroupLaw", "F(X,Y) != F(Y,X)");
    }
    return std::string("pass");
  }});
  checks.push_back({"PnRoutes", [&spec, &cfg, &F, q, qm1] {
    const std::size_t N = 16;
    const auto series = pn_via_series(spec, N, N);
    const UTMatrix<FieldElem> D = d_matrix(spec, N + 1, cfg.threads);
    for (std::size_t n = 0; n <= N; ++n) {
      const PolyL P = pn_poly(spec, n);
      require(P == series[n], "PnRoutes", "pn_poly != series route at n=" + std::to_string(n));
      for (std::size_t i = 0; i <= n; ++i)
        require(D.at(i, n) == P.coeff(i) * mpq_class(factorial(i)), "PnRoutes",
                "D recursion != i! [Y^i] P_j at j=" + std::to_string(n));
    }
    return std::string("pass");
  }});
  checks.push_back({"IntegralMCs", [&spec, &cfg, &F, q, qm1] {
    const std::size_t S = std::max<std::size_t>(3, 24 / qm1 + 1);
    for (std::int64_t a = 0; a <= std::min<std::int64_t>(q - 2, 3); ++a) {
      UTMatrix<FieldElem> r = r_matrix(spec, a, S);
      if (cfg.inject_fault == "r-entry" && a == 0) r.at(0, S - 1) += F.pi_power(-static_cast<std::int64_t>(S));
      check_integral_mcs(spec, a, r);
    }
    return std::string("pass");
  }});
  checks.push_back({"TauSigma", [&spec, &cfg, &F, q, qm1] {
    for (std::int64_t a = 0; a <= std::min<std::int64_t>(q - 2, 1); ++a) {
      const std::size_t S = std::max<std::size_t>(2, 16 / qm1 + 1);
      const UTMatrix<PolyL> tau = tau_matrix(spec, a, S);
      for (std::int64_t x : {0, 1, 2, 3}) {
        const std::size_t T = underline(spec, a, S - 1);
        const auto powers = mult_by_powers(spec, x, T, std::max<std::size_t>(T, 1));
        const FieldElem xs = F.from(mpq_class(static_cast<long>(x)));
        FieldElem xa = F.one();
        for (std::int64_t t = 0; t < a; ++t) xa *= xs;
        FieldElem xq = F.one();
        for (std::int64_t t = 0; t < q - 1; ++t) xq *= xs;
        for (std::size_t j = 0; j < S; ++j)
          for (std::size_t i = 0; i <= j; ++i)
            require(xa * tau.at(i, j)(xq) == powers[underline(spec, a, i)][underline(spec, a, j)], "TauSigma",
                    "tau/sigma mismatch at a=" + std::to_string(a) + " i=" + std::to_string(i) +
                        " j=" + std::to_string(j));
      }
    }
    return std::string("pass");
  }});
  checks.push_back({"SpanTheorem", [&spec, &cfg, &F, q, qm1] {
    const std::size_t N = qm1 * std::max<std::size_t>(2, 24 / qm1);
    SpanOptions opts;
    opts.threads = cfg.threads;
    opts.window = static_cast<std::size_t>(spec.d);
    const SpanReport fast = run_span_check(spec, N, opts);
    opts.engine = SpanOptions::Engine::exact;
    const SpanReport exact = run_span_check(spec, N, opts);
    require(fast == exact, "SpanTheorem", "fast and exact engines disagree");
    for (const SpanRow& r : fast.rows)
      if (s_q(spec, r.n) < spec.p)
        require(r.exact && r.cap == r.n, "SpanTheorem", "Cap(" + std::to_string(r.n) + ") != n");
    return std::string("pass");
  }});
  checks.push_back({"PsiRoutes", [&spec, &cfg, &F, q, qm1] {
    const std::size_t K = std::min<std::size_t>(40, 2 * static_cast<std::size_t>(q) + 2);
    const auto mono = psi_monomials(spec, K);
    const PsiOracle oracle(spec, K);
    for (std::size_t k = 0; k <= K; ++k) {
      require(oracle.apply(PolyL::monomial(F.one(), k)) == mono[k], "PsiRoutes",
              "recurrence != torsion sum at X^" + std::to_string(k));
      if (k >= 1 && mono[k].degree()) require(*mono[k].degree() < k, "PsiRoutes", "degree did not drop");
    }
    return std::string("pass");
  }});
  checks.push_back({"PsiBaseCases", [&spec, &cfg, &F, q, qm1] {
    const auto qs = static_cast<std::size_t>(q);
    const auto mono = psi_monomials(spec, 2 * qs);
    mpq_class c(spec.p * (1 - q), q);
    c.canonicalize();
    require(mono[qs - 1] == PolyL::constant(F.from(c)), "PsiBaseCases", "psi(X^{q-1}) != p(1-q)/q");
    if (q >= 3)
      require(mono[2 * qs - 2] == PolyL::constant(F.from(mpq_class(-spec.p * c))), "PsiBaseCases",
              "psi(X^{2q-2}) != -p psi(X^{q-1})");
    if (q >= 4) require(mono[2 * qs] == PolyL::monomial(F.one(), 2), "PsiBaseCases", "psi(X^{2q}) != X^2");
    if (q == spec.p * spec.p) {
      mpq_class c2(1 - q, spec.p);
      c2.canonicalize();
      require(mono[qs - 1] == PolyL::constant(F.from(c2)), "PsiBaseCases", "psi(X^{q-1}) != (1-q)/p");
      require(mono[2 * qs - 2] == PolyL::constant(F.from(mpq_class(q - 1))), "PsiBaseCases", "psi(X^{2q-2}) != q-1");
      mpq_class lin = mpq_class(1, spec.p) - 2 * spec.p;
      lin.canonicalize();
      require(mono[2 * qs - 1] == PolyL::monomial(F.from(lin), 1), "PsiBaseCases", "psi(X^{2q-1}) != X(1/p-2p)");
    }
    return std::string("pass");
  }});
  checks.push_back({"PsiIntegrality", [&spec, &cfg, &F, q, qm1] {
    if (q != spec.p * spec.p) return std::string("skip");
    for (unsigned k = 1; k <= (q <= 9 ? 2u : 1u); ++k) {
      const std::size_t deg = static_cast<std::size_t>(pow_mpz(q, k).get_ui()) - 1;
      const PolyL good = PolyL::monomial(F.from(mpq_class(pow_mpz(spec.p, k))), deg);
      const PolyL bad = PolyL::monomial(F.from(mpq_class(pow_mpz(spec.p, k - 1))), deg);
      require(psi_int_test(spec, good).integral, "PsiIntegrality", "p^k X^{q^k-1} not integral");
      require(!psi_int_test(spec, bad).integral, "PsiIntegrality", "p^{k-1} X^{q^k-1} integral");
    }
    return std::string("pass");
  }});
  checks.push_back({"Newton", [&spec, &cfg, &F, q, qm1] {
    for (int m = 0; m <= 20; ++m) {
      const NewtonVertex v = xm_ym(spec, m);
      if (spec.d > 1) require(v.y > 0, "Newton", "y_m <= 0");
      if (auto s = newton_observed_slope(spec, m))
        require(*s == newton_edge_slope(spec, m), "Newton", "slope mismatch at m=" + std::to_string(m));
    }
    for (int m = 1; m <= 4; ++m) torsion_fixed_count(spec, m);
    if (spec.kind == ExtKind::unramified && spec.d == 2)
      for (int k = 1; k <= 3; ++k) qp2_valuation(spec.p, k);
    return std::string("pass");
  }});
  checks.push_back({"PiOrdering", [&spec, &cfg, &F, q, qm1] {
    PiOrderingOptions opts;
    opts.threads = cfg.threads;
    const PiOrdering ord = build_pi_ordering(spec, 8, opts);
    const auto basis = lagrange_basis(ord, 7);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      require(basis[k].lead().valuation() == Valuation(-w_q(spec, static_cast<std::int64_t>(k))), "PiOrdering",
              "v(lead f_k) != -w_q(k)");
      for (const FieldElem& pt : ord.points)
        require(basis[k](pt).valuation() >= Valuation(0), "PiOrdering", "f_k(alpha_j) not integral");
    }
    for (std::size_t j = 0; j <= 4; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        require(int_membership(spec, sigma_poly_interpolated(spec, i, j), ord).member, "PiOrdering",
                "sigma_{i,j} not in Int");
    return std::string("pass");
  }});
  return checks;
}

int cmd_selfcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err, PhaseLog& log) {
  const ExtensionSpec spec = spec_of(cfg);
  if (!cfg.inject_fault.empty() && cfg.inject_fault != "r-entry")
    throw ValidationError("unknown fault '" + cfg.inject_fault + "'");
  std::ostringstream os;
  os << "check,status\n";
  std::string first_failure;
  for (const Check& c : selfcheck_suite(spec, cfg)) {
    std::string status;
    try {
      status = log.timed(c.name, c.run);
    } catch (const ConsistencyError& e) {
      status = "fail";
      err << "selfcheck " << c.name << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
      status = "fail";
      err << "selfcheck " << c.name << ": " << e.what() << '\n';
    }
    if (status == "fail" && first_failure.empty()) first_failure = c.name;
    os << c.name << ',' << status << '\n';
  }
  emit(cfg, out, os.str());
  if (!first_failure.empty()) {
    err << "selfcheck failed: " << first_failure << '\n';
    return consistency;
  }
  return ok;
}

void add_spec_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "prime p")->capture_default_str();
  sub->add_option("--d", cfg.d, "extension degree d")->capture_default_str();
  sub->add_option("--kind", cfg.kind, "ram or unram")->capture_default_str();
  sub->add_option("--out", cfg.out, "output CSV path, - for stdout")->capture_default_str();
  sub->add_option("--threads", cfg.threads, "worker threads, 0 = auto")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Lubin-Tate polynomial matrices, span checks and psi_q tools"};
  app.require_subcommand(1);

  auto* span = app.add_subcommand("span-check", "s0(n) / Cap(n) report");
  add_spec_flags(span, cfg);
  span->add_option("--max-n", cfg.max_n, "bound N, a multiple of q-1")->required();
  span->add_option("--window", cfg.window, "column-drop block size (default d, 0 disables)")
      ->each([&](const std::string&) { cfg.window_set = true; });
  span->add_option("--engine", cfg.engine, "fast or exact")->capture_default_str();

  auto* pn = app.add_subcommand("pn", "coefficients of P_0..P_M");
  add_spec_flags(pn, cfg);
  pn->add_option("--max-deg", cfg.max_deg, "largest n")->capture_default_str();

  auto* mat = app.add_subcommand("matrices", "entries of r^(a)");
  add_spec_flags(mat, cfg);
  mat->add_option("--a", cfg.a, "residue class 0..q-2")->capture_default_str();
  mat->add_option("--size", cfg.size, "matrix size S")->capture_default_str();

  auto* psi = app.add_subcommand("psi", "psi_q(X^k) for k = 0..M");
  add_spec_flags(psi, cfg);
  psi->add_option("--max-k", cfg.max_k, "largest k")->capture_default_str();

  auto* psi_int = app.add_subcommand("psi-int", "psi_q-integrality trace of a polynomial");
  add_spec_flags(psi_int, cfg);
  psi_int->add_option("--coeffs", cfg.coeffs, "degree,coeff CSV")->required();

  auto* newton = app.add_subcommand("newton", "Newton polygon vertices");
  add_spec_flags(newton, cfg);
  newton->add_option("--max-m", cfg.max_m, "largest m")->capture_default_str();

  auto* ord = app.add_subcommand("pi-ordering", "certified greedy pi-ordering");
  add_spec_flags(ord, cfg);
  ord->add_option("--count", cfg.count, "number of points")->capture_default_str();
  ord->add_option("--precision", cfg.precision, "transversal precision (default from count)");

  auto* intc = app.add_subcommand("int-check", "Int(o_L, o_L) membership via the Lagrange basis");
  add_spec_flags(intc, cfg);
  intc->add_option("--coeffs", cfg.coeffs, "degree,coeff CSV")->required();
  intc->add_option("--precision", cfg.precision, "transversal precision (default from degree)");

  auto* self = app.add_subcommand("selfcheck", "cross-oracle invariant suite");
  add_spec_flags(self, cfg);
  self->add_option("--inject-fault", cfg.inject_fault)->group("");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return validation;
  }

  PhaseLog log(err);
  try {
    if (*span) return cmd_span_check(cfg, out, log);
    if (*pn) return cmd_pn(cfg, out, log);
    if (*mat) return cmd_matrices(cfg, out, log);
    if (*psi) return cmd_psi(cfg, out, log);
    if (*psi_int) return cmd_psi_int(cfg, out, log);
    if (*newton) return cmd_newton(cfg, out, log);
    if (*ord) return cmd_pi_ordering(cfg, out, log);
    if (*intc) return cmd_int_check(cfg, out, log);
    if (*self) return cmd_selfcheck(cfg, out, err, log);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return validation;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error [" << e.check() << "]: " << e.what() << '\n';
    return consistency;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return consistency;
  }
  return validation;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace ltf::cli
