#include "ltf/spancheck.hpp"

#include <chrono>
#include <sstream>

#include "ltf/arith.hpp"
#include "ltf/errors.hpp"
#include "parallel.hpp"

namespace ltf {

std::int64_t s_q(const ExtensionSpec& spec, std::int64_t n) {
  if (n < 0) throw ValidationError("s_q needs n >= 0");
  return digit_sum(n, spec.q);
}

std::int64_t w_q(const ExtensionSpec& spec, std::int64_t n) {
  if (n < 0) throw ValidationError("w_q needs n >= 0");
  return wq(n, spec.q);
}

UTMatrix<PolyL> tau_matrix(const ExtensionSpec& spec, const UTMatrix<FieldElem>& r) {
  const Field& f = spec.field();
  const std::size_t S = r.size();
  UTMatrix<PolyL> tau(S, PolyL(f));
  for (std::size_t j = 0; j < S; ++j) {
    for (std::size_t i = j + 1; i-- > 0;) {
      PolyL acc = PolyL::monomial(r.at(i, j), i);
      for (std::size_t k = i + 1; k <= j; ++k)
        if (!r.at(i, k).is_zero()) acc -= tau.at(k, j) * r.at(i, k);
      tau.at(i, j) = std::move(acc);
    }
  }
  return tau;
}

UTMatrix<PolyL> tau_matrix(const ExtensionSpec& spec, std::int64_t a, std::size_t S) {
  return tau_matrix(spec, r_matrix(spec, a, S));
}

Elimination dvr_eliminate(const std::vector<Row>& input, const Field& field, bool track_transform, TieBreak tie) {
  std::vector<Row> rows = input;
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows[0].size();
  std::vector<Row> U;
  if (track_transform) {
    U.assign(m, Row(m, field.zero()));
    for (std::size_t i = 0; i < m; ++i) U[i][i] = field.one();
  }
  std::vector<bool> used(m, false);
  Elimination out;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = m;
    Valuation best = Valuation::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i] || rows[i][c].is_zero()) continue;
      Valuation v = rows[i][c].valuation();
      bool better = piv == m || v < best || (v == best && tie == TieBreak::highest_index);
      if (better) piv = i, best = v;
    }
    if (piv == m) throw RankError("column " + std::to_string(c) + " has no nonzero entry");
    used[piv] = true;
    const FieldElem ginv = rows[piv][c].inverse();
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i] || rows[i][c].is_zero()) continue;
      const FieldElem factor = rows[i][c] * ginv;
      for (std::size_t j = c; j < n; ++j)
        if (!rows[piv][j].is_zero()) rows[i][j] -= factor * rows[piv][j];
      if (track_transform)
        for (std::size_t j = 0; j < m; ++j)
          if (!U[piv][j].is_zero()) U[i][j] -= factor * U[piv][j];
    }
    out.upper.push_back(rows[piv]);
    out.pivot_source.push_back(piv);
    if (track_transform) out.transform.push_back(U[piv]);
  }
  return out;
}

GaussState initial_state(std::int64_t a) {
  GaussState st;
  st.a = a;
  return st;
}

namespace {

std::int64_t residue_index(const ExtensionSpec& spec, std::int64_t a, std::int64_t b) { return a + b * (spec.q - 1); }

// Shared bookkeeping after a stage: monotonicity, lower bound, hits, dropping.
void record_stage(const ExtensionSpec& spec, std::int64_t a, std::int64_t s, std::size_t lo,
                  const std::vector<std::int64_t>& new_leads, std::vector<std::int64_t>& lead_vals,
                  std::vector<std::int64_t>& s0, std::size_t window, std::size_t& frozen) {
  lead_vals.resize(static_cast<std::size_t>(s) + 1, 0);
  s0.resize(static_cast<std::size_t>(s) + 1, -1);
  for (std::size_t b = lo; b <= static_cast<std::size_t>(s); ++b) {
    const std::int64_t n = residue_index(spec, a, static_cast<std::int64_t>(b));
    const std::int64_t target = -w_q(spec, n);
    const std::int64_t v = new_leads[b - lo];
    if (v < target)
      throw ImpossibleValuation("leading valuation " + std::to_string(v) + " below -w_q(" + std::to_string(n) +
                                ") = " + std::to_string(target) + " at stage " + std::to_string(s));
    if (b < static_cast<std::size_t>(s) && v > lead_vals[b])
      throw ConsistencyError("LeadMonotone", "leading valuation of g_" + std::to_string(b) + " rose from " +
                                                 std::to_string(lead_vals[b]) + " to " + std::to_string(v));
    lead_vals[b] = v;
    if (v == target && s0[b] < 0) s0[b] = s;
  }
  if (window > 0) {
    std::size_t h = frozen;
    while (h < s0.size() && s0[h] >= 0) ++h;
    frozen = std::max(frozen, h / window * window);
  }
}

}  // namespace

void span_step(const ExtensionSpec& spec, GaussState& st, const std::vector<PolyL>& tau_column,
               const SpanOptions& opts) {
  const std::int64_t s = st.s + 1;
  const std::size_t su = static_cast<std::size_t>(s);
  if (tau_column.size() != su + 1) throw std::invalid_argument("span_step: tau column has wrong length");
  const std::size_t lo = st.frozen;
  const Field& f = spec.field();
  const std::size_t width = su + 1 - lo;

  // Column c holds Y^(s-c).
  auto to_row = [&](const PolyL& g) {
    Row row(width, f.zero());
    for (std::size_t k = lo; k <= su; ++k) row[su - k] = g.coeff(k);
    return row;
  };
  std::vector<Row> B;
  B.push_back(to_row(tau_column[su]));
  for (std::size_t b = su; b-- > lo;) B.push_back(to_row(st.basis[b]));
  for (std::size_t i = 0; i < su; ++i) B.push_back(to_row(tau_column[i]));

  Elimination el = dvr_eliminate(B, f, false, opts.tie);

  std::vector<std::int64_t> leads(width);
  st.basis.resize(su + 1, PolyL(f));
  for (std::size_t c = 0; c < width; ++c) {
    const std::size_t b = su - c;
    std::vector<FieldElem> coeffs(b + 1, f.zero());
    for (std::size_t k = lo; k <= b; ++k) coeffs[k] = el.upper[c][su - k];
    st.basis[b] = PolyL(f, std::move(coeffs));
    leads[b - lo] = el.upper[c][c].valuation().value();
  }
  st.s = s;
  record_stage(spec, st.a, s, lo, leads, st.lead_vals, st.s0, opts.window, st.frozen);
  st.hits.assign(st.s0.size(), false);
  for (std::size_t b = 0; b < st.s0.size(); ++b) st.hits[b] = st.s0[b] >= 0;
}

ResidueRun span_residue_exact(const ExtensionSpec& spec, std::int64_t a, std::size_t S, const SpanOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  UTMatrix<PolyL> tau = tau_matrix(spec, a, S);
  if (opts.on_phase)
    opts.on_phase("tau_a" + std::to_string(a),
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  t0 = std::chrono::steady_clock::now();
  GaussState st = initial_state(a);
  ResidueRun run;
  run.a = a;
  for (std::size_t s = 0; s < S; ++s) {
    std::vector<PolyL> col;
    for (std::size_t i = 0; i <= s; ++i) col.push_back(tau.at(i, s));
    span_step(spec, st, col, opts);
    if (opts.record_trace) run.trace.push_back(st.lead_vals);
  }
  run.lead_vals = st.lead_vals;
  run.s0 = st.s0;
  if (opts.on_phase)
    opts.on_phase("elim_a" + std::to_string(a),
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return run;
}

SpanReport assemble_report(const ExtensionSpec& spec, std::size_t N, const std::vector<ResidueRun>& runs) {
  SpanReport rep;
  const std::int64_t qm1 = spec.q - 1;
  for (std::int64_t n = 0; n < static_cast<std::int64_t>(N); ++n) {
    SpanRow row;
    row.n = n;
    row.a = n % qm1;
    row.b = n / qm1;
    row.wq = w_q(spec, n);
    const ResidueRun& run = runs.at(static_cast<std::size_t>(row.a));
    const std::int64_t s0 = run.s0.at(static_cast<std::size_t>(row.b));
    row.best_val = run.lead_vals.at(static_cast<std::size_t>(row.b));
    if (s0 >= 0) {
      row.exact = true;
      row.s0 = s0;
      row.cap = row.a + qm1 * s0;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

SpanReport run_span_check(const ExtensionSpec& spec, std::size_t N, const SpanOptions& opts) {
  const std::int64_t qm1 = spec.q - 1;
  if (static_cast<std::int64_t>(N) < qm1 || static_cast<std::int64_t>(N) % qm1 != 0)
    throw ValidationError("max-n must be a positive multiple of q-1 = " + std::to_string(qm1));
  if (opts.engine == SpanOptions::Engine::fast) return assemble_report(spec, N, span_residues_fast(spec, N, opts));
  const std::size_t S = N / static_cast<std::size_t>(qm1);
  std::vector<ResidueRun> runs(static_cast<std::size_t>(qm1));
  detail::parallel_for(runs.size(), detail::resolve_threads(opts.threads),
                       [&](std::size_t a) { runs[a] = span_residue_exact(spec, static_cast<std::int64_t>(a), S, opts); });
  return assemble_report(spec, N, runs);
}

std::string span_report_csv(const SpanReport& report) {
  std::ostringstream os;
  os << "n,a,b,wq,s0,cap,status,best_val\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.a << ',' << r.b << ',' << r.wq << ',';
    if (r.s0) os << *r.s0;
    os << ',';
    if (r.cap) os << *r.cap;
    os << ',' << (r.exact ? "exact" : "pending") << ',' << r.best_val << '\n';
  }
  return os.str();
}

}  // namespace ltf
