#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ltf/extension.hpp"
#include "ltf/pnmatrix.hpp"
#include "ltf/poly.hpp"

namespace ltf {

std::int64_t s_q(const ExtensionSpec& spec, std::int64_t n);
// Checked two ways (digit sum and floor sum); ConsistencyError on disagreement.
std::int64_t w_q(const ExtensionSpec& spec, std::int64_t n);

// tau^{(a)} = r^{-1} D_Y r by back-substitution against the unitriangular r.
UTMatrix<PolyL> tau_matrix(const ExtensionSpec& spec, const UTMatrix<FieldElem>& r);
UTMatrix<PolyL> tau_matrix(const ExtensionSpec& spec, std::int64_t a, std::size_t S);

enum class TieBreak { lowest_index, highest_index };

using Row = std::vector<FieldElem>;

struct Elimination {
  // One row per column, row c has zeros before column c and a nonzero pivot at c.
  std::vector<Row> upper;
  // Original index of the row that became pivot c.
  std::vector<std::size_t> pivot_source;
  // When requested: rows of U with upper[c] = sum_k U[c][k] * input[k] (U over o_L).
  std::vector<Row> transform;
};

// Gaussian elimination over o_L: per column choose a minimal-valuation pivot and clear the
// column with o_L-multiples of it. RankError if some column has no nonzero candidate.
Elimination dvr_eliminate(const std::vector<Row>& rows, const Field& field, bool track_transform = false,
                          TieBreak tie = TieBreak::lowest_index);

struct SpanOptions {
  unsigned threads = 1;
  // Columns are dropped in blocks of this size once every b below the block has hit;
  // 0 disables dropping.
  std::size_t window = 0;
  TieBreak tie = TieBreak::lowest_index;
  enum class Engine { fast, exact } engine = Engine::fast;
  // Keep per-stage leading valuations in ResidueRun::trace.
  bool record_trace = false;
  // Receives (phase name, seconds).
  std::function<void(const std::string&, double)> on_phase;
};

struct GaussState {
  std::int64_t a = 0;
  std::int64_t s = -1;
  std::vector<PolyL> basis;                 // g_b, degree b (only columns >= frozen are kept)
  std::vector<std::int64_t> lead_vals;      // v_pi of lead(g_b)
  std::size_t frozen = 0;                   // columns below this are dropped
  std::vector<bool> hits;
  std::vector<std::int64_t> s0;             // -1 while pending
};

GaussState initial_state(std::int64_t a);
// Advance from stage s-1 to s; `tau_column` holds tau_{0,s}..tau_{s,s}.
void span_step(const ExtensionSpec& spec, GaussState& state, const std::vector<PolyL>& tau_column,
               const SpanOptions& opts);

struct ResidueRun {
  std::int64_t a = 0;
  std::vector<std::int64_t> lead_vals;  // final v_pi(lead g_b) per b
  std::vector<std::int64_t> s0;         // -1 where pending
  std::vector<std::vector<std::int64_t>> trace;
};

ResidueRun span_residue_exact(const ExtensionSpec& spec, std::int64_t a, std::size_t S, const SpanOptions& opts);
std::vector<ResidueRun> span_residues_fast(const ExtensionSpec& spec, std::size_t N, const SpanOptions& opts);

struct SpanRow {
  std::int64_t n = 0, a = 0, b = 0, wq = 0;
  std::optional<std::int64_t> s0, cap;
  bool exact = false;
  std::int64_t best_val = 0;
  friend bool operator==(const SpanRow&, const SpanRow&) = default;
};

struct SpanReport {
  std::vector<SpanRow> rows;
  friend bool operator==(const SpanReport&, const SpanReport&) = default;
};

SpanReport run_span_check(const ExtensionSpec& spec, std::size_t N, const SpanOptions& opts = {});
SpanReport assemble_report(const ExtensionSpec& spec, std::size_t N, const std::vector<ResidueRun>& runs);
std::string span_report_csv(const SpanReport& report);

}  // namespace ltf
