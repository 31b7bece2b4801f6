// Span check in the quotient pi^{-W} o_L / o_L.
//
// Every stage lattice contains Y^0..Y^s (tau_{j,j} = Y^j), so leading valuations only
// depend on the image modulo o_L, and every entry has v_pi >= -w_q(n_s) > -W. Entries are
// scaled by pi^W and kept in o_L / pi^W as D coordinates in Z/p^m (ramified: pi^D = p).
//
// The generators pi^{i-s} (Binv Atilde)_{ik} need Binv and Atilde modulo pi^G with G >= S,
// so they come from a separate higher-precision ring; elimination runs at precision W.

#include <gmp.h>

#include <algorithm>
#include <chrono>
#include <memory>
#include <string>

#include "ltf/arith.hpp"
#include "ltf/errors.hpp"
#include "ltf/spancheck.hpp"
#include "modring.hpp"
#include "parallel.hpp"

namespace ltf {

namespace detail {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

constexpr int kMaxLimbs = 12;
constexpr int kMaxCoords = 16;

struct FastPlan {
  std::int64_t p = 0, q = 0;
  int D = 1;  // coordinates per element
  bool ramified = false;
  std::size_t N = 0, S = 0;
  unsigned mG = 0, mW = 0;  // digits of p per coordinate
  int G = 0, W = 0;         // pi-adic precisions
  int limbsG = 0, limbsW = 0;
};

// Arithmetic on elements of o_L / pi^P stored as D consecutive ring residues.
template <class Ring>
struct ElemOps {
  using E = typename Ring::E;

  const Ring& ring;
  int D;
  bool ramified;
  int P;
  std::int64_t p;
  unsigned m;

  int val(const E* x) const {
    int best = P;
    for (int t = 0; t < D; ++t) {
      if (Ring::is_zero(x[t])) continue;
      int v = ramified ? D * static_cast<int>(ring.vp(x[t])) + t : static_cast<int>(ring.vp(x[t]));
      best = std::min(best, v);
    }
    return best;
  }

  bool is_zero(const E* x) const {
    for (int t = 0; t < D; ++t)
      if (!Ring::is_zero(x[t])) return false;
    return true;
  }

  // out = x * y
  void mul(E* out, const E* x, const E* y) const {
    if (D == 1) {
      out[0] = ring.mul_fast(x[0], y[0]);
      return;
    }
    if (D == 2) {
      const E xp1 = ring.mul_p_pow(x[1], 1);
      const E* a0[2] = {&x[0], &xp1};
      const E* b0[2] = {&y[0], &y[1]};
      const E* a1[2] = {&x[0], &x[1]};
      const E* b1[2] = {&y[1], &y[0]};
      E r0 = ring.template dot<2>(a0, b0);
      out[1] = ring.template dot<2>(a1, b1);
      out[0] = r0;
      return;
    }
    E xp[kMaxCoords], r[kMaxCoords];
    for (int i = 0; i < D; ++i) xp[i] = ring.mul_p_pow(x[i], 1);
    for (int t = 0; t < D; ++t) {
      typename Ring::Wide acc;
      Ring::clear(acc);
      for (int i = 0; i < D; ++i) {
        int l = t - i;
        if (l >= 0) Ring::mul_acc(acc, x[i], y[l]);
        else Ring::mul_acc(acc, xp[i], y[l + D]);
      }
      r[t] = ring.reduce(acc);
    }
    for (int t = 0; t < D; ++t) out[t] = r[t];
  }

  // out = x * pi^v, v >= 0
  void shift_up(E* out, const E* x, int v) const {
    if (v >= P) {
      for (int t = 0; t < D; ++t) out[t] = Ring::zero();
      return;
    }
    if (!ramified) {
      out[0] = ring.mul_p_pow(x[0], static_cast<unsigned>(v));
      return;
    }
    const int u = v / D, r = v % D;
    E tmp[kMaxCoords];
    for (int j = 0; j < D; ++j) tmp[j] = j >= r ? x[j - r] : ring.mul_p_pow(x[j - r + D], 1);
    for (int j = 0; j < D; ++j) out[j] = ring.mul_p_pow(tmp[j], static_cast<unsigned>(u));
  }

  // out = x / pi^v where val(x) >= v; the top digits of the result are left zero.
  void shift_down(E* out, const E* x, int v) const {
    if (!ramified) {
      out[0] = ring.div_p_pow(x[0], static_cast<unsigned>(v));
      return;
    }
    const int u = v / D, r = v % D;
    E tmp[kMaxCoords];
    for (int j = 0; j < D; ++j) tmp[j] = j + r < D ? x[j + r] : ring.div_p_pow(x[j + r - D], 1);
    for (int j = 0; j < D; ++j) out[j] = ring.div_p_pow(tmp[j], static_cast<unsigned>(u));
  }

  // Inverse of a unit by Newton iteration from the inverse of its constant coordinate.
  void inv_unit(E* out, const E* u) const {
    mpz_class c0 = ring.to_mpz(u[0]);
    mpz_class mod = pow_mpz(p, m);
    mpz_class inv;
    if (!mpz_invert(inv.get_mpz_t(), c0.get_mpz_t(), mod.get_mpz_t()))
      throw ConsistencyError("FastEngine", "pivot is not a unit after scaling");
    E y[kMaxCoords], t[kMaxCoords], two[kMaxCoords];
    for (int j = 0; j < D; ++j) y[j] = two[j] = Ring::zero();
    y[0] = ring.from_mpz(inv);
    two[0] = ring.from_mpz(2);
    for (int prec = ramified ? 1 : P; prec < P; prec *= 2) {
      mul(t, u, y);
      for (int j = 0; j < D; ++j) ring.sub(t[j], two[j], t[j]);
      mul(y, y, t);
    }
    for (int j = 0; j < D; ++j) out[j] = y[j];
  }
};

// Scaled generator entries pi^W tau_{i,s}[Y^k] modulo pi^W, as plain residues.
class TauSource {
 public:
  virtual ~TauSource() = default;
  enum class Status { zero, ok, below_bound };
  // `out` receives D coordinates of `limbs` limbs each. `wq` = w_q(n_s) bounds the valuation from below.
  virtual Status entry(std::size_t i, std::size_t k, std::size_t s, std::int64_t wq, u64* out, int limbs) = 0;
};

class TauFactory {
 public:
  virtual ~TauFactory() = default;
  virtual std::unique_ptr<TauSource> residue(std::int64_t a) const = 0;
};

template <int L, bool Pow2>
class TauFactoryImpl final : public TauFactory {
 public:
  using Ring = ModPm<L, Pow2>;
  using E = typename Ring::E;

  explicit TauFactoryImpl(const FastPlan& plan)
      : plan_(plan),
        ring_(static_cast<u64>(plan.p), plan.mG, static_cast<unsigned>(plan.D)),
        ops_{ring_, plan.D, plan.ramified, plan.G, plan.p, plan.mG} {
    modW_ = pow_mpz(plan.p, plan.mW);
    build_e_matrix();
  }

  std::unique_ptr<TauSource> residue(std::int64_t a) const override { return std::make_unique<Source>(*this, a); }

 private:
  class Source final : public TauSource {
   public:
    Source(const TauFactoryImpl& f, std::int64_t a) : f_(f), a_(a) {
      const int D = f.plan_.D;
      const std::size_t S = f.plan_.S;
      // Binv = Atilde^{-1}, column-major: binv_[j] holds rows 0..j of column j.
      binv_.resize(S);
      E prod[kMaxCoords];
      for (std::size_t j = 0; j < S; ++j) {
        binv_[j].assign((j + 1) * D, Ring::zero());
        binv_[j][j * D] = f.ring_.one();
        for (std::size_t i = j; i-- > 0;) {
          E* out = &binv_[j][i * D];
          for (std::size_t k = i + 1; k <= j; ++k) {
            const E* bkj = &binv_[j][k * D];
            if (f.ops_.is_zero(bkj)) continue;
            f.ops_.mul(prod, f.atilde(a, i, k), bkj);
            for (int t = 0; t < D; ++t) f.ring_.sub(out[t], out[t], prod[t]);
          }
        }
      }
    }

    Status entry(std::size_t i, std::size_t k, std::size_t s, std::int64_t wq, u64* out, int limbs) override {
      const auto& ops = f_.ops_;
      const int D = f_.plan_.D;
      E prod[kMaxCoords], x[kMaxCoords];
      ops.mul(prod, &binv_[k][i * D], f_.atilde(a_, k, s));
      if (ops.is_zero(prod)) return Status::zero;
      const int gap = static_cast<int>(s - i);
      if (ops.val(prod) < gap - wq) return Status::below_bound;
      const int shift = f_.plan_.W - gap;
      if (shift >= 0) ops.shift_up(x, prod, shift);
      else ops.shift_down(x, prod, -shift);
      bool nonzero = false;
      for (int t = 0; t < D; ++t) nonzero |= f_.reduce_to_w(x[t], out + t * limbs, limbs);
      return nonzero ? Status::ok : Status::zero;
    }

   private:
    const TauFactoryImpl& f_;
    std::int64_t a_;
    std::vector<std::vector<E>> binv_;
  };

  // Plain residue of x modulo p^mW; returns false when it is zero.
  bool reduce_to_w(const E& x, u64* out, int limbs) const {
    u64 plain[L];
    ring_.to_plain(x, plain);
    mpz_class v;
    mpz_import(v.get_mpz_t(), L, -1, sizeof(u64), 0, 0, plain);
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), modW_.get_mpz_t());
    std::fill(out, out + limbs, u64(0));
    if (v == 0) return false;
    mpz_export(out, nullptr, -1, sizeof(u64), 0, 0, v.get_mpz_t());
    return true;
  }

  // E_{I,J} = pi^{(J-I)/(q-1)} D_{I,J} is integral:
  // E_{I,t} = sum_r pi^{(q^r-1)/(q-1) - r} E_{I-1, t - (q^r-1)/(q-1)}, indexed by t = (J-I)/(q-1).
  void build_e_matrix() {
    const int D = plan_.D;
    const std::size_t N = plan_.N, qm1 = static_cast<std::size_t>(plan_.q - 1);
    std::vector<std::size_t> offs;
    std::vector<int> alpha;
    for (std::size_t r = 0, qr = 1;; ++r) {
      offs.push_back((qr - 1) / qm1);
      alpha.push_back(static_cast<int>((qr - 1) / qm1) - static_cast<int>(r));
      if (qr > N / static_cast<std::size_t>(plan_.q)) break;
      qr *= static_cast<std::size_t>(plan_.q);
    }
    erows_.assign(N, {});
    erows_[0].assign(((N - 1) / qm1 + 1) * D, Ring::zero());
    erows_[0][0] = ring_.one();
    E tmp[kMaxCoords];
    for (std::size_t I = 1; I < N; ++I) {
      const std::size_t len = (N - 1 - I) / qm1 + 1;
      erows_[I].assign(len * D, Ring::zero());
      const auto& prev = erows_[I - 1];
      for (std::size_t t = 0; t < len; ++t) {
        E* out = &erows_[I][t * D];
        for (std::size_t r = 0; r < offs.size() && offs[r] <= t; ++r) {
          const E* x = &prev[(t - offs[r]) * D];
          if (ops_.is_zero(x)) continue;
          ops_.shift_up(tmp, x, alpha[r]);
          for (int j = 0; j < D; ++j) ring_.add(out[j], out[j], tmp[j]);
        }
      }
    }
  }

  // Atilde^{(a)}_{i,j} = E_{a+i(q-1), a+j(q-1)}
  const E* atilde(std::int64_t a, std::size_t i, std::size_t j) const {
    const std::size_t I = static_cast<std::size_t>(a) + i * static_cast<std::size_t>(plan_.q - 1);
    return &erows_[I][(j - i) * plan_.D];
  }

  FastPlan plan_;
  Ring ring_;
  ElemOps<Ring> ops_;
  mpz_class modW_;
  std::vector<std::vector<E>> erows_;
};

template <int L, bool Pow2>
class Eliminator {
 public:
  using Ring = ModPm<L, Pow2>;
  using E = typename Ring::E;

  Eliminator(const ExtensionSpec& spec, const FastPlan& plan, const SpanOptions& opts, const TauFactory& taus)
      : spec_(spec),
        plan_(plan),
        opts_(opts),
        taus_(taus),
        D_(plan.D),
        ring_(static_cast<u64>(plan.p), plan.mW, static_cast<unsigned>(plan.D)),
        ops_{ring_, plan.D, plan.ramified, plan.W, plan.p, plan.mW} {}

  std::vector<ResidueRun> run() {
    std::vector<ResidueRun> runs(static_cast<std::size_t>(plan_.q - 1));
    parallel_for(runs.size(), resolve_threads(opts_.threads),
                 [&](std::size_t a) { runs[a] = run_residue(static_cast<std::int64_t>(a)); });
    return runs;
  }

 private:
  struct WorkRow {
    std::size_t index;  // position in the stacked matrix [tau_{s,s}; g_{s-1}..g_lo; tau_{0,s}..]
    std::size_t low;    // entries below this column are zero
    std::vector<E> data;
  };

  // g_b restricted to columns [base, b].
  struct StoredRow {
    std::size_t base = 0, low = 0;
    std::vector<E> data;
  };

  // T[0..count) -= c * Y[0..count), elementwise over D-coordinate entries.
  void sub_mul_row(E* T, const E* c, const E* Y, std::size_t count) const {
    if (D_ == 1) {
      for (std::size_t j = 0; j < count; ++j) {
        E prod = ring_.mul_fast(c[0], Y[j]);
        ring_.sub(T[j], T[j], prod);
      }
      return;
    }
    if (D_ == 2) {
      const E cp1 = ring_.mul_p_pow(c[1], 1);
      for (std::size_t j = 0; j < count; ++j) {
        const E* y = Y + 2 * j;
        E* t = T + 2 * j;
        const E* a0[2] = {&c[0], &cp1};
        const E* b0[2] = {&y[0], &y[1]};
        const E* a1[2] = {&c[0], &c[1]};
        const E* b1[2] = {&y[1], &y[0]};
        E r0 = ring_.template dot<2>(a0, b0), r1 = ring_.template dot<2>(a1, b1);
        ring_.sub(t[0], t[0], r0);
        ring_.sub(t[1], t[1], r1);
      }
      return;
    }
    E prod[kMaxCoords];
    for (std::size_t j = 0; j < count; ++j) {
      ops_.mul(prod, c, Y + D_ * j);
      for (int k = 0; k < D_; ++k) ring_.sub(T[D_ * j + k], T[D_ * j + k], prod[k]);
    }
  }

  void phase(const std::string& name, double secs) const {
    if (opts_.on_phase) opts_.on_phase(name, secs);
  }

  ResidueRun run_residue(std::int64_t a) {
    const std::size_t S = plan_.S;
    const int W = plan_.W;
    auto t0 = Clock::now();
    std::unique_ptr<TauSource> src = taus_.residue(a);
    double tau_secs = seconds_since(t0);
    double elim_secs = 0;

    ResidueRun run;
    run.a = a;
    std::vector<StoredRow> basis;
    std::size_t lo = 0;
    u64 plain[kMaxCoords * L];

    for (std::size_t s = 0; s < S; ++s) {
      auto ts = Clock::now();
      const std::size_t width = s + 1 - lo;
      const std::int64_t n_s = a + static_cast<std::int64_t>(s) * (plan_.q - 1);
      const std::int64_t wq = w_q(spec_, n_s);

      std::vector<WorkRow> rows;
      rows.reserve(2 * s + 1);
      for (std::size_t i = 0; i < s; ++i) {
        WorkRow w{s + 1 + i, s + 1, std::vector<E>(width * D_, Ring::zero())};
        for (std::size_t k = std::max(i, lo); k <= s; ++k) {
          auto st = src->entry(i, k, s, wq, plain, L);
          if (st == TauSource::Status::zero) continue;
          if (st == TauSource::Status::below_bound)
            throw ImpossibleValuation("tau entry below -w_q(" + std::to_string(n_s) + ") at stage " +
                                      std::to_string(s));
          E* out = &w.data[(k - lo) * D_];
          for (int t = 0; t < D_; ++t) out[t] = ring_.from_plain(plain + t * L);
          w.low = std::min(w.low, k);
        }
        if (w.low <= s) rows.push_back(std::move(w));
      }
      tau_secs += seconds_since(ts);
      ts = Clock::now();

      std::vector<StoredRow> new_basis(width);
      std::vector<std::int64_t> leads(width);
      std::vector<int> vals;
      E c[kMaxCoords], xs[kMaxCoords], ginv[kMaxCoords], unit[kMaxCoords];
      for (std::size_t k = s + 1; k-- > lo;) {
        if (k < s) {
          // Old g_k enters, widened to columns [lo, s]. A zero diagonal means g_k = Y^k.
          StoredRow& old = basis[k];
          if (!ops_.is_zero(&old.data[(k - old.base) * D_])) {
            WorkRow w{s - k, std::max(old.low, lo), std::vector<E>(width * D_, Ring::zero())};
            std::copy(old.data.begin() + static_cast<std::ptrdiff_t>((lo - old.base) * D_), old.data.end(),
                      w.data.begin());
            rows.push_back(std::move(w));
          }
        }
        const std::size_t col = (k - lo) * D_;
        // Pivot: minimal valuation, ties by stacked index.
        std::size_t piv = rows.size();
        int best = W;
        vals.assign(rows.size(), W);
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const E* x = &rows[r].data[col];
          if (ops_.is_zero(x)) continue;
          int v = ops_.val(x);
          vals[r] = v;
          bool better = piv == rows.size() || v < best ||
                        (v == best && ((opts_.tie == TieBreak::lowest_index) == (rows[r].index < rows[piv].index)));
          if (better) piv = r, best = v;
        }
        if (piv == rows.size()) {
          // Every candidate is integral here, so Y^k itself is the pivot.
          new_basis[k - lo] = StoredRow{lo, k + 1, std::vector<E>((k - lo + 1) * D_, Ring::zero())};
          leads[k - lo] = 0;
          continue;
        }
        const int V = best;
        ops_.shift_down(unit, &rows[piv].data[col], V);
        ops_.inv_unit(ginv, unit);
        const std::size_t plow = rows[piv].low;
        const E* prow = rows[piv].data.data() + (plow - lo) * D_;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (r == piv || vals[r] >= W) continue;
          WorkRow& tr = rows[r];
          E* trow = tr.data.data();
          ops_.shift_down(xs, trow + col, V);
          ops_.mul(c, xs, ginv);
          sub_mul_row(trow + (plow - lo) * D_, c, prow, k - plow);
          for (int t = 0; t < D_; ++t) trow[col + t] = Ring::zero();
          tr.low = std::min(tr.low, plow);
        }
        leads[k - lo] = static_cast<std::int64_t>(V) - W;
        WorkRow& pr = rows[piv];
        pr.data.resize((k - lo + 1) * D_);
        new_basis[k - lo] = StoredRow{lo, pr.low, std::move(pr.data)};
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(piv));
      }

      basis.resize(s + 1);
      for (std::size_t b = lo; b <= s; ++b) basis[b] = std::move(new_basis[b - lo]);
      std::size_t frozen = lo;
      record(a, static_cast<std::int64_t>(s), lo, leads, run, frozen);
      lo = frozen;
      if (opts_.record_trace) run.trace.push_back(run.lead_vals);
      elim_secs += seconds_since(ts);
    }
    phase("tau_a" + std::to_string(a), tau_secs);
    phase("elim_a" + std::to_string(a), elim_secs);
    return run;
  }

  void record(std::int64_t a, std::int64_t s, std::size_t lo, const std::vector<std::int64_t>& leads, ResidueRun& run,
              std::size_t& frozen) const {
    auto& lv = run.lead_vals;
    auto& s0 = run.s0;
    lv.resize(static_cast<std::size_t>(s) + 1, 0);
    s0.resize(static_cast<std::size_t>(s) + 1, -1);
    for (std::size_t b = lo; b <= static_cast<std::size_t>(s); ++b) {
      const std::int64_t n = a + static_cast<std::int64_t>(b) * (plan_.q - 1);
      const std::int64_t target = -w_q(spec_, n);
      const std::int64_t v = leads[b - lo];
      if (v < target)
        throw ImpossibleValuation("leading valuation " + std::to_string(v) + " below -w_q(" + std::to_string(n) +
                                  ") = " + std::to_string(target) + " at stage " + std::to_string(s));
      if (b < static_cast<std::size_t>(s) && v > lv[b])
        throw ConsistencyError("LeadMonotone", "leading valuation of g_" + std::to_string(b) + " rose from " +
                                                   std::to_string(lv[b]) + " to " + std::to_string(v));
      lv[b] = v;
      if (v == target && s0[b] < 0) s0[b] = s;
    }
    if (opts_.window > 0) {
      std::size_t h = frozen;
      while (h < s0.size() && s0[h] >= 0) ++h;
      frozen = std::max(frozen, h / opts_.window * opts_.window);
    }
  }

  const ExtensionSpec& spec_;
  FastPlan plan_;
  const SpanOptions& opts_;
  const TauFactory& taus_;
  int D_;
  Ring ring_;
  ElemOps<Ring> ops_;
};

template <int L>
std::unique_ptr<TauFactory> make_factory(const FastPlan& plan) {
  if constexpr (L > kMaxLimbs) {
    throw std::logic_error("limb count out of range");
  } else {
    if (plan.limbsG != L) return make_factory<L + 1>(plan);
    if (plan.p == 2) return std::make_unique<TauFactoryImpl<L, true>>(plan);
    return std::make_unique<TauFactoryImpl<L, false>>(plan);
  }
}

template <int L>
std::vector<ResidueRun> eliminate(const ExtensionSpec& spec, const FastPlan& plan, const SpanOptions& opts,
                                  const TauFactory& taus) {
  if constexpr (L > kMaxLimbs) {
    throw std::logic_error("limb count out of range");
  } else {
    if (plan.limbsW != L) return eliminate<L + 1>(spec, plan, opts, taus);
    if (plan.p == 2) return Eliminator<L, true>(spec, plan, opts, taus).run();
    return Eliminator<L, false>(spec, plan, opts, taus).run();
  }
}

int limbs_for(std::int64_t p, unsigned m, int D) {
  const std::size_t bits = ModPm<1, false>::bits_needed(pow_mpz(p, m), static_cast<unsigned>(D));
  return static_cast<int>((bits + 63) / 64);
}

}  // namespace

}  // namespace detail

std::vector<ResidueRun> span_residues_fast(const ExtensionSpec& spec, std::size_t N, const SpanOptions& opts) {
  const std::int64_t qm1 = spec.q - 1;
  if (static_cast<std::int64_t>(N) < qm1 || static_cast<std::int64_t>(N) % qm1 != 0)
    throw ValidationError("max-n must be a positive multiple of q-1 = " + std::to_string(qm1));
  detail::FastPlan plan;
  plan.p = spec.p;
  plan.q = spec.q;
  plan.ramified = spec.kind == ExtKind::ramified && spec.d > 1;
  plan.D = plan.ramified ? spec.d : 1;
  plan.N = N;
  plan.S = N / static_cast<std::size_t>(qm1);
  if (plan.D > detail::kMaxCoords) throw ValidationError("fast engine supports ramification degree up to 16");
  auto digits = [&](std::int64_t prec) { return static_cast<unsigned>((prec + plan.D - 1) / plan.D); };
  plan.mW = digits(w_q(spec, static_cast<std::int64_t>(N) - 1) + 1);
  plan.mG = std::max(plan.mW, digits(static_cast<std::int64_t>(plan.S)));
  plan.W = static_cast<int>(plan.mW) * plan.D;
  plan.G = static_cast<int>(plan.mG) * plan.D;
  plan.limbsG = detail::limbs_for(spec.p, plan.mG, plan.D);
  plan.limbsW = detail::limbs_for(spec.p, plan.mW, plan.D);

  if (plan.limbsG > detail::kMaxLimbs) {
    // Beyond the fixed-width range: fall back to exact arithmetic.
    SpanOptions exact = opts;
    exact.engine = SpanOptions::Engine::exact;
    std::vector<ResidueRun> runs(static_cast<std::size_t>(qm1));
    for (std::size_t a = 0; a < runs.size(); ++a)
      runs[a] = span_residue_exact(spec, static_cast<std::int64_t>(a), plan.S, exact);
    return runs;
  }
  auto t0 = detail::Clock::now();
  std::unique_ptr<detail::TauFactory> taus = detail::make_factory<1>(plan);
  if (opts.on_phase) opts.on_phase("D", detail::seconds_since(t0));
  return detail::eliminate<1>(spec, plan, opts, *taus);
}

}  // namespace ltf
