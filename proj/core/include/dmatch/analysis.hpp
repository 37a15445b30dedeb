#pragma once

#include "dmatch/codebook.hpp"
#include "dmatch/matcher.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dmatch {

struct OptimalResult {
  int k_hat = 0;
  DivergenceBreakdown breakdown;
  // Divergence totals at k_hat -/+ 1, NaN when out of range; kept so the
  // minimum can be audited without re-running the scan.
  double divergence_below = 0.0;
  double divergence_above = 0.0;
};

// Minimizes D(U_{C_k} || P^n) by an exhaustive scan of k = 0..n (one O(n)
// incremental big-int pass); ties go to the smaller k.
OptimalResult optimal_k(int n, const TargetSource& src);

// Divergence of the greedy codebook of the `size` most likely codewords.
// Requires 1 <= size <= 2^n.
double greedy_divergence(int n, const TargetSource& src, const BigCount& size);

// Minimum divergence over every size-M codebook of length-n words, by full
// search over all (2^n choose M) subsets. The validation oracle for the
// greedy construction; guarded to n <= 4.
double exhaustive_best_divergence(int n, const TargetSource& src,
                                  std::uint64_t size);

// True when every greedy codebook with |C_k| <= size <= |C_{k+1}| has
// divergence at least min(D(C_k), D(C_{k+1})) - tol, i.e. the divergence
// has no interior minimum between two adjacent unions of type sets.
bool endpoint_property_check(int n, const TargetSource& src, int k,
                             double tol = 1e-12);

// The logarithmic-growth lower bound on D(U_{C_k} || P^n), valid for
// k/n < 1/2. At small n the entropy-difference step needs
// epsilon_n < k/n; when that fails the chain is vacuous and bound_bits is
// -infinity (an honest, trivially true lower bound).
struct LowerBoundReport {
  int n = 0;
  int k = 0;
  double q_hat = 0.0;      // k/n
  double epsilon_n = 0.0;  // (1-q)/(n(1-2q)) + 1/(2n^2(1-2q)^2)
  double bound_bits = 0.0;
  double asymptotic_constant = 0.0;
  bool vacuous = false;
};

LowerBoundReport optimal_lower_bound(int n, int k, const TargetSource& src);

// Limit constant of D_opt(n) - (1/2)log2(n) as n grows:
//   (1/2)log2(2*pi*p(1-2p)^2/(1-p)) - ((1-p)/(1-2p))*log2((1-p)/p).
double asymptotic_gap_constant(const TargetSource& src);

// Bracket (bits) of the codebook-only divergence term of a CCDM sized to
// base^m, with pc = w/n from ccdm_design:
//   lower = (1/2)log2(n) + (1/2)log2(2*pi*pc*(1-pc))
//   upper = log2(base) + (1/2)log2(8*n*pc*(1-pc))
// The full CCDM divergence adds n*D(pc || p) to both ends. Rejects
// degenerate compositions w in {0, n}.
BoundPair ccdm_bounds(int n, const TargetSource& src, int base = 2);

// One sweep row; field names match the CSV schema. eq17_lower is the
// logarithmic-growth lower bound (NaN when k_hat/n >= 1/2, -inf when the
// bound chain is vacuous); ccdm_lower/ccdm_upper bracket the CCDM
// codebook term, not its total.
struct SweepRecord {
  int n = 0;
  int k_hat = -1;
  double log2_size = 0.0;
  double p_letter = 0.0;
  double d_opt_total = 0.0;
  double d_opt_codebook_term = 0.0;
  double d_opt_letter_term = 0.0;
  double eq17_lower = 0.0;
  double d_ccdm = 0.0;
  double ccdm_lower = 0.0;
  double ccdm_upper = 0.0;
  double gap = 0.0;  // d_opt_total - (1/2)log2(n)
  std::string flags;
};

// Evaluates one record per n, in input order. Per-n failures are reported
// as rows flagged "error:..." with NaN fields; the sweep continues.
std::vector<SweepRecord> sweep(const TargetSource& src,
                               const std::vector<int>& n_values,
                               int base = 2);

}  // namespace dmatch
