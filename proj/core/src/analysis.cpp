#include "dmatch/analysis.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dmatch {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double uts_total(int n, const BigCount& count, const BigCount& weight,
                 const Probability& target) {
  const Probability pc = probability_from_ratio(weight, n * count);
  return -log2_big(count) + n * binary_entropy(pc) +
         n * binary_divergence(pc, target);
}

}  // namespace

OptimalResult optimal_k(int n, const TargetSource& src) {
  if (n < 1) {
    throw std::invalid_argument("optimal_k: n must be positive");
  }
  std::vector<double> totals;
  totals.reserve(static_cast<std::size_t>(n) + 1);
  BinomialPrefixScan scan(n);
  for (;;) {
    totals.push_back(
        uts_total(n, scan.cumulative_count(), scan.cumulative_weight(), src.p()));
    if (scan.i() == n) {
      break;
    }
    scan.advance();
  }
  int k_hat = 0;
  for (int k = 1; k <= n; ++k) {
    if (totals[static_cast<std::size_t>(k)] <
        totals[static_cast<std::size_t>(k_hat)]) {
      k_hat = k;
    }
  }
  OptimalResult out;
  out.k_hat = k_hat;
  out.breakdown =
      divergence_decomposed(CodebookSpec::union_of_type_sets(n, k_hat), src);
  out.divergence_below =
      k_hat > 0 ? totals[static_cast<std::size_t>(k_hat) - 1] : kNaN;
  out.divergence_above =
      k_hat < n ? totals[static_cast<std::size_t>(k_hat) + 1] : kNaN;
  return out;
}

double greedy_divergence(int n, const TargetSource& src, const BigCount& size) {
  if (n < 1) {
    throw std::invalid_argument("greedy_divergence: n must be positive");
  }
  if (size < 1 || size > (BigCount(1) << n)) {
    throw std::invalid_argument("greedy_divergence: size must lie in [1, 2^n]");
  }
  return divergence_decomposed(CodebookSpec::greedy_prefix(n, size), src).total;
}

double exhaustive_best_divergence(int n, const TargetSource& src,
                                  std::uint64_t size) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("exhaustive_best_divergence: guarded to n <= 4");
  }
  const std::uint32_t words = 1u << n;
  if (size < 1 || size > words) {
    throw std::invalid_argument("exhaustive_best_divergence: size out of range");
  }
  const double p = src.p().value();
  std::vector<double> log2_inv_prob(words);
  for (std::uint32_t word = 0; word < words; ++word) {
    const int w = std::popcount(word);
    log2_inv_prob[word] = -(w * std::log2(p) + (n - w) * std::log2(1.0 - p));
  }
  const double log2_size = std::log2(static_cast<double>(size));
  double best = std::numeric_limits<double>::infinity();
  const std::uint64_t masks = std::uint64_t(1) << words;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (static_cast<std::uint64_t>(std::popcount(mask)) != size) {
      continue;
    }
    double sum = 0.0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      sum += log2_inv_prob[std::countr_zero(rest)];
    }
    const double d = -log2_size + sum / static_cast<double>(size);
    if (d < best) {
      best = d;
    }
  }
  return best;
}

bool endpoint_property_check(int n, const TargetSource& src, int k, double tol) {
  if (n < 1 || k < 0 || k >= n) {
    throw std::invalid_argument("endpoint_property_check: need 0 <= k < n");
  }
  const BigCount lo = partial_binom_sum(n, k);
  const BigCount hi = partial_binom_sum(n, k + 1);
  const double d_lo =
      divergence_decomposed(CodebookSpec::union_of_type_sets(n, k), src).total;
  const double d_hi =
      divergence_decomposed(CodebookSpec::union_of_type_sets(n, k + 1), src)
          .total;
  const double floor = std::min(d_lo, d_hi) - tol;
  for (BigCount size = lo; size <= hi; ++size) {
    if (greedy_divergence(n, src, size) < floor) {
      return false;
    }
  }
  return true;
}

LowerBoundReport optimal_lower_bound(int n, int k, const TargetSource& src) {
  if (n < 1 || k < 0) {
    throw std::invalid_argument("optimal_lower_bound: bad arguments");
  }
  if (2 * k >= n) {
    throw std::invalid_argument("optimal_lower_bound: defined only for k/n < 1/2");
  }
  LowerBoundReport rep;
  rep.n = n;
  rep.k = k;
  rep.q_hat = static_cast<double>(k) / n;
  const double q = rep.q_hat;
  const double denom = 1.0 - 2.0 * q;
  rep.epsilon_n = (1.0 - q) / (n * denom) +
                  1.0 / (2.0 * static_cast<double>(n) * n * denom * denom);
  rep.asymptotic_constant = asymptotic_gap_constant(src);
  if (q - rep.epsilon_n <= 0.0) {
    // The entropy-difference step needs eps < q; below that the chain only
    // says D >= -infinity.
    rep.vacuous = true;
    rep.bound_bits = -std::numeric_limits<double>::infinity();
    return rep;
  }
  const double coef = (1.0 - q) / denom + 1.0 / (2.0 * n * denom * denom);
  const double mid =
      coef * std::log2((1.0 - q + rep.epsilon_n) / (q - rep.epsilon_n));
  const double inv_n = 1.0 / n;
  const double tail =
      0.5 * std::log2(2.0 * std::numbers::pi * q * (1.0 - q) *
                      (denom + inv_n) * (denom + inv_n) /
                      ((1.0 - q + inv_n) * (1.0 - q + inv_n)));
  rep.bound_bits = 0.5 * std::log2(static_cast<double>(n)) - mid + tail;
  return rep;
}

double asymptotic_gap_constant(const TargetSource& src) {
  const double p = src.p().value();
  const double denom = 1.0 - 2.0 * p;
  return 0.5 * std::log2(2.0 * std::numbers::pi * p * denom * denom / (1.0 - p)) -
         ((1.0 - p) / denom) * std::log2((1.0 - p) / p);
}

BoundPair ccdm_bounds(int n, const TargetSource& src, int base) {
  const CcdmDesign design = ccdm_design(n, src, base);
  if (design.w == 0 || design.w == n) {
    throw std::domain_error("ccdm_bounds: undefined for degenerate compositions");
  }
  const double pc = static_cast<double>(design.w) / n;
  const double pq = pc * (1.0 - pc);
  return BoundPair{
      0.5 * std::log2(static_cast<double>(n)) +
          0.5 * std::log2(2.0 * std::numbers::pi * pq),
      std::log2(static_cast<double>(base)) + 0.5 * std::log2(8.0 * n * pq)};
}

std::vector<SweepRecord> sweep(const TargetSource& src,
                               const std::vector<int>& n_values, int base) {
  std::vector<SweepRecord> records;
  records.reserve(n_values.size());
  for (const int n : n_values) {
    SweepRecord rec;
    rec.n = n;
    try {
      const OptimalResult opt = optimal_k(n, src);
      std::vector<std::string> flags;

      rec.k_hat = opt.k_hat;
      rec.log2_size = opt.breakdown.log2_size;
      rec.p_letter = opt.breakdown.p_letter.value();
      rec.d_opt_total = opt.breakdown.total;
      rec.d_opt_codebook_term = opt.breakdown.codebook_term;
      rec.d_opt_letter_term = opt.breakdown.letter_term;
      rec.gap = rec.d_opt_total - 0.5 * std::log2(static_cast<double>(n));

      if (2 * opt.k_hat >= n) {
        rec.eq17_lower = kNaN;
        flags.push_back("khat_ge_half");
      } else {
        const LowerBoundReport rep = optimal_lower_bound(n, opt.k_hat, src);
        rec.eq17_lower = rep.bound_bits;
        if (rep.vacuous) {
          flags.push_back("eq17_vacuous");
        }
      }

      const CcdmDesign design = ccdm_design(n, src, base);
      rec.d_ccdm = divergence_decomposed(design.spec, src).total;
      if (design.w == 0 || design.w == n) {
        rec.ccdm_lower = kNaN;
        rec.ccdm_upper = kNaN;
        flags.push_back("ccdm_degenerate");
      } else {
        const BoundPair bounds = ccdm_bounds(n, src, base);
        rec.ccdm_lower = bounds.lower;
        rec.ccdm_upper = bounds.upper;
      }

      std::string joined;
      for (const std::string& f : flags) {
        if (!joined.empty()) {
          joined += ';';
        }
        joined += f;
      }
      rec.flags = joined;
    } catch (const std::exception& e) {
      rec.k_hat = -1;
      rec.log2_size = kNaN;
      rec.p_letter = kNaN;
      rec.d_opt_total = kNaN;
      rec.d_opt_codebook_term = kNaN;
      rec.d_opt_letter_term = kNaN;
      rec.eq17_lower = kNaN;
      rec.d_ccdm = kNaN;
      rec.ccdm_lower = kNaN;
      rec.ccdm_upper = kNaN;
      rec.gap = kNaN;
      rec.flags = std::string("error:") + e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace dmatch
