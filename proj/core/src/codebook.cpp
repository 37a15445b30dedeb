#include "dmatch/codebook.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace dmatch {

namespace {

void check_block_length(int n) {
  if (n <= 0) {
    throw std::invalid_argument("CodebookSpec: block length must be positive");
  }
}

// Calls fn(word) for the `count` lexicographically first weight-w words of
// length n, as bit masks with symbol j at bit n-1-j (so numeric order is
// lexicographic order).
template <typename Fn>
void for_each_in_type_set(int n, int w, const BigCount& count, Fn&& fn) {
  BigCount left = count;
  if (left == 0) {
    return;
  }
  std::uint32_t word = (w == 0) ? 0u : ((1u << w) - 1u);
  for (;;) {
    fn(word);
    if (--left == 0) {
      return;
    }
    // Gosper's hack: next mask of equal popcount.
    const std::uint32_t low = word & (~word + 1u);
    const std::uint32_t ripple = word + low;
    word = ripple | (((word ^ ripple) >> 2) / low);
  }
}

double target_probability_log2(std::uint32_t word, int n, double p) {
  const int w = std::popcount(word);
  return w * std::log2(p) + (n - w) * std::log2(1.0 - p);
}

}  // namespace

CodebookSpec CodebookSpec::union_of_type_sets(int n, int k) {
  check_block_length(n);
  if (k < 0 || k > n) {
    throw std::invalid_argument("CodebookSpec: need 0 <= k <= n");
  }
  return CodebookSpec(Kind::kUnionOfTypeSets, n, k, partial_binom_sum(n, k));
}

CodebookSpec CodebookSpec::constant_composition(int n, int w, BigCount size) {
  check_block_length(n);
  if (w < 0 || w > n) {
    throw std::invalid_argument("CodebookSpec: need 0 <= w <= n");
  }
  if (size < 1 || size > binom(n, w)) {
    throw std::invalid_argument("CodebookSpec: size must lie in [1, C(n, w)]");
  }
  return CodebookSpec(Kind::kConstantComposition, n, w, std::move(size));
}

CodebookSpec CodebookSpec::constant_composition(int n, int w) {
  check_block_length(n);
  if (w < 0 || w > n) {
    throw std::invalid_argument("CodebookSpec: need 0 <= w <= n");
  }
  return CodebookSpec(Kind::kConstantComposition, n, w, binom(n, w));
}

CodebookSpec CodebookSpec::greedy_prefix(int n, BigCount size) {
  check_block_length(n);
  if (size < 1 || size > (BigCount(1) << n)) {
    throw std::invalid_argument("CodebookSpec: size must lie in [1, 2^n]");
  }
  return CodebookSpec(Kind::kGreedyPrefix, n, 0, std::move(size));
}

int CodebookSpec::max_weight() const {
  if (kind_ != Kind::kUnionOfTypeSets) {
    throw std::logic_error("CodebookSpec: max_weight only for union-of-type-sets");
  }
  return param_;
}

int CodebookSpec::weight() const {
  if (kind_ != Kind::kConstantComposition) {
    throw std::logic_error("CodebookSpec: weight only for constant-composition");
  }
  return param_;
}

Probability probability_from_ratio(const BigCount& num, const BigCount& den) {
  static const BigCount kFits = BigCount(1) << 62;
  if (num <= kFits && den <= kFits) {
    return Probability(num.convert_to<std::int64_t>(),
                       den.convert_to<std::int64_t>());
  }
  return Probability(ratio_to_double(num, den));
}

GreedySplit greedy_split(int n, const BigCount& size) {
  if (size < 1 || size > (BigCount(1) << n)) {
    throw std::invalid_argument("greedy_split: size must lie in [1, 2^n]");
  }
  BinomialPrefixScan scan(n);
  while (scan.cumulative_count() < size) {
    scan.advance();
  }
  // scan.i() is now the smallest k with |C_k| >= size.
  if (scan.cumulative_count() == size) {
    return GreedySplit{scan.i(), scan.cumulative_count(), 0};
  }
  const BigCount below = scan.cumulative_count() - scan.binom();
  return GreedySplit{scan.i() - 1, below, size - below};
}

BigCount codebook_size(const CodebookSpec& spec) { return spec.size(); }

Probability letter_distribution(const CodebookSpec& spec) {
  const int n = spec.n();
  switch (spec.kind()) {
    case CodebookSpec::Kind::kConstantComposition:
      return Probability(spec.weight(), n);
    case CodebookSpec::Kind::kUnionOfTypeSets: {
      BinomialPrefixScan scan(n);
      while (scan.i() < spec.max_weight()) {
        scan.advance();
      }
      return probability_from_ratio(scan.cumulative_weight(),
                                    n * scan.cumulative_count());
    }
    case CodebookSpec::Kind::kGreedyPrefix: {
      const GreedySplit split = greedy_split(n, spec.size());
      BinomialPrefixScan scan(n);
      while (scan.i() < split.full_weight) {
        scan.advance();
      }
      const BigCount weight = scan.cumulative_weight() +
                              split.partial_count * (split.full_weight + 1);
      return probability_from_ratio(weight, n * spec.size());
    }
  }
  throw std::logic_error("letter_distribution: unreachable");
}

double divergence_exact(const CodebookSpec& spec, const TargetSource& src) {
  const int n = spec.n();
  if (n > kEnumerationGuard) {
    throw std::invalid_argument(
        "divergence_exact: n exceeds the enumeration guard; "
        "use divergence_decomposed");
  }
  const double p = src.p().value();
  const double log2_size = log2_big(spec.size());
  const double inv_size = 1.0 / spec.size().convert_to<double>();

  long double sum = 0.0L;
  const auto add_word = [&](std::uint32_t word) {
    sum += -log2_size - target_probability_log2(word, n, p);
  };

  switch (spec.kind()) {
    case CodebookSpec::Kind::kConstantComposition:
      for_each_in_type_set(n, spec.weight(), spec.size(), add_word);
      break;
    case CodebookSpec::Kind::kUnionOfTypeSets:
      for (int w = 0; w <= spec.max_weight(); ++w) {
        for_each_in_type_set(n, w, binom(n, w), add_word);
      }
      break;
    case CodebookSpec::Kind::kGreedyPrefix: {
      const GreedySplit split = greedy_split(n, spec.size());
      for (int w = 0; w <= split.full_weight; ++w) {
        for_each_in_type_set(n, w, binom(n, w), add_word);
      }
      for_each_in_type_set(n, split.full_weight + 1, split.partial_count,
                           add_word);
      break;
    }
  }
  return static_cast<double>(sum) * inv_size;
}

DivergenceBreakdown divergence_decomposed(const CodebookSpec& spec,
                                          const TargetSource& src) {
  DivergenceBreakdown out;
  out.p_letter = letter_distribution(spec);
  out.log2_size = log2_big(spec.size());
  const int n = spec.n();
  out.codebook_term = -out.log2_size + n * binary_entropy(out.p_letter);
  out.letter_term = n * binary_divergence(out.p_letter, src.p());
  out.total = out.codebook_term + out.letter_term;
  return out;
}

BoundPair pletter_gap_bounds(int n, int k) {
  if (n <= 0 || k < 0) {
    throw std::invalid_argument("pletter_gap_bounds: bad arguments");
  }
  if (2 * k >= n) {
    throw std::invalid_argument("pletter_gap_bounds: need k < n/2");
  }
  const double q = static_cast<double>(k) / n;
  const double denom = 1.0 - 2.0 * q;
  const double upper = (1.0 - q) / (n * denom) +
                       1.0 / (2.0 * static_cast<double>(n) * n * denom * denom);
  return BoundPair{0.0, upper};
}

}  // namespace dmatch
