#pragma once

#include "dmatch/bigcount.hpp"
#include "dmatch/combinatorics.hpp"
#include "dmatch/infotheory.hpp"

namespace dmatch {

// Implicit description of a codebook of length-n binary words. Codewords
// are never materialized above the enumeration guard; every quantity of
// interest follows from the size and the letter distribution.
//
// Canonical codeword order is weight ascending, lexicographic within a
// weight class ('0' < '1', leftmost symbol most significant). Which B^m
// codewords of a type set a matcher addresses is a convention of this
// library, not a property of the divergence: same-type codewords are
// equiprobable under the target, so any choice performs identically.
class CodebookSpec {
 public:
  enum class Kind { kUnionOfTypeSets, kConstantComposition, kGreedyPrefix };

  // All words of weight <= k.
  static CodebookSpec union_of_type_sets(int n, int k);

  // The `size` lexicographically first words of weight w; defaults to the
  // whole type set.
  static CodebookSpec constant_composition(int n, int w, BigCount size);
  static CodebookSpec constant_composition(int n, int w);

  // The `size` most likely words under any target with p < 1/2: all type
  // sets of low weight plus a lexicographic prefix of the next one.
  static CodebookSpec greedy_prefix(int n, BigCount size);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  // k for union-of-type-sets (largest included weight).
  int max_weight() const;
  // w for constant-composition.
  int weight() const;
  const BigCount& size() const { return size_; }

 private:
  CodebookSpec(Kind kind, int n, int param, BigCount size)
      : kind_(kind), n_(n), param_(param), size_(std::move(size)) {}

  Kind kind_;
  int n_;
  int param_;      // k or w; unused for greedy
  BigCount size_;
};

// Largest n for which divergence_exact will enumerate codewords.
inline constexpr int kEnumerationGuard = 24;

// The three-term divergence split. total = codebook_term + letter_term;
// codebook_term = -log2|C| + n*H(p_C) depends only on the codebook,
// letter_term = n*D(p_C || p) only on how its letter distribution misses
// the target.
struct DivergenceBreakdown {
  double total = 0.0;          // bits
  double codebook_term = 0.0;  // bits, >= 0
  double letter_term = 0.0;    // bits, >= 0
  Probability p_letter;
  double log2_size = 0.0;      // bits
};

// Exact cardinality of the codebook.
BigCount codebook_size(const CodebookSpec& spec);

// Probability of drawing a 1 at a uniformly random position of a uniformly
// random codeword, as an exact big-integer ratio. Constant-composition
// codebooks give exactly w/n independent of their size.
Probability letter_distribution(const CodebookSpec& spec);

// D(U_C || P^n) by explicit codeword enumeration. Rejects
// n > kEnumerationGuard; large blocks go through divergence_decomposed.
double divergence_exact(const CodebookSpec& spec, const TargetSource& src);

// The same divergence via the three-term split. Needs only |C| and the
// letter distribution, so it scales to n in the tens of thousands.
DivergenceBreakdown divergence_decomposed(const CodebookSpec& spec,
                                          const TargetSource& src);

// Bracket of k/n - p_C for the union-of-type-sets codebook:
//   0 <= k/n - p_C <= (1-k/n)/(n(1-2k/n)) + 1/(2n^2(1-2k/n)^2).
// Requires k < n/2.
BoundPair pletter_gap_bounds(int n, int k);

// num/den as a Probability, exact while the reduced fraction fits 64-bit
// integers, plain double beyond that.
Probability probability_from_ratio(const BigCount& num, const BigCount& den);

// Split of a greedy codebook: all type sets up to full_weight, plus
// partial_count lexicographically first words of weight full_weight + 1.
struct GreedySplit {
  int full_weight = 0;
  BigCount full_count = 0;    // |C_full_weight|
  BigCount partial_count = 0; // in [0, C(n, full_weight+1))
};

GreedySplit greedy_split(int n, const BigCount& size);

}  // namespace dmatch
