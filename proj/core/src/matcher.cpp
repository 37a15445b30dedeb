#include "dmatch/matcher.hpp"

#include <stdexcept>
#include <utility>

namespace dmatch {

namespace {

constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";

// Rank of a weight-w word within its type set (lexicographic order).
// Walks the word once, updating the pending binomial by a ratio step, so
// the whole rank costs O(n) big-int operations.
BigCount rank_in_type(const BitBlock& word, int w) {
  const int n = static_cast<int>(word.length());
  int ones_left = w;
  BigCount below = binom(n - 1, w);  // words with 0 in the current position
  BigCount r = 0;
  for (int j = 0; j < n && ones_left > 0; ++j) {
    const int rest = n - 1 - j;
    if (word.digit(j) == 0) {
      if (rest > 0) {
        below *= rest - ones_left;
        below /= rest;
      }
    } else {
      r += below;
      if (rest > 0) {
        below *= ones_left;
        below /= rest;
      }
      --ones_left;
    }
  }
  return r;
}

// Inverse of rank_in_type.
BitBlock unrank_in_type(int n, int w, BigCount inner) {
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n), 0);
  int ones_left = w;
  BigCount below = binom(n - 1, w);
  for (int j = 0; j < n && ones_left > 0; ++j) {
    const int rest = n - 1 - j;
    if (inner < below) {
      if (rest > 0) {
        below *= rest - ones_left;
        below /= rest;
      }
    } else {
      digits[static_cast<std::size_t>(j)] = 1;
      inner -= below;
      if (rest > 0) {
        below *= ones_left;
        below /= rest;
      }
      --ones_left;
    }
  }
  return BitBlock(std::move(digits));
}

void check_codeword_shape(const BitBlock& codeword, int n) {
  if (static_cast<int>(codeword.length()) != n) {
    throw std::invalid_argument("rank: codeword length does not match the codebook");
  }
  for (std::size_t i = 0; i < codeword.length(); ++i) {
    if (codeword.digit(i) > 1) {
      throw std::invalid_argument("rank: codeword must be binary");
    }
  }
}

}  // namespace

BitBlock::BitBlock(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}

BitBlock BitBlock::from_string(std::string_view text) {
  std::vector<std::uint8_t> digits;
  digits.reserve(text.size());
  for (const char c : text) {
    if (c >= '0' && c <= '9') {
      digits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c >= 'a' && c <= 'z') {
      digits.push_back(static_cast<std::uint8_t>(c - 'a' + 10));
    } else {
      throw std::invalid_argument("BitBlock: invalid digit character");
    }
  }
  return BitBlock(std::move(digits));
}

BitBlock BitBlock::zeros(std::size_t length) {
  return BitBlock(std::vector<std::uint8_t>(length, 0));
}

std::string BitBlock::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (const std::uint8_t d : digits_) {
    out.push_back(kDigits[d]);
  }
  return out;
}

int BitBlock::weight() const {
  int w = 0;
  for (const std::uint8_t d : digits_) {
    if (d != 0) {
      ++w;
    }
  }
  return w;
}

BigCount rank(const BitBlock& codeword, const CodebookSpec& spec) {
  const int n = spec.n();
  check_codeword_shape(codeword, n);
  const int wt = codeword.weight();

  switch (spec.kind()) {
    case CodebookSpec::Kind::kConstantComposition: {
      if (wt != spec.weight()) {
        throw decode_error("rank: codeword weight differs from the composition");
      }
      BigCount r = rank_in_type(codeword, wt);
      if (r >= spec.size()) {
        throw decode_error("rank: codeword beyond the codebook prefix");
      }
      return r;
    }
    case CodebookSpec::Kind::kUnionOfTypeSets: {
      if (wt > spec.max_weight()) {
        throw decode_error("rank: codeword weight exceeds the codebook maximum");
      }
      const BigCount base = wt == 0 ? BigCount(0) : partial_binom_sum(n, wt - 1);
      return base + rank_in_type(codeword, wt);
    }
    case CodebookSpec::Kind::kGreedyPrefix: {
      const GreedySplit split = greedy_split(n, spec.size());
      if (wt <= split.full_weight) {
        const BigCount base = wt == 0 ? BigCount(0) : partial_binom_sum(n, wt - 1);
        return base + rank_in_type(codeword, wt);
      }
      if (wt == split.full_weight + 1) {
        BigCount r = rank_in_type(codeword, wt);
        if (r < split.partial_count) {
          return split.full_count + r;
        }
      }
      throw decode_error("rank: codeword outside the greedy codebook");
    }
  }
  throw std::logic_error("rank: unreachable");
}

BitBlock unrank(const BigCount& index, const CodebookSpec& spec) {
  if (index < 0 || index >= spec.size()) {
    throw std::out_of_range("unrank: index must lie in [0, |C|)");
  }
  const int n = spec.n();
  if (spec.kind() == CodebookSpec::Kind::kConstantComposition) {
    return unrank_in_type(n, spec.weight(), index);
  }
  // Union-of-type-sets and greedy prefixes share the canonical order; find
  // the weight class, then unrank within it.
  BinomialPrefixScan scan(n);
  while (scan.cumulative_count() <= index) {
    scan.advance();
  }
  const BigCount inner = index - (scan.cumulative_count() - scan.binom());
  return unrank_in_type(n, scan.i(), inner);
}

CcdmDesign ccdm_design(int n, const TargetSource& src, int base) {
  if (n < 1) {
    throw std::invalid_argument("ccdm_design: n must be positive");
  }
  if (base < 2) {
    throw std::invalid_argument("ccdm_design: base must be at least 2");
  }
  int best_w = 0;
  double best_d = binary_divergence(Probability(0, 1), src.p());
  for (int w = 1; w <= n; ++w) {
    const double d = binary_divergence(Probability(w, n), src.p());
    if (d < best_d) {
      best_d = d;
      best_w = w;
    }
  }
  const BigCount type_size = binom(n, best_w);
  BigCount addressable = 1;
  int m = 0;
  while (addressable * base <= type_size) {
    addressable *= base;
    ++m;
  }
  return CcdmDesign{n, best_w, base, m,
                    CodebookSpec::constant_composition(n, best_w, addressable)};
}

Matcher::Matcher(CodebookSpec spec, int base)
    : spec_(std::move(spec)), base_(base) {
  if (base < 2) {
    throw std::invalid_argument("Matcher: base must be at least 2");
  }
  addressable_ = 1;
  m_ = 0;
  while (addressable_ * base_ <= spec_.size()) {
    addressable_ *= base_;
    ++m_;
  }
}

Matcher::Matcher(const CcdmDesign& design)
    : spec_(design.spec),
      base_(design.base),
      m_(design.m),
      addressable_(design.spec.size()) {}

BitBlock Matcher::match(const BitBlock& input) const {
  if (static_cast<int>(input.length()) != m_) {
    throw std::invalid_argument("match: input length does not match the design");
  }
  BigCount index = 0;
  for (std::size_t i = 0; i < input.length(); ++i) {
    if (input.digit(i) >= base_) {
      throw std::invalid_argument("match: digit outside the input alphabet");
    }
    index *= base_;
    index += input.digit(i);
  }
  return unrank(index, spec_);
}

BitBlock Matcher::dematch(const BitBlock& codeword) const {
  BigCount r = rank(codeword, spec_);
  if (r >= addressable_) {
    throw decode_error("dematch: codeword beyond the addressable prefix");
  }
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(m_), 0);
  for (int i = m_ - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(BigCount(r % base_).convert_to<unsigned>());
    r /= base_;
  }
  return BitBlock(std::move(digits));
}

}  // namespace dmatch
