#pragma once

#include "dmatch/codebook.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmatch {

// A dematch input that is not a member of the codebook. Kept distinct from
// argument errors so callers can map it to a decode failure.
class decode_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-length block of base-B digits; base-2 blocks are plain bit strings.
// Digit 0 is the leftmost (most significant) symbol.
class BitBlock {
 public:
  BitBlock() = default;
  explicit BitBlock(std::vector<std::uint8_t> digits);

  // Parses '0'-'9' then 'a'-'z' (bases up to 36).
  static BitBlock from_string(std::string_view text);
  static BitBlock zeros(std::size_t length);

  std::string to_string() const;
  std::size_t length() const { return digits_.size(); }
  std::uint8_t digit(std::size_t i) const { return digits_[i]; }
  void set_digit(std::size_t i, std::uint8_t v) { digits_[i] = v; }
  int weight() const;  // number of nonzero digits

  friend bool operator==(const BitBlock&, const BitBlock&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

// Position of `codeword` in the canonical order of the codebook (weight
// ascending, lexicographic within a weight class; constant-composition
// codebooks are ordered within their type set). 0-based. Throws
// decode_error when the word is outside the codebook and
// std::invalid_argument when it is not a length-n binary word at all.
// Costs O(n) big-int operations.
BigCount rank(const BitBlock& codeword, const CodebookSpec& spec);

// Inverse of rank. Throws std::out_of_range for index >= |C|.
// Costs O(n) big-int operations; never enumerates.
BitBlock unrank(const BigCount& index, const CodebookSpec& spec);

// Constant-composition design for a target source: the composition w
// minimizing D(w/n || p) over w in {0..n} (ties to smaller w), with the
// codebook clipped to the largest power of the input base not exceeding
// the type set, so every length-m input block is addressable.
struct CcdmDesign {
  int n = 0;
  int w = 0;
  int base = 2;
  int m = 0;  // input block length; base^m <= C(n, w) < base^{m+1}
  CodebookSpec spec = CodebookSpec::constant_composition(1, 0);
};

CcdmDesign ccdm_design(int n, const TargetSource& src, int base = 2);

// The invertible fixed-to-fixed-length mapping: length-m digit blocks to
// length-n codewords and back, via enumerative rank/unrank. Only the first
// base^m codewords in canonical order are addressable; for a CCDM design
// that is the whole codebook.
class Matcher {
 public:
  explicit Matcher(CodebookSpec spec, int base = 2);
  explicit Matcher(const CcdmDesign& design);

  // Interprets the input block as a base-B integer (most significant digit
  // first) and returns the codeword of that rank. Injective over all
  // length-m inputs.
  BitBlock match(const BitBlock& input) const;

  // Exact inverse: dematch(match(x)) == x. Throws decode_error when the
  // codeword lies outside the addressable codebook.
  BitBlock dematch(const BitBlock& codeword) const;

  int input_length() const { return m_; }
  int output_length() const { return spec_.n(); }
  int base() const { return base_; }
  const CodebookSpec& spec() const { return spec_; }
  const BigCount& addressable_size() const { return addressable_; }

 private:
  CodebookSpec spec_;
  int base_;
  int m_;
  BigCount addressable_;  // base^m
};

}  // namespace dmatch
