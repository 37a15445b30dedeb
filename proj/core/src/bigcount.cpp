#include "dmatch/bigcount.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace dmatch {

double log2_big(const BigCount& x) {
  if (x <= 0) {
    throw std::domain_error("log2_big: argument must be positive");
  }
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 64) {
    return std::log2(static_cast<double>(x.convert_to<std::uint64_t>()));
  }
  const unsigned shift = bits - 64;
  const std::uint64_t top = BigCount(x >> shift).convert_to<std::uint64_t>();
  return static_cast<double>(shift) + std::log2(static_cast<double>(top));
}

double ratio_to_double(const BigCount& num, const BigCount& den) {
  if (den <= 0) {
    throw std::invalid_argument("ratio_to_double: denominator must be positive");
  }
  if (num < 0) {
    throw std::invalid_argument("ratio_to_double: numerator must be nonnegative");
  }
  if (num == 0) {
    return 0.0;
  }
  // 96 quotient bits leave the double rounding as the only error source.
  const BigCount q = (num << 96) / den;
  const unsigned bits = boost::multiprecision::msb(q) + 1;
  if (bits <= 64) {
    return std::ldexp(static_cast<double>(q.convert_to<std::uint64_t>()), -96);
  }
  const unsigned shift = bits - 64;
  const std::uint64_t top = BigCount(q >> shift).convert_to<std::uint64_t>();
  return std::ldexp(static_cast<double>(top), static_cast<int>(shift) - 96);
}

}  // namespace dmatch
