#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dmatch {

// Exact nonnegative integer for codebook sizes, binomial coefficients and
// enumeration ranks. Values routinely exceed 2^16000, so nothing here may
// ever round-trip through a finite float.
using BigCount = boost::multiprecision::cpp_int;

// log2 of a positive integer, computed from the bit length plus the top 64
// bits of the value. Relative error stays below 1e-15 regardless of size.
double log2_big(const BigCount& x);

// num/den as a double, via an exact shifted integer division so the result
// is accurate to a few ulps even for operands thousands of bits wide.
double ratio_to_double(const BigCount& num, const BigCount& den);

}  // namespace dmatch
