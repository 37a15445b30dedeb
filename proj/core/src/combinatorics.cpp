#include "dmatch/combinatorics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dmatch {

namespace {

void require_nonneg(int value, const char* what) {
  if (value < 0) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative");
  }
}

}  // namespace

BigCount binom(int n, int k) {
  require_nonneg(n, "binom: n");
  require_nonneg(k, "binom: k");
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  BigCount result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step
  }
  return result;
}

BigCount partial_binom_sum(int n, int k) {
  require_nonneg(n, "partial_binom_sum: n");
  require_nonneg(k, "partial_binom_sum: k");
  if (k > n) {
    throw std::invalid_argument("partial_binom_sum: k must not exceed n");
  }
  BinomialPrefixScan scan(n);
  while (scan.i() < k) {
    scan.advance();
  }
  return scan.cumulative_count();
}

BigCount center_weighted_sum(int n, int k) {
  if (n <= 0) {
    throw std::invalid_argument("center_weighted_sum: n must be positive");
  }
  require_nonneg(k, "center_weighted_sum: k");
  if (k > n) {
    throw std::invalid_argument("center_weighted_sum: k must not exceed n");
  }
  BigCount sum = 0;
  BinomialPrefixScan scan(n);
  for (;;) {
    sum += scan.binom() * (n - 2 * scan.i());
    if (scan.i() == k) {
      break;
    }
    scan.advance();
  }
  return sum;
}

int integer_np(int n, const Probability& p) {
  if (n <= 0) {
    throw std::invalid_argument("integer_np: n must be positive");
  }
  if (const auto& r = p.exact()) {
    const __int128 prod = static_cast<__int128>(n) * r->num;
    if (prod % r->den != 0) {
      throw std::invalid_argument("integer_np: n*p is not an integer");
    }
    return static_cast<int>(prod / r->den);
  }
  const double np = static_cast<double>(n) * p.value();
  const double rounded = std::nearbyint(np);
  if (std::abs(np - rounded) > 1e-9 * std::max(1.0, np)) {
    throw std::invalid_argument("integer_np: n*p is not an integer");
  }
  return static_cast<int>(rounded);
}

BoundPair stirling_bounds(int n, const Probability& p) {
  const int k = integer_np(n, p);
  if (k <= 0 || k >= n) {
    throw std::invalid_argument("stirling_bounds: need 0 < p < 1");
  }
  const double q = static_cast<double>(k) / n;
  const double scale = std::exp2(n * binary_entropy(q));
  const double npq = n * q * (1.0 - q);
  return BoundPair{scale / std::sqrt(8.0 * npq),
                   scale / std::sqrt(2.0 * std::numbers::pi * npq)};
}

BoundPair partial_sum_bounds(int n, const Probability& p) {
  const int k = integer_np(n, p);
  if (k < 0 || 2 * k >= n) {
    throw std::invalid_argument("partial_sum_bounds: need 0 <= p < 1/2");
  }
  const double q = static_cast<double>(k) / n;
  const double inv_n = 1.0 / n;
  const double alpha = (1.0 - q + inv_n) / (1.0 - 2.0 * q + inv_n);
  const double one_minus_2q_sq = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
  const double beta = n * one_minus_2q_sq / (1.0 + n * one_minus_2q_sq);
  const double center = binom(n, k).convert_to<double>();
  return BoundPair{center * alpha * beta, center * alpha};
}

BinomialPrefixScan::BinomialPrefixScan(int n) : n_(n) {
  if (n <= 0) {
    throw std::invalid_argument("BinomialPrefixScan: n must be positive");
  }
}

void BinomialPrefixScan::advance() {
  if (i_ >= n_) {
    throw std::out_of_range("BinomialPrefixScan: already at i == n");
  }
  binom_ *= n_ - i_;
  binom_ /= i_ + 1;
  ++i_;
  count_ += binom_;
  weight_ += binom_ * i_;
}

}  // namespace dmatch
