#include "dmatch/infotheory.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dmatch {

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("Probability: value must lie in [0, 1]");
  }
}

Probability::Probability(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("Probability: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0 || num > den) {
    throw std::invalid_argument("Probability: fraction must lie in [0, 1]");
  }
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  value_ = static_cast<double>(num) / static_cast<double>(den);
  exact_ = Rational{num, den};
}

Probability Probability::complement() const {
  if (exact_) {
    return Probability(exact_->den - exact_->num, exact_->den);
  }
  return Probability(1.0 - value_);
}

bool same_exact(const Probability& a, const Probability& b) {
  if (!a.exact() || !b.exact()) {
    return false;
  }
  return static_cast<__int128>(a.exact()->num) * b.exact()->den ==
         static_cast<__int128>(b.exact()->num) * a.exact()->den;
}

TargetSource TargetSource::from(Probability p) {
  const double v = p.value();
  if (v == 0.0 || v == 1.0 || v == 0.5) {
    throw std::domain_error(
        "TargetSource: p must lie strictly between 0 and 1 and differ from 1/2");
  }
  if (v > 0.5) {
    return TargetSource(p.complement(), true);
  }
  return TargetSource(p, false);
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("binary_entropy: argument must lie in [0, 1]");
  }
  double h = 0.0;
  if (x > 0.0) {
    h -= x * std::log2(x);
  }
  if (x < 1.0) {
    h -= (1.0 - x) * std::log2(1.0 - x);
  }
  return h;
}

double binary_entropy(const Probability& x) { return binary_entropy(x.value()); }

double binary_divergence(double phat, double p) {
  if (!(phat >= 0.0 && phat <= 1.0)) {
    throw std::invalid_argument("binary_divergence: phat must lie in [0, 1]");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binary_divergence: p must lie in [0, 1]");
  }
  if ((p == 0.0 && phat > 0.0) || (p == 1.0 && phat < 1.0)) {
    throw std::domain_error("binary_divergence: phat puts mass outside supp(p)");
  }
  double d = 0.0;
  if (phat > 0.0) {
    d += phat * std::log2(phat / p);
  }
  if (phat < 1.0) {
    d += (1.0 - phat) * std::log2((1.0 - phat) / (1.0 - p));
  }
  // Nonnegative by Gibbs; clip the cancellation noise near phat == p.
  return d < 0.0 ? 0.0 : d;
}

double binary_divergence(const Probability& phat, const Probability& p) {
  if (same_exact(phat, p)) {
    return 0.0;
  }
  return binary_divergence(phat.value(), p.value());
}

double entropy_diff_bound(double p, double eps) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("entropy_diff_bound: need 0 < p < 1");
  }
  if (!(eps > 0.0 && p - eps > 0.0)) {
    throw std::invalid_argument("entropy_diff_bound: need 0 < eps < p");
  }
  return eps * std::log2((1.0 - p + eps) / (p - eps));
}

}  // namespace dmatch
