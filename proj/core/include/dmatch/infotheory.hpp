#pragma once

#include <cstdint>
#include <optional>

namespace dmatch {

// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// A probability in [0, 1]. When constructed from a fraction it remembers
// the exact value, so downstream arithmetic can recognize exact
// coincidences (a letter distribution hitting the target exactly must
// produce a letter divergence of exactly zero, not 1e-17).
class Probability {
 public:
  Probability() = default;
  explicit Probability(double value);
  Probability(std::int64_t num, std::int64_t den);

  double value() const { return value_; }
  const std::optional<Rational>& exact() const { return exact_; }

  // 1 - p, exact when p is.
  Probability complement() const;

 private:
  double value_ = 0.0;
  std::optional<Rational> exact_;
};

// True when both carry exact fractions and they denote the same rational.
bool same_exact(const Probability& a, const Probability& b);

// Binary memoryless target with P(1) = p, normalized to 0 < p < 1/2.
// Inputs above 1/2 are complemented (bit-flipping the source is lossless)
// and flagged as mirrored; p in {0, 1/2, 1} is rejected.
class TargetSource {
 public:
  static TargetSource from(Probability p);

  const Probability& p() const { return p_; }
  bool mirrored() const { return mirrored_; }

 private:
  TargetSource(Probability p, bool mirrored) : p_(p), mirrored_(mirrored) {}

  Probability p_;
  bool mirrored_ = false;
};

// H(x) in bits, with 0*log(0) = 0.
double binary_entropy(double x);
double binary_entropy(const Probability& x);

// D(phat || p) in bits over {0,1}, with 0*log(0) = 0. p in {0,1} is only
// accepted when phat puts no mass outside the support.
double binary_divergence(double phat, double p);
double binary_divergence(const Probability& phat, const Probability& p);

// eps*log2((1-p+eps)/(p-eps)), an upper bound on H(p) - H(p-eps).
// Requires 0 < p < 1 and 0 < eps < p.
double entropy_diff_bound(double p, double eps);

}  // namespace dmatch
