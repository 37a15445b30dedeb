#pragma once

#include "dmatch/bigcount.hpp"
#include "dmatch/infotheory.hpp"

namespace dmatch {

// lower <= bracketed quantity <= upper. Whether the values live in the
// count domain or in bits is documented at each operation returning one.
struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
};

// C(n, k), exact; zero when k > n.
BigCount binom(int n, int k);

// sum_{i=0..k} C(n, i), exact. Requires k <= n.
BigCount partial_binom_sum(int n, int k);

// sum_{i=0..k} C(n, i) * (n - 2i), exact. Requires k <= n.
//
// This is twice the center-weighted sum, kept doubled so odd n stays in
// exact integers; in this form the closed identity reads
//   center_weighted_sum(n, k) == (k+1) * C(n, k+1).
BigCount center_weighted_sum(int n, int k);

// Bracket of C(n, np) in the count domain:
//   2^{nH(p)}/sqrt(8np(1-p)) <= C(n, np) <= 2^{nH(p)}/sqrt(2*pi*n*p*(1-p)).
// Requires 0 < p < 1 and integer n*p.
BoundPair stirling_bounds(int n, const Probability& p);

// Bracket of sum_{i=0..np} C(n, i) in the count domain:
//   C(n,np)*alpha*beta <= sum <= C(n,np)*alpha
// with alpha = (1-p+1/n)/(1-2p+1/n) and beta = n(1-2p)^2/(1+n(1-2p)^2).
// Requires 0 <= p < 1/2 and integer n*p.
BoundPair partial_sum_bounds(int n, const Probability& p);

// n*p as the integer it must be. Exact when p carries a fraction, within
// 1e-9 of an integer otherwise; anything else is rejected.
int integer_np(int n, const Probability& p);

// Walks C(n, i), the running count sum_{j<=i} C(n,j) and the running
// weight sum_{j<=i} C(n,j)*j for i = 0..n using the ratio recurrence
// C(n,i+1) = C(n,i)*(n-i)/(i+1), so a full prefix costs O(n) big-int
// multiplies. This is what makes the n ~ 2^14 scans cheap.
class BinomialPrefixScan {
 public:
  explicit BinomialPrefixScan(int n);

  int n() const { return n_; }
  int i() const { return i_; }
  const BigCount& binom() const { return binom_; }               // C(n, i)
  const BigCount& cumulative_count() const { return count_; }    // sum_{j<=i} C(n,j)
  const BigCount& cumulative_weight() const { return weight_; }  // sum_{j<=i} C(n,j)*j

  // Advances i by one; requires i < n.
  void advance();

 private:
  int n_;
  int i_ = 0;
  BigCount binom_ = 1;
  BigCount count_ = 1;
  BigCount weight_ = 0;
};

}  // namespace dmatch
