#pragma once

#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "inspectgame/rational.hpp"

namespace inspectgame::kernel {

/// C(n, m) with the zero convention outside 0 <= m <= n. Total for n >= 0;
/// callers owning a formula whose first argument can go negative apply their
/// own truncation before calling.
Integer binom(unsigned long n, long m);

/// s_beta(n, m) = sum_{i=0..m} C(n, i) * beta^(m-i).
/// Returns 0 for m < 0 and beta^(m-n) * (1+beta)^n for m >= n, which agrees
/// with the truncated sum on the whole integer range of m.
Rational s_beta(unsigned long n, long m, const Rational& beta);

/// Alternative representation sum_{i=0..m} C(n-1-i, m-i) * (1+beta)^i,
/// defined (and equal to s_beta) only for 0 <= m <= n; the i == m term uses
/// C(x, 0) = 1 even at x = -1. Throws std::domain_error outside that range.
Rational s_alt(unsigned long n, long m, const Rational& beta);

/// t(n, m) = sum_{i=1..k} r_{k+1-i} * C(n-i, m) for a reward vector stored
/// first-violation-first (rewards[0] = r_k). Terms with i > n - m vanish,
/// including every term with n - i < 0.
Rational t_value(unsigned long n, long m, std::span<const Rational> rewards);

std::size_t cache_limit_from_env();  // INSPECTGAME_CACHE_LIMIT, 0 = unlimited

/// Memoized s_beta for one fixed beta. Insertion is idempotent (values are
/// pure functions of the key), guarded by a mutex so concurrent solvers can
/// share an instance.
class PascalSum {
 public:
  explicit PascalSum(Rational beta);
  PascalSum(Rational beta, std::size_t max_entries);

  const Rational& beta() const { return beta_; }
  Rational operator()(unsigned long n, long m) const;

 private:
  Rational beta_;
  std::size_t max_entries_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<unsigned long, long>, Rational> cache_;
};

/// The canonical k-free inspection probability induced by an s-table:
/// s(n-1, m-1)/s(n, m) for 0 < m < n, 0 for m <= 0, and at m >= n the
/// indifference-preserving 1/(1+beta) when beta >= 0, else 1 (certain
/// inspection; 1/(1+beta) would exceed 1 there).
Rational canonical_inspect_prob(unsigned long n, long m, const PascalSum& s);

}  // namespace inspectgame::kernel
