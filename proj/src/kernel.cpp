#include "inspectgame/kernel.hpp"

#include <cstdlib>
#include <stdexcept>

namespace inspectgame::kernel {

Integer binom(unsigned long n, long m) {
  if (m < 0 || static_cast<unsigned long>(m) > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(m));
  return out;
}

Rational s_beta(unsigned long n, long m, const Rational& beta) {
  if (m < 0) return Rational(0);
  // Truncated sum: i runs to min(m, n); for m >= n this equals
  // beta^(m-n) * (1+beta)^n.
  const unsigned long top = std::min<unsigned long>(n, static_cast<unsigned long>(m));
  Rational sum(0);
  for (unsigned long i = 0; i <= top; ++i) {
    sum += Rational(binom(n, static_cast<long>(i))) *
           rational_pow(beta, static_cast<unsigned long>(m) - i);
  }
  return sum;
}

Rational s_alt(unsigned long n, long m, const Rational& beta) {
  if (m < 0 || static_cast<unsigned long>(m) > n) {
    throw std::domain_error("s_alt requires 0 <= m <= n");
  }
  const Rational one_plus = beta + 1;
  Rational sum(0);
  for (long i = 0; i <= m; ++i) {
    // At i == m the coefficient is C(n-1-m, 0) = 1 for any n-1-m, including -1.
    const Integer coeff =
        (i == m) ? Integer(1) : binom(static_cast<unsigned long>(n - 1 - i), m - i);
    sum += Rational(coeff) * rational_pow(one_plus, static_cast<unsigned long>(i));
  }
  return sum;
}

Rational t_value(unsigned long n, long m, std::span<const Rational> rewards) {
  Rational sum(0);
  for (std::size_t idx = 0; idx < rewards.size(); ++idx) {
    const unsigned long i = idx + 1;  // rewards[idx] = r_{k+1-i}
    if (i > n) break;                 // C(n-i, m) = 0 once n - i < 0 <= m
    sum += rewards[idx] * Rational(binom(n - i, m));
  }
  return sum;
}

std::size_t cache_limit_from_env() {
  const char* raw = std::getenv("INSPECTGAME_CACHE_LIMIT");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return 0;
  return static_cast<std::size_t>(parsed);
}

PascalSum::PascalSum(Rational beta) : PascalSum(std::move(beta), cache_limit_from_env()) {}

PascalSum::PascalSum(Rational beta, std::size_t max_entries)
    : beta_(std::move(beta)), max_entries_(max_entries) {}

Rational PascalSum::operator()(unsigned long n, long m) const {
  if (m < 0) return Rational(0);
  const std::pair<unsigned long, long> key{n, m};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Rational value = s_beta(n, m, beta_);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (max_entries_ == 0 || cache_.size() < max_entries_) {
      cache_.emplace(key, value);
    }
  }
  return value;
}

Rational canonical_inspect_prob(unsigned long n, long m, const PascalSum& s) {
  if (m <= 0) return Rational(0);
  if (static_cast<unsigned long>(m) >= n) {
    if (s.beta() >= 0) return Rational(1) / (s.beta() + 1);
    return Rational(1);
  }
  return s(n - 1, m - 1) / s(n, m);
}

}  // namespace inspectgame::kernel
