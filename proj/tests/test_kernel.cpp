#include <doctest.h>

#include "inspectgame/kernel.hpp"

using namespace inspectgame;
using namespace inspectgame::kernel;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

const std::vector<Rational> kBetaGrid = {
    q(-99, 100), q(-1, 2), q(-1, 3), q(0), q(1, 3), q(1, 2), q(1), q(2), q(7, 3)};

}  // namespace

TEST_CASE("binom basics and zero convention") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("s_beta paper anchors") {
  CHECK(s_beta(5, 2, q(0)) == 10);       // reduces to C(n, m) at beta = 0
  CHECK(s_beta(3, 3, q(1)) == 8);        // (1+beta)^n on the diagonal
  CHECK(s_beta(3, 1, q(1)) == 4);        // direct sum C(3,0) + C(3,1)
  CHECK(s_beta(4, 0, q(7, 3)) == 1);     // s(n, 0) = 1
  CHECK(s_beta(3, -2, q(1)) == 0);       // m < 0
  CHECK(s_beta(2, 5, q(1)) == q(4));     // beta^(m-n) (1+beta)^n at m >= n
  CHECK(s_beta(0, 3, q(1, 2)) == q(1, 8));  // s(0, m) = beta^m
  CHECK(s_beta(0, 0, q(7)) == 1);
  CHECK(s_beta(2, 5, q(1, 2)) == q(9, 32));  // (1/2)^3 * (3/2)^2
  CHECK(s_beta(2, 5, q(0)) == 0);        // beta = 0 kills m > n
}

TEST_CASE("s_alt equals s_beta on its domain") {
  CHECK(s_alt(3, 1, q(1)) == 4);  // C(2,1) + C(1,0)*2
  CHECK(s_alt(3, 3, q(1)) == 8);  // needs C(-1, 0) = 1 at the last term
  CHECK(s_alt(6, 0, q(3)) == 1);
  for (unsigned n = 0; n <= 14; ++n) {
    for (unsigned m = 0; m <= n; ++m) {
      for (const Rational& beta : kBetaGrid) {
        CAPTURE(n);
        CAPTURE(m);
        REQUIRE(s_alt(n, m, beta) == s_beta(n, m, beta));
      }
    }
  }
  CHECK_THROWS_AS(s_alt(3, -1, q(1)), std::domain_error);
  CHECK_THROWS_AS(s_alt(3, 4, q(1)), std::domain_error);
}

TEST_CASE("pascal recurrence and multiplicative identity") {
  for (unsigned n = 1; n <= 14; ++n) {
    for (const Rational& beta : kBetaGrid) {
      for (unsigned m = 1; m < n; ++m) {
        REQUIRE(s_beta(n, m, beta) == s_beta(n - 1, m - 1, beta) + s_beta(n - 1, m, beta));
      }
      for (unsigned m = 1; m + 1 <= n; ++m) {
        // beta * s(n-1, m-1) = s(n-1, m) - C(n-1, m)
        REQUIRE(beta * s_beta(n - 1, m - 1, beta) ==
                s_beta(n - 1, m, beta) - Rational(binom(n - 1, m)));
      }
    }
  }
}

TEST_CASE("s_beta positivity for beta > -1") {
  for (unsigned n = 0; n <= 14; ++n) {
    for (unsigned m = 0; m <= n; ++m) {
      for (const Rational& beta : kBetaGrid) {
        REQUIRE(s_beta(n, m, beta) > 0);
      }
    }
  }
}

TEST_CASE("t_value anchors") {
  const std::vector<Rational> unit2 = {q(1), q(1)};
  CHECK(t_value(5, 1, unit2) == 7);  // C(4,1) + C(3,1) = C(5,2) - C(3,2)
  CHECK(t_value(4, 2, std::vector<Rational>{q(1)}) == 3);  // C(3, 2)
  CHECK(t_value(6, 6, std::vector<Rational>{q(3), q(5)}) == 0);  // t(n, n, k) = 0
  CHECK(t_value(4, -1, unit2) == 0);
  // Truncation: with k > n only the first n rewards matter (m = 0).
  CHECK(t_value(1, 0, std::vector<Rational>{q(0), q(1)}) == 0);
  CHECK(t_value(2, 0, std::vector<Rational>{q(0), q(1), q(7)}) == 1);
}

TEST_CASE("t recurrence in n and m for fixed rewards") {
  const std::vector<std::vector<Rational>> vectors = {
      {q(1), q(1), q(1)}, {q(5), q(3)}, {q(0), q(2), q(1, 3), q(4)}, {q(2, 7), q(0), q(0)}};
  for (const auto& rewards : vectors) {
    for (unsigned n = 1; n <= 14; ++n) {
      for (unsigned m = 1; m <= 14; ++m) {
        REQUIRE(t_value(n, m, rewards) ==
                t_value(n - 1, m - 1, rewards) + t_value(n - 1, m, rewards));
      }
    }
  }
}

TEST_CASE("unit rewards collapse t to a binomial difference") {
  for (unsigned k = 0; k <= 8; ++k) {
    const std::vector<Rational> rewards(k, q(1));
    for (unsigned n = k; n <= 12; ++n) {
      for (unsigned m = 0; m <= n; ++m) {
        REQUIRE(t_value(n, m, rewards) ==
                Rational(binom(n, m + 1) - binom(n - k, m + 1)));
      }
    }
  }
  // Dresher's two special cases.
  const std::vector<Rational> one(1, q(1));
  for (unsigned n = 2; n <= 12; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      REQUIRE(t_value(n, m, one) == Rational(binom(n - 1, m)));
      const std::vector<Rational> max_violations(n - m, q(1));
      REQUIRE(t_value(n, m, max_violations) == Rational(binom(n, m + 1)));
    }
  }
}

TEST_CASE("PascalSum caches and canonical inspection probability") {
  PascalSum s(q(1));
  CHECK(s(3, 1) == 4);
  CHECK(s(3, 1) == 4);  // cached path
  CHECK(s(3, -4) == 0);
  CHECK(canonical_inspect_prob(3, 1, s) == q(1, 4));
  CHECK(canonical_inspect_prob(5, 0, s) == 0);
  CHECK(canonical_inspect_prob(5, -1, s) == 0);
  CHECK(canonical_inspect_prob(2, 2, s) == q(1, 2));  // 1/(1+b) at m >= n
  CHECK(canonical_inspect_prob(2, 7, s) == q(1, 2));

  PascalSum negative(q(-1, 2));
  CHECK(canonical_inspect_prob(2, 2, negative) == 1);  // certain inspection for b < 0

  PascalSum capped(q(1), 1);
  CHECK(capped(4, 2) == 11);
  CHECK(capped(5, 2) == 16);  // beyond the cap, still correct
}
