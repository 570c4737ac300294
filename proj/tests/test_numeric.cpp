#include "doctest.h"

#include <stdexcept>

#include "permsim/numeric.hpp"

using namespace permsim;

TEST_SUITE("numeric") {

TEST_CASE("primality on small and 64-bit inputs") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
    CHECK(is_prime(p));
  for (std::int64_t n : {0, 1, 4, 6, 8, 9, 15, 21, 25, 27, 33, 45, 49})
    CHECK_FALSE(is_prime(n));
  CHECK(is_prime(2147483647));              // 2^31 - 1
  CHECK_FALSE(is_prime(4294967297));        // 641 * 6700417
  CHECK(is_prime(2305843009213693951LL));   // 2^61 - 1
  CHECK_FALSE(is_prime(2305843009213693953LL));
}

TEST_CASE("factorization") {
  CHECK(smallest_prime_factor(2) == 2);
  CHECK(smallest_prime_factor(9) == 3);
  CHECK(smallest_prime_factor(91) == 7);
  CHECK(smallest_prime_factor(97) == 97);

  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(360) == std::vector<std::int64_t>{2, 2, 2, 3, 3, 5});
  CHECK(prime_factors(97) == std::vector<std::int64_t>{97});
  CHECK(distinct_primes(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(distinct_primes(1).empty());
}

TEST_CASE("divisors ascending") {
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(36) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
  CHECK(divisors(97) == std::vector<std::int64_t>{1, 97});
}

TEST_CASE("mobius values and the divisor-sum identity") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(210) == 1);

  // sum over divisors vanishes except at n = 1
  for (std::int64_t n = 1; n <= 200; ++n) {
    int sum = 0;
    for (std::int64_t d : divisors(n)) sum += mobius(d);
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("lcm with overflow detection") {
  CHECK(checked_lcm(4, 6) == 12);
  CHECK(checked_lcm(1, 1) == 1);
  CHECK(checked_lcm(7, 7) == 7);
  std::int64_t big = std::int64_t(1) << 62;
  CHECK_THROWS_AS(checked_lcm(big, big - 1), std::overflow_error);
}

TEST_CASE("binomial against the Pascal recurrence") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(7, 0) == 1);
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

}  // TEST_SUITE
