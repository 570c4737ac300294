#ifndef PERMSIM_NUMERIC_HPP
#define PERMSIM_NUMERIC_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permsim {

// Exact arbitrary-precision scalars used throughout the library.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::int64_t n);

// Smallest prime factor of n >= 2.
std::int64_t smallest_prime_factor(std::int64_t n);

// Prime factorization with multiplicity, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

// Distinct prime divisors, ascending.
std::vector<std::int64_t> distinct_primes(std::int64_t n);

// All positive divisors, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// Moebius function: 0 if n has a squared prime factor, else (-1)^#primes.
int mobius(std::int64_t n);

// lcm(a, b) for positive arguments; throws std::overflow_error if the
// result does not fit in 64 bits.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

// Binomial coefficient, exact.
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace permsim

#endif
