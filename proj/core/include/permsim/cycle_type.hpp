#ifndef PERMSIM_CYCLE_TYPE_HPP
#define PERMSIM_CYCLE_TYPE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permsim/permutation.hpp"

namespace permsim {

// The multiset of cycle lengths of a permutation of degree n, stored as a
// count per length. Two permutations are conjugate in S_n iff their cycle
// types coincide. Immutable after construction.
class CycleType {
public:
  // counts[d] = number of cycles of exact length d, for 1 <= d <= n.
  // Validates sum(d * counts[d]) == n.
  CycleType(int n, std::vector<std::int64_t> counts_by_length);

  // From a partition of n given as parts (any order).
  static CycleType from_parts(int n, const std::vector<int>& parts);

  int degree() const { return n_; }

  // c_d: cycles of exact length d. d >= 1; lengths above n count zero.
  std::int64_t count(int d) const;

  // m: total number of cycles.
  std::int64_t num_cycles() const;

  // m_d: cycles of length divisible by d.
  std::int64_t count_divisible(int d) const;

  // c_1.
  std::int64_t fixed_points() const { return count(1); }

  // lcm of the lengths present; throws std::overflow_error beyond 64 bits.
  std::int64_t order() const;

  bool has_odd_cycle() const;

  // Parts descending, with multiplicity.
  std::vector<int> parts() const;

  bool operator==(const CycleType& rhs) const = default;

private:
  int n_;
  std::vector<std::int64_t> counts_;  // index d in 1..n
};

CycleType cycle_type(const Permutation& p);

// Cycle type of the k-th power, k >= 1: a cycle of length L contributes
// gcd(L, k) cycles of length L / gcd(L, k).
CycleType power_cycle_type(const CycleType& ct, std::int64_t k);

// Equality of count maps; throws mismatch_error on degree mismatch.
bool is_conjugate(const CycleType& a, const CycleType& b);

// All cycle types of degree n, in decreasing lexicographic order of their
// descending part lists ([n] first, [1^n] last). Length is p(n).
std::vector<CycleType> enumerate_cycle_types(int n);

// Bracket notation with ascending parts and exponents for multiplicity,
// e.g. "[3^2,6^2,9,12^2]".
std::string to_bracket(const CycleType& ct);

// Parses bracket notation (brackets optional).
CycleType parse_cycle_type(std::string_view text);

// The representative with cycles laid out on consecutive points, longest
// cycle first: [2^2,1] -> (1 2)(3 4)(5).
Permutation canonical_representative(const CycleType& ct);

}  // namespace permsim

#endif
