#ifndef PERMSIM_RECOVERY_HPP
#define PERMSIM_RECOVERY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "permsim/cycle_type.hpp"
#include "permsim/field_matrix.hpp"

namespace permsim {

// Access to a hidden permutation through one question only: how many cycles
// does its k-th power have? Built either from a known cycle type or from a
// permutation matrix, where the answer is the 1-eigenspace dimension of A^k.
// Queries are memoized (the recovery recursion revisits the same powers);
// the memo is internally locked, so a shared oracle is thread-safe.
class CycleCountOracle {
 public:
  CycleCountOracle(int n, std::function<std::int64_t(std::int64_t)> raw_query);

  int degree() const { return n_; }

  // k >= 1. Answers are checked to lie in [1, n].
  std::int64_t query(std::int64_t k) const;

  // Every (k, answer) pair served so far, ascending in k.
  std::vector<std::pair<std::int64_t, std::int64_t>> query_log() const;

 private:
  struct State {
    std::mutex mu;
    std::map<std::int64_t, std::int64_t> memo;
  };

  int n_;
  std::function<std::int64_t(std::int64_t)> raw_;
  std::shared_ptr<State> state_;
};

CycleCountOracle oracle_from_cycle_type(const CycleType& ct);

// Requires an actual permutation matrix (one 1 per row and column, 0 elsewhere).
CycleCountOracle oracle_from_matrix(const FieldMatrix& a);

// m_d of the hidden permutation: the number of cycles of length divisible
// by d, recovered from cycle counts of powers alone. The recursion peels one
// prime p off d per step; by default the smallest prime factor. Throws
// consistency_error when the oracle's answers cannot come from a permutation.
std::int64_t recover_m_d(const CycleCountOracle& oracle, int d);

// Same, but peeling the primes of d in the given order (a permutation of the
// prime factorization of d, multiplicities included). The result must not
// depend on the route; the tests drive every route.
std::int64_t recover_m_d_via(const CycleCountOracle& oracle, int d,
                             const std::vector<std::int64_t>& prime_route);

// c_d: number of cycles of length exactly d, by Mobius inversion of m.
std::int64_t recover_c_d(const CycleCountOracle& oracle, int d);

// The same quantity computed the long way: alternating sums over the divisor
// sets, literally. levels[0] = m_d, levels[s] = sum of intersection sizes
// over all s-subsets of the proper multiples of d present; then
// c_d = levels[0] - levels[1] + levels[2] - ... Retained as the cross-check
// for recover_c_d.
std::vector<std::int64_t> inclusion_exclusion_levels(const CycleCountOracle& oracle, int d);

// Full cycle type from the oracle; verifies sum(d * c_d) = n.
CycleType recover_cycle_type(const CycleCountOracle& oracle);

}  // namespace permsim

#endif
