#include "permsim/recovery.hpp"

#include <algorithm>
#include <numeric>

#include "permsim/errors.hpp"
#include "permsim/numeric.hpp"

namespace permsim {

CycleCountOracle::CycleCountOracle(int n, std::function<std::int64_t(std::int64_t)> raw_query)
    : n_(n), raw_(std::move(raw_query)), state_(std::make_shared<State>()) {
  if (n < 1) throw error("oracle degree must be positive");
}

std::int64_t CycleCountOracle::query(std::int64_t k) const {
  if (k < 1) throw error("oracle query requires k >= 1");
  std::lock_guard<std::mutex> lock(state_->mu);
  auto it = state_->memo.find(k);
  if (it != state_->memo.end()) return it->second;
  std::int64_t answer = raw_(k);
  if (answer < 1 || answer > n_)
    throw consistency_error("cycle count " + std::to_string(answer) + " for power " +
                            std::to_string(k) + " is outside [1, " + std::to_string(n_) + "]");
  state_->memo.emplace(k, answer);
  return answer;
}

std::vector<std::pair<std::int64_t, std::int64_t>> CycleCountOracle::query_log() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return {state_->memo.begin(), state_->memo.end()};
}

CycleCountOracle oracle_from_cycle_type(const CycleType& ct) {
  return CycleCountOracle(ct.degree(), [ct](std::int64_t k) {
    return power_cycle_type(ct, k).num_cycles();
  });
}

CycleCountOracle oracle_from_matrix(const FieldMatrix& a) {
  if (a.rows() != a.cols()) throw error("not a permutation matrix: not square");
  int n = a.rows();
  for (int i = 0; i < n; ++i) {
    int row_ones = 0;
    for (int j = 0; j < n; ++j) {
      std::int64_t e = a.entry_int(i, j);
      if (e != 0 && e != 1) throw error("not a permutation matrix: entry not 0 or 1");
      row_ones += static_cast<int>(e);
    }
    if (row_ones != 1) throw error("not a permutation matrix: row " + std::to_string(i + 1) +
                                   " has " + std::to_string(row_ones) + " ones");
  }
  for (int j = 0; j < n; ++j) {
    int col_ones = 0;
    for (int i = 0; i < n; ++i) col_ones += static_cast<int>(a.entry_int(i, j));
    if (col_ones != 1) throw error("not a permutation matrix: column " + std::to_string(j + 1) +
                                   " has " + std::to_string(col_ones) + " ones");
  }
  return CycleCountOracle(n, [a](std::int64_t k) {
    return static_cast<std::int64_t>(fixed_space_dim(a.pow(k)));
  });
}

namespace {

// m_t of the stride-th power of the hidden permutation. The route holds the
// primes still to peel off t, topmost first; empty route means t = 1 and the
// answer is a plain cycle count.
std::int64_t m_of_power(const CycleCountOracle& oracle, std::int64_t stride,
                        const std::vector<std::int64_t>& route, std::size_t level) {
  if (level == route.size()) return oracle.query(stride);
  std::int64_t p = route[level];
  std::int64_t t = 1;
  for (std::size_t i = level + 1; i < route.size(); ++i) t *= route[i];

  std::int64_t m_t_of_pth = m_of_power(oracle, stride * p, route, level + 1);
  if (t % p == 0) {
    if (m_t_of_pth % p != 0)
      throw consistency_error("cycle counts are not consistent with a permutation: " +
                              std::to_string(m_t_of_pth) + " not divisible by " +
                              std::to_string(p));
    return m_t_of_pth / p;
  }
  std::int64_t m_t_plain = m_of_power(oracle, stride, route, level + 1);
  std::int64_t gap = m_t_of_pth - m_t_plain;
  if (gap < 0 || gap % (p - 1) != 0)
    throw consistency_error("cycle counts are not consistent with a permutation: gap " +
                            std::to_string(gap) + " not a multiple of " + std::to_string(p - 1));
  return gap / (p - 1);
}

void check_d_range(const CycleCountOracle& oracle, int d) {
  if (d < 1 || d > oracle.degree())
    throw error("cycle length " + std::to_string(d) + " out of range 1.." +
                std::to_string(oracle.degree()));
}

}  // namespace

std::int64_t recover_m_d(const CycleCountOracle& oracle, int d) {
  check_d_range(oracle, d);
  return m_of_power(oracle, 1, prime_factors(d), 0);
}

std::int64_t recover_m_d_via(const CycleCountOracle& oracle, int d,
                             const std::vector<std::int64_t>& prime_route) {
  check_d_range(oracle, d);
  std::vector<std::int64_t> sorted = prime_route;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != prime_factors(d))
    throw error("route is not an ordering of the prime factorization of " + std::to_string(d));
  return m_of_power(oracle, 1, prime_route, 0);
}

std::int64_t recover_c_d(const CycleCountOracle& oracle, int d) {
  check_d_range(oracle, d);
  std::int64_t total = 0;
  for (std::int64_t j = 1; d * j <= oracle.degree(); ++j) {
    int mu = mobius(j);
    if (mu == 0) continue;
    total += mu * recover_m_d(oracle, static_cast<int>(d * j));
  }
  return total;
}

namespace {

void ie_walk(const CycleCountOracle& oracle, const std::vector<int>& multiples, std::size_t start,
             std::int64_t current_lcm, std::size_t depth, std::vector<std::int64_t>& levels) {
  for (std::size_t i = start; i < multiples.size(); ++i) {
    std::int64_t l = std::lcm(current_lcm, static_cast<std::int64_t>(multiples[i]));
    if (l > oracle.degree()) continue;  // empty intersection, and so is every superset
    levels[depth] += recover_m_d(oracle, static_cast<int>(l));
    ie_walk(oracle, multiples, i + 1, l, depth + 1, levels);
  }
}

}  // namespace

std::vector<std::int64_t> inclusion_exclusion_levels(const CycleCountOracle& oracle, int d) {
  check_d_range(oracle, d);
  std::vector<int> multiples;
  for (int x = 2 * d; x <= oracle.degree(); x += d) {
    if (recover_m_d(oracle, x) > 0) multiples.push_back(x);
  }
  std::vector<std::int64_t> levels(multiples.size() + 1, 0);
  levels[0] = recover_m_d(oracle, d);
  ie_walk(oracle, multiples, 0, d, 1, levels);
  return levels;
}

CycleType recover_cycle_type(const CycleCountOracle& oracle) {
  int n = oracle.degree();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t total = 0;
  for (int d = 1; d <= n; ++d) {
    std::int64_t c = recover_c_d(oracle, d);
    if (c < 0)
      throw consistency_error("recovered a negative count for cycle length " + std::to_string(d));
    counts[static_cast<std::size_t>(d)] = c;
    total += static_cast<std::int64_t>(d) * c;
  }
  if (total != n)
    throw consistency_error("recovered cycle lengths sum to " + std::to_string(total) +
                            ", expected " + std::to_string(n));
  return CycleType(n, std::move(counts));
}

}  // namespace permsim
