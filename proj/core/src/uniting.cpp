#include "permsim/uniting.hpp"

#include <algorithm>
#include <atomic>

#include "permsim/errors.hpp"
#include "permsim/numeric.hpp"
#include "permsim/parallel.hpp"

namespace permsim {

namespace {

void check_degrees(const RepresentationSpec& spec, const CycleType& a, const CycleType& b) {
  if (a.degree() != b.degree() || spec.degree() != a.degree())
    throw mismatch_error("degree mismatch: spec " + std::to_string(spec.degree()) + ", types " +
                         std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
}

}  // namespace

bool united_by_char(const RepresentationSpec& spec, const CycleType& a, const CycleType& b) {
  check_degrees(spec, a, b);
  std::int64_t m = checked_lcm(a.order(), b.order());
  for (std::int64_t k : divisors(m)) {
    if (rep_char(spec, power_cycle_type(a, k)) != rep_char(spec, power_cycle_type(b, k)))
      return false;
  }
  return true;
}

bool is_almost_similar(const CycleType& a, const CycleType& b) {
  if (a.degree() != b.degree())
    throw mismatch_error("cycle type degree mismatch: " + std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()));
  std::int64_t m = a.order();
  if (m != b.order()) return false;
  for (std::int64_t p : distinct_primes(m)) {
    if (!(power_cycle_type(a, p) == power_cycle_type(b, p))) return false;
  }
  return true;
}

std::int64_t almost_similar_fix_gap(const CycleType& a, const CycleType& b) {
  if (!is_almost_similar(a, b))
    throw error("fix gap is defined for almost-similar types only; got " + to_bracket(a) +
                " and " + to_bracket(b));
  return a.fixed_points() - b.fixed_points();
}

UnitingReport find_united_pairs(const RepresentationSpec& spec, int workers) {
  int n = spec.degree();
  std::vector<CycleType> types = enumerate_cycle_types(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = i + 1; j < types.size(); ++j) pairs.emplace_back(i, j);
  }

  std::vector<std::uint8_t> united(pairs.size(), 0);
  std::atomic<std::int64_t> almost_similar_count{0};
  parallel_for(static_cast<std::int64_t>(pairs.size()), workers, [&](std::int64_t idx) {
    auto [i, j] = pairs[static_cast<std::size_t>(idx)];
    if (is_almost_similar(types[i], types[j]))
      almost_similar_count.fetch_add(1, std::memory_order_relaxed);
    if (united_by_char(spec, types[i], types[j])) united[static_cast<std::size_t>(idx)] = 1;
  });

  UnitingReport report{n, spec, {}, almost_similar_count.load(), false};
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    if (!united[idx]) continue;
    const CycleType& x = types[pairs[idx].first];
    const CycleType& y = types[pairs[idx].second];
    if (to_bracket(x) <= to_bracket(y))
      report.united_pairs.emplace_back(x, y);
    else
      report.united_pairs.emplace_back(y, x);
  }
  std::sort(report.united_pairs.begin(), report.united_pairs.end(),
            [](const auto& p, const auto& q) {
              return std::make_pair(to_bracket(p.first), to_bracket(p.second)) <
                     std::make_pair(to_bracket(q.first), to_bracket(q.second));
            });
  report.unites = !report.united_pairs.empty();
  return report;
}

namespace {

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto walk = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    int needed = k - static_cast<int>(current.size());
    for (int v = next; v + needed - 1 <= n; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  walk(walk, 1);
  return out;
}

std::vector<std::vector<int>> k_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  auto walk = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      current.push_back(v);
      self(self);
      current.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  walk(walk);
  return out;
}

// Elements in enumeration order: tuples lexicographic; subset families by
// size, then lexicographic, which is also the order of (size, entries).
std::vector<std::vector<int>> materialize(const RepresentationSpec& spec) {
  int n = spec.degree();
  switch (spec.kind()) {
    case RepKind::natural: return k_tuples(n, 1);
    case RepKind::tuples: return k_tuples(n, spec.k());
    case RepKind::subsets: return k_subsets(n, spec.k());
    case RepKind::power_set: {
      std::vector<std::vector<int>> out;
      for (int k = 0; k <= n; ++k) {
        auto block = k_subsets(n, k);
        out.insert(out.end(), block.begin(), block.end());
      }
      return out;
    }
    case RepKind::even_subsets:
    case RepKind::odd_subsets: {
      std::vector<std::vector<int>> out;
      int start = spec.kind() == RepKind::even_subsets ? 0 : 1;
      for (int k = start; k <= n; k += 2) {
        auto block = k_subsets(n, k);
        out.insert(out.end(), block.begin(), block.end());
      }
      return out;
    }
  }
  throw error("unreachable representation kind");
}

bool size_then_lex(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Permutation induced_permutation(const Permutation& p, const RepresentationSpec& spec,
                                std::int64_t limit) {
  if (p.degree() != spec.degree())
    throw mismatch_error("permutation degree " + std::to_string(p.degree()) +
                         " vs representation degree " + std::to_string(spec.degree()));
  action_set_size(spec, limit);
  std::vector<std::vector<int>> elements = materialize(spec);

  bool is_tuple = spec.kind() == RepKind::natural || spec.kind() == RepKind::tuples;
  std::vector<int> images;
  images.reserve(elements.size());
  std::vector<int> mapped;
  for (const auto& e : elements) {
    mapped.assign(e.begin(), e.end());
    for (int& v : mapped) v = p.image(v);
    if (!is_tuple) std::sort(mapped.begin(), mapped.end());
    auto it = std::lower_bound(elements.begin(), elements.end(), mapped, size_then_lex);
    images.push_back(static_cast<int>(it - elements.begin()) + 1);
  }
  return Permutation::from_one_line(images);
}

bool united_by_induced_type(const RepresentationSpec& spec, const CycleType& a,
                            const CycleType& b, std::int64_t limit) {
  check_degrees(spec, a, b);
  CycleType ta = cycle_type(induced_permutation(canonical_representative(a), spec, limit));
  CycleType tb = cycle_type(induced_permutation(canonical_representative(b), spec, limit));
  return ta == tb;
}

}  // namespace permsim
