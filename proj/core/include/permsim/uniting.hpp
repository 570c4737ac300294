#ifndef PERMSIM_UNITING_HPP
#define PERMSIM_UNITING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "permsim/characters.hpp"
#include "permsim/cycle_type.hpp"
#include "permsim/permutation.hpp"

namespace permsim {

inline constexpr std::int64_t kDefaultActionLimit = 1'000'000;

// A representation unites two classes when their images become similar even
// though the classes differ. Over characteristic 0 that is decided entirely
// by fixed-point counts of powers: the counts must agree at sigma^k and
// tau^k for every k, and checking the divisors of lcm(order, order) covers
// all k. Conjugate inputs come out true; callers interested in genuine
// uniting filter those.
bool united_by_char(const RepresentationSpec& spec, const CycleType& a, const CycleType& b);

// Equal order m, and equal power types at every prime dividing m.
bool is_almost_similar(const CycleType& a, const CycleType& b);

// fix(a) - fix(b) for an almost-similar pair; every prime dividing the
// common order divides this gap, and gap 0 forces conjugacy.
std::int64_t almost_similar_fix_gap(const CycleType& a, const CycleType& b);

struct UnitingReport {
  int n;
  RepresentationSpec spec;
  // Non-conjugate pairs the representation unites; within a pair the
  // bracket-lexicographically smaller type comes first, and the list is
  // sorted the same way.
  std::vector<std::pair<CycleType, CycleType>> united_pairs;
  std::int64_t almost_similar_pairs_checked = 0;
  bool unites = false;
};

// Scans every unordered pair of distinct cycle types of the spec's degree.
UnitingReport find_united_pairs(const RepresentationSpec& spec, int workers = 1);

// The permutation the action induces on its set, under the canonical
// enumeration: tuples lexicographic; subsets ordered by size, then
// lexicographically. Point i of the result is the position of the image of
// element i.
Permutation induced_permutation(const Permutation& p, const RepresentationSpec& spec,
                                std::int64_t limit = kDefaultActionLimit);

// Cross-field oracle: the induced permutations' cycle types decide
// similarity over every field at once, so this must agree with
// united_by_char wherever the set fits in memory.
bool united_by_induced_type(const RepresentationSpec& spec, const CycleType& a,
                            const CycleType& b, std::int64_t limit = kDefaultActionLimit);

}  // namespace permsim

#endif
