#include "doctest.h"

#include <random>

#include "permsim/characters.hpp"
#include "permsim/cycle_type.hpp"
#include "permsim/errors.hpp"
#include "permsim/permutation.hpp"
#include "permsim/uniting.hpp"

using namespace permsim;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(line[static_cast<std::size_t>(i)], line[rng() % (static_cast<std::size_t>(i) + 1)]);
  return Permutation::from_one_line(line);
}

}  // namespace

TEST_SUITE("uniting") {

TEST_CASE("triples unite the constructed pair on four points") {
  RepresentationSpec spec = RepresentationSpec::tuples(3, 4);
  CycleType a = parse_cycle_type("[2^2]");
  CycleType b = parse_cycle_type("[1^2,2]");
  CHECK(united_by_char(spec, a, b));
  CHECK(united_by_char(spec, b, a));
  CHECK(united_by_char(spec, a, a));  // conjugates come out united trivially

  CHECK_FALSE(united_by_char(RepresentationSpec::natural(4), a, b));
  CHECK_FALSE(united_by_char(RepresentationSpec::tuples(2, 4), a, b));
  CHECK_THROWS_AS(united_by_char(spec, a, parse_cycle_type("[5]")), mismatch_error);
}

TEST_CASE("almost similar pairs and their fix gaps") {
  CycleType sigma = parse_cycle_type("[2^3]");
  CycleType tau = parse_cycle_type("[1^2,2^2]");
  CHECK(is_almost_similar(sigma, tau));
  CHECK(is_almost_similar(sigma, sigma));
  CHECK(almost_similar_fix_gap(sigma, tau) == -2);
  CHECK(almost_similar_fix_gap(tau, sigma) == 2);

  CHECK_FALSE(is_almost_similar(parse_cycle_type("[4]"), parse_cycle_type("[2^2]")));
  CHECK_FALSE(is_almost_similar(parse_cycle_type("[1,3]"), parse_cycle_type("[2^2]")));
  CHECK_THROWS_AS(is_almost_similar(sigma, parse_cycle_type("[4]")), mismatch_error);
  CHECK_THROWS_AS(almost_similar_fix_gap(parse_cycle_type("[4]"), parse_cycle_type("[2^2]")),
                  error);

  // distinct almost-similar pairs differ in fixed points, by a multiple of
  // every prime dividing the order
  for (int n = 2; n <= 9; ++n) {
    std::vector<CycleType> types = enumerate_cycle_types(n);
    for (std::size_t i = 0; i < types.size(); ++i) {
      for (std::size_t j = i + 1; j < types.size(); ++j) {
        if (!is_almost_similar(types[i], types[j])) continue;
        std::int64_t gap = almost_similar_fix_gap(types[i], types[j]);
        CHECK(gap != 0);
        for (std::int64_t p : distinct_primes(types[i].order())) CHECK(gap % p == 0);
      }
    }
  }
}

TEST_CASE("scan report is ordered and counts almost-similar pairs") {
  UnitingReport report = find_united_pairs(RepresentationSpec::tuples(3, 6));
  CHECK(report.n == 6);
  CHECK(report.unites == !report.united_pairs.empty());
  CHECK(report.unites);

  bool some_pair_almost_similar = false;
  for (const auto& [a, b] : report.united_pairs) {
    CHECK(to_bracket(a) < to_bracket(b));
    CHECK(!is_conjugate(a, b));
    some_pair_almost_similar = some_pair_almost_similar || is_almost_similar(a, b);
  }
  CHECK(some_pair_almost_similar);
  for (std::size_t i = 0; i + 1 < report.united_pairs.size(); ++i) {
    auto key = [](const std::pair<CycleType, CycleType>& pr) {
      return std::make_pair(to_bracket(pr.first), to_bracket(pr.second));
    };
    CHECK(key(report.united_pairs[i]) < key(report.united_pairs[i + 1]));
  }

  std::int64_t almost = 0;
  std::vector<CycleType> types = enumerate_cycle_types(6);
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = i + 1; j < types.size(); ++j)
      almost += is_almost_similar(types[i], types[j]) ? 1 : 0;
  }
  CHECK(report.almost_similar_pairs_checked == almost);
}

TEST_CASE("worker count does not change scan results") {
  for (const RepresentationSpec& spec :
       {RepresentationSpec::tuples(3, 7), RepresentationSpec::tuples(4, 6),
        RepresentationSpec::power_set(6), RepresentationSpec::even_subsets(6)}) {
    UnitingReport serial = find_united_pairs(spec, 1);
    UnitingReport parallel = find_united_pairs(spec, 4);
    CHECK(serial.united_pairs == parallel.united_pairs);
    CHECK(serial.almost_similar_pairs_checked == parallel.almost_similar_pairs_checked);
    CHECK(serial.unites == parallel.unites);
  }
  CHECK_THROWS_AS(find_united_pairs(RepresentationSpec::natural(4), 0), error);
}

TEST_CASE("induced permutations on small actions") {
  // 2-subsets of {1,2,3} in order {1,2},{1,3},{2,3}
  Permutation swap12 = parse_permutation("(1 2)", 3);
  Permutation ind = induced_permutation(swap12, RepresentationSpec::subsets(2, 3));
  CHECK(ind.degree() == 3);
  CHECK(to_one_line(ind) == "1 3 2");
  CHECK(to_bracket(cycle_type(ind)) == "[1,2]");

  // power set of {1,2} in order {},{1},{2},{1,2}
  Permutation ind2 =
      induced_permutation(parse_permutation("(1 2)", 2), RepresentationSpec::power_set(2));
  CHECK(to_one_line(ind2) == "1 3 2 4");

  // 2-tuples of {1,2,3} in lex order
  Permutation ind3 =
      induced_permutation(parse_permutation("(1 2 3)", 3), RepresentationSpec::tuples(2, 3));
  CHECK(to_bracket(cycle_type(ind3)) == "[3^2]");

  CHECK(induced_permutation(Permutation::identity(3), RepresentationSpec::power_set(3))
            .is_identity());
}

TEST_CASE("inducing is a homomorphism") {
  std::mt19937_64 rng(31337);
  for (const RepresentationSpec& spec :
       {RepresentationSpec::tuples(2, 5), RepresentationSpec::subsets(2, 5),
        RepresentationSpec::power_set(5), RepresentationSpec::odd_subsets(5)}) {
    for (int trial = 0; trial < 10; ++trial) {
      Permutation p = random_perm(5, rng);
      Permutation q = random_perm(5, rng);
      CHECK(induced_permutation(p * q, spec) ==
            induced_permutation(p, spec) * induced_permutation(q, spec));
    }
  }
}

TEST_CASE("induced permutation limits and degree checks") {
  CHECK_THROWS_AS(
      induced_permutation(parse_permutation("(1 2)", 21), RepresentationSpec::power_set(21)),
      limit_error);
  CHECK_THROWS_AS(
      induced_permutation(parse_permutation("(1 2)", 3), RepresentationSpec::power_set(4)),
      mismatch_error);
}

TEST_CASE("character criterion equals the induced-type criterion on small degrees") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<RepresentationSpec> specs{RepresentationSpec::natural(n),
                                          RepresentationSpec::power_set(n),
                                          RepresentationSpec::even_subsets(n),
                                          RepresentationSpec::odd_subsets(n)};
    for (int k = 1; k <= n; ++k) {
      specs.push_back(RepresentationSpec::tuples(k, n));
      specs.push_back(RepresentationSpec::subsets(k, n));
    }
    std::vector<CycleType> types = enumerate_cycle_types(n);
    for (const RepresentationSpec& spec : specs) {
      for (std::size_t i = 0; i < types.size(); ++i) {
        for (std::size_t j = i; j < types.size(); ++j) {
          CHECK(united_by_char(spec, types[i], types[j]) ==
                united_by_induced_type(spec, types[i], types[j]));
        }
      }
    }
  }
}

TEST_CASE("degenerate actions with identical images still count as united") {
  // on 2 points every permutation fixes both even-sized subsets
  RepresentationSpec spec = RepresentationSpec::even_subsets(2);
  CycleType id2 = parse_cycle_type("[1^2]");
  CycleType swap2 = parse_cycle_type("[2]");
  CHECK(united_by_char(spec, id2, swap2));
  CHECK(united_by_induced_type(spec, id2, swap2));
}

}  // TEST_SUITE
