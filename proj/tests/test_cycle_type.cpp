#include "doctest.h"

#include <set>
#include <stdexcept>

#include "permsim/cycle_type.hpp"
#include "permsim/errors.hpp"

using namespace permsim;

TEST_SUITE("cycle-type") {

TEST_CASE("construction validates the partition") {
  CHECK_THROWS_AS(CycleType(4, {0, 1, 1}), error);             // 1 + 2*1 != 4
  CHECK_THROWS_AS(CycleType(4, {0, -2, 0, 2}), error);         // negative count
  CHECK_THROWS_AS(CycleType::from_parts(4, {3, 2}), error);    // 5 != 4
  CHECK_THROWS_AS(CycleType::from_parts(4, {0, 4}), error);

  CycleType ct = CycleType::from_parts(4, {2, 2});
  CHECK(ct.degree() == 4);
  CHECK(ct.count(2) == 2);
  CHECK(ct.count(1) == 0);
  CHECK(ct.count(17) == 0);
  CHECK_THROWS_AS(ct.count(0), error);
}

TEST_CASE("derived counts on a large mixed type") {
  CycleType ct = parse_cycle_type("[3^2,6^2,9,12^2]");
  CHECK(ct.degree() == 51);
  CHECK(ct.num_cycles() == 7);
  CHECK(ct.count_divisible(1) == 7);
  CHECK(ct.count_divisible(3) == 7);
  CHECK(ct.count_divisible(4) == 2);
  CHECK(ct.count_divisible(6) == 4);
  CHECK(ct.count_divisible(9) == 1);
  CHECK(ct.count_divisible(12) == 2);
  CHECK(ct.count_divisible(18) == 0);
  CHECK(ct.fixed_points() == 0);
  CHECK(ct.order() == 36);
  CHECK(ct.has_odd_cycle());
  CHECK(ct.parts() == std::vector<int>{12, 12, 9, 6, 6, 3, 3});

  CHECK_FALSE(parse_cycle_type("[2^3]").has_odd_cycle());
}

TEST_CASE("powers follow the gcd rule") {
  CycleType ct = parse_cycle_type("[3^2,6^2,9,12^2]");
  CHECK(power_cycle_type(ct, 2) == parse_cycle_type("[3^6,6^4,9]"));
  CHECK(power_cycle_type(ct, 3) == parse_cycle_type("[1^6,2^6,3^3,4^6]"));
  CHECK(power_cycle_type(ct, 36) == CycleType::from_parts(51, std::vector<int>(51, 1)));
  CHECK(power_cycle_type(ct, 1) == ct);

  // against actual permutation powering, exhaustively
  for (int n = 1; n <= 8; ++n) {
    for (const CycleType& t : enumerate_cycle_types(n)) {
      Permutation rep = canonical_representative(t);
      for (std::int64_t k = 1; k <= 24; ++k)
        CHECK(power_cycle_type(t, k) == cycle_type(rep.power(k)));
    }
  }

  // composing exponents
  for (const CycleType& t : enumerate_cycle_types(7)) {
    for (std::int64_t a = 1; a <= 6; ++a) {
      for (std::int64_t b = 1; b <= 6; ++b)
        CHECK(power_cycle_type(power_cycle_type(t, a), b) == power_cycle_type(t, a * b));
    }
  }
}

TEST_CASE("enumeration covers every partition exactly once") {
  const int expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};  // partition numbers
  for (int n = 1; n <= 10; ++n) {
    std::vector<CycleType> types = enumerate_cycle_types(n);
    CHECK(types.size() == static_cast<std::size_t>(expected[n - 1]));
    CHECK(types.front() == CycleType::from_parts(n, {n}));
    CHECK(types.back() == CycleType::from_parts(n, std::vector<int>(n, 1)));
    std::set<std::string> seen;
    for (const CycleType& t : types) {
      CHECK(t.degree() == n);
      CHECK(seen.insert(to_bracket(t)).second);
    }
  }
}

TEST_CASE("bracket notation round trips") {
  CHECK(to_bracket(parse_cycle_type("[3^2,6^2,9,12^2]")) == "[3^2,6^2,9,12^2]");
  CHECK(to_bracket(CycleType::from_parts(4, {2, 1, 1})) == "[1^2,2]");
  CHECK(to_bracket(CycleType::from_parts(4, {4})) == "[4]");
  CHECK(parse_cycle_type("2^2") == CycleType::from_parts(4, {2, 2}));
  CHECK(parse_cycle_type("[2,1]") == parse_cycle_type("[1,2]"));

  for (int n = 1; n <= 10; ++n) {
    for (const CycleType& t : enumerate_cycle_types(n))
      CHECK(parse_cycle_type(to_bracket(t)) == t);
  }

  CHECK_THROWS_AS(parse_cycle_type(""), parse_error);
  CHECK_THROWS_AS(parse_cycle_type("[2^2"), parse_error);
  CHECK_THROWS_AS(parse_cycle_type("[a]"), parse_error);
  CHECK_THROWS_AS(parse_cycle_type("[2^]"), parse_error);
  CHECK_THROWS_AS(parse_cycle_type("[0^3]"), parse_error);
  CHECK_THROWS_AS(parse_cycle_type("[2 2]"), parse_error);
}

TEST_CASE("canonical representative lays cycles out in order") {
  CycleType ct = CycleType::from_parts(5, {2, 2, 1});
  Permutation rep = canonical_representative(ct);
  CHECK(to_cycle_string(rep) == "(1 2)(3 4)");
  CHECK(rep.degree() == 5);

  for (int n = 1; n <= 10; ++n) {
    for (const CycleType& t : enumerate_cycle_types(n))
      CHECK(cycle_type(canonical_representative(t)) == t);
  }
}

TEST_CASE("conjugacy is cycle type equality") {
  CHECK(is_conjugate(cycle_type(parse_permutation("(1 2)(3 4)", 4)),
                     cycle_type(parse_permutation("(1 3)(2 4)", 4))));
  CHECK_FALSE(is_conjugate(parse_cycle_type("[4]"), parse_cycle_type("[2^2]")));
  CHECK_THROWS_AS(is_conjugate(parse_cycle_type("[3]"), parse_cycle_type("[4]")),
                  mismatch_error);
}

TEST_CASE("order overflow surfaces instead of wrapping") {
  // parts = the primes up to 53; their lcm exceeds 2^63
  std::vector<int> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  int n = 0;
  for (int p : primes) n += p;
  CycleType ct = CycleType::from_parts(n, primes);
  CHECK_THROWS_AS(ct.order(), std::overflow_error);
}

}  // TEST_SUITE
