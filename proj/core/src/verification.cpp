#include "permsim/verification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "permsim/alpha.hpp"
#include "permsim/characters.hpp"
#include "permsim/cycle_type.hpp"
#include "permsim/errors.hpp"
#include "permsim/field_matrix.hpp"
#include "permsim/numeric.hpp"
#include "permsim/permutation.hpp"
#include "permsim/recovery.hpp"
#include "permsim/uniting.hpp"

namespace permsim {

namespace {

// Accumulates one battery row: a case count while everything passes, the
// first offending case once something fails.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases_;
    if (!ok && pass_) {
      pass_ = false;
      failure_ = describe();
    }
  }

  void expect(bool ok) {
    expect(ok, [] { return std::string("see name"); });
  }

  BatteryCheck done() && {
    return {std::move(name_), pass_,
            pass_ ? std::to_string(cases_) + " cases" : "failed: " + failure_};
  }

 private:
  std::string name_;
  bool pass_ = true;
  std::int64_t cases_ = 0;
  std::string failure_;
};

std::vector<FieldSpec> three_fields() {
  return {FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::rationals()};
}

BatteryCheck check_power_cycle_structure(int max_n) {
  Check c("power-cycle-structure");
  for (int n = 1; n <= max_n; ++n) {
    for (const CycleType& ct : enumerate_cycle_types(n)) {
      Permutation rep = canonical_representative(ct);
      for (std::int64_t k = 1; k <= 2 * n; ++k) {
        c.expect(cycle_type(rep.power(k)) == power_cycle_type(ct, k), [&] {
          return to_bracket(ct) + " power " + std::to_string(k);
        });
      }
    }
    // a single n-cycle raised to k falls apart into gcd(n, k) cycles
    CycleType full = CycleType::from_parts(n, {n});
    for (std::int64_t k = 1; k <= 2 * n; ++k) {
      c.expect(power_cycle_type(full, k).num_cycles() == std::gcd<std::int64_t>(n, k),
               [&] { return "n-cycle power " + std::to_string(k) + ", n=" + std::to_string(n); });
    }
  }
  return std::move(c).done();
}

BatteryCheck check_fixed_space(int max_n) {
  Check c("fixed-space-counts-cycles");
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    for (const FieldSpec& field : three_fields()) {
      for (const CycleType& ct : enumerate_cycle_types(n)) {
        FieldMatrix a = perm_matrix(canonical_representative(ct), field);
        FieldMatrix power = FieldMatrix::identity(field, n);
        for (std::int64_t k = 1; k <= ct.order(); ++k) {
          power = power.mul(a);
          c.expect(fixed_space_dim(power) == power_cycle_type(ct, k).num_cycles(), [&] {
            return to_bracket(ct) + " over " + field.name() + ", power " + std::to_string(k);
          });
        }
      }
    }
  }
  return std::move(c).done();
}

BatteryCheck check_worked_recovery() {
  Check c("worked-recovery-example");
  CycleType ct = parse_cycle_type("[3^2,6^2,9,12^2]");
  CycleCountOracle oracle = oracle_from_cycle_type(ct);

  c.expect(ct.degree() == 51, [] { return std::string("degree"); });
  c.expect(recover_m_d(oracle, 12) == 2, [] { return std::string("m_12"); });
  c.expect(recover_m_d_via(oracle, 12, {3, 2, 2}) == 2, [] { return std::string("m_12 via 3"); });
  c.expect(recover_m_d_via(oracle, 12, {2, 2, 3}) == 2, [] { return std::string("m_12 via 2"); });
  // the two routes' inner values: (m_4 of the cube - m_4) / 2 and (m_6 of the square) / 2
  CycleType square = power_cycle_type(ct, 2);
  CycleType cube = power_cycle_type(ct, 3);
  c.expect(cube.count_divisible(4) == 6 && ct.count_divisible(4) == 2,
           [] { return std::string("route via 3 inner values"); });
  c.expect(square.count_divisible(6) == 4, [] { return std::string("route via 2 inner value"); });
  c.expect(recover_c_d(oracle, 3) == 2, [] { return std::string("c_3"); });
  std::vector<std::int64_t> levels = inclusion_exclusion_levels(oracle, 3);
  c.expect(levels == std::vector<std::int64_t>{7, 7, 2, 0},
           [] { return std::string("alternating level sums"); });
  c.expect(recover_cycle_type(oracle) == ct, [] { return std::string("full roundtrip"); });
  return std::move(c).done();
}

BatteryCheck check_recovery_roundtrip(int max_n) {
  Check c("cycle-type-recovery");
  for (int n = 1; n <= max_n; ++n) {
    for (const CycleType& ct : enumerate_cycle_types(n)) {
      CycleCountOracle oracle = oracle_from_cycle_type(ct);
      c.expect(recover_cycle_type(oracle) == ct, [&] { return to_bracket(ct); });
    }
  }
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    for (const FieldSpec& field : three_fields()) {
      for (const CycleType& ct : enumerate_cycle_types(n)) {
        FieldMatrix a = perm_matrix(canonical_representative(ct), field);
        c.expect(recover_cycle_type(oracle_from_matrix(a)) == ct,
                 [&] { return to_bracket(ct) + " over " + field.name(); });
      }
    }
  }
  return std::move(c).done();
}

BatteryCheck check_similarity(int max_n) {
  Check c("similarity-matches-conjugacy");
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    std::vector<CycleType> types = enumerate_cycle_types(n);
    for (const FieldSpec& field : three_fields()) {
      std::vector<InvariantFactorList> lists;
      lists.reserve(types.size());
      for (const CycleType& ct : types)
        lists.push_back(invariant_factors(perm_matrix(canonical_representative(ct), field)));
      for (std::size_t i = 0; i < types.size(); ++i) {
        for (std::size_t j = i; j < types.size(); ++j) {
          c.expect((lists[i] == lists[j]) == (i == j), [&] {
            return to_bracket(types[i]) + " vs " + to_bracket(types[j]) + " over " + field.name();
          });
        }
      }
    }
  }
  return std::move(c).done();
}

BatteryCheck check_char_poly_collision() {
  Check c("char-poly-collision");
  FieldSpec gf2 = FieldSpec::gf(2);
  std::vector<CycleType> types = {CycleType::from_parts(4, {4}), CycleType::from_parts(4, {2, 2}),
                                  CycleType::from_parts(4, {1, 1, 1, 1})};
  std::vector<FieldMatrix> mats;
  for (const CycleType& ct : types) mats.push_back(perm_matrix(canonical_representative(ct), gf2));

  FieldPoly collision = FieldPoly::from_int_coeffs(gf2, {1, 4, 6, 4, 1});  // (x+1)^4 reduced
  for (std::size_t i = 0; i < mats.size(); ++i) {
    c.expect(char_poly(mats[i]) == collision,
             [&] { return to_bracket(types[i]) + " characteristic polynomial"; });
  }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      c.expect(!similar(mats[i], mats[j]),
               [&] { return to_bracket(types[i]) + " vs " + to_bracket(types[j]); });
    }
  }
  // over the rationals the characteristic polynomials already differ
  FieldSpec q = FieldSpec::rationals();
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = i + 1; j < types.size(); ++j) {
      c.expect(!(char_poly(perm_matrix(canonical_representative(types[i]), q)) ==
                 char_poly(perm_matrix(canonical_representative(types[j]), q))),
               [&] { return to_bracket(types[i]) + " vs " + to_bracket(types[j]) + " over Q"; });
    }
  }
  return std::move(c).done();
}

BatteryCheck check_power_trace(int max_n) {
  Check c("power-trace-identity");
  FieldSpec q = FieldSpec::rationals();
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    for (const CycleType& ct : enumerate_cycle_types(n)) {
      FieldMatrix a = perm_matrix(canonical_representative(ct), q);
      FieldMatrix power = FieldMatrix::identity(q, n);
      for (std::int64_t d = 1; d <= 2 * n; ++d) {
        power = power.mul(a);
        BigRat expected = 0;
        for (std::int64_t k : divisors(d)) {
          if (k <= n) expected += BigRat(k * ct.count(static_cast<int>(k)));
        }
        c.expect(power.trace_rat() == expected,
                 [&] { return to_bracket(ct) + " power " + std::to_string(d); });
      }
    }
  }
  return std::move(c).done();
}

std::vector<RepresentationSpec> all_specs(int n) {
  std::vector<RepresentationSpec> specs;
  specs.push_back(RepresentationSpec::natural(n));
  for (int k = 1; k <= n; ++k) specs.push_back(RepresentationSpec::tuples(k, n));
  for (int k = 1; k <= n; ++k) specs.push_back(RepresentationSpec::subsets(k, n));
  specs.push_back(RepresentationSpec::power_set(n));
  specs.push_back(RepresentationSpec::even_subsets(n));
  specs.push_back(RepresentationSpec::odd_subsets(n));
  return specs;
}

BatteryCheck check_characters_are_fixed_points(int max_n) {
  Check c("characters-count-fixed-points");
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    for (const RepresentationSpec& spec : all_specs(n)) {
      for (const CycleType& ct : enumerate_cycle_types(n)) {
        Permutation induced = induced_permutation(canonical_representative(ct), spec);
        c.expect(rep_char(spec, ct) == cycle_type(induced).fixed_points(),
                 [&] { return spec.to_string() + " at " + to_bracket(ct); });
      }
    }
  }
  return std::move(c).done();
}

BatteryCheck check_gen_fn(int max_n) {
  Check c("gen-fn-identities");
  SubsetGenFn worked = subset_gen_fn(parse_cycle_type("[1^2,2]"));
  c.expect(worked.coefficients == std::vector<BigInt>{1, 2, 2, 2, 1},
           [] { return std::string("[1^2,2] coefficients"); });

  for (int n = 1; n <= max_n; ++n) {
    for (const CycleType& ct : enumerate_cycle_types(n)) {
      SubsetGenFn f = subset_gen_fn(ct);
      BigInt two_to_m = BigInt(1) << ct.num_cycles();
      c.expect(f.coefficients.size() == static_cast<std::size_t>(n) + 1 &&
                   f.coefficients[0] == 1,
               [&] { return to_bracket(ct) + " shape"; });
      c.expect(f.eval(1) == two_to_m && f.eval(1) == powerset_char(ct),
               [&] { return to_bracket(ct) + " at t=1"; });
      BigInt at_minus_one = ct.has_odd_cycle() ? BigInt(0) : two_to_m;
      c.expect(f.eval(-1) == at_minus_one, [&] { return to_bracket(ct) + " at t=-1"; });
      c.expect(even_subsets_char(ct) - odd_subsets_char(ct) == f.eval(-1) &&
                   even_subsets_char(ct) + odd_subsets_char(ct) == f.eval(1),
               [&] { return to_bracket(ct) + " even/odd split"; });
      if (n >= 2) {
        BigInt chi2 = BigInt(ct.count(2)) + binomial(ct.fixed_points(), 2);
        c.expect(subset_char(ct, 2) == chi2, [&] { return to_bracket(ct) + " 2-subsets"; });
      }
      if (n >= 3) {
        BigInt chi3 = BigInt(ct.count(3)) + BigInt(ct.count(2)) * ct.fixed_points() +
                      binomial(ct.fixed_points(), 3);
        c.expect(subset_char(ct, 3) == chi3, [&] { return to_bracket(ct) + " 3-subsets"; });
      }
    }
  }
  return std::move(c).done();
}

// One scan per (n, spec), shared by all the uniting checks below.
struct ScanTable {
  std::map<std::pair<int, std::string>, UnitingReport> reports;

  const UnitingReport& get(int n, const std::string& spec_text) const {
    return reports.at({n, spec_text});
  }
};

ScanTable run_scans(int max_n, int workers) {
  ScanTable table;
  for (int n = 3; n <= max_n; ++n) {
    std::vector<RepresentationSpec> specs;
    for (int k = 1; k <= n; ++k) specs.push_back(RepresentationSpec::tuples(k, n));
    specs.push_back(RepresentationSpec::power_set(n));
    specs.push_back(RepresentationSpec::even_subsets(n));
    specs.push_back(RepresentationSpec::odd_subsets(n));
    for (const RepresentationSpec& spec : specs)
      table.reports.emplace(std::make_pair(n, spec.to_string()),
                            find_united_pairs(spec, workers));
  }
  return table;
}

bool contains_pair(const UnitingReport& report, const CycleType& a, const CycleType& b) {
  for (const auto& [x, y] : report.united_pairs) {
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

// The constructed witness pair: all 2-cycles, versus two fixed points and
// 2-cycles for the rest.
std::pair<CycleType, CycleType> witness_pair(int n) {
  std::vector<int> all_twos(static_cast<std::size_t>(n / 2), 2);
  std::vector<int> two_fixed{1, 1};
  for (int i = 0; i < (n - 2) / 2; ++i) two_fixed.push_back(2);
  return {CycleType::from_parts(n, all_twos), CycleType::from_parts(n, two_fixed)};
}

BatteryCheck check_small_tuples(const ScanTable& table, int max_n, int k) {
  Check c(k == 1 ? "points-never-unite" : "pairs-never-unite");
  for (int n = 3; n <= max_n; ++n) {
    const UnitingReport& report = table.get(n, "tuples:" + std::to_string(k));
    c.expect(report.united_pairs.empty() && !report.unites,
             [&] { return "n=" + std::to_string(n); });
  }
  return std::move(c).done();
}

BatteryCheck check_triples(const ScanTable& table, int max_n) {
  Check c("triples-unite-iff-even");
  for (int n = 3; n <= max_n; ++n) {
    const UnitingReport& report = table.get(n, "tuples:3");
    if (n % 2 == 1) {
      c.expect(report.united_pairs.empty(), [&] { return "n=" + std::to_string(n); });
    } else {
      auto [a, b] = witness_pair(n);
      c.expect(report.unites && contains_pair(report, a, b),
               [&] { return "n=" + std::to_string(n); });
    }
  }
  return std::move(c).done();
}

BatteryCheck check_big_tuples(const ScanTable& table, int max_n) {
  Check c("big-tuples-always-unite");
  for (int n = 4; n <= max_n; ++n) {
    for (int k = 4; k <= n; ++k) {
      const UnitingReport& report = table.get(n, "tuples:" + std::to_string(k));
      c.expect(report.unites, [&] {
        return "n=" + std::to_string(n) + ", k=" + std::to_string(k);
      });
    }
  }
  return std::move(c).done();
}

BatteryCheck check_subset_family_scans(const ScanTable& table, int max_n, const std::string& name,
                                       const std::string& spec_text) {
  Check c(name);
  for (int n = 3; n <= max_n; ++n) {
    const UnitingReport& report = table.get(n, spec_text);
    if (spec_text == "even-subsets" && n % 2 == 0) {
      auto [a, b] = witness_pair(n);
      c.expect(report.unites && contains_pair(report, a, b),
               [&] { return "n=" + std::to_string(n); });
    } else {
      c.expect(report.united_pairs.empty(), [&] { return "n=" + std::to_string(n); });
    }
  }
  return std::move(c).done();
}

BatteryCheck check_fix_gaps(int max_n) {
  Check c("almost-similar-fix-gaps");
  for (int n = 1; n <= max_n; ++n) {
    std::vector<CycleType> types = enumerate_cycle_types(n);
    for (std::size_t i = 0; i < types.size(); ++i) {
      for (std::size_t j = i + 1; j < types.size(); ++j) {
        if (!is_almost_similar(types[i], types[j])) continue;
        std::int64_t gap = almost_similar_fix_gap(types[i], types[j]);
        bool ok = gap != 0;  // equal fixed points would force conjugacy
        for (std::int64_t p : distinct_primes(types[i].order())) ok = ok && gap % p == 0;
        c.expect(ok, [&] { return to_bracket(types[i]) + " vs " + to_bracket(types[j]); });
      }
    }
  }
  return std::move(c).done();
}

BatteryCheck check_uniting_witness(const ScanTable& table) {
  Check c("uniting-needs-almost-similar");
  for (const auto& [key, report] : table.reports) {
    if (report.united_pairs.empty()) continue;
    bool found = false;
    for (const auto& [a, b] : report.united_pairs) {
      if (is_almost_similar(a, b)) found = true;
    }
    c.expect(found,
             [&key] { return key.second + " at n=" + std::to_string(key.first); });
  }
  return std::move(c).done();
}

BatteryCheck check_regular_rep(int max_n) {
  Check c("regular-rep-unites-equal-order");
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    RepresentationSpec regular = RepresentationSpec::tuples(n, n);
    std::vector<CycleType> types = enumerate_cycle_types(n);
    for (std::size_t i = 0; i < types.size(); ++i) {
      for (std::size_t j = i + 1; j < types.size(); ++j) {
        bool united = united_by_char(regular, types[i], types[j]);
        bool equal_order = types[i].order() == types[j].order();
        c.expect(united == equal_order,
                 [&] { return to_bracket(types[i]) + " vs " + to_bracket(types[j]); });
      }
    }
  }
  return std::move(c).done();
}

BatteryCheck check_induced_match(int max_n) {
  Check c("induced-types-match-characters");
  constexpr std::int64_t kBatteryLimit = 10'000;
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    for (const RepresentationSpec& spec : all_specs(n)) {
      std::vector<CycleType> types = enumerate_cycle_types(n);
      for (std::size_t i = 0; i < types.size(); ++i) {
        for (std::size_t j = i; j < types.size(); ++j) {
          c.expect(united_by_char(spec, types[i], types[j]) ==
                       united_by_induced_type(spec, types[i], types[j], kBatteryLimit),
                   [&] {
                     return spec.to_string() + ": " + to_bracket(types[i]) + " vs " +
                            to_bracket(types[j]);
                   });
        }
      }
    }
  }
  return std::move(c).done();
}

FieldMatrix random_invertible(FieldSpec field, int n, std::mt19937_64& rng) {
  for (;;) {
    FieldMatrix a(field, n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        a.set(i, j, static_cast<std::int64_t>(rng() % 7));
    }
    if (a.invertible()) return a;
  }
}

Permutation seeded_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> one_line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) one_line[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(one_line[static_cast<std::size_t>(i)], one_line[j]);
  }
  return Permutation::from_one_line(one_line);
}

BatteryCheck check_action_axioms(int max_n) {
  Check c("action-axioms");
  std::mt19937_64 rng(0x8d2f1c3a);
  for (int n = 2; n <= std::min(max_n, 3); ++n) {
    Permutation id = Permutation::identity(n);
    for (std::int64_t p : {2, 3}) {
      FieldSpec field = FieldSpec::gf(p);
      for (int sample = 0; sample < 5; ++sample) {
        FieldMatrix a = random_invertible(field, n, rng);
        c.expect(act(id, id, a) == a, [&] { return std::string("identity axiom"); });

        Permutation pi1 = seeded_permutation(n, rng);
        Permutation pi2 = seeded_permutation(n, rng);
        Permutation s1 = seeded_permutation(n, rng);
        Permutation s2 = seeded_permutation(n, rng);
        c.expect(act(pi1, s1, act(pi2, s2, a)) == act(pi1 * pi2, s1 * s2, a),
                 [&] { return std::string("compatibility"); });

        // the index relocation really is the two-sided matrix product
        FieldMatrix product =
            perm_matrix(pi1, field).mul(a).mul(perm_matrix(s1, field).inverse());
        c.expect(act(pi1, s1, a) == product, [&] { return std::string("matrix product form"); });
      }
    }
  }
  return std::move(c).done();
}

BatteryCheck check_alpha_identities(int max_n) {
  Check c("alpha-char-identities");
  std::vector<InvariantMatrixSet> sets;
  sets.push_back(InvariantMatrixSet::build(MatrixSetKind::full_gl, 2, 2));
  if (max_n >= 3) sets.push_back(InvariantMatrixSet::build(MatrixSetKind::full_gl, 3, 2));
  for (int n = 2; n <= std::min(max_n, 5); ++n)
    sets.push_back(InvariantMatrixSet::build(MatrixSetKind::perm_matrices, n, 2));

  for (const InvariantMatrixSet& m : sets) {
    AlphaVerifyReport report = verify_alpha_characters(m);
    c.expect(report.all_pass, [&] {
      return (m.kind() == MatrixSetKind::full_gl ? std::string("full-gl") : std::string("perm")) +
             " n=" + std::to_string(m.degree());
    });
    // the diagonal restriction: identical counts, member by member
    for (const CycleType& ct : enumerate_cycle_types(m.degree())) {
      Permutation rep = canonical_representative(ct);
      c.expect(alpha_char(m, rep, rep) == commutant_count(m, rep),
               [&] { return "diagonal at " + to_bracket(ct); });
    }
  }
  return std::move(c).done();
}

BatteryCheck check_orbit_count(int max_n) {
  Check c("orbit-count-identity");
  for (int n = 2; n <= std::min(max_n, 3); ++n) {
    InvariantMatrixSet m = InvariantMatrixSet::build(MatrixSetKind::full_gl, n, 2);

    // explicit orbit partition under the generator moves
    std::vector<Permutation> gens;
    gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
    std::vector<int> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 1);
    gens.push_back(Permutation::from_cycles(n, {cyc}));
    Permutation id = Permutation::identity(n);

    auto index_of = [&](const FieldMatrix& a) -> std::size_t {
      for (std::size_t i = 0; i < m.members().size(); ++i) {
        if (m.members()[i] == a) return i;
      }
      throw consistency_error("orbit walk left the set");
    };

    std::vector<char> visited(m.members().size(), 0);
    std::int64_t orbits = 0;
    for (std::size_t start = 0; start < m.members().size(); ++start) {
      if (visited[start]) continue;
      ++orbits;
      std::vector<std::size_t> frontier{start};
      visited[start] = 1;
      while (!frontier.empty()) {
        std::size_t at = frontier.back();
        frontier.pop_back();
        for (const Permutation& g : gens) {
          for (const FieldMatrix& next :
               {act(g, id, m.members()[at]), act(id, g, m.members()[at])}) {
            std::size_t idx = index_of(next);
            if (!visited[idx]) {
              visited[idx] = 1;
              frontier.push_back(idx);
            }
          }
        }
      }
    }

    // Burnside: total fixed points across the group = group size * orbit count
    std::vector<Permutation> all_perms;
    std::vector<int> one_line(static_cast<std::size_t>(n));
    std::iota(one_line.begin(), one_line.end(), 1);
    do {
      all_perms.push_back(Permutation::from_one_line(one_line));
    } while (std::next_permutation(one_line.begin(), one_line.end()));

    BigInt total = 0;
    for (const Permutation& pi : all_perms) {
      for (const Permutation& sigma : all_perms) total += alpha_char(m, pi, sigma);
    }
    BigInt group_size = BigInt(all_perms.size()) * BigInt(all_perms.size());
    c.expect(total == group_size * orbits, [&] {
      return "n=" + std::to_string(n) + ": " + total.str() + " vs " + std::to_string(orbits) +
             " orbits";
    });
  }
  return std::move(c).done();
}

}  // namespace

BatteryReport run_verification_battery(int max_n, int workers) {
  if (max_n < 3) throw error("battery needs max_n >= 3");
  if (workers < 1) throw error("worker count must be positive");

  ScanTable table = run_scans(max_n, workers);

  BatteryReport report{max_n, {}, true};
  report.checks.push_back(check_power_cycle_structure(max_n));
  report.checks.push_back(check_fixed_space(max_n));
  report.checks.push_back(check_worked_recovery());
  report.checks.push_back(check_recovery_roundtrip(max_n));
  report.checks.push_back(check_similarity(max_n));
  report.checks.push_back(check_char_poly_collision());
  report.checks.push_back(check_power_trace(max_n));
  report.checks.push_back(check_characters_are_fixed_points(max_n));
  report.checks.push_back(check_gen_fn(max_n));
  report.checks.push_back(check_small_tuples(table, max_n, 1));
  report.checks.push_back(check_small_tuples(table, max_n, 2));
  report.checks.push_back(check_triples(table, max_n));
  report.checks.push_back(check_big_tuples(table, max_n));
  report.checks.push_back(check_subset_family_scans(table, max_n, "powerset-never-unites",
                                                    "powerset"));
  report.checks.push_back(check_subset_family_scans(table, max_n, "odd-subsets-never-unite",
                                                    "odd-subsets"));
  report.checks.push_back(check_subset_family_scans(table, max_n, "even-subsets-unite-iff-even",
                                                    "even-subsets"));
  report.checks.push_back(check_fix_gaps(max_n));
  report.checks.push_back(check_uniting_witness(table));
  report.checks.push_back(check_regular_rep(max_n));
  report.checks.push_back(check_induced_match(max_n));
  report.checks.push_back(check_action_axioms(max_n));
  report.checks.push_back(check_alpha_identities(max_n));
  report.checks.push_back(check_orbit_count(max_n));

  report.all_pass = true;
  for (const BatteryCheck& check : report.checks) report.all_pass = report.all_pass && check.pass;
  return report;
}

}  // namespace permsim
