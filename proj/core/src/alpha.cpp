#include "permsim/alpha.hpp"

#include <algorithm>
#include <random>

#include "permsim/errors.hpp"
#include "permsim/numeric.hpp"

namespace permsim {

namespace {

std::string encode(const FieldMatrix& a) {
  std::string out;
  out.reserve(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols()) * 8);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      std::int64_t e = a.entry_int(i, j);
      for (int b = 7; b >= 0; --b)
        out.push_back(static_cast<char>((e >> (b * 8)) & 0xff));
    }
  }
  return out;
}

void check_square_degree(const InvariantMatrixSet& m, const Permutation& pi,
                         const Permutation& sigma) {
  if (pi.degree() != m.degree() || sigma.degree() != m.degree())
    throw mismatch_error("permutation degrees " + std::to_string(pi.degree()) + ", " +
                         std::to_string(sigma.degree()) + " vs matrix degree " +
                         std::to_string(m.degree()));
}

}  // namespace

InvariantMatrixSet::InvariantMatrixSet(MatrixSetKind kind, FieldSpec field, int n)
    : kind_(kind), field_(field), n_(n) {}

InvariantMatrixSet InvariantMatrixSet::build(MatrixSetKind kind, int n, std::int64_t p,
                                             std::int64_t bound) {
  if (n < 1) throw error("matrix degree must be positive");
  FieldSpec field = FieldSpec::gf(p);  // rejects nonprimes, including 0

  BigInt expected = 1;
  if (kind == MatrixSetKind::full_gl) {
    BigInt pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    BigInt pi = 1;
    for (int i = 0; i < n; ++i) {
      expected *= pn - pi;
      pi *= p;
    }
  } else {
    for (int i = 2; i <= n; ++i) expected *= i;
  }
  if (expected > bound)
    throw limit_error("set has " + expected.str() + " members, over the bound of " +
                      std::to_string(bound));

  InvariantMatrixSet out(kind, field, n);
  if (kind == MatrixSetKind::full_gl) {
    GfOps ops{p};
    Mat<GfOps> candidate(ops, n, n);
    // Odometer over all p^(n*n) entry assignments, most significant entry
    // first, so members arrive already in encoding order.
    std::vector<std::int64_t> digits(static_cast<std::size_t>(n) * n, 0);
    for (;;) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          candidate.at(i, j) = digits[static_cast<std::size_t>(i) * n + j];
      if (candidate.rank() == n) out.members_.emplace_back(FieldMatrix(candidate));
      int pos = n * n - 1;
      while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == p - 1)
        digits[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++digits[static_cast<std::size_t>(pos)];
    }
  } else {
    std::vector<int> one_line(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) one_line[static_cast<std::size_t>(i)] = i + 1;
    do {
      out.members_.push_back(perm_matrix(Permutation::from_one_line(one_line), field));
    } while (std::next_permutation(one_line.begin(), one_line.end()));
    std::sort(out.members_.begin(), out.members_.end(),
              [](const FieldMatrix& a, const FieldMatrix& b) { return encode(a) < encode(b); });
  }

  if (out.members_.empty()) throw error("empty matrix set");
  for (const FieldMatrix& a : out.members_) {
    if (!a.invertible()) throw consistency_error("set contains a singular matrix");
    out.encodings_.insert(encode(a));
  }

  // Closure under the action follows from closure under the generators of
  // S_n x S_n acting on either side.
  std::vector<Permutation> generators;
  if (n >= 2) {
    generators.push_back(Permutation::from_cycles(n, {{1, 2}}));
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i + 1;
    generators.push_back(Permutation::from_cycles(n, {cycle}));
  }
  Permutation id = Permutation::identity(n);
  for (const Permutation& g : generators) {
    for (const FieldMatrix& a : out.members_) {
      if (!out.contains(act(g, id, a)) || !out.contains(act(id, g, a)))
        throw consistency_error("set is not closed under the action");
    }
  }
  return out;
}

bool InvariantMatrixSet::contains(const FieldMatrix& a) const {
  if (a.rows() != n_ || a.cols() != n_ || a.field() != field_) return false;
  return encodings_.count(encode(a)) > 0;
}

FieldMatrix act(const Permutation& pi, const Permutation& sigma, const FieldMatrix& a) {
  if (a.rows() != a.cols()) throw mismatch_error("the action needs square matrices");
  if (pi.degree() != a.rows() || sigma.degree() != a.rows())
    throw mismatch_error("permutation degrees " + std::to_string(pi.degree()) + ", " +
                         std::to_string(sigma.degree()) + " vs matrix degree " +
                         std::to_string(a.rows()));
  Permutation pi_inv = pi.inverse();
  Permutation sigma_inv = sigma.inverse();
  return std::visit(
      [&](const auto& m) {
        auto out = m;
        for (int i = 0; i < m.rows(); ++i) {
          for (int j = 0; j < m.cols(); ++j)
            out.at(i, j) = m.at(pi_inv.image(i + 1) - 1, sigma_inv.image(j + 1) - 1);
        }
        return FieldMatrix(std::move(out));
      },
      a.impl());
}

std::int64_t alpha_char(const InvariantMatrixSet& m, const Permutation& pi,
                        const Permutation& sigma) {
  check_square_degree(m, pi, sigma);
  std::int64_t count = 0;
  for (const FieldMatrix& a : m.members()) {
    if (act(pi, sigma, a) == a) ++count;
  }
  return count;
}

std::int64_t commutant_count(const InvariantMatrixSet& m, const Permutation& pi) {
  check_square_degree(m, pi, pi);
  std::int64_t count = 0;
  for (const FieldMatrix& a : m.members()) {
    if (act(pi, pi, a) == a) ++count;
  }
  return count;
}

namespace {

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> one_line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) one_line[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(one_line[static_cast<std::size_t>(i)], one_line[j]);
  }
  return Permutation::from_one_line(one_line);
}

}  // namespace

AlphaVerifyReport verify_alpha_characters(const InvariantMatrixSet& m, int random_conjugates,
                                          std::uint64_t seed) {
  if (random_conjugates < 1) throw error("need at least one conjugate to check");
  int n = m.degree();
  std::vector<CycleType> types = enumerate_cycle_types(n);
  std::vector<Permutation> reps;
  reps.reserve(types.size());
  for (const CycleType& t : types) reps.push_back(canonical_representative(t));

  AlphaVerifyReport report{m.kind(), m.field(), n, m.size(), {}, true};
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = i; j < types.size(); ++j) {
      const Permutation& pi = reps[i];
      std::int64_t commutant = commutant_count(m, pi);
      AlphaPairCheck check{types[i], types[j], i == j, 0, commutant, true};
      if (i == j) {
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
        for (int t = 0; t < random_conjugates; ++t) {
          Permutation g = random_permutation(n, rng);
          Permutation sigma = g * pi * g.inverse();
          std::int64_t a = alpha_char(m, pi, sigma);
          if (t == 0) check.alpha = a;
          check.pass = check.pass && a == commutant;
        }
      } else {
        check.alpha = alpha_char(m, pi, reps[j]);
        check.pass = check.alpha == 0;
      }
      report.all_pass = report.all_pass && check.pass;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace permsim
