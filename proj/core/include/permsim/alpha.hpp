#ifndef PERMSIM_ALPHA_HPP
#define PERMSIM_ALPHA_HPP

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "permsim/cycle_type.hpp"
#include "permsim/field_matrix.hpp"
#include "permsim/permutation.hpp"

namespace permsim {

enum class MatrixSetKind { full_gl, perm_matrices };

// A finite set of invertible matrices over GF(p), closed under
// (pi, sigma) . A = P_pi A P_sigma^-1. Closure is asserted at construction
// via the group generators. Members are ordered by their row-major entry
// sequence; membership checks go through a hash of that encoding.
class InvariantMatrixSet {
 public:
  static InvariantMatrixSet build(MatrixSetKind kind, int n, std::int64_t p,
                                  std::int64_t bound = 1'000'000);

  MatrixSetKind kind() const { return kind_; }
  FieldSpec field() const { return field_; }
  int degree() const { return n_; }
  std::int64_t size() const { return static_cast<std::int64_t>(members_.size()); }
  const std::vector<FieldMatrix>& members() const { return members_; }
  bool contains(const FieldMatrix& a) const;

 private:
  InvariantMatrixSet(MatrixSetKind kind, FieldSpec field, int n);

  MatrixSetKind kind_;
  FieldSpec field_;
  int n_;
  std::vector<FieldMatrix> members_;
  std::unordered_set<std::string> encodings_;
};

// P_pi * A * P_sigma^-1, computed as the entry relocation it is:
// result(i, j) = A(pi^-1(i), sigma^-1(j)).
FieldMatrix act(const Permutation& pi, const Permutation& sigma, const FieldMatrix& a);

// Number of members fixed by (pi, sigma).
std::int64_t alpha_char(const InvariantMatrixSet& m, const Permutation& pi,
                        const Permutation& sigma);

// Number of members commuting with P_pi; the diagonal of the action.
std::int64_t commutant_count(const InvariantMatrixSet& m, const Permutation& pi);

struct AlphaPairCheck {
  CycleType type1;
  CycleType type2;
  bool conjugate;
  std::int64_t alpha;      // on the first representative pair checked
  std::int64_t commutant;  // of the type1 representative
  bool pass;
};

struct AlphaVerifyReport {
  MatrixSetKind kind;
  FieldSpec field;
  int n;
  std::int64_t set_size;
  std::vector<AlphaPairCheck> checks;  // one per unordered pair of classes
  bool all_pass;
};

// One representative pair per pair of conjugacy classes: equal classes must
// show alpha_char = commutant_count (tried against several random
// conjugates), distinct classes must show alpha_char = 0. Fixed seed, so
// reports are reproducible.
AlphaVerifyReport verify_alpha_characters(const InvariantMatrixSet& m, int random_conjugates = 3,
                                          std::uint64_t seed = 0x1d872b41);

}  // namespace permsim

#endif
