#ifndef PERMSIM_FIELD_MATRIX_HPP
#define PERMSIM_FIELD_MATRIX_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permsim/field.hpp"
#include "permsim/matrix.hpp"
#include "permsim/poly.hpp"

namespace permsim {

// Runtime-field wrappers over the templated Mat/Poly instantiations.
// GF(p) work stays on machine words; characteristic 0 is exact rationals.

class FieldPoly {
 public:
  explicit FieldPoly(Poly<GfOps> p);
  explicit FieldPoly(Poly<RatOps> p);

  // Integer coefficients, ascending; reduced into the field.
  static FieldPoly from_int_coeffs(FieldSpec field, const std::vector<std::int64_t>& coeffs);

  FieldSpec field() const;
  int degree() const;
  std::string coeff_text(int i) const;
  std::string to_string() const;  // dense, ascending, space-separated
  bool operator==(const FieldPoly&) const;

  const std::variant<Poly<GfOps>, Poly<RatOps>>& impl() const { return p_; }

 private:
  std::variant<Poly<GfOps>, Poly<RatOps>> p_;
};

struct InvariantFactorList {
  std::vector<FieldPoly> factors;
  bool operator==(const InvariantFactorList&) const = default;
};

class FieldMatrix {
 public:
  FieldMatrix(FieldSpec field, int rows, int cols);
  explicit FieldMatrix(Mat<GfOps> m);
  explicit FieldMatrix(Mat<RatOps> m);
  static FieldMatrix identity(FieldSpec field, int n);

  FieldSpec field() const { return field_; }
  int rows() const;
  int cols() const;

  void set(int i, int j, std::int64_t value);
  void set_text(int i, int j, std::string_view text);
  // Entry as a machine integer: the residue for GF(p); for Q the entry must
  // be an integer that fits.
  std::int64_t entry_int(int i, int j) const;
  std::string entry_text(int i, int j) const;

  FieldMatrix mul(const FieldMatrix& other) const;
  FieldMatrix pow(std::int64_t k) const;
  FieldMatrix inverse() const;
  bool invertible() const;
  BigRat trace_rat() const;  // characteristic 0 only
  bool operator==(const FieldMatrix& other) const;

  const std::variant<Mat<GfOps>, Mat<RatOps>>& impl() const { return m_; }

 private:
  void check_index(int i, int j) const;

  FieldSpec field_;
  std::variant<Mat<GfOps>, Mat<RatOps>> m_;
};

FieldMatrix perm_matrix(const Permutation& p, FieldSpec field);
int rank(const FieldMatrix& a);
int fixed_space_dim(const FieldMatrix& a);
FieldPoly char_poly(const FieldMatrix& a);
InvariantFactorList invariant_factors(const FieldMatrix& a);
bool similar(const FieldMatrix& a, const FieldMatrix& b);

// Text format: header "p n_rows n_cols" (p = 0 for Q), then one line per row
// of space-separated entries; rationals as "a/b".
FieldMatrix parse_matrix(std::string_view text);
std::string to_text(const FieldMatrix& a);

}  // namespace permsim

#endif
