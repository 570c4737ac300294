#include "permsim/field_matrix.hpp"

#include <sstream>

#include "permsim/errors.hpp"
#include "permsim/invariant_factors.hpp"

namespace permsim {

namespace {

FieldSpec field_of_gf(const GfOps& ops) { return FieldSpec::gf(ops.p); }

}  // namespace

FieldPoly::FieldPoly(Poly<GfOps> p) : p_(std::move(p)) {}
FieldPoly::FieldPoly(Poly<RatOps> p) : p_(std::move(p)) {}

FieldPoly FieldPoly::from_int_coeffs(FieldSpec field, const std::vector<std::int64_t>& coeffs) {
  if (field.is_prime_field()) {
    GfOps ops{field.characteristic()};
    std::vector<GfOps::Elem> c;
    c.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c.push_back(ops.from_int(v));
    return FieldPoly(Poly<GfOps>(ops, std::move(c)));
  }
  RatOps ops;
  std::vector<RatOps::Elem> c;
  c.reserve(coeffs.size());
  for (std::int64_t v : coeffs) c.push_back(ops.from_int(v));
  return FieldPoly(Poly<RatOps>(ops, std::move(c)));
}

FieldSpec FieldPoly::field() const {
  return std::visit(
      [](const auto& p) -> FieldSpec {
        if constexpr (std::is_same_v<std::decay_t<decltype(p.ops())>, GfOps>)
          return field_of_gf(p.ops());
        else
          return FieldSpec::rationals();
      },
      p_);
}

int FieldPoly::degree() const {
  return std::visit([](const auto& p) { return p.degree(); }, p_);
}

std::string FieldPoly::coeff_text(int i) const {
  return std::visit([&](const auto& p) { return p.ops().to_string(p.coeff(i)); }, p_);
}

std::string FieldPoly::to_string() const {
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    if (i > 0) out += ' ';
    out += coeff_text(i);
  }
  return degree() < 0 ? "0" : out;
}

bool FieldPoly::operator==(const FieldPoly& other) const {
  if (field() != other.field()) return false;
  if (p_.index() != other.p_.index()) return false;
  if (std::holds_alternative<Poly<GfOps>>(p_))
    return std::get<Poly<GfOps>>(p_) == std::get<Poly<GfOps>>(other.p_);
  return std::get<Poly<RatOps>>(p_) == std::get<Poly<RatOps>>(other.p_);
}

namespace {

std::variant<Mat<GfOps>, Mat<RatOps>> make_impl(FieldSpec field, int rows, int cols) {
  if (field.is_prime_field())
    return Mat<GfOps>(GfOps{field.characteristic()}, rows, cols);
  return Mat<RatOps>(RatOps{}, rows, cols);
}

}  // namespace

FieldMatrix::FieldMatrix(FieldSpec field, int rows, int cols)
    : field_(field), m_(make_impl(field, rows, cols)) {}

FieldMatrix::FieldMatrix(Mat<GfOps> m) : field_(FieldSpec::gf(m.ops().p)), m_(std::move(m)) {}
FieldMatrix::FieldMatrix(Mat<RatOps> m) : field_(FieldSpec::rationals()), m_(std::move(m)) {}

FieldMatrix FieldMatrix::identity(FieldSpec field, int n) {
  if (field.is_prime_field())
    return FieldMatrix(Mat<GfOps>::identity(GfOps{field.characteristic()}, n));
  return FieldMatrix(Mat<RatOps>::identity(RatOps{}, n));
}

int FieldMatrix::rows() const {
  return std::visit([](const auto& m) { return m.rows(); }, m_);
}

int FieldMatrix::cols() const {
  return std::visit([](const auto& m) { return m.cols(); }, m_);
}

void FieldMatrix::check_index(int i, int j) const {
  if (i < 0 || i >= rows() || j < 0 || j >= cols())
    throw error("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                ") out of range for " + std::to_string(rows()) + "x" + std::to_string(cols()));
}

void FieldMatrix::set(int i, int j, std::int64_t value) {
  check_index(i, j);
  std::visit([&](auto& m) { m.at(i, j) = m.ops().from_int(value); }, m_);
}

void FieldMatrix::set_text(int i, int j, std::string_view text) {
  check_index(i, j);
  std::visit([&](auto& m) { m.at(i, j) = m.ops().from_string(text); }, m_);
}

std::int64_t FieldMatrix::entry_int(int i, int j) const {
  check_index(i, j);
  if (auto* m = std::get_if<Mat<GfOps>>(&m_)) return m->at(i, j);
  const auto& e = std::get<Mat<RatOps>>(m_).at(i, j);
  if (boost::multiprecision::denominator(e) != 1)
    throw error("matrix entry " + e.str() + " is not an integer");
  BigInt num = boost::multiprecision::numerator(e);
  if (num > INT64_MAX || num < INT64_MIN)
    throw error("matrix entry " + e.str() + " does not fit a machine integer");
  return num.convert_to<std::int64_t>();
}

std::string FieldMatrix::entry_text(int i, int j) const {
  check_index(i, j);
  return std::visit([&](const auto& m) { return m.ops().to_string(m.at(i, j)); }, m_);
}

FieldMatrix FieldMatrix::mul(const FieldMatrix& other) const {
  if (field_ != other.field_)
    throw mismatch_error("matrix product across different fields: " + field_.name() + " vs " +
                         other.field_.name());
  if (auto* m = std::get_if<Mat<GfOps>>(&m_))
    return FieldMatrix(m->mul(std::get<Mat<GfOps>>(other.m_)));
  return FieldMatrix(std::get<Mat<RatOps>>(m_).mul(std::get<Mat<RatOps>>(other.m_)));
}

FieldMatrix FieldMatrix::pow(std::int64_t k) const {
  if (auto* m = std::get_if<Mat<GfOps>>(&m_)) return FieldMatrix(m->pow(k));
  return FieldMatrix(std::get<Mat<RatOps>>(m_).pow(k));
}

FieldMatrix FieldMatrix::inverse() const {
  if (auto* m = std::get_if<Mat<GfOps>>(&m_)) {
    auto inv = m->inverse();
    if (!inv) throw error("matrix is singular");
    return FieldMatrix(std::move(*inv));
  }
  auto inv = std::get<Mat<RatOps>>(m_).inverse();
  if (!inv) throw error("matrix is singular");
  return FieldMatrix(std::move(*inv));
}

bool FieldMatrix::invertible() const {
  return std::visit([](const auto& m) { return m.is_square() && m.rank() == m.rows(); }, m_);
}

BigRat FieldMatrix::trace_rat() const {
  if (field_.is_prime_field())
    throw error("exact trace is defined here for characteristic 0 only");
  return std::get<Mat<RatOps>>(m_).trace();
}

bool FieldMatrix::operator==(const FieldMatrix& other) const {
  if (field_ != other.field_) return false;
  if (auto* m = std::get_if<Mat<GfOps>>(&m_)) return *m == std::get<Mat<GfOps>>(other.m_);
  return std::get<Mat<RatOps>>(m_) == std::get<Mat<RatOps>>(other.m_);
}

FieldMatrix perm_matrix(const Permutation& p, FieldSpec field) {
  if (field.is_prime_field())
    return FieldMatrix(perm_to_matrix(GfOps{field.characteristic()}, p));
  return FieldMatrix(perm_to_matrix(RatOps{}, p));
}

int rank(const FieldMatrix& a) {
  return std::visit([](const auto& m) { return m.rank(); }, a.impl());
}

int fixed_space_dim(const FieldMatrix& a) {
  return std::visit(
      [](const auto& m) {
        if (!m.is_square()) throw error("fixed space requires a square matrix");
        return m.rows() - m.minus_identity().rank();
      },
      a.impl());
}

FieldPoly char_poly(const FieldMatrix& a) {
  return std::visit([](const auto& m) { return FieldPoly(char_poly_of(m)); }, a.impl());
}

InvariantFactorList invariant_factors(const FieldMatrix& a) {
  return std::visit(
      [](const auto& m) {
        InvariantFactorList out;
        for (auto& f : invariant_factor_polys(m)) out.factors.emplace_back(std::move(f));
        return out;
      },
      a.impl());
}

bool similar(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.field() != b.field())
    throw mismatch_error("similarity across different fields: " + a.field().name() + " vs " +
                         b.field().name());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw mismatch_error("similarity requires equal shapes");
  return invariant_factors(a) == invariant_factors(b);
}

FieldMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::int64_t p = -1;
  int rows = 0, cols = 0;
  if (!(in >> p >> rows >> cols)) throw parse_error("expected header \"p n_rows n_cols\"", 0);
  if (p < 0) throw parse_error("characteristic must be 0 or a prime", 0);
  if (rows < 1 || cols < 1) throw parse_error("matrix dimensions must be positive", 0);
  if (static_cast<std::int64_t>(rows) * cols > 1'000'000)
    throw limit_error("matrix larger than 10^6 entries");
  FieldMatrix m(FieldSpec(p), rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      std::string token;
      if (!(in >> token))
        throw parse_error("missing entry at row " + std::to_string(i + 1) + ", column " +
                              std::to_string(j + 1),
                          0);
      m.set_text(i, j, token);
    }
  }
  std::string extra;
  if (in >> extra) throw parse_error("trailing tokens after matrix entries", 0);
  return m;
}

std::string to_text(const FieldMatrix& a) {
  std::string out = std::to_string(a.field().characteristic()) + " " + std::to_string(a.rows()) +
                    " " + std::to_string(a.cols()) + "\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ' ';
      out += a.entry_text(i, j);
    }
    out += '\n';
  }
  return out;
}

}  // namespace permsim
