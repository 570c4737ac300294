#ifndef PERMSIM_POLY_HPP
#define PERMSIM_POLY_HPP

#include <utility>
#include <vector>

#include "permsim/errors.hpp"

namespace permsim {

// Univariate polynomial over the field described by Ops.
// Coefficients are stored dense and ascending; the zero polynomial is empty,
// so degree() is -1 for zero and coeffs().back() is always nonzero otherwise.
template <class Ops>
class Poly {
 public:
  using Elem = typename Ops::Elem;

  explicit Poly(Ops ops) : ops_(ops) {}

  Poly(Ops ops, std::vector<Elem> ascending_coeffs)
      : ops_(ops), coeffs_(std::move(ascending_coeffs)) {
    normalize();
  }

  static Poly constant(Ops ops, Elem c) { return Poly(ops, {std::move(c)}); }

  static Poly monomial(Ops ops, int degree, Elem c) {
    if (degree < 0) throw error("monomial degree must be nonnegative");
    std::vector<Elem> coeffs(static_cast<std::size_t>(degree) + 1, ops.zero());
    coeffs.back() = std::move(c);
    return Poly(ops, std::move(coeffs));
  }

  const Ops& ops() const { return ops_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  Elem coeff(int i) const {
    if (i < 0 || i > degree()) return ops_.zero();
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const Elem& leading() const {
    if (is_zero()) throw error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

  Poly add(const Poly& other) const {
    std::vector<Elem> out(std::max(coeffs_.size(), other.coeffs_.size()), ops_.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
      Elem a = i < coeffs_.size() ? coeffs_[i] : ops_.zero();
      Elem b = i < other.coeffs_.size() ? other.coeffs_[i] : ops_.zero();
      out[i] = ops_.add(a, b);
    }
    return Poly(ops_, std::move(out));
  }

  Poly sub(const Poly& other) const {
    std::vector<Elem> out(std::max(coeffs_.size(), other.coeffs_.size()), ops_.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
      Elem a = i < coeffs_.size() ? coeffs_[i] : ops_.zero();
      Elem b = i < other.coeffs_.size() ? other.coeffs_[i] : ops_.zero();
      out[i] = ops_.sub(a, b);
    }
    return Poly(ops_, std::move(out));
  }

  Poly mul(const Poly& other) const {
    if (is_zero() || other.is_zero()) return Poly(ops_);
    std::vector<Elem> out(coeffs_.size() + other.coeffs_.size() - 1, ops_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (ops_.is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
        out[i + j] = ops_.add(out[i + j], ops_.mul(coeffs_[i], other.coeffs_[j]));
    }
    return Poly(ops_, std::move(out));
  }

  std::pair<Poly, Poly> divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw error("polynomial division by zero");
    Poly remainder = *this;
    if (degree() < divisor.degree()) return {Poly(ops_), std::move(remainder)};
    std::vector<Elem> q(static_cast<std::size_t>(degree() - divisor.degree()) + 1, ops_.zero());
    Elem lead_inv = ops_.inv(divisor.leading());
    while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
      int shift = remainder.degree() - divisor.degree();
      Elem factor = ops_.mul(remainder.leading(), lead_inv);
      q[static_cast<std::size_t>(shift)] = factor;
      remainder = remainder.sub(Poly::monomial(ops_, shift, factor).mul(divisor));
    }
    return {Poly(ops_, std::move(q)), std::move(remainder)};
  }

  Poly monic() const {
    if (is_zero()) throw error("zero polynomial cannot be made monic");
    Elem scale = ops_.inv(leading());
    std::vector<Elem> out = coeffs_;
    for (Elem& c : out) c = ops_.mul(c, scale);
    return Poly(ops_, std::move(out));
  }

  Elem eval(const Elem& x) const {
    Elem acc = ops_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = ops_.add(ops_.mul(acc, x), *it);
    return acc;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && ops_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  Ops ops_;
  std::vector<Elem> coeffs_;
};

// True iff a divides b (remainder of b by a is zero); a must be nonzero.
template <class Ops>
bool divides(const Poly<Ops>& a, const Poly<Ops>& b) {
  if (b.is_zero()) return true;
  return b.divmod(a).second.is_zero();
}

}  // namespace permsim

#endif
