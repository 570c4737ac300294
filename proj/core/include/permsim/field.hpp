#ifndef PERMSIM_FIELD_HPP
#define PERMSIM_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "permsim/numeric.hpp"

namespace permsim {

// GF(p) for prime p, or the rationals (characteristic 0). No other fields.
class FieldSpec {
 public:
  explicit FieldSpec(std::int64_t characteristic);

  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec gf(std::int64_t p);  // finite only: rejects 0

  std::int64_t characteristic() const { return char_; }
  bool is_prime_field() const { return char_ != 0; }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  std::int64_t char_;
};

// Accepts "Q", "q", "0", or a prime written in decimal.
FieldSpec parse_field(std::string_view text);

// Arithmetic contexts plugged into Mat<Ops> and Poly<Ops>.
// GF(p) elements are canonical residues in [0, p).
struct GfOps {
  using Elem = std::int64_t;
  std::int64_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem from_int(std::int64_t v) const;
  Elem from_string(std::string_view text) const;
  std::string to_string(Elem a) const { return std::to_string(a); }
};

// Exact rationals, always in lowest terms (the representation normalizes).
struct RatOps {
  using Elem = BigRat;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem from_int(std::int64_t v) const { return v; }
  Elem from_string(std::string_view text) const;
  std::string to_string(const Elem& a) const;
};

}  // namespace permsim

#endif
