#include "permsim/field.hpp"

#include <cctype>

#include "permsim/errors.hpp"

namespace permsim {

FieldSpec::FieldSpec(std::int64_t characteristic) : char_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw error("field characteristic must be 0 or prime, got " +
                std::to_string(characteristic));
}

FieldSpec FieldSpec::gf(std::int64_t p) {
  if (p == 0) throw error("GF(p) needs a prime, got 0");
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return char_ == 0 ? "Q" : "GF(" + std::to_string(char_) + ")";
}

FieldSpec parse_field(std::string_view text) {
  if (text == "Q" || text == "q" || text == "0") return FieldSpec::rationals();
  std::int64_t p = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error("field must be Q, 0, or a prime", 0);
    p = p * 10 + (c - '0');
    if (p > (std::int64_t{1} << 40)) throw parse_error("characteristic too large", 0);
  }
  if (text.empty()) throw parse_error("empty field name", 0);
  return FieldSpec(p);
}

GfOps::Elem GfOps::mul(Elem a, Elem b) const {
  return static_cast<Elem>(static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
                           static_cast<unsigned __int128>(p));
}

GfOps::Elem GfOps::inv(Elem a) const {
  if (a == 0) throw error("division by zero in GF(" + std::to_string(p) + ")");
  // Fermat: a^(p-2), p prime.
  Elem result = 1;
  Elem base = a;
  std::int64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

GfOps::Elem GfOps::from_int(std::int64_t v) const {
  Elem r = v % p;
  return r < 0 ? r + p : r;
}

GfOps::Elem GfOps::from_string(std::string_view text) const {
  bool negative = false;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size()) throw parse_error("expected an integer", pos);
  BigInt v = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected an integer", pos);
    v = v * 10 + (text[pos] - '0');
  }
  BigInt r = v % p;
  Elem e = r.convert_to<Elem>();
  return negative ? neg(e) : e;
}

RatOps::Elem RatOps::inv(const Elem& a) const {
  if (a == 0) throw error("division by zero in Q");
  return 1 / a;
}

RatOps::Elem RatOps::from_string(std::string_view text) const {
  auto slash = text.find('/');
  auto parse_int = [](std::string_view part) -> BigInt {
    bool negative = false;
    std::size_t pos = 0;
    if (pos < part.size() && (part[pos] == '-' || part[pos] == '+')) {
      negative = part[pos] == '-';
      ++pos;
    }
    if (pos >= part.size()) throw parse_error("expected an integer", pos);
    BigInt v = 0;
    for (; pos < part.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(part[pos])))
        throw parse_error("expected an integer", pos);
      v = v * 10 + (part[pos] - '0');
    }
    return negative ? BigInt(-v) : v;
  };
  BigInt num = parse_int(text.substr(0, slash));
  if (slash == std::string_view::npos) return BigRat(num);
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator", slash + 1);
  return BigRat(num, den);
}

std::string RatOps::to_string(const Elem& a) const { return a.str(); }

}  // namespace permsim
