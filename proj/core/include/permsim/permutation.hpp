#ifndef PERMSIM_PERMUTATION_HPP
#define PERMSIM_PERMUTATION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace permsim {

// A bijection of {1..n}. Immutable after construction; points are 1-based
// in the public interface and in all text formats.
class Permutation {
public:
  static Permutation identity(int n);

  // `images` in one-line form: images[i-1] is the image of point i.
  static Permutation from_one_line(const std::vector<int>& images);

  // Disjoint 1-based cycles; omitted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }

  // Image of point i, 1 <= i <= n.
  int image(int i) const { return images_[i - 1] + 1; }

  // Composition (p * q)(x) = p(q(x)).
  Permutation operator*(const Permutation& rhs) const;

  Permutation inverse() const;

  // k-fold composition, k >= 0, by repeated squaring.
  Permutation power(std::int64_t k) const;

  bool is_identity() const;

  // Cycles of length >= 2, each starting at its smallest point, ordered by
  // that point.
  std::vector<std::vector<int>> cycles() const;

  // Orbit sizes including fixed points, unsorted.
  std::vector<int> orbit_sizes() const;

  bool operator==(const Permutation& rhs) const = default;

private:
  explicit Permutation(std::vector<int> zero_based) : images_(std::move(zero_based)) {}

  std::vector<int> images_;  // 0-based internally
};

// Accepts one-line notation ("2 1 4 3") or cycle notation ("(1 2)(3 4)",
// commas also allowed). Throws parse_error with the offending position.
Permutation parse_permutation(std::string_view text, int n);

std::string to_one_line(const Permutation& p);

// "(1 2)(3 4)"; fixed points omitted, identity rendered as "()".
std::string to_cycle_string(const Permutation& p);

}  // namespace permsim

#endif
