#ifndef PERMSIM_CHARACTERS_HPP
#define PERMSIM_CHARACTERS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permsim/cycle_type.hpp"
#include "permsim/numeric.hpp"

namespace permsim {

// The permutation actions under study: S_n on ordered k-tuples of distinct
// points, on k-subsets, on the whole power set, and on its even/odd halves.
// "natural" is the action on points, i.e. tuples of length 1.
enum class RepKind { natural, tuples, subsets, power_set, even_subsets, odd_subsets };

class RepresentationSpec {
 public:
  static RepresentationSpec natural(int n);
  static RepresentationSpec tuples(int k, int n);
  static RepresentationSpec subsets(int k, int n);
  static RepresentationSpec power_set(int n);
  static RepresentationSpec even_subsets(int n);
  static RepresentationSpec odd_subsets(int n);

  RepKind kind() const { return kind_; }
  int k() const;  // tuples/subsets only
  int degree() const { return n_; }
  std::string to_string() const;

  bool operator==(const RepresentationSpec&) const = default;

 private:
  RepresentationSpec(RepKind kind, int k, int n);

  RepKind kind_;
  int k_;
  int n_;
};

// "natural", "tuples:K", "subsets:K", "powerset", "even-subsets", "odd-subsets".
RepresentationSpec parse_rep_spec(std::string_view text, int n);

// Coefficient k counts the k-subsets fixed by a permutation of the given
// type; the polynomial is the product over cycle lengths d of (1 + t^d)^c_d.
struct SubsetGenFn {
  std::vector<BigInt> coefficients;  // length n + 1

  BigInt eval(std::int64_t t) const;
  bool operator==(const SubsetGenFn&) const = default;
};

// Ordered k-tuples of distinct fixed points: fix * (fix-1) * ... * (fix-k+1).
BigInt tuple_char(const CycleType& ct, int k);

SubsetGenFn subset_gen_fn(const CycleType& ct);

// Fixed k-subsets; coefficient k of the generating function.
BigInt subset_char(const CycleType& ct, int k);

// Fixed subsets of any size: 2^m for m cycles. The even/odd halves split
// evenly when some cycle has odd length; otherwise no odd-sized subset is
// fixed at all.
BigInt powerset_char(const CycleType& ct);
BigInt even_subsets_char(const CycleType& ct);
BigInt odd_subsets_char(const CycleType& ct);

BigInt rep_char(const RepresentationSpec& spec, const CycleType& ct);

// Size of the set the representation acts on, as a checked 64-bit count.
// Throws limit_error when it exceeds the given bound.
std::int64_t action_set_size(const RepresentationSpec& spec, std::int64_t limit);

}  // namespace permsim

#endif
