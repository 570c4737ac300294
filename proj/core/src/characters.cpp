#include "permsim/characters.hpp"

#include <cctype>

#include "permsim/errors.hpp"

namespace permsim {

RepresentationSpec::RepresentationSpec(RepKind kind, int k, int n) : kind_(kind), k_(k), n_(n) {
  if (n < 1) throw error("representation degree must be positive");
  if (kind == RepKind::tuples || kind == RepKind::subsets) {
    if (k < 1 || k > n)
      throw error("k = " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  }
}

RepresentationSpec RepresentationSpec::natural(int n) {
  return RepresentationSpec(RepKind::natural, 1, n);
}
RepresentationSpec RepresentationSpec::tuples(int k, int n) {
  return RepresentationSpec(RepKind::tuples, k, n);
}
RepresentationSpec RepresentationSpec::subsets(int k, int n) {
  return RepresentationSpec(RepKind::subsets, k, n);
}
RepresentationSpec RepresentationSpec::power_set(int n) {
  return RepresentationSpec(RepKind::power_set, 0, n);
}
RepresentationSpec RepresentationSpec::even_subsets(int n) {
  return RepresentationSpec(RepKind::even_subsets, 0, n);
}
RepresentationSpec RepresentationSpec::odd_subsets(int n) {
  return RepresentationSpec(RepKind::odd_subsets, 0, n);
}

int RepresentationSpec::k() const {
  if (kind_ != RepKind::tuples && kind_ != RepKind::subsets)
    throw error("representation " + to_string() + " has no tuple/subset size");
  return k_;
}

std::string RepresentationSpec::to_string() const {
  switch (kind_) {
    case RepKind::natural: return "natural";
    case RepKind::tuples: return "tuples:" + std::to_string(k_);
    case RepKind::subsets: return "subsets:" + std::to_string(k_);
    case RepKind::power_set: return "powerset";
    case RepKind::even_subsets: return "even-subsets";
    case RepKind::odd_subsets: return "odd-subsets";
  }
  throw error("unreachable representation kind");
}

RepresentationSpec parse_rep_spec(std::string_view text, int n) {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  if (head == "natural") {
    if (colon != std::string_view::npos) throw parse_error("natural takes no parameter", colon);
    return RepresentationSpec::natural(n);
  }
  if (head == "powerset" || head == "even-subsets" || head == "odd-subsets") {
    if (colon != std::string_view::npos)
      throw parse_error(std::string(head) + " takes no parameter", colon);
    if (head == "powerset") return RepresentationSpec::power_set(n);
    if (head == "even-subsets") return RepresentationSpec::even_subsets(n);
    return RepresentationSpec::odd_subsets(n);
  }
  if (head == "tuples" || head == "subsets") {
    if (colon == std::string_view::npos)
      throw parse_error(std::string(head) + " needs :K", text.size());
    std::string_view rest = text.substr(colon + 1);
    if (rest.empty()) throw parse_error("missing K", colon + 1);
    int k = 0;
    for (char c : rest) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw parse_error("K must be a positive integer", colon + 1);
      k = k * 10 + (c - '0');
      if (k > 1'000'000) throw parse_error("K too large", colon + 1);
    }
    return head == "tuples" ? RepresentationSpec::tuples(k, n)
                            : RepresentationSpec::subsets(k, n);
  }
  throw parse_error("unknown representation (want natural, tuples:K, subsets:K, powerset, "
                    "even-subsets, odd-subsets)",
                    0);
}

BigInt SubsetGenFn::eval(std::int64_t t) const {
  BigInt acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

BigInt tuple_char(const CycleType& ct, int k) {
  if (k < 1 || k > ct.degree())
    throw error("k = " + std::to_string(k) + " out of range 1.." + std::to_string(ct.degree()));
  std::int64_t fix = ct.fixed_points();
  if (fix < k) return 0;
  BigInt result = 1;
  for (int i = 0; i < k; ++i) result *= fix - i;
  return result;
}

SubsetGenFn subset_gen_fn(const CycleType& ct) {
  int n = ct.degree();
  std::vector<BigInt> coeffs{1};
  coeffs.reserve(static_cast<std::size_t>(n) + 1);
  for (int d = 1; d <= n; ++d) {
    for (std::int64_t c = 0; c < ct.count(d); ++c) {
      // multiply by (1 + t^d)
      std::vector<BigInt> next(coeffs.size() + static_cast<std::size_t>(d), 0);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i] += coeffs[i];
        next[i + static_cast<std::size_t>(d)] += coeffs[i];
      }
      coeffs = std::move(next);
    }
  }
  coeffs.resize(static_cast<std::size_t>(n) + 1, 0);
  return SubsetGenFn{std::move(coeffs)};
}

BigInt subset_char(const CycleType& ct, int k) {
  if (k < 0 || k > ct.degree())
    throw error("k = " + std::to_string(k) + " out of range 0.." + std::to_string(ct.degree()));
  return subset_gen_fn(ct).coefficients[static_cast<std::size_t>(k)];
}

BigInt powerset_char(const CycleType& ct) { return BigInt(1) << ct.num_cycles(); }

BigInt even_subsets_char(const CycleType& ct) {
  if (ct.has_odd_cycle()) return BigInt(1) << (ct.num_cycles() - 1);
  return BigInt(1) << ct.num_cycles();
}

BigInt odd_subsets_char(const CycleType& ct) {
  if (ct.has_odd_cycle()) return BigInt(1) << (ct.num_cycles() - 1);
  return 0;
}

BigInt rep_char(const RepresentationSpec& spec, const CycleType& ct) {
  if (spec.degree() != ct.degree())
    throw mismatch_error("representation degree " + std::to_string(spec.degree()) +
                         " vs cycle type degree " + std::to_string(ct.degree()));
  switch (spec.kind()) {
    case RepKind::natural: return ct.fixed_points();
    case RepKind::tuples: return tuple_char(ct, spec.k());
    case RepKind::subsets: return subset_char(ct, spec.k());
    case RepKind::power_set: return powerset_char(ct);
    case RepKind::even_subsets: return even_subsets_char(ct);
    case RepKind::odd_subsets: return odd_subsets_char(ct);
  }
  throw error("unreachable representation kind");
}

std::int64_t action_set_size(const RepresentationSpec& spec, std::int64_t limit) {
  int n = spec.degree();
  BigInt size = 0;
  switch (spec.kind()) {
    case RepKind::natural: size = n; break;
    case RepKind::tuples: {
      size = 1;
      for (int i = 0; i < spec.k(); ++i) size *= n - i;
      break;
    }
    case RepKind::subsets: size = binomial(n, spec.k()); break;
    case RepKind::power_set: size = BigInt(1) << n; break;
    case RepKind::even_subsets:
    case RepKind::odd_subsets: size = BigInt(1) << (n - 1); break;
  }
  if (size > limit)
    throw limit_error("action set for " + spec.to_string() + " has " + size.str() +
                      " elements, over the limit of " + std::to_string(limit));
  return size.convert_to<std::int64_t>();
}

}  // namespace permsim
