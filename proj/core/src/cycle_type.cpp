#include "permsim/cycle_type.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "permsim/errors.hpp"
#include "permsim/numeric.hpp"

namespace permsim {

CycleType::CycleType(int n, std::vector<std::int64_t> counts_by_length)
    : n_(n), counts_(std::move(counts_by_length)) {
  if (n < 1) throw error("cycle type degree must be positive");
  counts_.resize(static_cast<std::size_t>(n) + 1, 0);
  counts_[0] = 0;
  std::int64_t total = 0;
  for (int d = 1; d <= n; ++d) {
    std::int64_t c = counts_[static_cast<std::size_t>(d)];
    if (c < 0) throw error("negative cycle count for length " + std::to_string(d));
    total += static_cast<std::int64_t>(d) * c;
  }
  if (total != n)
    throw error("cycle lengths sum to " + std::to_string(total) + ", expected " +
                std::to_string(n));
}

CycleType CycleType::from_parts(int n, const std::vector<int>& parts) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (int part : parts) {
    if (part < 1 || part > n)
      throw error("part " + std::to_string(part) + " out of range 1.." + std::to_string(n));
    ++counts[static_cast<std::size_t>(part)];
  }
  return CycleType(n, std::move(counts));
}

std::int64_t CycleType::count(int d) const {
  if (d < 1) throw error("cycle length must be positive");
  if (d > n_) return 0;
  return counts_[static_cast<std::size_t>(d)];
}

std::int64_t CycleType::num_cycles() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

std::int64_t CycleType::count_divisible(int d) const {
  if (d < 1) throw error("cycle length must be positive");
  std::int64_t m = 0;
  for (int len = d; len <= n_; len += d) m += counts_[static_cast<std::size_t>(len)];
  return m;
}

std::int64_t CycleType::order() const {
  std::int64_t m = 1;
  for (int d = 1; d <= n_; ++d) {
    if (counts_[static_cast<std::size_t>(d)] > 0) m = checked_lcm(m, d);
  }
  return m;
}

bool CycleType::has_odd_cycle() const {
  for (int d = 1; d <= n_; d += 2) {
    if (counts_[static_cast<std::size_t>(d)] > 0) return true;
  }
  return false;
}

std::vector<int> CycleType::parts() const {
  std::vector<int> out;
  for (int d = n_; d >= 1; --d) {
    for (std::int64_t i = 0; i < counts_[static_cast<std::size_t>(d)]; ++i) out.push_back(d);
  }
  return out;
}

CycleType cycle_type(const Permutation& p) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p.degree()) + 1, 0);
  for (int len : p.orbit_sizes()) ++counts[static_cast<std::size_t>(len)];
  return CycleType(p.degree(), std::move(counts));
}

CycleType power_cycle_type(const CycleType& ct, std::int64_t k) {
  if (k < 1) throw error("power_cycle_type requires k >= 1");
  int n = ct.degree();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (int len = 1; len <= n; ++len) {
    std::int64_t c = ct.count(len);
    if (c == 0) continue;
    std::int64_t g = std::gcd(static_cast<std::int64_t>(len), k);
    counts[static_cast<std::size_t>(len / g)] += c * g;
  }
  return CycleType(n, std::move(counts));
}

bool is_conjugate(const CycleType& a, const CycleType& b) {
  if (a.degree() != b.degree())
    throw mismatch_error("cycle type degree mismatch: " + std::to_string(a.degree()) +
                         " vs " + std::to_string(b.degree()));
  return a == b;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& acc,
                     std::vector<CycleType>& out, int n) {
  if (remaining == 0) {
    out.push_back(CycleType::from_parts(n, acc));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    emit_partitions(remaining - part, part, acc, out, n);
    acc.pop_back();
  }
}

}  // namespace

std::vector<CycleType> enumerate_cycle_types(int n) {
  if (n < 1) throw error("degree must be positive");
  std::vector<CycleType> out;
  std::vector<int> acc;
  emit_partitions(n, n, acc, out, n);
  return out;
}

std::string to_bracket(const CycleType& ct) {
  std::string out = "[";
  bool first = true;
  for (int d = 1; d <= ct.degree(); ++d) {
    std::int64_t c = ct.count(d);
    if (c == 0) continue;
    if (!first) out += ',';
    first = false;
    out += std::to_string(d);
    if (c > 1) {
      out += '^';
      out += std::to_string(c);
    }
  }
  out += ']';
  return out;
}

CycleType parse_cycle_type(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> std::int64_t {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected a number", pos);
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (std::int64_t{1} << 40)) throw parse_error("number too large", start);
      ++pos;
    }
    return v;
  };

  skip_ws();
  bool bracketed = pos < text.size() && text[pos] == '[';
  if (bracketed) ++pos;

  std::vector<std::pair<std::int64_t, std::int64_t>> entries;  // (length, count)
  skip_ws();
  while (pos < text.size() && text[pos] != ']') {
    std::int64_t len = read_int();
    std::int64_t cnt = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      cnt = read_int();
    }
    if (len < 1) throw parse_error("cycle length must be positive", pos);
    if (cnt < 1) throw parse_error("multiplicity must be positive", pos);
    entries.emplace_back(len, cnt);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_ws();
    } else {
      break;
    }
  }
  skip_ws();
  if (bracketed) {
    if (pos >= text.size() || text[pos] != ']') throw parse_error("expected ']'", pos);
    ++pos;
    skip_ws();
  }
  if (pos != text.size()) throw parse_error("trailing characters", pos);
  if (entries.empty()) throw parse_error("empty cycle type", 0);

  std::int64_t n = 0;
  for (auto [len, cnt] : entries) {
    n += len * cnt;
    if (n > (std::int64_t{1} << 30)) throw parse_error("degree too large", 0);
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (auto [len, cnt] : entries) counts[static_cast<std::size_t>(len)] += cnt;
  return CycleType(static_cast<int>(n), std::move(counts));
}

Permutation canonical_representative(const CycleType& ct) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : ct.parts()) {
    std::vector<int> cyc(static_cast<std::size_t>(len));
    std::iota(cyc.begin(), cyc.end(), next);
    next += len;
    if (len > 1) cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(ct.degree(), cycles);
}

}  // namespace permsim
