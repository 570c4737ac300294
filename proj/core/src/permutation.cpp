#include "permsim/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "permsim/errors.hpp"

namespace permsim {

Permutation Permutation::identity(int n) {
  if (n < 1) throw error("permutation degree must be positive");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  if (n < 1) throw error("permutation degree must be positive");
  std::vector<int> img(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int i = 0; i < n; ++i) {
    int v = images[static_cast<std::size_t>(i)];
    if (v < 1 || v > n)
      throw error("image " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v - 1)])
      throw error("duplicate image " + std::to_string(v));
    seen[static_cast<std::size_t>(v - 1)] = true;
    img[static_cast<std::size_t>(i)] = v - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 1) throw error("permutation degree must be positive");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      if (a < 1 || a > n)
        throw error("point " + std::to_string(a) + " out of range 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(a - 1)])
        throw error("point " + std::to_string(a) + " appears twice");
      seen[static_cast<std::size_t>(a - 1)] = true;
      int b = cyc[(i + 1) % cyc.size()];
      img[static_cast<std::size_t>(a - 1)] = b - 1;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw mismatch_error("permutation degree mismatch");
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    img[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    img[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::power(std::int64_t k) const {
  if (k < 0) throw error("permutation power must be nonnegative");
  Permutation result = identity(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    std::vector<int> cyc;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      cyc.push_back(static_cast<int>(i) + 1);
      i = static_cast<std::size_t>(images_[i]);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::orbit_sizes() const {
  std::vector<int> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      ++len;
      i = static_cast<std::size_t>(images_[i]);
    }
    out.push_back(len);
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }

  int read_point(int n) {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected a point", pos);
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > n) throw parse_error("point out of range 1.." + std::to_string(n), start);
      ++pos;
    }
    if (v < 1) throw parse_error("points are 1-based", start);
    return static_cast<int>(v);
  }
};

Permutation parse_cycle_notation(std::string_view text, int n) {
  Cursor c{text};
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  while (!c.done()) {
    if (c.peek() != '(') throw parse_error("expected '('", c.pos);
    ++c.pos;
    std::vector<int> cyc;
    for (;;) {
      c.skip_ws();
      if (c.pos >= c.text.size()) throw parse_error("unterminated cycle", c.text.size() - 1);
      if (c.peek() == ')') {
        ++c.pos;
        break;
      }
      if (c.peek() == ',') {
        if (cyc.empty()) throw parse_error("expected a point", c.pos);
        ++c.pos;
        c.skip_ws();
      }
      std::size_t at = c.pos;
      int a = c.read_point(n);
      if (seen[static_cast<std::size_t>(a - 1)])
        throw parse_error("point " + std::to_string(a) + " appears twice", at);
      seen[static_cast<std::size_t>(a - 1)] = true;
      cyc.push_back(a);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(n, cycles);
}

Permutation parse_one_line(std::string_view text, int n) {
  Cursor c{text};
  std::vector<int> images;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  while (!c.done()) {
    std::size_t at = c.pos;
    int v = c.read_point(n);
    if (seen[static_cast<std::size_t>(v - 1)])
      throw parse_error("image " + std::to_string(v) + " appears twice", at);
    seen[static_cast<std::size_t>(v - 1)] = true;
    images.push_back(v);
    if (static_cast<int>(images.size()) > n)
      throw parse_error("more than " + std::to_string(n) + " images", at);
  }
  if (static_cast<int>(images.size()) != n)
    throw parse_error("expected " + std::to_string(n) + " images, got " +
                          std::to_string(images.size()),
                      text.size() == 0 ? 0 : text.size() - 1);
  return Permutation::from_one_line(images);
}

}  // namespace

Permutation parse_permutation(std::string_view text, int n) {
  if (n < 1) throw error("permutation degree must be positive");
  Cursor c{text};
  if (c.done()) throw parse_error("empty permutation", 0);
  if (c.peek() == '(') return parse_cycle_notation(text, n);
  return parse_one_line(text, n);
}

std::string to_one_line(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p.image(i));
  }
  return out;
}

std::string to_cycle_string(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace permsim
