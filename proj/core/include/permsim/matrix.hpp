#ifndef PERMSIM_MATRIX_HPP
#define PERMSIM_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permsim/errors.hpp"
#include "permsim/permutation.hpp"

namespace permsim {

// Dense matrix over the field described by Ops. Indices are 0-based here;
// the 1-based convention lives at the Permutation boundary only.
template <class Ops>
class Mat {
 public:
  using Elem = typename Ops::Elem;

  Mat(Ops ops, int rows, int cols)
      : ops_(ops),
        rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), ops.zero()) {
    if (rows < 1 || cols < 1) throw error("matrix dimensions must be positive");
  }

  static Mat identity(Ops ops, int n) {
    Mat m(ops, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ops.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ops& ops() const { return ops_; }
  bool is_square() const { return rows_ == cols_; }

  Elem& at(int i, int j) { return data_[index(i, j)]; }
  const Elem& at(int i, int j) const { return data_[index(i, j)]; }

  bool operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  Mat mul(const Mat& other) const {
    if (cols_ != other.rows_) throw mismatch_error("matrix product shape mismatch");
    Mat out(ops_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const Elem& a = at(i, k);
        if (ops_.is_zero(a)) continue;
        for (int j = 0; j < other.cols_; ++j)
          out.at(i, j) = ops_.add(out.at(i, j), ops_.mul(a, other.at(k, j)));
      }
    }
    return out;
  }

  Mat pow(std::int64_t k) const {
    if (!is_square()) throw error("matrix power requires a square matrix");
    if (k < 0) throw error("matrix power requires k >= 0");
    Mat result = identity(ops_, rows_);
    Mat base = *this;
    while (k > 0) {
      if (k & 1) result = result.mul(base);
      base = base.mul(base);
      k >>= 1;
    }
    return result;
  }

  Mat minus_identity() const {
    if (!is_square()) throw error("A - I requires a square matrix");
    Mat out = *this;
    for (int i = 0; i < rows_; ++i) out.at(i, i) = ops_.sub(out.at(i, i), ops_.one());
    return out;
  }

  Elem trace() const {
    if (!is_square()) throw error("trace requires a square matrix");
    Elem t = ops_.zero();
    for (int i = 0; i < rows_; ++i) t = ops_.add(t, at(i, i));
    return t;
  }

  int rank() const {
    Mat work = *this;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
      int pivot = -1;
      for (int i = r; i < rows_; ++i) {
        if (!ops_.is_zero(work.at(i, col))) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) continue;
      work.swap_rows(r, pivot);
      Elem inv_p = ops_.inv(work.at(r, col));
      for (int i = r + 1; i < rows_; ++i) {
        if (ops_.is_zero(work.at(i, col))) continue;
        Elem factor = ops_.mul(work.at(i, col), inv_p);
        for (int j = col; j < cols_; ++j)
          work.at(i, j) = ops_.sub(work.at(i, j), ops_.mul(factor, work.at(r, j)));
      }
      ++r;
    }
    return r;
  }

  std::optional<Mat> inverse() const {
    if (!is_square()) throw error("inverse requires a square matrix");
    Mat work = *this;
    Mat inv = identity(ops_, rows_);
    for (int col = 0; col < cols_; ++col) {
      int pivot = -1;
      for (int i = col; i < rows_; ++i) {
        if (!ops_.is_zero(work.at(i, col))) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return std::nullopt;
      work.swap_rows(col, pivot);
      inv.swap_rows(col, pivot);
      Elem scale = ops_.inv(work.at(col, col));
      for (int j = 0; j < cols_; ++j) {
        work.at(col, j) = ops_.mul(work.at(col, j), scale);
        inv.at(col, j) = ops_.mul(inv.at(col, j), scale);
      }
      for (int i = 0; i < rows_; ++i) {
        if (i == col || ops_.is_zero(work.at(i, col))) continue;
        Elem factor = work.at(i, col);
        for (int j = 0; j < cols_; ++j) {
          work.at(i, j) = ops_.sub(work.at(i, j), ops_.mul(factor, work.at(col, j)));
          inv.at(i, j) = ops_.sub(inv.at(i, j), ops_.mul(factor, inv.at(col, j)));
        }
      }
    }
    return inv;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(r1, j), at(r2, j));
  }

  Ops ops_;
  int rows_;
  int cols_;
  std::vector<Elem> data_;
};

// Entry 1 at (p(j), j): column j carries the image of point j.
template <class Ops>
Mat<Ops> perm_to_matrix(Ops ops, const Permutation& p) {
  Mat<Ops> m(ops, p.degree(), p.degree());
  for (int j = 1; j <= p.degree(); ++j) m.at(p.image(j) - 1, j - 1) = ops.one();
  return m;
}

}  // namespace permsim

#endif
