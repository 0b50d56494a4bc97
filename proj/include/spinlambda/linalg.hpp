#pragma once

// Small dense exact linear algebra over Rat: weights (coordinate vectors),
// matrices, and Gaussian elimination. Everything is rank <= ~8 in practice,
// so plain O(n^3) elimination with exact arithmetic is the right tool.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace spinlambda {

/// A rational coordinate vector in the ambient space.
struct Weight {
  std::vector<Rat> c;

  Weight() = default;
  explicit Weight(std::size_t n) : c(n) {}
  Weight(std::initializer_list<Rat> xs) : c(xs) {}
  explicit Weight(std::vector<Rat> xs) : c(std::move(xs)) {}

  std::size_t size() const { return c.size(); }
  Rat& operator[](std::size_t i) { return c[i]; }
  const Rat& operator[](std::size_t i) const { return c[i]; }

  bool operator==(const Weight& o) const { return c == o.c; }

  bool is_zero() const {
    for (const Rat& x : c)
      if (x != 0) return false;
    return true;
  }

  Weight operator+(const Weight& o) const {
    check_same_dim(o);
    Weight r(size());
    for (std::size_t i = 0; i < size(); ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }

  Weight operator-(const Weight& o) const {
    check_same_dim(o);
    Weight r(size());
    for (std::size_t i = 0; i < size(); ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }

  Weight operator-() const {
    Weight r(size());
    for (std::size_t i = 0; i < size(); ++i) r.c[i] = -c[i];
    return r;
  }

 private:
  void check_same_dim(const Weight& o) const {
    if (size() != o.size())
      throw std::invalid_argument("weight dimension mismatch");
  }
};

inline Weight operator*(const Rat& s, const Weight& v) {
  Weight r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r.c[i] = s * v.c[i];
  return r;
}

inline bool lex_less(const Weight& a, const Weight& b) {
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int s = cmp(a.c[i], b.c[i]);
    if (s != 0) return s < 0;
  }
  return a.size() < b.size();
}

inline std::string to_string(const Weight& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v.c[i]);
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Weight& v) {
  return os << to_string(v);
}

/// Row-major rational matrix.
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  Mat operator*(const Mat& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
    Mat r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        const Rat& x = at(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  Weight apply(const Weight& v) const {
    if (cols != v.size()) throw std::invalid_argument("matrix/weight shape mismatch");
    Weight r(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      Rat sum = 0;
      for (std::size_t j = 0; j < cols; ++j) sum += at(i, j) * v[j];
      r[i] = sum;
    }
    return r;
  }

  Mat transposed() const {
    Mat r(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }
};

inline bool lex_less(const Mat& a, const Mat& b) {
  if (a.rows != b.rows) return a.rows < b.rows;
  if (a.cols != b.cols) return a.cols < b.cols;
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    const int s = cmp(a.a[i], b.a[i]);
    if (s != 0) return s < 0;
  }
  return false;
}

inline std::ostream& operator<<(std::ostream& os, const Mat& m) {
  for (std::size_t i = 0; i < m.rows; ++i) {
    os << (i ? "\n[" : "[");
    for (std::size_t j = 0; j < m.cols; ++j)
      os << (j ? " " : "") << to_string(m.at(i, j));
    os << "]";
  }
  return os;
}

/// In-place reduced row echelon form. Returns the pivot column of each
/// pivot row, in order.
inline std::vector<std::size_t> rref_in_place(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pr = row;
    while (pr < m.rows && m.at(pr, col) == 0) ++pr;
    if (pr == m.rows) continue;
    if (pr != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    const Rat inv = Rat(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rat f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Mat m) { return rref_in_place(m).size(); }

inline Rat det(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  Rat d = 1;
  for (std::size_t col = 0; col < m.cols; ++col) {
    std::size_t pr = col;
    while (pr < m.rows && m.at(pr, col) == 0) ++pr;
    if (pr == m.rows) return Rat(0);
    if (pr != col) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    const Rat inv = Rat(1) / m.at(col, col);
    for (std::size_t i = col + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rat f = m.at(i, col) * inv;
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

inline std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  const std::size_t n = m.rows;
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() != n) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

/// One exact solution of A x = b, or nullopt if the system is inconsistent.
/// Free variables (if any) are set to zero.
inline std::optional<std::vector<Rat>> solve(const Mat& A, const std::vector<Rat>& b) {
  if (A.rows != b.size()) throw std::invalid_argument("solve: shape mismatch");
  Mat aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  const auto pivots = rref_in_place(aug);
  for (std::size_t p : pivots)
    if (p == A.cols) return std::nullopt;  // pivot in the constant column
  std::vector<Rat> x(A.cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, A.cols);
  return x;
}

/// Basis of the kernel {x : A x = 0}.
inline std::vector<Weight> nullspace(const Mat& A) {
  Mat m = A;
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(A.cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Weight> basis;
  for (std::size_t free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    Weight v(A.cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Matrix whose columns are the given weights.
inline Mat columns(const std::vector<Weight>& vecs, std::size_t dim) {
  Mat m(dim, vecs.size());
  for (std::size_t j = 0; j < vecs.size(); ++j) {
    if (vecs[j].size() != dim) throw std::invalid_argument("columns: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = vecs[j][i];
  }
  return m;
}

inline bool linearly_independent(const std::vector<Weight>& vecs, std::size_t dim) {
  if (vecs.empty()) return true;
  return rank(columns(vecs, dim)) == vecs.size();
}

}  // namespace spinlambda
