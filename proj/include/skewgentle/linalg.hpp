#pragma once

#include <cassert>
#include <vector>

#include <Eigen/Core>

#include "skewgentle/field.hpp"

namespace skewgentle {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

template <class S>
Matrix<S> zero_matrix(Index rows, Index cols) {
  return Matrix<S>::Zero(rows, cols);
}

template <class S>
bool is_zero_matrix(const Matrix<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
bool is_zero_vector(const Vector<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

/// Reduced row echelon form over an exact field.
template <class S>
struct RowEchelon {
  Matrix<S> reduced;           // rows [0, rank) are the nonzero rows
  std::vector<Index> pivots;   // pivot column of each nonzero row

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class S>
RowEchelon<S> row_echelon(Matrix<S> m) {
  RowEchelon<S> out;
  Index row = 0;
  const Index rows = m.rows(), cols = m.cols();
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index pivot = -1;
    for (Index r = row; r < rows; ++r)
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = inverse(m(row, col));
    for (Index c = col; c < cols; ++c) m(row, c) *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (Index c = col; c < cols; ++c)
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class S>
Index rank(const Matrix<S>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) return row_echelon<S>(m.transpose()).rank();
  return row_echelon<S>(m).rank();
}

/// Null space basis as columns. Column k has a 1 at the k-th free coordinate and
/// 0 at every other free coordinate, so coordinates of a kernel vector are read
/// off at the free positions (see `free_columns`).
template <class S>
struct Kernel {
  Matrix<S> basis;
  std::vector<Index> free_columns;

  Index dim() const { return basis.cols(); }
  Vector<S> coordinates(const Vector<S>& v) const {
    Vector<S> c(static_cast<Index>(free_columns.size()));
    for (std::size_t k = 0; k < free_columns.size(); ++k) c(static_cast<Index>(k)) = v(free_columns[k]);
    return c;
  }
};

template <class S>
Kernel<S> kernel(const Matrix<S>& m) {
  const Index n = m.cols();
  Kernel<S> out;
  RowEchelon<S> ech = row_echelon<S>(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) out.free_columns.push_back(c);
  out.basis = Matrix<S>::Zero(n, static_cast<Index>(out.free_columns.size()));
  for (std::size_t k = 0; k < out.free_columns.size(); ++k) {
    const Index f = out.free_columns[k];
    out.basis(f, static_cast<Index>(k)) = S(1);
    for (Index r = 0; r < ech.rank(); ++r)
      out.basis(ech.pivots[static_cast<std::size_t>(r)], static_cast<Index>(k)) = -ech.reduced(r, f);
  }
  return out;
}

/// Subspace of S^n with a canonical basis: the transposed nonzero rows of the
/// reduced row echelon form of any spanning set. Coordinates of a member are
/// its entries at the pivot positions.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(Matrix<S>::Zero(ambient, 0)) {}

  /// Column span of `spanning`.
  static Subspace span(const Matrix<S>& spanning) {
    Subspace s(spanning.rows());
    if (spanning.cols() == 0 || spanning.rows() == 0) return s;
    RowEchelon<S> ech = row_echelon<S>(spanning.transpose());
    s.pivots_ = ech.pivots;
    s.basis_ = ech.reduced.topRows(ech.rank()).transpose();
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  Vector<S> coordinates(const Vector<S>& v) const {
    Vector<S> c(dim());
    for (Index k = 0; k < dim(); ++k) c(k) = v(pivots_[static_cast<std::size_t>(k)]);
    return c;
  }

  /// v minus its projection along the pivot coordinates; zero iff v is a member.
  Vector<S> residue(const Vector<S>& v) const {
    Vector<S> r = v;
    for (Index k = 0; k < dim(); ++k) {
      const S c = r(pivots_[static_cast<std::size_t>(k)]);
      if (!is_zero(c)) r -= c * basis_.col(k);
    }
    return r;
  }

  bool contains(const Vector<S>& v) const { return is_zero_vector<S>(residue(v)); }

  bool contains(const Subspace& other) const {
    for (Index k = 0; k < other.dim(); ++k)
      if (!contains(Vector<S>(other.basis().col(k)))) return false;
    return true;
  }

  Subspace sum(const Subspace& other) const {
    Matrix<S> both(ambient_, dim() + other.dim());
    both << basis_, other.basis_;
    return span(both);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && a.contains(b);
  }

 private:
  Index ambient_ = 0;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

/// Indices of coordinate vectors completing the span of `spanning` to the full space.
template <class S>
std::vector<Index> complement_coordinates(const Matrix<S>& spanning, Index ambient) {
  std::vector<char> is_pivot(static_cast<std::size_t>(ambient), 0);
  if (spanning.cols() > 0 && ambient > 0) {
    RowEchelon<S> ech = row_echelon<S>(spanning.transpose());
    for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<Index> out;
  for (Index i = 0; i < ambient; ++i)
    if (!is_pivot[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace skewgentle
