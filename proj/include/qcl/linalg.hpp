#pragma once

#include "qcl/scalar.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qcl {

inline std::size_t complexity(const Scalar& x) {
  return x.a().num().size() + x.a().den().size() + x.b().num().size() + x.b().den().size();
}

inline std::size_t complexity(const QuadRational& x) {
  return mpz_sizeinbase(x.a().get_num_mpz_t(), 2) + mpz_sizeinbase(x.a().get_den_mpz_t(), 2) +
         (x.b() == 0 ? 0 : mpz_sizeinbase(x.b().get_num_mpz_t(), 2) + mpz_sizeinbase(x.b().get_den_mpz_t(), 2));
}

template <class F, class K>
using SparseVec = std::map<K, F>;

template <class F, class K>
void axpy(SparseVec<F, K>& y, const F& a, const SparseVec<F, K>& x) {
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

/// Incrementally built span of sparse vectors, kept in reduced echelon form.
/// Each stored row remembers how it combines the vectors accepted so far, so
/// membership queries can return coordinates in terms of those vectors.
template <class F, class K>
class SpanBuilder {
 public:
  std::size_t dim() const { return rows_.size(); }

  /// Adds v; returns true if it enlarged the span.
  bool add(const SparseVec<F, K>& v) {
    SparseVec<F, K> x = v;
    std::vector<F> coord(accepted_ + 1);
    coord[accepted_] = F(1);
    reduce(x, coord);
    if (x.empty()) return false;
    auto piv = x.begin();
    std::size_t best = complexity(piv->second);
    for (auto it = x.begin(); it != x.end(); ++it) {
      const std::size_t cx = complexity(it->second);
      if (cx < best) {
        best = cx;
        piv = it;
      }
    }
    const K pk = piv->first;
    const F inv = piv->second.inverse();
    for (auto& [k, val] : x) val *= inv;
    for (auto& cf : coord) cf *= inv;
    for (auto& row : rows_) {
      auto it = row.v.find(pk);
      if (it == row.v.end()) continue;
      const F f = -it->second;
      axpy(row.v, f, x);
      row.coord.resize(accepted_ + 1);
      for (std::size_t i = 0; i < coord.size(); ++i)
        if (!coord[i].is_zero()) row.coord[i] += f * coord[i];
    }
    pivot_index_[pk] = rows_.size();
    rows_.push_back(Row{pk, std::move(x), std::move(coord)});
    ++accepted_;
    return true;
  }

  bool contains(const SparseVec<F, K>& v) const {
    SparseVec<F, K> x = v;
    std::vector<F> coord;
    reduce(x, coord, false);
    return x.empty();
  }

  /// Coordinates of v with respect to the accepted vectors, or nullopt with
  /// the nonzero residual when v is outside the span.
  std::optional<std::vector<F>> coordinates(const SparseVec<F, K>& v, SparseVec<F, K>* residual = nullptr) const {
    SparseVec<F, K> x = v;
    std::vector<F> out(accepted_);
    for (const auto& row : rows_) {
      auto it = x.find(row.pivot);
      if (it == x.end()) continue;
      const F f = it->second;
      axpy(x, F(-f), row.v);
      for (std::size_t i = 0; i < row.coord.size(); ++i)
        if (!row.coord[i].is_zero()) out[i] += f * row.coord[i];
    }
    if (!x.empty()) {
      if (residual) *residual = x;
      return std::nullopt;
    }
    return out;
  }

 private:
  struct Row {
    K pivot;
    SparseVec<F, K> v;
    std::vector<F> coord;
  };

  void reduce(SparseVec<F, K>& x, std::vector<F>& coord, bool track = true) const {
    for (const auto& row : rows_) {
      auto it = x.find(row.pivot);
      if (it == x.end()) continue;
      const F f = -it->second;
      axpy(x, f, row.v);
      if (track)
        for (std::size_t i = 0; i < row.coord.size(); ++i)
          if (!row.coord[i].is_zero()) coord[i] += f * row.coord[i];
    }
  }

  std::vector<Row> rows_;
  std::map<K, std::size_t> pivot_index_;
  std::size_t accepted_ = 0;
};

template <class F>
SparseVec<F, int> column_of(const Matrix<F>& m, Eigen::Index j) {
  SparseVec<F, int> v;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (!m(i, j).is_zero()) v.emplace(static_cast<int>(i), m(i, j));
  return v;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  SpanBuilder<F, int> sb;
  for (Eigen::Index j = 0; j < m.cols(); ++j) sb.add(column_of(m, j));
  return sb.dim();
}

/// Basis of {x : m x = 0} by exact reduced row echelon form.
template <class F>
std::vector<Vector<F>> nullspace(const Matrix<F>& m) {
  Matrix<F> a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivcol;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index best = -1;
    std::size_t bc = 0;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (a(i, col).is_zero()) continue;
      const std::size_t cx = complexity(a(i, col));
      if (best < 0 || cx < bc) {
        best = i;
        bc = cx;
      }
    }
    if (best < 0) continue;
    a.row(r).swap(a.row(best));
    const F inv = a(r, col).inverse();
    for (Eigen::Index j = col; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, col).is_zero()) continue;
      const F f = a(i, col);
      for (Eigen::Index j = col; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivcol.push_back(col);
    ++r;
  }
  std::vector<bool> is_piv(static_cast<std::size_t>(cols), false);
  for (auto pc : pivcol) is_piv[static_cast<std::size_t>(pc)] = true;
  std::vector<Vector<F>> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_piv[static_cast<std::size_t>(free)]) continue;
    Vector<F> x = Vector<F>::Constant(cols, F(0));
    x(free) = F(1);
    for (std::size_t k = 0; k < pivcol.size(); ++k) x(pivcol[k]) = -a(static_cast<Eigen::Index>(k), free);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Exact solution of m x = b, or nullopt when inconsistent.
template <class F>
std::optional<Vector<F>> solve(const Matrix<F>& m, const Vector<F>& b) {
  SpanBuilder<F, int> sb;
  std::vector<Eigen::Index> accepted;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (sb.add(column_of(m, j))) accepted.push_back(j);
  SparseVec<F, int> rhs;
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (!b(i).is_zero()) rhs.emplace(static_cast<int>(i), b(i));
  auto coords = sb.coordinates(rhs);
  if (!coords) return std::nullopt;
  Vector<F> x = Vector<F>::Constant(m.cols(), F(0));
  for (std::size_t k = 0; k < accepted.size(); ++k) x(accepted[k]) = (*coords)[k];
  return x;
}

}  // namespace qcl
