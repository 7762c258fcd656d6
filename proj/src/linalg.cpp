#include "ginv/linalg.hpp"

#include <string>
#include <utility>

#include "ginv/error.hpp"

namespace ginv {

RrefResult rref(const Matrix& a) {
  RrefResult out{a, 0, {}};
  Matrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;

    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionError("solve_right: " + std::to_string(a.rows()) + " rows vs " +
                         std::to_string(b.rows()));
  }
  const RrefResult r = rref(hstack(a, b));
  // A pivot in the right-hand block means an equation 0 = nonzero.
  if (!r.pivots.empty() && r.pivots.back() >= a.cols()) return std::nullopt;

  Matrix u(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) u(r.pivots[i], j) = r.reduced(i, a.cols() + j);
  }
  return u;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of non-square matrix");
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_right(a, Matrix::identity(a.rows()));
}

std::vector<Matrix> nullspace_basis(const Matrix& a) {
  const RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(a.cols(), 1);
    v(free, 0) = Scalar(1);
    for (std::size_t i = 0; i < r.rank; ++i) v(r.pivots[i], 0) = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix nullspace_matrix(const Matrix& a) {
  Matrix out(a.cols(), 0);
  for (const Matrix& v : nullspace_basis(a)) out = hstack(out, v);
  return out;
}

FullRankFactorization full_rank_factorize(const Matrix& a) {
  const RrefResult r = rref(a);
  return {a.columns(r.pivots), r.reduced.top_rows(r.rank), r.rank};
}

std::size_t SubspaceDescriptor::ambient_dim() const {
  return kind_ == Kind::Image ? generator_.rows() : generator_.cols();
}

Matrix SubspaceDescriptor::spanning_columns() const {
  return kind_ == Kind::Image ? generator_ : nullspace_matrix(generator_);
}

std::size_t SubspaceDescriptor::dimension() const {
  const std::size_t r = rank(generator_);
  return kind_ == Kind::Image ? r : generator_.cols() - r;
}

bool subspace_relate(const SubspaceDescriptor& p, const SubspaceDescriptor& q, SubspaceMode mode) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw DimensionError("subspace_relate: ambient dimensions " + std::to_string(p.ambient_dim()) +
                         " and " + std::to_string(q.ambient_dim()));
  }
  const Matrix v = p.spanning_columns();
  const Matrix u = q.spanning_columns();
  const std::size_t rv = rank(v);
  const std::size_t joint = rank(hstack(v, u));
  if (mode == SubspaceMode::Contains) return joint == rv;
  return joint == rv && joint == rank(u);
}

std::size_t kernel_intersection_dim(const Matrix& a, const Matrix& u) {
  return rank(u) - rank(a * u);
}

IndexInfo nilpotency_and_index(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("index of non-square matrix");
  const std::size_t n = a.rows();
  IndexInfo info;
  Matrix power = Matrix::identity(n);
  std::size_t prev_rank = n;
  for (std::size_t k = 0;; ++k) {
    Matrix next = power * a;
    const std::size_t r = rank(next);
    if (r == prev_rank) {
      info.drazin_index = k;
      break;
    }
    prev_rank = r;
    power = std::move(next);
  }
  info.nilpotent = pow(a, static_cast<unsigned>(n)).is_zero();
  return info;
}

std::size_t drazin_index(const Matrix& a) { return nilpotency_and_index(a).drazin_index; }

std::optional<unsigned> vanishing_power(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("nilpotency of non-square matrix");
  Matrix power = a;
  for (unsigned k = 1; k <= a.rows(); ++k) {
    if (power.is_zero()) return k;
    power = power * a;
  }
  return std::nullopt;
}

}  // namespace ginv
