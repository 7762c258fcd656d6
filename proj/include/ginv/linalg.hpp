#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv {

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // zero-based pivot columns, ascending
};

// Gauss-Jordan elimination with exact pivots; the pivot is the first nonzero
// entry in the column, so the result is deterministic.
RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);

// Canonical particular solution u of a*u = b: rows at pivot columns come from
// the reduced right-hand side, free variables are zero. nullopt when b is not
// in the column space of a. Throws DimensionError if row counts differ.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<Matrix> try_inverse(const Matrix& a);

// Basis of ker(a) from the RREF parametrization: one vector per free column,
// 1 at the free column, -R(i, free) at pivot column i.
std::vector<Matrix> nullspace_basis(const Matrix& a);
// The same basis as the columns of one (cols x nullity) matrix.
Matrix nullspace_matrix(const Matrix& a);

struct FullRankFactorization {
  Matrix f;  // n x r, the pivot columns of a
  Matrix g;  // r x m, the nonzero rows of rref(a)
  std::size_t rank = 0;
};

FullRankFactorization full_rank_factorize(const Matrix& a);

class SubspaceDescriptor {
 public:
  enum class Kind { Image, Kernel };

  static SubspaceDescriptor image(Matrix generator) { return {Kind::Image, std::move(generator)}; }
  static SubspaceDescriptor kernel(Matrix generator) { return {Kind::Kernel, std::move(generator)}; }

  Kind kind() const { return kind_; }
  const Matrix& generator() const { return generator_; }
  // Dimension of the space the subspace lives in.
  std::size_t ambient_dim() const;
  // A matrix whose column space is the described subspace.
  Matrix spanning_columns() const;
  std::size_t dimension() const;

 private:
  SubspaceDescriptor(Kind kind, Matrix generator) : kind_(kind), generator_(std::move(generator)) {}

  Kind kind_;
  Matrix generator_;
};

enum class SubspaceMode { Contains, Equals };

// Contains: q is a subspace of p. Kernels are converted to image form first;
// im(U) <= im(V) iff rank([V|U]) = rank(V). Throws DimensionError when the
// ambient dimensions differ.
bool subspace_relate(const SubspaceDescriptor& p, const SubspaceDescriptor& q, SubspaceMode mode);

// dim(im(u) ∩ ker(a)) = rank(u) - rank(a*u).
std::size_t kernel_intersection_dim(const Matrix& a, const Matrix& u);

struct IndexInfo {
  bool nilpotent = false;
  std::size_t drazin_index = 0;
};

// drazin_index is the least k >= 0 with rank(a^k) = rank(a^(k+1)), using
// a^0 = I. nilpotent means a^n = 0 for n = rows(a).
IndexInfo nilpotency_and_index(const Matrix& a);
std::size_t drazin_index(const Matrix& a);

// Smallest k >= 1 with a^k = 0, or nullopt when a is not nilpotent.
std::optional<unsigned> vanishing_power(const Matrix& a);

}  // namespace ginv
