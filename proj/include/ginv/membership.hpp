#pragma once

#include <optional>
#include <string_view>

#include "ginv/matrix.hpp"

namespace ginv {

// One-sided ideal relations used by the inverse definitions:
//   XInAR:  x = g*r      XInRA:  x = s*g
//   XInBRX: x = g*r*x    XInXRC: x = x*s*g
// where g is the generator passed alongside x.
enum class Membership { XInAR, XInRA, XInBRX, XInXRC };

std::string_view membership_name(Membership relation);

struct MembershipWitness {
  Membership relation;
  bool holds = false;
  std::optional<Matrix> witness;  // present iff holds; free variables zero
};

// Decides the relation exactly. The two-sided-product relations are solved
// by vectorizing the unknown (vec(g*r*x) = (x^T kron g) vec(r)). All inputs
// must be square of one size; throws DimensionError otherwise.
MembershipWitness ideal_membership(Membership relation, const Matrix& x, const Matrix& generator);

// Recomputes x from the witness; true iff the reconstruction is exact.
bool reconstructs(const MembershipWitness& w, const Matrix& x, const Matrix& generator);

Matrix kronecker(const Matrix& a, const Matrix& b);
// Column-major stacking into an (rows*cols) x 1 column, and its inverse.
Matrix vec(const Matrix& m);
Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

}  // namespace ginv
