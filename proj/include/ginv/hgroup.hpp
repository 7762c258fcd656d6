#pragma once

#include <cstddef>

#include "ginv/linalg.hpp"
#include "ginv/matrix.hpp"
#include "ginv/verify.hpp"

namespace ginv {

struct ConstrainedSolveResult {
  Matrix solution;
  bool unique = false;
  std::size_t homogeneous_dimension = 0;  // zero iff unique
};

// The higher-order group inverse (a^+ a^3 a^+)^+. Every square matrix over
// Q(i) has one; the result is checked against the full defining system
// (including x in aR and x in Ra) and InternalError is raised if it fails.
Matrix hgroup_inverse(const Matrix& a);

// Solves a x = a (q_a a p_a)^+ over x = (p_a a^* q_a) u. The solution is
// unique iff ker(a) and im(p_a a^* q_a) meet only in zero.
ConstrainedSolveResult solve_image_constrained(const Matrix& a);

// Solves p_a x = (q_a a p_a)^+ over x = a v. The solution is unique iff
// ker(p_a) and im(a) meet only in zero.
ConstrainedSolveResult solve_projected(const Matrix& a);

// b = p_a (a^*)^2, c = (a^*)^2 q_a.
BcPair build_bc_pair(const Matrix& a);

// The (b,c)-inverse: candidate b (c a b)^+ c, returned only when it passes
// xab=b, cax=c, x in bRx and x in xRc. Throws NotBcInvertible otherwise.
Matrix bc_inverse(const Matrix& a, const BcPair& pair);

// The outer inverse with image t and kernel s, built as the (b,c)-inverse
// for the generators of t and s. t must be an image descriptor and s a
// kernel descriptor (UsageError otherwise). Throws NotTwoInvertible when no
// such inverse exists.
Matrix two_inverse_prescribed(const Matrix& a, const SubspaceDescriptor& t, const SubspaceDescriptor& s);

}  // namespace ginv
