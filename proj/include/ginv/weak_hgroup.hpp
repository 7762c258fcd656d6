#pragma once

#include "ginv/hgroup.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

// The three ways of computing the weak higher-order group inverse.
struct WeakHGroupRoutes {
  Matrix via_core;          // hgroup_inverse(core)
  Matrix via_weak_mp;       // (w a^3 w)^+ with w = core^+ the weak MP inverse of a
  Matrix via_core_formula;  // (core^+ core^3 core^+)^+
  bool agree = false;
};

// The weak higher-order group inverse: the H-group inverse of the core part
// of the core/nilpotent decomposition. The decomposition invariants and the
// H-group system on the core are verified; InternalError if either fails or
// if the two core-based routes differ.
//
// The (w a^3 w)^+ route is not part of the gate: it equals the core value
// only when nil * core^+ = 0, which the decomposition does not guarantee
// (see weak_hgroup_routes).
Matrix weak_hgroup_inverse(const Matrix& a);

WeakHGroupRoutes weak_hgroup_routes(const Matrix& a);

// (w a^3 w)^+, checked against the weighted system
//   x in (aw)R ∩ R(wa), xax=x, (a^2xa^2)w=a^3w, (a^2xa*)*=a^2xa*,
//   (a*xa^2)*=a*xa^2.
Matrix weak_hgroup_via_system(const Matrix& a);

// Solves xax=x, xa=m^+ a, ax=a m^+ for m = w a^3 w. Any solution x equals
// (xa)x = m^+ a x = m^+ a m^+, so m^+ a m^+ = m^+ certifies that m^+ is the
// only one. Throws Inconsistent when the certificate fails.
ConstrainedSolveResult solve_weak_hgroup_system(const Matrix& a);

// (a+b)^w = a^w + b^w for orthogonal a, b. Requires ab=0, ba=0, a*b=0 and
// b*a=0; the first failing product is named in PreconditionViolated.
Matrix orthogonal_sum(const Matrix& a, const Matrix& b);

}  // namespace ginv
