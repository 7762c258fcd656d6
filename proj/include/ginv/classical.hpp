#pragma once

#include <cstddef>

#include "ginv/matrix.hpp"

namespace ginv {

// a = core + nil with core = P a, nil = (I - P) a, where P is the orthogonal
// projector onto im(a^k) and k is the index of a. core has index <= 1,
// nil is nilpotent, core^* nil = 0 and nil core = 0.
struct CoreEpDecomposition {
  Matrix core;
  Matrix nil;
  std::size_t index = 0;
  Matrix projector;
};

// a^# = f (g f)^{-2} g. Throws NotGroupInvertible when rank(a^2) < rank(a).
Matrix group_inverse(const Matrix& a);

// a^D = a^k (a^(2k+1))^+ a^k, verified against the Drazin equations before
// it is returned.
Matrix drazin_inverse(const Matrix& a);

CoreEpDecomposition core_ep_decompose(const Matrix& a);

// The weak Moore-Penrose inverse, taken constructively as core^+.
Matrix weak_mp_inverse(const Matrix& a);

}  // namespace ginv
