#pragma once

#include "ginv/matrix.hpp"

namespace ginv {

// Moore-Penrose inverse a^+ = g^* (g g^*)^{-1} (f^* f)^{-1} f^* for the
// full-rank factorization a = f g. Exists for every matrix over Q(i) because
// the Gram matrices of full-rank f and g are nonsingular; a singular Gram
// matrix raises InternalError.
Matrix mp_inverse(const Matrix& a);

// p_a = a a^+: the Hermitian idempotent with im(p_a) = im(a).
Matrix image_projector(const Matrix& a);

// q_a = a^+ a: the Hermitian idempotent with im(q_a) = im(a^*).
Matrix coimage_projector(const Matrix& a);

}  // namespace ginv
