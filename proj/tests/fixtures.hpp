#pragma once

#include "ginv/matrix.hpp"

namespace ginv::test {

inline Scalar cx(std::int64_t re, std::int64_t im) { return {BigRational(re), BigRational(im)}; }
inline Scalar q(std::int64_t num, std::int64_t den) { return BigRational(num, den); }

// The 3x3 example: A = X + Y with X Hermitian of rank 1 and Y nilpotent.
inline Matrix fixture_a() {
  return {{1, cx(1, 1), 0}, {cx(1, -1), 2, 0}, {-2, cx(1, 1), 0}};
}
inline Matrix fixture_x() {
  return {{1, cx(1, 1), 0}, {cx(1, -1), 2, 0}, {0, 0, 0}};
}
inline Matrix fixture_y() {
  return {{0, 0, 0}, {0, 0, 0}, {-2, cx(1, 1), 0}};
}
inline Matrix fixture_z() { return q(1, 9) * fixture_x(); }

// 2x2 with a single 1 at (1,2).
inline Matrix fixture_n() { return {{0, 1}, {0, 0}}; }

// Exact MP inverse of A, (1/54)[[6, 6+6i, -18], [6-6i, 12, 9-9i], [0, 0, 0]].
inline Matrix fixture_a_pinv() {
  return q(1, 54) * Matrix{{6, cx(6, 6), -18}, {cx(6, -6), 12, cx(9, -9)}, {0, 0, 0}};
}

}  // namespace ginv::test
