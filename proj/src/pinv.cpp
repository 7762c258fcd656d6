#include "ginv/pinv.hpp"

#include "ginv/error.hpp"
#include "ginv/linalg.hpp"

namespace ginv {

Matrix mp_inverse(const Matrix& a) {
  const FullRankFactorization frf = full_rank_factorize(a);
  if (frf.rank == 0) return Matrix::zero(a.cols(), a.rows());

  const Matrix fh = frf.f.adjoint();
  const Matrix gh = frf.g.adjoint();
  const auto left = try_inverse(fh * frf.f);
  const auto right = try_inverse(frf.g * gh);
  if (!left || !right) throw InternalError("mp_inverse: singular Gram matrix");
  return gh * *right * *left * fh;
}

Matrix image_projector(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("image_projector: matrix must be square");
  return a * mp_inverse(a);
}

Matrix coimage_projector(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("coimage_projector: matrix must be square");
  return mp_inverse(a) * a;
}

}  // namespace ginv
