#include "ginv/classical.hpp"

#include <string>

#include "ginv/error.hpp"
#include "ginv/linalg.hpp"
#include "ginv/pinv.hpp"
#include "ginv/verify.hpp"

namespace ginv {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix must be square");
}

Matrix gated(KindTag kind, const Matrix& a, Matrix x) {
  const AxiomReport report = check_axioms(InverseKind::simple(kind), a, x);
  if (!report.overall) {
    throw InternalError(std::string(kind_name(kind)) + " inverse failed verification: " +
                        residual_summary(report));
  }
  return x;
}

}  // namespace

Matrix group_inverse(const Matrix& a) {
  require_square(a, "group_inverse");
  const FullRankFactorization frf = full_rank_factorize(a);
  if (frf.rank == 0) return Matrix::zero(a.rows(), a.cols());
  const auto gf_inv = try_inverse(frf.g * frf.f);
  if (!gf_inv) throw NotGroupInvertible();
  return gated(KindTag::Group, a, frf.f * *gf_inv * *gf_inv * frf.g);
}

Matrix drazin_inverse(const Matrix& a) {
  require_square(a, "drazin_inverse");
  const auto k = static_cast<unsigned>(drazin_index(a));
  const Matrix ak = pow(a, k);
  return gated(KindTag::Drazin, a, ak * mp_inverse(pow(a, 2 * k + 1)) * ak);
}

CoreEpDecomposition core_ep_decompose(const Matrix& a) {
  require_square(a, "core_ep_decompose");
  const std::size_t n = a.rows();
  const std::size_t k = drazin_index(a);
  const Matrix ak = pow(a, static_cast<unsigned>(k));
  CoreEpDecomposition d;
  d.index = k;
  d.projector = ak * mp_inverse(ak);
  d.core = d.projector * a;
  d.nil = (Matrix::identity(n) - d.projector) * a;

  const bool ok = d.core + d.nil == a && (d.core.adjoint() * d.nil).is_zero() &&
                  (d.nil * d.core).is_zero() && vanishing_power(d.nil).has_value() &&
                  rank(d.core * d.core) == rank(d.core) && is_hermitian(d.projector) &&
                  is_idempotent(d.projector);
  if (!ok) throw InternalError("core_ep_decompose: decomposition invariants failed");
  return d;
}

Matrix weak_mp_inverse(const Matrix& a) {
  require_square(a, "weak_mp_inverse");
  return mp_inverse(core_ep_decompose(a).core);
}

}  // namespace ginv
