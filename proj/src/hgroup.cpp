#include "ginv/hgroup.hpp"

#include <string>

#include "ginv/error.hpp"
#include "ginv/pinv.hpp"

namespace ginv {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix must be square");
}

// (q_a a p_a)^+, which is also (a^+ a^3 a^+)^+.
Matrix projected_core_inverse(const Matrix& a) {
  return mp_inverse(coimage_projector(a) * a * image_projector(a));
}

}  // namespace

Matrix hgroup_inverse(const Matrix& a) {
  require_square(a, "hgroup_inverse");
  const Matrix ad = mp_inverse(a);
  Matrix x = mp_inverse(ad * pow(a, 3) * ad);
  const AxiomReport report = check_axioms(InverseKind::simple(KindTag::HGroup), a, x);
  if (!report.overall) {
    throw InternalError("hgroup_inverse failed verification: " + residual_summary(report));
  }
  return x;
}

ConstrainedSolveResult solve_image_constrained(const Matrix& a) {
  require_square(a, "solve_image_constrained");
  const Matrix param = image_projector(a) * a.adjoint() * coimage_projector(a);
  const Matrix rhs = a * projected_core_inverse(a);
  const auto u = solve_right(a * param, rhs);
  if (!u) throw Inconsistent("solve_image_constrained: system has no solution");
  const std::size_t hom = kernel_intersection_dim(a, param);
  return {param * *u, hom == 0, hom};
}

ConstrainedSolveResult solve_projected(const Matrix& a) {
  require_square(a, "solve_projected");
  const Matrix p = image_projector(a);
  const auto v = solve_right(p * a, projected_core_inverse(a));
  if (!v) throw Inconsistent("solve_projected: system has no solution");
  const std::size_t hom = kernel_intersection_dim(p, a);
  return {a * *v, hom == 0, hom};
}

BcPair build_bc_pair(const Matrix& a) {
  require_square(a, "build_bc_pair");
  const Matrix ah2 = a.adjoint() * a.adjoint();
  return {image_projector(a) * ah2, ah2 * coimage_projector(a)};
}

Matrix bc_inverse(const Matrix& a, const BcPair& pair) {
  require_square(a, "bc_inverse");
  const auto& [b, c] = pair;
  if (b.rows() != a.rows() || b.cols() != a.cols() || c.rows() != a.rows() || c.cols() != a.cols()) {
    throw DimensionError("bc_inverse: b and c must match a in shape");
  }
  Matrix x = b * mp_inverse(c * a * b) * c;
  const AxiomReport report = check_axioms(InverseKind::bc(pair), a, x);
  if (!report.overall) throw NotBcInvertible("no (b,c)-inverse: " + residual_summary(report));
  return x;
}

Matrix two_inverse_prescribed(const Matrix& a, const SubspaceDescriptor& t, const SubspaceDescriptor& s) {
  require_square(a, "two_inverse_prescribed");
  if (t.kind() != SubspaceDescriptor::Kind::Image) throw UsageError("T must be an image descriptor");
  if (s.kind() != SubspaceDescriptor::Kind::Kernel) throw UsageError("S must be a kernel descriptor");
  if (t.ambient_dim() != a.rows() || s.ambient_dim() != a.rows()) {
    throw DimensionError("two_inverse_prescribed: subspaces must live in the space of a");
  }
  if (t.generator().cols() != a.rows() || s.generator().rows() != a.rows()) {
    throw DimensionError("two_inverse_prescribed: generators must be square like a");
  }

  Matrix x;
  try {
    x = bc_inverse(a, {t.generator(), s.generator()});
  } catch (const NotBcInvertible& e) {
    throw NotTwoInvertible(std::string("no outer inverse with the prescribed image and kernel: ") + e.what());
  }
  const AxiomReport report = check_axioms(InverseKind::two(t, s), a, x);
  if (!report.overall) {
    throw NotTwoInvertible("no outer inverse with the prescribed image and kernel: " +
                           residual_summary(report));
  }
  return x;
}

}  // namespace ginv
