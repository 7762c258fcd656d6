#include "ginv/weak_hgroup.hpp"

#include <string>

#include "ginv/classical.hpp"
#include "ginv/error.hpp"
#include "ginv/pinv.hpp"
#include "ginv/verify.hpp"

namespace ginv {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix must be square");
}

Matrix weighted_formula(const Matrix& a, const Matrix& w) { return mp_inverse(w * pow(a, 3) * w); }

}  // namespace

WeakHGroupRoutes weak_hgroup_routes(const Matrix& a) {
  require_square(a, "weak_hgroup_routes");
  const CoreEpDecomposition d = core_ep_decompose(a);
  const Matrix core_mp = mp_inverse(d.core);
  WeakHGroupRoutes r{hgroup_inverse(d.core), weighted_formula(a, core_mp),
                     weighted_formula(d.core, core_mp), false};
  r.agree = r.via_core == r.via_weak_mp && r.via_core == r.via_core_formula;
  return r;
}

Matrix weak_hgroup_inverse(const Matrix& a) {
  require_square(a, "weak_hgroup_inverse");
  const CoreEpDecomposition d = core_ep_decompose(a);
  Matrix x = hgroup_inverse(d.core);
  const Matrix core_mp = mp_inverse(d.core);
  if (x != weighted_formula(d.core, core_mp)) {
    throw InternalError("weak_hgroup_inverse: core routes disagree");
  }
  return x;
}

Matrix weak_hgroup_via_system(const Matrix& a) {
  require_square(a, "weak_hgroup_via_system");
  const Matrix w = weak_mp_inverse(a);
  Matrix x = weighted_formula(a, w);
  const AxiomReport report = check_weighted_system(a, x, w);
  if (!report.overall) {
    throw InternalError("weak_hgroup_via_system failed verification: " + residual_summary(report));
  }
  return x;
}

ConstrainedSolveResult solve_weak_hgroup_system(const Matrix& a) {
  require_square(a, "solve_weak_hgroup_system");
  const Matrix md = weighted_formula(a, weak_mp_inverse(a));
  if (md * a * md != md) throw Inconsistent("solve_weak_hgroup_system: xax=x fails at m^+");
  return {md, true, 0};
}

Matrix orthogonal_sum(const Matrix& a, const Matrix& b) {
  require_square(a, "orthogonal_sum");
  if (b.rows() != a.rows() || b.cols() != a.cols()) throw DimensionError("orthogonal_sum: shapes differ");
  const struct {
    const char* name;
    Matrix product;
  } conditions[] = {
      {"ab=0", a * b},
      {"ba=0", b * a},
      {"a*b=0", a.adjoint() * b},
      {"b*a=0", b.adjoint() * a},
  };
  for (const auto& c : conditions) {
    if (!c.product.is_zero()) throw PreconditionViolated(std::string("orthogonal_sum: ") + c.name + " fails");
  }
  Matrix sum = weak_hgroup_inverse(a) + weak_hgroup_inverse(b);
  if (sum != weak_hgroup_inverse(a + b)) {
    throw InternalError("orthogonal_sum: sum of inverses differs from the inverse of the sum");
  }
  return sum;
}

}  // namespace ginv
