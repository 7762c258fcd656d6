#include "ginv/verify.hpp"

#include <array>
#include <sstream>

#include "ginv/classical.hpp"
#include "ginv/error.hpp"
#include "ginv/pinv.hpp"

namespace ginv {

namespace {

constexpr std::array<std::pair<KindTag, std::string_view>, 8> kKindNames{{
    {KindTag::MP, "mp"},
    {KindTag::WeakMP, "weak-mp"},
    {KindTag::Group, "group"},
    {KindTag::Drazin, "drazin"},
    {KindTag::HGroup, "hgroup"},
    {KindTag::WeakHGroup, "weak-hgroup"},
    {KindTag::Bc, "bc"},
    {KindTag::TwoPrescribed, "two"},
}};

class ReportBuilder {
 public:
  explicit ReportBuilder(KindTag kind) { report_.kind = kind; }

  void equation(std::string name, const Matrix& lhs, const Matrix& rhs) {
    Matrix diff = lhs - rhs;
    const bool ok = diff.is_zero();
    add(std::move(name), ok, std::move(diff));
  }

  void hermitian(std::string name, const Matrix& m) { equation(std::move(name), m.adjoint(), m); }

  void membership(std::string name, Membership rel, const Matrix& x, const Matrix& generator) {
    MembershipWitness w = ideal_membership(rel, x, generator);
    const bool ok = reconstructs(w, x, generator);
    add(std::move(name), ok, std::move(w));
  }

  void nilpotent(std::string name, Matrix element) {
    auto k = vanishing_power(element);
    const bool ok = k.has_value();
    add(std::move(name), ok, NilpotencyOutcome{std::move(element), k});
  }

  void subspace(std::string name, const SubspaceDescriptor& expected, const SubspaceDescriptor& actual) {
    const bool eq = subspace_relate(expected, actual, SubspaceMode::Equals);
    add(std::move(name), eq, SubspaceOutcome{expected.dimension(), actual.dimension(), eq});
  }

  AxiomReport finish() {
    report_.overall = true;
    for (const auto& c : report_.checks) report_.overall = report_.overall && c.holds;
    return std::move(report_);
  }

 private:
  void add(std::string name, bool holds, Residual residual) {
    report_.checks.push_back({std::move(name), holds, std::move(residual)});
  }

  AxiomReport report_;
};

void require_shapes(const Matrix& a, const Matrix& x, bool square) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) {
    throw DimensionError("check_axioms: candidate shape does not match the transpose shape of a");
  }
  if (square && !a.is_square()) throw DimensionError("check_axioms: this kind needs a square matrix");
}

void require_square_like(const Matrix& a, const Matrix& m, const char* what) {
  if (m.rows() != a.rows() || m.cols() != a.cols()) {
    throw DimensionError(std::string("check_axioms: ") + what + " must match a in shape");
  }
}

void weak_mp_system(ReportBuilder& rb, const Matrix& a, const Matrix& x, const char* sym) {
  const std::string s = sym;
  rb.equation(s + "a" + s + "=" + s, x * a * x, x);
  rb.hermitian("(a" + s + ")*=a" + s, a * x);
  rb.hermitian("(" + s + "a)*=" + s + "a", x * a);
  rb.nilpotent("a-a" + s + "a nilpotent", a - a * x * a);
}

}  // namespace

std::string_view kind_name(KindTag tag) {
  for (const auto& [t, name] : kKindNames) {
    if (t == tag) return name;
  }
  return "?";
}

std::optional<KindTag> parse_kind(std::string_view name) {
  for (const auto& [t, n] : kKindNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

AxiomReport check_axioms(const InverseKind& kind, const Matrix& a, const Matrix& x) {
  ReportBuilder rb(kind.tag);
  switch (kind.tag) {
    case KindTag::MP: {
      require_shapes(a, x, false);
      rb.equation("xax=x", x * a * x, x);
      rb.equation("axa=a", a * x * a, a);
      rb.hermitian("(ax)*=ax", a * x);
      rb.hermitian("(xa)*=xa", x * a);
      break;
    }
    case KindTag::WeakMP: {
      require_shapes(a, x, true);
      weak_mp_system(rb, a, x, "x");
      break;
    }
    case KindTag::Group: {
      require_shapes(a, x, true);
      rb.equation("xax=x", x * a * x, x);
      rb.equation("axa=a", a * x * a, a);
      rb.equation("ax=xa", a * x, x * a);
      break;
    }
    case KindTag::Drazin: {
      require_shapes(a, x, true);
      const auto k = static_cast<unsigned>(drazin_index(a));
      const Matrix ak = pow(a, k);
      rb.equation("xa=ax", x * a, a * x);
      rb.equation("a^(k+1)x=a^k", ak * a * x, ak);
      rb.equation("xax=x", x * a * x, x);
      break;
    }
    case KindTag::HGroup: {
      require_shapes(a, x, true);
      const Matrix a2 = a * a;
      const Matrix ah = a.adjoint();
      rb.equation("xax=x", x * a * x, x);
      rb.equation("a^2xa^2=a^3", a2 * x * a2, a2 * a);
      rb.hermitian("(a^2xa*)*=a^2xa*", a2 * x * ah);
      rb.hermitian("(a*xa^2)*=a*xa^2", ah * x * a2);
      rb.membership("x in aR", Membership::XInAR, x, a);
      rb.membership("x in Ra", Membership::XInRA, x, a);
      break;
    }
    case KindTag::WeakHGroup: {
      require_shapes(a, x, true);
      const CoreEpDecomposition d = core_ep_decompose(a);
      const Matrix& c = d.core;
      const Matrix c2 = c * c;
      const Matrix ch = c.adjoint();
      rb.equation("core+nil=a", d.core + d.nil, a);
      rb.equation("core*nil=0", ch * d.nil, Matrix::zero(a.rows(), a.cols()));
      rb.equation("nil core=0", d.nil * c, Matrix::zero(a.rows(), a.cols()));
      rb.nilpotent("nil nilpotent", d.nil);
      rb.equation("xcx=x", x * c * x, x);
      rb.equation("c^2xc^2=c^3", c2 * x * c2, c2 * c);
      rb.hermitian("(c^2xc*)*=c^2xc*", c2 * x * ch);
      rb.hermitian("(c*xc^2)*=c*xc^2", ch * x * c2);
      rb.membership("x in cR", Membership::XInAR, x, c);
      rb.membership("x in Rc", Membership::XInRA, x, c);

      const Matrix w = mp_inverse(c);
      weak_mp_system(rb, a, w, "w");
      const Matrix m = w * pow(a, 3) * w;
      const Matrix md = mp_inverse(m);
      // Membership in R+ is certified by the Penrose equations of md.
      rb.equation("wa^3w in R+", m * md * m, m);
      rb.equation("x=(wa^3w)+", x, md);
      break;
    }
    case KindTag::Bc: {
      require_shapes(a, x, true);
      if (!kind.pair) throw DimensionError("check_axioms: bc kind needs a (b, c) pair");
      const auto& [b, c] = *kind.pair;
      require_square_like(a, b, "b");
      require_square_like(a, c, "c");
      rb.equation("xab=b", x * a * b, b);
      rb.equation("cax=c", c * a * x, c);
      rb.membership("x in bRx", Membership::XInBRX, x, b);
      rb.membership("x in xRc", Membership::XInXRC, x, c);
      break;
    }
    case KindTag::TwoPrescribed: {
      require_shapes(a, x, true);
      if (!kind.image || !kind.kernel) throw DimensionError("check_axioms: two kind needs T and S");
      rb.equation("xax=x", x * a * x, x);
      rb.subspace("im(x)=T", *kind.image, SubspaceDescriptor::image(x));
      rb.subspace("ker(x)=S", *kind.kernel, SubspaceDescriptor::kernel(x));
      break;
    }
  }
  return rb.finish();
}

AxiomReport check_weighted_system(const Matrix& a, const Matrix& x, const Matrix& w) {
  require_shapes(a, x, true);
  require_square_like(a, w, "w");
  ReportBuilder rb(KindTag::WeakHGroup);
  const Matrix a2 = a * a;
  const Matrix ah = a.adjoint();
  rb.membership("x in (aw)R", Membership::XInAR, x, a * w);
  rb.membership("x in R(wa)", Membership::XInRA, x, w * a);
  rb.equation("xax=x", x * a * x, x);
  rb.equation("(a^2xa^2)w=a^3w", a2 * x * a2 * w, a2 * a * w);
  rb.hermitian("(a^2xa*)*=a^2xa*", a2 * x * ah);
  rb.hermitian("(a*xa^2)*=a*xa^2", ah * x * a2);
  return rb.finish();
}

std::string residual_summary(const AxiomReport& report) {
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.holds ? 0 : 1;
  std::ostringstream os;
  if (failed == 0) {
    os << "all " << report.checks.size() << " checks hold";
    return os.str();
  }
  os << failed << " of " << report.checks.size() << " checks failed";
  for (const auto& c : report.checks) {
    if (c.holds) continue;
    os << "\n  " << c.name << ": ";
    std::visit(
        [&os](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, Matrix>) {
            os << "residual " << r;
          } else if constexpr (std::is_same_v<T, MembershipWitness>) {
            os << "no witness for " << membership_name(r.relation);
          } else if constexpr (std::is_same_v<T, NilpotencyOutcome>) {
            os << "not nilpotent: " << r.element;
          } else {
            os << "subspaces differ (dimension " << r.actual_dim << ", expected " << r.expected_dim << ")";
          }
        },
        c.residual);
  }
  return os.str();
}

}  // namespace ginv
