#include "ginv/command.hpp"

#include <fstream>
#include <sstream>

#include "ginv/classical.hpp"
#include "ginv/error.hpp"
#include "ginv/hgroup.hpp"
#include "ginv/linalg.hpp"
#include "ginv/pinv.hpp"
#include "ginv/verify.hpp"
#include "ginv/weak_hgroup.hpp"

namespace ginv {

namespace {

Matrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.offset());
  } catch (const DimensionError& e) {
    throw DimensionError(path.string() + ": " + e.what());
  }
}

std::optional<Matrix> read_optional(const std::optional<std::filesystem::path>& path) {
  if (!path) return std::nullopt;
  return read_matrix(*path);
}

const Matrix& require(const std::optional<Matrix>& m, const char* what) {
  if (!m) throw UsageError(std::string("missing operand: ") + what);
  return *m;
}

InverseKind inverse_kind(KindTag tag, const CommandInputs& in) {
  switch (tag) {
    case KindTag::Bc:
      return InverseKind::bc({require(in.b, "--b"), require(in.c, "--c")});
    case KindTag::TwoPrescribed:
      return InverseKind::two(SubspaceDescriptor::image(require(in.t, "--t")),
                              SubspaceDescriptor::kernel(require(in.s, "--s")));
    default:
      return InverseKind::simple(tag);
  }
}

Matrix compute(const InverseKind& kind, const Matrix& a) {
  switch (kind.tag) {
    case KindTag::MP: return mp_inverse(a);
    case KindTag::WeakMP: return weak_mp_inverse(a);
    case KindTag::Group: return group_inverse(a);
    case KindTag::Drazin: return drazin_inverse(a);
    case KindTag::HGroup: return hgroup_inverse(a);
    case KindTag::WeakHGroup: return weak_hgroup_inverse(a);
    case KindTag::Bc: return bc_inverse(a, *kind.pair);
    case KindTag::TwoPrescribed: return two_inverse_prescribed(a, *kind.image, *kind.kernel);
  }
  throw InternalError("unknown kind");
}

// Whether the kind's uniqueness characterization singles out x.
std::optional<bool> uniqueness(KindTag tag, const Matrix& a, const Matrix& x) {
  if (tag == KindTag::HGroup) {
    const auto r1 = solve_image_constrained(a);
    const auto r2 = solve_projected(a);
    return r1.unique && r2.unique && r1.solution == x && r2.solution == x;
  }
  if (tag == KindTag::WeakHGroup) {
    try {
      const auto r = solve_weak_hgroup_system(a);
      return r.unique && r.solution == x;
    } catch (const Inconsistent&) {
      return false;
    }
  }
  return std::nullopt;
}

void attach(ReportDocument& doc, const AxiomReport& report) {
  for (const auto& c : report.checks) doc.checks.push_back({c.name, c.holds});
  doc.ok = report.overall;
  if (!report.overall) doc.reason = residual_summary(report);
}

ReportDocument decompose(const Matrix& a) {
  ReportDocument doc;
  doc.command = "decompose";
  const CoreEpDecomposition d = core_ep_decompose(a);
  doc.index = d.index;
  const auto add = [&doc](const char* name, bool holds) { doc.checks.push_back({name, holds}); };
  add("core+nil=a", d.core + d.nil == a);
  add("core*nil=0", (d.core.adjoint() * d.nil).is_zero());
  add("nil core=0", (d.nil * d.core).is_zero());
  add("nil nilpotent", vanishing_power(d.nil).has_value());
  add("rank(core^2)=rank(core)", rank(d.core * d.core) == rank(d.core));
  add("P=P*=P^2", is_hermitian(d.projector) && is_idempotent(d.projector));
  add("core=Pa", d.core == d.projector * a);
  doc.ok = true;
  for (const auto& c : doc.checks) doc.ok = doc.ok && c.holds;
  if (!doc.ok) doc.reason = "decomposition invariants failed";
  doc.parts = DecompositionParts{d.core, d.nil, d.projector};
  return doc;
}

}  // namespace

CommandInputs load_inputs(const CommandRequest& req) {
  return {read_matrix(req.a),          read_optional(req.b), read_optional(req.c),
          read_optional(req.candidate), read_optional(req.t), read_optional(req.s)};
}

ReportDocument run_command(Command command, const std::string& kind, const CommandInputs& in) {
  if (command == Command::Decompose) return decompose(in.a);

  const auto tag = parse_kind(kind);
  if (!tag) throw UsageError("unknown kind '" + kind + "'");
  const InverseKind ik = inverse_kind(*tag, in);

  ReportDocument doc;
  doc.command = command == Command::Compute ? "compute" : "verify";
  doc.kind = std::string(kind_name(*tag));
  if (in.a.is_square()) doc.index = drazin_index(in.a);

  if (command == Command::Verify) {
    attach(doc, check_axioms(ik, in.a, require(in.candidate, "--candidate")));
    return doc;
  }

  Matrix x;
  try {
    x = compute(ik, in.a);
    doc.unique = uniqueness(*tag, in.a, x);
  } catch (const DomainError& e) {
    doc.ok = false;
    doc.reason = e.what();
    return doc;
  } catch (const InternalError& e) {
    doc.ok = false;
    doc.reason = e.what();
    return doc;
  }
  attach(doc, check_axioms(ik, in.a, x));
  doc.result = std::move(x);
  return doc;
}

ReportDocument execute_command(const CommandRequest& req) {
  return run_command(req.command, req.kind, load_inputs(req));
}

int exit_code_for(const ReportDocument& doc) { return doc.ok ? kExitOk : kExitDomainFailure; }

}  // namespace ginv
