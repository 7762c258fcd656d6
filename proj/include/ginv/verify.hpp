#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ginv/linalg.hpp"
#include "ginv/matrix.hpp"
#include "ginv/membership.hpp"

namespace ginv {

// The pair (b, c) of a (b,c)-inverse.
struct BcPair {
  Matrix b;
  Matrix c;
};

enum class KindTag { MP, WeakMP, Group, Drazin, HGroup, WeakHGroup, Bc, TwoPrescribed };

// Which inverse a candidate claims to be, with the extra data some kinds need.
struct InverseKind {
  KindTag tag;
  std::optional<BcPair> pair;                 // Bc only
  std::optional<SubspaceDescriptor> image;    // TwoPrescribed only: T
  std::optional<SubspaceDescriptor> kernel;   // TwoPrescribed only: S

  static InverseKind simple(KindTag tag) { return {tag, std::nullopt, std::nullopt, std::nullopt}; }
  static InverseKind bc(BcPair pair) { return {KindTag::Bc, std::move(pair), std::nullopt, std::nullopt}; }
  static InverseKind two(SubspaceDescriptor t, SubspaceDescriptor s) {
    return {KindTag::TwoPrescribed, std::nullopt, std::move(t), std::move(s)};
  }
};

// CLI spelling: mp, weak-mp, group, drazin, hgroup, weak-hgroup, bc, two.
std::string_view kind_name(KindTag tag);
std::optional<KindTag> parse_kind(std::string_view name);

struct NilpotencyOutcome {
  Matrix element;
  std::optional<unsigned> vanishing_power;  // smallest k with element^k = 0
};

struct SubspaceOutcome {
  std::size_t expected_dim = 0;
  std::size_t actual_dim = 0;
  bool equal = false;
};

using Residual = std::variant<Matrix, MembershipWitness, NilpotencyOutcome, SubspaceOutcome>;

struct AxiomCheck {
  std::string name;
  bool holds = false;
  Residual residual;
};

struct AxiomReport {
  KindTag kind;
  std::vector<AxiomCheck> checks;
  bool overall = false;
};

// Evaluates every defining equation of `kind` for the candidate x exactly.
//
//   MP          xax=x, axa=a, (ax)*=ax, (xa)*=xa
//   WeakMP      xax=x, (ax)*=ax, (xa)*=xa, a-axa nilpotent
//   Group       xax=x, axa=a, ax=xa
//   Drazin      xa=ax, a^(k+1)x=a^k, xax=x with k the index of a
//   HGroup      xax=x, a^2xa^2=a^3, (a^2xa*)*=a^2xa*, (a*xa^2)*=a*xa^2,
//               x in aR, x in Ra
//   WeakHGroup  the split a = c + nil (c*nil=0, nil c=0, nil nilpotent),
//               the H-group system of x against the core c, then the
//               weak-MP system on w = c^+ (waw=w, (aw)*=aw, (wa)*=wa,
//               a-awa nilpotent), wa^3w in R+ and x=(wa^3w)+
//   Bc          xab=b, cax=c, x in bRx, x in xRc
//   TwoPrescribed  xax=x, im(x)=T, ker(x)=S
//
// Matrix residuals are lhs - rhs. Throws DimensionError on shape mismatch.
AxiomReport check_axioms(const InverseKind& kind, const Matrix& a, const Matrix& x);

// The weighted system characterizing the weak H-group inverse for a given
// weak MP inverse w: x in (aw)R, x in R(wa), xax=x, (a^2xa^2)w=a^3w,
// (a^2xa*)*=a^2xa*, (a*xa^2)*=a*xa^2.
AxiomReport check_weighted_system(const Matrix& a, const Matrix& x, const Matrix& w);

// "all N checks hold", or one line per failed check with its residual.
std::string residual_summary(const AxiomReport& report);

}  // namespace ginv
