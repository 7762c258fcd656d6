#include <doctest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "ginv/classical.hpp"
#include "ginv/error.hpp"
#include "ginv/hgroup.hpp"
#include "ginv/linalg.hpp"
#include "ginv/pinv.hpp"
#include "ginv/verify.hpp"
#include "ginv/weak_hgroup.hpp"

using namespace ginv;
using namespace ginv::test;

namespace {

const InverseKind kWeak = InverseKind::simple(KindTag::WeakHGroup);

// Index 3; its core is not EP, so nil * core^+ != 0.
Matrix non_ep_core_witness() {
  return {{cx(2, 2), 0, cx(1, 1), cx(1, -1)},
          {0, 0, q(1, 2), 0},
          {Scalar(BigRational(-1, 2), BigRational(1, 2)), 0, 0, q(1, 2)},
          {4, 0, 2, cx(0, -2)}};
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  }
  return out;
}

}  // namespace

TEST_CASE("weak H-group inverse fixture values") {
  CHECK(weak_hgroup_inverse(fixture_a()) == fixture_z());
  CHECK(weak_hgroup_inverse(fixture_x()) == fixture_z());
  CHECK(weak_hgroup_inverse(fixture_n()).is_zero());
  const Matrix inv{{1, 1}, {0, 2}};
  CHECK(weak_hgroup_inverse(inv) == *try_inverse(inv));

  CHECK(weak_hgroup_via_system(fixture_a()) == fixture_z());
  CHECK(weak_hgroup_via_system(fixture_x()) == fixture_z());
  CHECK(weak_hgroup_via_system(fixture_n()).is_zero());

  for (const Matrix& a : {fixture_a(), fixture_x(), Matrix::identity(3)}) {
    const auto s = solve_weak_hgroup_system(a);
    CHECK(s.unique);
    CHECK(s.solution == weak_hgroup_inverse(a));
  }
  CHECK(fixture_a() * fixture_z() == q(1, 3) * fixture_x());
  CHECK(check_axioms(kWeak, fixture_a(), fixture_z()).overall);
}

TEST_CASE("the three routes agree on A") {
  const auto r = weak_hgroup_routes(fixture_a());
  CHECK(r.agree);
  CHECK(r.via_core == fixture_z());
  CHECK(r.via_weak_mp == fixture_z());
  CHECK(r.via_core_formula == fixture_z());
}

TEST_CASE("the weak MP route departs when nil core^+ != 0") {
  const Matrix a = non_ep_core_witness();
  const auto d = core_ep_decompose(a);
  CHECK_FALSE((d.nil * mp_inverse(d.core)).is_zero());
  const auto r = weak_hgroup_routes(a);
  CHECK_FALSE(r.agree);
  CHECK(r.via_core == r.via_core_formula);
  CHECK(r.via_core != r.via_weak_mp);
  CHECK(weak_hgroup_inverse(a) == hgroup_inverse(d.core));
  CHECK_THROWS_AS(solve_weak_hgroup_system(a), Inconsistent);
  CHECK_FALSE(check_axioms(kWeak, a, weak_hgroup_inverse(a)).overall);
}

TEST_CASE("the Hermitian condition of the weighted system can fail when the routes agree") {
  const Matrix a{{cx(1, 1), 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -2}, {0, 0, 0, 0}};
  const Matrix x = weak_hgroup_inverse(a), w = weak_mp_inverse(a);
  CHECK(weak_hgroup_routes(a).agree);
  CHECK(check_axioms(kWeak, a, x).overall);
  for (const auto& c : check_weighted_system(a, x, w).checks) {
    CHECK_MESSAGE(c.holds == (c.name != "(a*xa^2)*=a*xa^2"), c.name);
  }
}

TEST_CASE("the unweighted condition holds through index 3") {
  const Matrix a = fixture_a(), x = weak_hgroup_inverse(a);
  CHECK(a * a * x * a * a == pow(a, 3));
}

TEST_CASE("orthogonal sums") {
  CHECK(orthogonal_sum(fixture_x(), fixture_y()) == fixture_z());
  CHECK(weak_hgroup_inverse(fixture_y()).is_zero());
  CHECK(orthogonal_sum(fixture_a(), Matrix::zero(3, 3)) == weak_hgroup_inverse(fixture_a()));
  const Matrix i2 = Matrix::identity(2);
  try {
    orthogonal_sum(i2, i2);
    FAIL("expected PreconditionViolated");
  } catch (const PreconditionViolated& e) {
    CHECK(std::string(e.what()).find("ab=0") != std::string::npos);
  }
  // ab = ba = 0 but a*b != 0
  const Matrix a{{1, 1}, {0, 0}}, b{{0, -1}, {0, 1}};
  CHECK((a * b).is_zero());
  CHECK((b * a).is_zero());
  try {
    orthogonal_sum(a, b);
    FAIL("expected PreconditionViolated");
  } catch (const PreconditionViolated& e) {
    CHECK(std::string(e.what()).find("a*b=0") != std::string::npos);
  }
}

TEST_CASE("weak H-group properties on the corpus") {
  for (const auto& e : square_corpus(150, 20261017)) {
    const Matrix& a = e.a;
    CAPTURE(a);
    const auto d = core_ep_decompose(a);
    const Matrix x = weak_hgroup_inverse(a);
    CHECK(x == hgroup_inverse(d.core));
    CHECK(check_axioms(InverseKind::simple(KindTag::HGroup), d.core, x).overall);
    if (rank(a * a) == rank(a)) CHECK(x == hgroup_inverse(a));

    const auto routes = weak_hgroup_routes(a);
    CHECK(routes.via_core == routes.via_core_formula);
    const bool ep_like = (d.nil * mp_inverse(d.core)).is_zero();
    if (ep_like) {
      CHECK(routes.agree);
      CHECK(check_axioms(kWeak, a, x).overall);
      const Matrix w = weak_mp_inverse(a);
      CHECK(a * a * x * a * a * w == pow(a, 3) * w);
      // (a*xa^2)* = a*xa^2 is not implied even here; see the pinned case below
      for (const auto& c : check_weighted_system(a, x, w).checks) {
        if (c.name != "(a*xa^2)*=a*xa^2") CHECK_MESSAGE(c.holds, c.name);
      }
      CHECK(solve_weak_hgroup_system(a).solution == x);
    }
    if (drazin_index(a) <= 3) CHECK(a * a * x * a * a == pow(a, 3));
  }
}

TEST_CASE("orthogonal sums of block-diagonal embeddings") {
  CorpusGenerator gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + gen.pick(3), m = 1 + gen.pick(3);
    const Matrix p = gen.square(n).a, r = gen.square(m).a;
    const Matrix a = block_diag(p, Matrix::zero(m, m));
    const Matrix b = block_diag(Matrix::zero(n, n), r);
    CHECK(orthogonal_sum(a, b) == weak_hgroup_inverse(a) + weak_hgroup_inverse(b));
    CHECK(weak_hgroup_inverse(a + b) == block_diag(weak_hgroup_inverse(p), weak_hgroup_inverse(r)));
  }
}
