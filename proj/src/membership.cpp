#include "ginv/membership.hpp"

#include "ginv/error.hpp"
#include "ginv/linalg.hpp"

namespace ginv {

std::string_view membership_name(Membership relation) {
  switch (relation) {
    case Membership::XInAR: return "x in aR";
    case Membership::XInRA: return "x in Ra";
    case Membership::XInBRX: return "x in bRx";
    case Membership::XInXRC: return "x in xRc";
  }
  return "?";
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

Matrix vec(const Matrix& m) {
  Matrix out(m.rows() * m.cols(), 1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) out(c * m.rows() + r, 0) = m(r, c);
  }
  return out;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows() != rows * cols || v.cols() != 1) throw DimensionError("unvec: shape mismatch");
  Matrix out(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = v(c * rows + r, 0);
  }
  return out;
}

namespace {

MembershipWitness from_solution(Membership relation, std::optional<Matrix> w) {
  MembershipWitness out{relation, w.has_value(), std::move(w)};
  return out;
}

}  // namespace

MembershipWitness ideal_membership(Membership relation, const Matrix& x, const Matrix& generator) {
  if (!x.is_square() || !generator.is_square() || x.rows() != generator.rows()) {
    throw DimensionError("ideal_membership: inputs must be square of one size");
  }
  const std::size_t n = x.rows();
  switch (relation) {
    case Membership::XInAR:
      return from_solution(relation, solve_right(generator, x));
    case Membership::XInRA: {
      // s*g = x  <=>  g^* s^* = x^*
      auto u = solve_right(generator.adjoint(), x.adjoint());
      if (u) u = u->adjoint();
      return from_solution(relation, std::move(u));
    }
    case Membership::XInBRX: {
      auto r = solve_right(kronecker(x.transpose(), generator), vec(x));
      if (r) r = unvec(*r, n, n);
      return from_solution(relation, std::move(r));
    }
    case Membership::XInXRC: {
      auto s = solve_right(kronecker(generator.transpose(), x), vec(x));
      if (s) s = unvec(*s, n, n);
      return from_solution(relation, std::move(s));
    }
  }
  throw InternalError("unknown membership relation");
}

bool reconstructs(const MembershipWitness& w, const Matrix& x, const Matrix& generator) {
  if (!w.holds || !w.witness) return false;
  const Matrix& r = *w.witness;
  switch (w.relation) {
    case Membership::XInAR: return generator * r == x;
    case Membership::XInRA: return r * generator == x;
    case Membership::XInBRX: return generator * r * x == x;
    case Membership::XInXRC: return x * r * generator == x;
  }
  return false;
}

}  // namespace ginv
