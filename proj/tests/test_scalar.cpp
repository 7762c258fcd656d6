#include <doctest.h>

#include <random>

#include "ginv/error.hpp"
#include "ginv/scalar.hpp"

using namespace ginv;

namespace {

Scalar cx(std::int64_t re, std::int64_t im) { return {BigRational(re), BigRational(im)}; }

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  return {BigRational(num(rng), den(rng)), BigRational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK(scalar_arith(ArithOp::Mul, cx(1, 1), cx(1, -1)) == Scalar(2));
  CHECK(scalar_arith(ArithOp::Add, BigRational(1, 9), BigRational(2, 9)) == Scalar(BigRational(1, 3)));
  CHECK(scalar_arith(ArithOp::Div, Scalar(1), cx(1, 1)) == Scalar(BigRational(1, 2), BigRational(-1, 2)));
  CHECK(scalar_arith(ArithOp::Sub, cx(3, 2), cx(3, 2)).is_zero());
  CHECK_THROWS_AS(scalar_arith(ArithOp::Div, Scalar(1), Scalar(0)), DivisionByZero);
  CHECK_THROWS_AS(BigRational(1, 0), DivisionByZero);
}

TEST_CASE("rationals are stored reduced") {
  const BigRational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(BigRational(0, 7).denominator() == 1);
  CHECK(BigRational(2, 4) == BigRational(1, 2));
}

TEST_CASE("conjugation") {
  CHECK(conjugate(cx(1, 1)) == cx(1, -1));
  CHECK(conjugate(Scalar(5)) == Scalar(5));
  CHECK(conjugate(Scalar(BigRational(0), BigRational(-2, 3))) == Scalar(BigRational(0), BigRational(2, 3)));
}

TEST_CASE("field and involution laws on sampled triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    CHECK(conjugate(conjugate(x)) == x);
    CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
    CHECK(conjugate(x + y) == conjugate(x) + conjugate(y));
    // norm positivity: sum of conj(z_k) z_k vanishes only for all-zero lists
    const Scalar s = conjugate(x) * x + conjugate(y) * y;
    CHECK(s.im().is_zero());
    CHECK(s.is_zero() == (x.is_zero() && y.is_zero()));
  }
}

TEST_CASE("parse") {
  CHECK(parse_scalar("1-1i") == cx(1, -1));
  CHECK(parse_scalar("-2/3i") == Scalar(BigRational(0), BigRational(-2, 3)));
  CHECK(parse_scalar("i") == cx(0, 1));
  CHECK(parse_scalar("-i") == cx(0, -1));
  CHECK(parse_scalar("4/6") == Scalar(BigRational(2, 3)));
  CHECK(parse_scalar("-1/2+3/4i") == Scalar(BigRational(-1, 2), BigRational(3, 4)));
  CHECK(parse_scalar("0") == Scalar(0));
}

TEST_CASE("parse errors carry the offset") {
  const auto offset_of = [](const char* token) -> std::size_t {
    try {
      parse_scalar(token);
    } catch (const ParseError& e) {
      return e.offset();
    }
    FAIL("expected ParseError for " << token);
    return 0;
  };
  CHECK(offset_of("1+j") == 2);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("1/0") == 2);
  CHECK(offset_of("1/") == 2);
  CHECK(offset_of("1+2") == 3);
  CHECK(offset_of(" 1") == 0);
  CHECK(offset_of("1i+2") == 2);
  CHECK(offset_of("1+i") == 2);
  CHECK(offset_of("--1") == 1);
}

TEST_CASE("format") {
  CHECK(format_scalar(Scalar(BigRational(1, 9))) == "1/9");
  CHECK(format_scalar(cx(1, 1)) == "1+1i");
  CHECK(format_scalar(Scalar(0)) == "0");
  CHECK(format_scalar(Scalar(BigRational(0), BigRational(-2, 3))) == "-2/3i");
  CHECK(format_scalar(Scalar(BigRational(-1, 2), BigRational(-1, 2))) == "-1/2-1/2i");
  CHECK(format_scalar(cx(0, 1)) == "1i");
}

TEST_CASE("parse and format are inverse on canonical tokens") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Scalar z = random_scalar(rng);
    const std::string token = format_scalar(z);
    CHECK(parse_scalar(token) == z);
    CHECK(format_scalar(parse_scalar(token)) == token);
  }
}
