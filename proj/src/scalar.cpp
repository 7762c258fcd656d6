#include "ginv/scalar.hpp"

#include <ostream>

#include "ginv/error.hpp"

namespace ginv {

BigRational::BigRational(std::int64_t n) : v_(static_cast<long>(n)) {}

BigRational::BigRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

BigRational::BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

BigRational BigRational::from_strings(std::string_view num, std::string_view den) {
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DivisionByZero();
  return BigRational(mpq_class(n, d));
}

BigRational& BigRational::operator+=(const BigRational& o) {
  v_ += o.v_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  v_ -= o.v_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  v_ *= o.v_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::string BigRational::to_string() const { return v_.get_str(10); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  BigRational re = re_ * o.re_ - im_ * o.im_;
  BigRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  const BigRational n = norm();
  if (n.is_zero()) throw DivisionByZero();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

Scalar scalar_arith(ArithOp op, const Scalar& lhs, const Scalar& rhs) {
  switch (op) {
    case ArithOp::Add: return lhs + rhs;
    case ArithOp::Sub: return lhs - rhs;
    case ArithOp::Mul: return lhs * rhs;
    case ArithOp::Div: return lhs / rhs;
  }
  throw InternalError("unknown arithmetic op");
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar parse() {
    if (s_.empty()) fail("empty scalar");
    const bool neg = accept('-');
    if (peek() == 'i') {
      ++pos_;
      expect_end();
      return {BigRational(0), BigRational(neg ? -1 : 1)};
    }
    BigRational first = urat();
    if (neg) first = -first;
    if (accept('i')) {
      expect_end();
      return {BigRational(0), first};
    }
    if (at_end()) return {first, BigRational(0)};

    bool minus = false;
    if (accept('-')) {
      minus = true;
    } else if (!accept('+')) {
      fail("expected '+', '-' or end of scalar");
    }
    BigRational second = urat();
    if (!accept('i')) fail("expected 'i' after imaginary coefficient");
    expect_end();
    return {first, minus ? -second : second};
  }

 private:
  BigRational urat() {
    const std::size_t num_start = pos_;
    while (is_digit(peek())) ++pos_;
    if (pos_ == num_start) fail("expected digit");
    const std::string_view num = s_.substr(num_start, pos_ - num_start);
    if (!accept('/')) return BigRational::from_strings(num, "1");

    const std::size_t den_start = pos_;
    bool nonzero = false;
    while (is_digit(peek())) {
      nonzero = nonzero || peek() != '0';
      ++pos_;
    }
    if (pos_ == den_start) fail("expected digit after '/'");
    if (!nonzero) fail_at("zero denominator", den_start);
    return BigRational::from_strings(num, s_.substr(den_start, pos_ - den_start));
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c || at_end()) return false;
    ++pos_;
    return true;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected character");
  }
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what + " in scalar '" + std::string(s_) + "'", at);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view token) { return ScalarParser(token).parse(); }

std::string format_scalar(const Scalar& z) {
  if (z.im().is_zero()) return z.re().to_string();
  if (z.re().is_zero()) return z.im().to_string() + "i";
  std::string out = z.re().to_string();
  if (z.im().sign() > 0) {
    out += '+';
    out += z.im().to_string();
  } else {
    out += '-';
    out += (-z.im()).to_string();
  }
  out += 'i';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& z) { return os << format_scalar(z); }

}  // namespace ginv
