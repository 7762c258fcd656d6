#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ginv {

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator, so equality is structural.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t num, std::int64_t den);
  explicit BigRational(mpq_class v);

  // Decimal digit strings, optional leading '-' on the numerator only.
  static BigRational from_strings(std::string_view num, std::string_view den);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "n" or "n/d".
  std::string to_string() const;
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

// An element of Q(i). The involution of the matrix *-ring acts on scalars as
// complex conjugation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  // re^2 + im^2; zero exactly when the value is zero.
  BigRational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  // Throws DivisionByZero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  GaussianRational inverse() const;

 private:
  BigRational re_;
  BigRational im_;
};

using Scalar = GaussianRational;

enum class ArithOp { Add, Sub, Mul, Div };

Scalar scalar_arith(ArithOp op, const Scalar& lhs, const Scalar& rhs);
inline Scalar conjugate(const Scalar& z) { return z.conj(); }

// Grammar:
//   scalar := real | imag | real sign uimag
//   real   := rat        imag := ['-'] urat 'i' | ['-'] 'i'
//   uimag  := urat 'i'   rat  := ['-'] urat
//   urat   := digits ['/' nonzero-digits]
// No whitespace. Throws ParseError with the offending character offset.
Scalar parse_scalar(std::string_view token);

// Canonical token: reduced, "/1" omitted, zero imaginary part omitted, zero is
// "0", imaginary coefficient always explicit ("1+1i", "-2/3i").
std::string format_scalar(const Scalar& z);

std::ostream& operator<<(std::ostream& os, const Scalar& z);

}  // namespace ginv
