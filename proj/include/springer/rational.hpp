#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <iosfwd>
#include <string>
#include <utility>

namespace springer {

// Arbitrary-precision rational over GMP. Values stay normalized (lowest
// terms, positive denominator), which is exactly the invariant the rest of
// the library relies on for structural equality.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Rational from a possibly negative denominator (cpp_rational itself
/// rejects those); result is normalized with positive denominator.
inline Rational make_rational(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Exact complex scalar a+bi with rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(int v) : re(v) {}  // NOLINT: implicit by design
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  // std::complex-style accessors (Eigen's numext::real/imag look for these).
  const Rational& real() const { return re; }
  const Rational& imag() const { return im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
inline Rational real(const GaussianRational& z) { return z.re; }
inline Rational imag(const GaussianRational& z) { return z.im; }

/// |z|^2 = z * conj(z); always a plain rational.
inline Rational norm2(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  Rational n = norm2(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

/// Text format `a/b+c/d*i` with optional parts, e.g. "3", "-1/2*i", "0", "1+1*i".
std::string format_scalar(const GaussianRational& z);

/// Inverse of format_scalar; also accepts "i", "-i" and "+" separated parts
/// in either order. Throws std::invalid_argument on malformed input.
GaussianRational parse_scalar(const std::string& text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace springer

namespace Eigen {

template <typename T>
struct NumTraits;

template <>
struct NumTraits<springer::GaussianRational> {
  using Self = springer::GaussianRational;
  using Real = springer::Rational;
  using NonInteger = Self;
  using Literal = Self;
  using Nested = Self;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 80,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<springer::Rational> {
  using Real = springer::Rational;
  using NonInteger = springer::Rational;
  using Literal = springer::Rational;
  using Nested = springer::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 40,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
