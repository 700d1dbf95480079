#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trilie {

/// Exact rational number, always reduced, denominator > 0.
using Rational = mpq_class;

/// Scalar field of an algebra, a map or a form.
enum class Field { rational, gaussian_rational };

const char* field_name(Field f);
Field parse_field(std::string_view name);

/// Gaussian rational re + im*i with exact rational components.
///
/// Values with im == 0 represent plain rationals; whether a context demands
/// that is decided by the Field tag of the owning object, not by the scalar.
struct Scalar {
  Rational re{0};
  Rational im{0};

  Scalar() = default;
  Scalar(long n) : re(n) {}  // NOLINT: implicit on purpose, mirrors mpq_class
  Scalar(long num, long den);
  explicit Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  Scalar conj() const { return Scalar(re, -im); }

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  ///< throws std::domain_error on zero divisor

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

/// The imaginary unit.
Scalar imaginary_unit();

Scalar inverse(const Scalar& s);  ///< throws std::domain_error on zero

/// Parses "p", "p/q", "a+bi", "a-bi/c", "bi/c", "i", "-i", ...
/// The imaginary term is written with the 'i' attached to its numerator
/// ("3i/4" means (3/4)i). Throws ParseError on malformed input.
Scalar parse_scalar(std::string_view text);

/// Parses a plain rational ("p" or "p/q"); rejects imaginary parts.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Scalar& s);

/// Error for malformed textual input (scalars and data files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace trilie
