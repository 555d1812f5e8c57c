#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rbi {

using Rational = mpq_class;

/// Renders a rational as "p/q", always with an explicit denominator.
std::string rational_to_string(const Rational& q);

/// Parses "p", "p/q" or "-p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Exact Gaussian rational re + i*im.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar frac(long num, long den);
  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "p/q" for real values, "p/q+r/si" style otherwise.
  std::string to_string() const;
  /// Compact human form: integers without "/1", "i" suffix for imaginary parts.
  std::string pretty() const;

  static Scalar parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace rbi
