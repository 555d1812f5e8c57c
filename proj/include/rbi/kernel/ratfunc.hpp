#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rbi/kernel/poly.hpp"

namespace rbi {

/// Reduced quotient of two polynomials with a distinguished variable.
///
/// Canonical form: gcd(num, den) is a unit, and the denominator is scaled so
/// that the leading coefficient of its top power of the distinguished
/// variable has deg-lex leading scalar 1. For every denominator met in the
/// realizations that coefficient is a scalar, so the denominator is monic in
/// the variable. Equality of canonical forms is plain data equality.
class RatFunc {
 public:
  explicit RatFunc(Symbol var = sym::z) : num_(), den_(1), var_(var) {}
  RatFunc(Poly p, Symbol var) : num_(std::move(p)), den_(1), var_(var) {}

  /// Reduces n/d to canonical form. Throws ZeroDenominator when d = 0.
  static RatFunc normalize(Poly n, Poly d, Symbol var);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  Symbol var() const noexcept { return var_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  /// True when independent of every symbol.
  bool is_scalar() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool depends_on(Symbol s) const noexcept { return num_.depends_on(s) || den_.depends_on(s); }

  /// The numerator when the denominator is 1. Throws NotPolynomialPreserving.
  Poly as_poly() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc& operator*=(const Scalar& c);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const Scalar& c) { return a *= c; }
  RatFunc operator-() const;
  RatFunc inverse() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// The same value with another distinguished variable. Throws
  /// VariableMismatch when the value depends on its current variable.
  RatFunc with_var(Symbol v) const;

  /// Simultaneous substitution in numerator and denominator.
  RatFunc substitute(const std::vector<std::pair<Symbol, Poly>>& subs) const;
  /// f(v) -> f(sign*v + offset) in the distinguished variable.
  RatFunc affine_arg(int sign, const Scalar& offset) const;

  std::string to_string() const;

 private:
  RatFunc(Poly n, Poly d, Symbol var, bool) : num_(std::move(n)), den_(std::move(d)), var_(var) {}
  // Adopts o's variable when this value does not involve its own.
  void check_var(const RatFunc& o);
  void rescale();

  Poly num_;
  Poly den_;
  Symbol var_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

/// Free-function spelling of RatFunc::normalize.
inline RatFunc ratfunc_normalize(Poly n, Poly d, Symbol var) {
  return RatFunc::normalize(std::move(n), std::move(d), var);
}

}  // namespace rbi
