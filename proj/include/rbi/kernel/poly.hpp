#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rbi/kernel/scalar.hpp"
#include "rbi/kernel/symbol.hpp"

namespace rbi {

/// Power product over the fixed symbol table, ordered deg-lex.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Symbol s, unsigned exponent = 1);

  unsigned exponent(Symbol s) const noexcept { return exps_[s.index()]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  /// Bit i set iff symbol i occurs.
  std::uint32_t support() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(); exponents are subtracted.
  Monomial operator/(const Monomial& other) const;
  Monomial without(Symbol s) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

  std::string to_string() const;

 private:
  std::array<std::uint8_t, kSymbolCount> exps_{};
  std::uint16_t degree_ = 0;
};

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
/// Terms are kept sorted by strictly decreasing monomial; no zero coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, Scalar>;

  Poly() = default;
  Poly(Scalar c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(Monomial m, Scalar c);
  static Poly var(Symbol s, unsigned exponent = 1);
  /// Builds from arbitrary terms; duplicates are combined, zeros dropped.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term value (zero when absent).
  Scalar constant_term() const;
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  unsigned total_degree() const;
  std::uint32_t support() const noexcept;
  bool depends_on(Symbol s) const noexcept { return (support() >> s.index()) & 1u; }
  unsigned degree_in(Symbol s) const;

  /// Coefficients c_k with this = sum_k c_k * s^k; c_k does not involve s.
  std::vector<Poly> coefficients_in(Symbol s) const;
  static Poly from_coefficients(Symbol s, const std::vector<Poly>& coeffs);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  Poly operator-() const;
  Poly pow(unsigned n) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Simultaneous substitution s -> value for every listed symbol.
  Poly substitute(const std::vector<std::pair<Symbol, Poly>>& subs) const;
  Poly substitute(Symbol s, const Poly& value) const { return substitute({{s, value}}); }

  /// Scales so the deg-lex leading coefficient is 1 (zero stays zero).
  Poly monic() const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Coefficient ring of every structure constant and operator coefficient.
using ParamPoly = Poly;

/// Exact quotient a / b. Throws NotDivisible when b does not divide a and
/// ZeroDenominator when b is zero.
Poly divide_exact(const Poly& a, const Poly& b);
/// Returns true and writes the quotient when b divides a.
bool try_divide(const Poly& a, const Poly& b, Poly* quotient);

/// Greatest common divisor over Q(i)[symbols], normalized by Poly::monic().
/// gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Univariate view: gcd made monic in `var` whenever its leading coefficient
/// in `var` is a scalar (otherwise deg-lex monic).
Poly poly_gcd(const Poly& a, const Poly& b, Symbol var);

}  // namespace rbi
