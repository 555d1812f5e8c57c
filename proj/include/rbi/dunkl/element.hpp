#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rbi/kernel/poly.hpp"

namespace rbi {

/// x1^a1 x2^a2 x3^a3 d1^b1 d2^b2 d3^b3 R1^e1 R2^e2 R3^e3, stored in that order.
/// Bit i of `refl` is the exponent of R_{i+1}.
struct DunklKey {
  std::array<std::int16_t, 3> a{};
  std::array<std::uint16_t, 3> b{};
  std::uint8_t refl = 0;
  friend auto operator<=>(const DunklKey&, const DunklKey&) = default;
};

/// Normal-ordered differential-reflection operator in x1, x2, x3 with
/// Laurent coordinate powers and ParamPoly coefficients.
class DunklElement {
 public:
  DunklElement() = default;
  DunklElement(const Poly& c);  // NOLINT(google-explicit-constructor)
  DunklElement(long c) : DunklElement(Poly(c)) {}  // NOLINT(google-explicit-constructor)

  static DunklElement monomial(const DunklKey& k, const Poly& c = Poly(1));
  /// Variables are numbered 1..3.
  static DunklElement x(int i, int power = 1);
  static DunklElement d(int i, unsigned order = 1);
  static DunklElement refl(int i);
  /// L1 = -i(x2 d3 - x3 d2) and cyclically.
  static DunklElement angular(int i);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<DunklKey, Poly>& terms() const noexcept { return terms_; }
  Poly coefficient(const DunklKey& k) const;
  /// The coefficient c when this element is c times the identity.
  bool is_scalar() const noexcept;
  Poly scalar_value() const { return coefficient(DunklKey{}); }

  DunklElement& operator+=(const DunklElement& o);
  DunklElement& operator-=(const DunklElement& o);
  DunklElement& operator*=(const Poly& c);
  friend DunklElement operator+(DunklElement a, const DunklElement& b) { return a += b; }
  friend DunklElement operator-(DunklElement a, const DunklElement& b) { return a -= b; }
  friend DunklElement operator*(DunklElement a, const Poly& c) { return a *= c; }
  friend DunklElement operator*(const Poly& c, DunklElement a) { return a *= c; }
  friend DunklElement operator*(DunklElement a, const Scalar& c) { return a *= Poly(c); }
  friend DunklElement operator*(const Scalar& c, DunklElement a) { return a *= Poly(c); }
  /// Normal-ordered product.
  friend DunklElement operator*(const DunklElement& a, const DunklElement& b);
  DunklElement operator-() const;
  DunklElement pow(unsigned n) const;

  friend bool operator==(const DunklElement&, const DunklElement&) = default;

  DunklElement substitute(const std::vector<std::pair<Symbol, Poly>>& subs) const;
  /// Replaces the parameter s by an operator placed to the left of each
  /// monomial, i.e. c(s) x^a d^b R^e -> c(op) x^a d^b R^e.
  DunklElement substitute_operator(Symbol s, const DunklElement& op) const;

  /// Terms in decreasing key order, "[coef]*x1^-2*d2^2*R1".
  std::string to_string() const;

 private:
  void add(const DunklKey& k, const Poly& c);

  std::map<DunklKey, Poly> terms_;
};

DunklElement commutator(const DunklElement& a, const DunklElement& b);
DunklElement anticommutator(const DunklElement& a, const DunklElement& b);

}  // namespace rbi
