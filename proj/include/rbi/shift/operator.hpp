#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbi/kernel/ratfunc.hpp"

namespace rbi {

/// T^shift R^refl, with T^k f(v) = f(v + k) and R f(v) = f(-v).
struct ShiftKey {
  int shift = 0;
  int refl = 0;
  friend auto operator<=>(const ShiftKey&, const ShiftKey&) = default;
};

/// Finite sum of c(v) T^k R^e with rational-function coefficients in one
/// variable v. Terms act as f(v) -> c(v) f((-1)^e (v + k)).
class ShiftOp {
 public:
  explicit ShiftOp(Symbol var) : var_(var) {}

  static ShiftOp identity(Symbol var) { return scalar(var, RatFunc(Poly(1), var)); }
  static ShiftOp scalar(Symbol var, const RatFunc& c) { return term(var, 0, 0, c); }
  static ShiftOp multiplication(const RatFunc& f) { return term(f.var(), 0, 0, f); }
  static ShiftOp term(Symbol var, int shift, int refl, const RatFunc& c);

  Symbol var() const noexcept { return var_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<ShiftKey, RatFunc>& terms() const noexcept { return terms_; }
  /// Coefficient of T^shift R^refl (zero when absent).
  RatFunc coefficient(int shift, int refl) const;

  /// The constant c when this operator is c * identity with c free of the
  /// variable.
  std::optional<RatFunc> as_scalar() const;

  ShiftOp& operator+=(const ShiftOp& o);
  ShiftOp& operator-=(const ShiftOp& o);
  ShiftOp& operator*=(const RatFunc& c);
  friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
  friend ShiftOp operator-(ShiftOp a, const ShiftOp& b) { return a -= b; }
  friend ShiftOp operator*(ShiftOp a, const RatFunc& c) { return a *= c; }
  friend ShiftOp operator*(ShiftOp a, const Scalar& c) { return a *= RatFunc(Poly(c), a.var()); }
  /// Composition a∘b. Throws VariableMismatch.
  friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b);
  ShiftOp operator-() const;

  friend bool operator==(const ShiftOp& a, const ShiftOp& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  /// Applies the operator to a function of the variable.
  RatFunc apply(const RatFunc& f) const;
  /// Applies the operator to a polynomial; throws NotPolynomialPreserving
  /// when the result has a nontrivial denominator.
  Poly apply_to_polynomial(const Poly& p) const;

  /// Substitutes parameter values in every coefficient.
  ShiftOp substitute(const std::vector<std::pair<Symbol, Poly>>& subs) const;

  std::string to_string() const;

 private:
  void add_term(const ShiftKey& k, const RatFunc& c);

  Symbol var_;
  std::map<ShiftKey, RatFunc> terms_;
};

ShiftOp op_compose(const ShiftOp& a, const ShiftOp& b);
ShiftOp commutator(const ShiftOp& a, const ShiftOp& b);
ShiftOp anticommutator(const ShiftOp& a, const ShiftOp& b);

struct OperatorIdentityResult {
  bool ok = false;
  ShiftOp residual;
};

OperatorIdentityResult verify_operator_identity(const ShiftOp& lhs, const ShiftOp& rhs);

}  // namespace rbi
