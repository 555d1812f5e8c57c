#include "rbi/shift/operator.hpp"

#include <sstream>

#include "rbi/errors.hpp"

namespace rbi {

namespace {

int sign_of(int refl) { return refl ? -1 : 1; }

}  // namespace

ShiftOp ShiftOp::term(Symbol var, int shift, int refl, const RatFunc& c) {
  ShiftOp op(var);
  op.add_term({shift, refl & 1}, c);
  return op;
}

void ShiftOp::add_term(const ShiftKey& k, const RatFunc& c) {
  if (c.is_zero()) return;
  const RatFunc cv = c.var() == var_ ? c : c.with_var(var_);
  auto [it, inserted] = terms_.try_emplace(k, cv);
  if (inserted) return;
  it->second += cv;
  if (it->second.is_zero()) terms_.erase(it);
}

RatFunc ShiftOp::coefficient(int shift, int refl) const {
  auto it = terms_.find({shift, refl});
  return it == terms_.end() ? RatFunc(var_) : it->second;
}

std::optional<RatFunc> ShiftOp::as_scalar() const {
  if (terms_.empty()) return RatFunc(var_);
  if (terms_.size() != 1 || terms_.begin()->first != ShiftKey{0, 0}) return std::nullopt;
  const RatFunc& c = terms_.begin()->second;
  if (c.depends_on(var_)) return std::nullopt;
  return c;
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& o) {
  if (o.var_ != var_) throw VariableMismatch("adding operators in different variables");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& o) {
  if (o.var_ != var_) throw VariableMismatch("subtracting operators in different variables");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ShiftOp& ShiftOp::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

ShiftOp ShiftOp::operator-() const {
  ShiftOp r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
  if (a.var_ != b.var_) throw VariableMismatch("composing operators in different variables");
  ShiftOp out(a.var_);
  // (c T^p R^e)(d T^q R^f) = c(v) d((-1)^e (v + p)) T^(p + (-1)^e q) R^(e xor f)
  for (const auto& [ka, ca] : a.terms_) {
    const int s = sign_of(ka.refl);
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term({ka.shift + s * kb.shift, ka.refl ^ kb.refl}, ca * cb.affine_arg(s, Scalar(s * ka.shift)));
    }
  }
  return out;
}

RatFunc ShiftOp::apply(const RatFunc& f) const {
  if (f.var() != var_ && f.depends_on(f.var())) {
    throw VariableMismatch("applying an operator to a function of another variable");
  }
  const RatFunc fv = f.with_var(var_);
  RatFunc out(var_);
  for (const auto& [k, c] : terms_) {
    const int s = sign_of(k.refl);
    out += c * fv.affine_arg(s, Scalar(s * k.shift));
  }
  return out;
}

Poly ShiftOp::apply_to_polynomial(const Poly& p) const {
  const RatFunc r = apply(RatFunc(p, var_));
  if (!r.is_polynomial()) {
    throw NotPolynomialPreserving("operator maps " + p.to_string() + " to the non-polynomial " + r.to_string());
  }
  return r.num() * r.den().constant_term().inverse();
}

ShiftOp ShiftOp::substitute(const std::vector<std::pair<Symbol, Poly>>& subs) const {
  ShiftOp out(var_);
  for (const auto& [k, c] : terms_) out.add_term(k, c.substitute(subs));
  return out;
}

std::string ShiftOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]";
    if (k.shift != 0) os << "*T^" << k.shift;
    if (k.refl != 0) os << "*R";
  }
  return os.str();
}

ShiftOp op_compose(const ShiftOp& a, const ShiftOp& b) { return a * b; }

ShiftOp commutator(const ShiftOp& a, const ShiftOp& b) { return a * b - b * a; }

ShiftOp anticommutator(const ShiftOp& a, const ShiftOp& b) { return a * b + b * a; }

OperatorIdentityResult verify_operator_identity(const ShiftOp& lhs, const ShiftOp& rhs) {
  OperatorIdentityResult r{false, lhs - rhs};
  r.ok = r.residual.is_zero();
  return r;
}

}  // namespace rbi
