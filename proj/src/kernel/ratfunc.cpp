#include "rbi/kernel/ratfunc.hpp"

#include <ostream>

#include "rbi/errors.hpp"

namespace rbi {

RatFunc RatFunc::normalize(Poly n, Poly d, Symbol var) {
  if (d.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (n.is_zero()) return RatFunc(var);
  if (!d.is_constant()) {
    const Poly g = gcd(n, d);
    if (!g.is_constant()) {
      n = divide_exact(n, g);
      d = divide_exact(d, g);
    }
  }
  RatFunc r(std::move(n), std::move(d), var, true);
  r.rescale();
  return r;
}

void RatFunc::rescale() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Scalar lead;
  if (den_.is_constant()) {
    lead = den_.leading_term().second;
  } else {
    lead = den_.coefficients_in(var_).back().leading_term().second;
  }
  if (lead.is_one()) return;
  const Scalar inv = lead.inverse();
  num_ *= inv;
  den_ *= inv;
}

void RatFunc::check_var(const RatFunc& o) {
  if (o.var_ == var_ || !o.depends_on(o.var_)) return;
  if (depends_on(var_)) throw VariableMismatch("rational functions in different variables");
  var_ = o.var_;
}

RatFunc RatFunc::with_var(Symbol v) const {
  if (v == var_) return *this;
  if (depends_on(var_)) throw VariableMismatch("rational function depends on its own variable");
  RatFunc r(num_, den_, v, true);
  r.rescale();
  return r;
}

Poly RatFunc::as_poly() const {
  if (!den_.is_constant()) {
    throw NotPolynomialPreserving("rational function " + to_string() + " is not a polynomial");
  }
  return num_;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  check_var(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    Poly n = num_ + o.num_;
    if (den_.is_constant()) {
      num_ = std::move(n);
      return *this;
    }
    return *this = normalize(std::move(n), den_, var_);
  }
  if (den_.is_constant()) {
    // den_ == 1 here, so n1*d2 + n2 over d2 is already reduced.
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (o.den_.is_constant()) {
    num_ += o.num_ * den_;
    return *this;
  }
  const Poly g = gcd(den_, o.den_);
  const Poly d1 = divide_exact(den_, g);
  const Poly d2 = divide_exact(o.den_, g);
  Poly n = num_ * d2 + o.num_ * d1;
  Poly d = den_ * d2;
  if (n.is_zero()) return *this = RatFunc(var_);
  if (!g.is_constant()) {
    // Any common factor of n and d divides g.
    const Poly h = gcd(n, g);
    if (!h.is_constant()) {
      n = divide_exact(n, h);
      d = divide_exact(d, h);
    }
  }
  num_ = std::move(n);
  den_ = std::move(d);
  rescale();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const Scalar& c) {
  if (c.is_zero()) return *this = RatFunc(var_);
  num_ *= c;
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  check_var(o);
  if (is_zero() || o.is_zero()) return *this = RatFunc(var_);
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_constant()) {
    const Poly g = gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = divide_exact(n1, g);
      d2 = divide_exact(d2, g);
    }
  }
  if (!d1.is_constant()) {
    const Poly g = gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = divide_exact(n2, g);
      d1 = divide_exact(d1, g);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  rescale();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero rational function");
  RatFunc r(den_, num_, var_, true);
  r.rescale();
  return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::substitute(const std::vector<std::pair<Symbol, Poly>>& subs) const {
  Poly d = den_.substitute(subs);
  if (d.is_zero()) throw ZeroDenominator("substitution makes the denominator vanish");
  return normalize(num_.substitute(subs), std::move(d), var_);
}

RatFunc RatFunc::affine_arg(int sign, const Scalar& offset) const {
  if (sign == 1 && offset.is_zero()) return *this;
  const Poly arg = Poly::var(var_) * Scalar(sign) + Poly(offset);
  // An invertible affine change of variable preserves coprimality, so only
  // the leading scale needs fixing.
  RatFunc r(num_.substitute(var_, arg), den_.substitute(var_, arg), var_, true);
  r.rescale();
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) {
    if (den_.leading_term().second.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/" + den_.leading_term().second.pretty();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

}  // namespace rbi
