#include "rbi/kernel/scalar.hpp"

#include <ostream>

#include "rbi/errors.hpp"

namespace rbi {

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k) {
      if (t[k] < '0' || t[k] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("malformed rational '" + s + "'");
    return Rational(mpz_class(strip_plus(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + s + "'");
  }
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational q(mpz_class(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

Scalar Scalar::frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero scalar");
  if (is_real()) return Scalar(Rational(1) / re_);
  const Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ZeroDenominator("division by zero scalar");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string out;
  if (sgn(re_) != 0) out = rational_to_string(re_);
  if (sgn(im_) > 0 && !out.empty()) out += "+";
  out += rational_to_string(im_) + "i";
  return out;
}

std::string Scalar::pretty() const {
  if (is_real()) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) > 0 && !out.empty()) out += "+";
  if (im_ == 1) {
    out += "i";
  } else if (im_ == -1) {
    out += "-i";
  } else {
    out += im_.get_str() + "i";
  }
  return sgn(re_) != 0 ? "(" + out + ")" : out;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  s.pop_back();
  // Split real and imaginary parts at the last sign that is not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_of = [](std::string t) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return parse_rational(t);
  };
  if (split == std::string::npos) return Scalar(Rational(0), imag_of(s));
  return Scalar(parse_rational(s.substr(0, split)), imag_of(s.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.pretty(); }

}  // namespace rbi
