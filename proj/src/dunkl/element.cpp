#include "rbi/dunkl/element.hpp"

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>

namespace rbi {

namespace {

void check_index(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("Dunkl variable index must be 1, 2 or 3");
}

// One summand of d^p x^m = sum_j C(p,j) m(m-1)...(m-j+1) x^(m-j) d^(p-j).
struct Leibniz {
  mpz_class factor;
  int a;
  unsigned b;
};

std::vector<Leibniz> reorder(int a_left, unsigned b_left, int a_right, unsigned b_right) {
  std::vector<Leibniz> out;
  mpz_class binom = 1, falling = 1;
  for (unsigned j = 0; j <= b_left; ++j) {
    if (j > 0) {
      binom = binom * (b_left - j + 1) / j;
      falling *= a_right - static_cast<int>(j) + 1;
    }
    if (falling == 0) break;
    out.push_back({binom * falling, a_left + a_right - static_cast<int>(j), b_left - j + b_right});
  }
  return out;
}

}  // namespace

DunklElement::DunklElement(const Poly& c) { add(DunklKey{}, c); }

DunklElement DunklElement::monomial(const DunklKey& k, const Poly& c) {
  DunklElement e;
  e.add(k, c);
  return e;
}

DunklElement DunklElement::x(int i, int power) {
  check_index(i);
  DunklKey k;
  k.a[i - 1] = static_cast<std::int16_t>(power);
  return monomial(k);
}

DunklElement DunklElement::d(int i, unsigned order) {
  check_index(i);
  DunklKey k;
  k.b[i - 1] = static_cast<std::uint16_t>(order);
  return monomial(k);
}

DunklElement DunklElement::refl(int i) {
  check_index(i);
  DunklKey k;
  k.refl = static_cast<std::uint8_t>(1u << (i - 1));
  return monomial(k);
}

DunklElement DunklElement::angular(int i) {
  check_index(i);
  const int j = i % 3 + 1, k = j % 3 + 1;
  return (x(j) * d(k) - x(k) * d(j)) * (-Scalar::i());
}

void DunklElement::add(const DunklKey& k, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly DunklElement::coefficient(const DunklKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Poly() : it->second;
}

bool DunklElement::is_scalar() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == DunklKey{});
}

DunklElement& DunklElement::operator+=(const DunklElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

DunklElement& DunklElement::operator-=(const DunklElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

DunklElement& DunklElement::operator*=(const Poly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

DunklElement DunklElement::operator-() const {
  DunklElement r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

DunklElement operator*(const DunklElement& a, const DunklElement& b) {
  DunklElement out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // R^e x^m d^p = (-1)^(e(m+p)) x^m d^p R^e, then move d^p of ka past x^m of kb.
      int sign = 1;
      std::array<std::vector<Leibniz>, 3> legs;
      bool vanishes = false;
      for (int i = 0; i < 3; ++i) {
        if (((ka.refl >> i) & 1u) && ((kb.a[i] + kb.b[i]) & 1)) sign = -sign;
        legs[i] = reorder(ka.a[i], ka.b[i], kb.a[i], kb.b[i]);
        vanishes = vanishes || legs[i].empty();
      }
      if (vanishes) continue;
      const Poly c = ca * cb;
      DunklKey k;
      k.refl = ka.refl ^ kb.refl;
      for (const auto& l0 : legs[0]) {
        for (const auto& l1 : legs[1]) {
          for (const auto& l2 : legs[2]) {
            k.a = {static_cast<std::int16_t>(l0.a), static_cast<std::int16_t>(l1.a), static_cast<std::int16_t>(l2.a)};
            k.b = {static_cast<std::uint16_t>(l0.b), static_cast<std::uint16_t>(l1.b), static_cast<std::uint16_t>(l2.b)};
            mpz_class f = l0.factor * l1.factor * l2.factor * sign;
            out.add(k, c * Scalar(Rational(f)));
          }
        }
      }
    }
  }
  return out;
}

DunklElement DunklElement::pow(unsigned n) const {
  DunklElement r(1), base = *this;
  while (n) {
    if (n & 1u) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

DunklElement DunklElement::substitute(const std::vector<std::pair<Symbol, Poly>>& subs) const {
  DunklElement out;
  for (const auto& [k, c] : terms_) out.add(k, c.substitute(subs));
  return out;
}

DunklElement DunklElement::substitute_operator(Symbol s, const DunklElement& op) const {
  std::vector<DunklElement> powers{DunklElement(1)};
  DunklElement out;
  for (const auto& [k, c] : terms_) {
    const std::vector<Poly> coeffs = c.coefficients_in(s);
    while (powers.size() < coeffs.size()) powers.push_back(powers.back() * op);
    DunklElement lhs;
    for (std::size_t j = 0; j < coeffs.size(); ++j) lhs += powers[j] * coeffs[j];
    out += lhs * monomial(k);
  }
  return out;
}

std::string DunklElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]";
    for (int i = 0; i < 3; ++i) {
      if (k.a[i] == 1) os << "*x" << i + 1;
      else if (k.a[i] != 0) os << "*x" << i + 1 << "^" << k.a[i];
    }
    for (int i = 0; i < 3; ++i) {
      if (k.b[i] == 1) os << "*d" << i + 1;
      else if (k.b[i] != 0) os << "*d" << i + 1 << "^" << k.b[i];
    }
    for (int i = 0; i < 3; ++i) {
      if ((k.refl >> i) & 1u) os << "*R" << i + 1;
    }
  }
  return os.str();
}

DunklElement commutator(const DunklElement& a, const DunklElement& b) { return a * b - b * a; }

DunklElement anticommutator(const DunklElement& a, const DunklElement& b) { return a * b + b * a; }

}  // namespace rbi
