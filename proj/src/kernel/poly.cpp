#include "rbi/kernel/poly.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

#include "rbi/errors.hpp"

namespace rbi {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Symbol s, unsigned exponent) {
  if (exponent > 255) throw Error("monomial exponent overflow");
  Monomial m;
  m.exps_[s.index()] = static_cast<std::uint8_t>(exponent);
  m.degree_ = static_cast<std::uint16_t>(exponent);
  return m;
}

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < kSymbolCount; ++k) {
    if (exps_[k] != 0) mask |= (1u << k);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t k = 0; k < kSymbolCount; ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t k = 0; k < kSymbolCount; ++k) {
    const unsigned e = unsigned(exps_[k]) + other.exps_[k];
    if (e > 255) throw Error("monomial exponent overflow");
    m.exps_[k] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t k = 0; k < kSymbolCount; ++k) {
    m.exps_[k] = static_cast<std::uint8_t>(exps_[k] - other.exps_[k]);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return m;
}

Monomial Monomial::without(Symbol s) const {
  Monomial m = *this;
  m.degree_ = static_cast<std::uint16_t>(m.degree_ - m.exps_[s.index()]);
  m.exps_[s.index()] = 0;
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < kSymbolCount; ++k) {
    if (exps_[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += Symbol(static_cast<std::uint8_t>(k)).name();
    if (exps_[k] > 1) out += "^" + std::to_string(exps_[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Poly basics

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return a.first > b.first; }

// Sorts descending and merges equal monomials.
std::vector<Poly::Term> canonical(std::vector<Poly::Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Poly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return out;
}

// Merges two sorted term lists: a + sign*b.
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                              bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      Scalar c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(Scalar c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
}

Poly::Poly(Monomial m, Scalar c) {
  if (!c.is_zero()) terms_.emplace_back(std::move(m), std::move(c));
}

Poly Poly::var(Symbol s, unsigned exponent) { return Poly(Monomial::of(s, exponent), Scalar(1)); }

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = canonical(std::move(terms));
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Scalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return Scalar(0);
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

std::uint32_t Poly::support() const noexcept {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) mask |= t.first.support();
  return mask;
}

unsigned Poly::degree_in(Symbol s) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(s));
  return d;
}

std::vector<Poly> Poly::coefficients_in(Symbol s) const {
  std::vector<std::vector<Term>> buckets(degree_in(s) + 1);
  for (const auto& t : terms_) buckets[t.first.exponent(s)].emplace_back(t.first.without(s), t.second);
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Removing one variable keeps the relative order of a bucket intact.
    Poly p;
    p.terms_ = std::move(b);
    out.push_back(std::move(p));
  }
  if (terms_.empty()) out.assign(1, Poly());
  return out;
}

Poly Poly::from_coefficients(Symbol s, const std::vector<Poly>& coeffs) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Monomial m = Monomial::of(s, static_cast<unsigned>(k));
    for (const auto& t : coeffs[k].terms_) all.emplace_back(t.first * m, t.second);
  }
  return from_terms(std::move(all));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (b.terms_.size() == 1) {
    Poly out = a;
    const auto& [m, c] = b.terms_.front();
    for (auto& t : out.terms_) {
      t.first = t.first * m;
      t.second *= c;
    }
    return out;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<Poly::Term> all;
  all.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) all.emplace_back(ma * mb, ca * cb);
  }
  Poly out;
  out.terms_ = canonical(std::move(all));
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1);
  Poly base = *this;
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return result;
}

Poly Poly::substitute(const std::vector<std::pair<Symbol, Poly>>& subs) const {
  if (subs.empty() || terms_.empty()) return *this;
  std::uint32_t mask = 0;
  for (const auto& s : subs) mask |= (1u << s.first.index());
  if ((support() & mask) == 0) return *this;

  // Group terms by the exponents of substituted symbols so each distinct
  // power product is expanded once.
  using Key = std::vector<unsigned>;
  std::map<Key, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Key key(subs.size());
    Monomial rest = t.first;
    for (std::size_t k = 0; k < subs.size(); ++k) {
      key[k] = t.first.exponent(subs[k].first);
      rest = rest.without(subs[k].first);
    }
    groups[key].emplace_back(rest, t.second);
  }
  std::vector<std::map<unsigned, Poly>> powers(subs.size());
  auto power = [&](std::size_t k, unsigned e) -> const Poly& {
    auto it = powers[k].find(e);
    if (it == powers[k].end()) it = powers[k].emplace(e, subs[k].second.pow(e)).first;
    return it->second;
  };
  std::vector<Term> all;
  for (const auto& [key, rest_terms] : groups) {
    Poly factor(1);
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (key[k] != 0) factor *= power(k, key[k]);
    }
    Poly rest;
    rest.terms_ = canonical(rest_terms);
    Poly prod = rest * factor;
    for (auto& t : prod.terms_) all.push_back(std::move(t));
  }
  return from_terms(std::move(all));
}

Poly Poly::monic() const {
  if (terms_.empty() || terms_.front().second.is_one()) return *this;
  return *this * terms_.front().second.inverse();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      cs = negative ? Rational(-c.re()).get_str() : c.re().get_str();
    } else {
      cs = c.pretty();
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << m.to_string();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Exact division

namespace {

bool divide_by_monomial_term(const Poly& a, const Poly::Term& b, Poly* q) {
  std::vector<Poly::Term> out;
  out.reserve(a.size());
  const Scalar inv = b.second.inverse();
  for (const auto& [m, c] : a.terms()) {
    if (!b.first.divides(m)) return false;
    out.emplace_back(m / b.first, c * inv);
  }
  *q = Poly::from_terms(std::move(out));
  return true;
}

}  // namespace

bool try_divide(const Poly& a, const Poly& b, Poly* quotient) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  if (a.is_zero()) {
    *quotient = Poly();
    return true;
  }
  if (b.is_constant()) {
    *quotient = a * b.leading_term().second.inverse();
    return true;
  }
  const std::uint32_t sb = b.support();
  if ((sb & ~a.support()) != 0) return false;
  if (b.size() == 1) return divide_by_monomial_term(a, b.leading_term(), quotient);

  // Recursive long division in a main variable of b; prefer the one whose
  // leading coefficient is smallest (a scalar makes each step trivial).
  Symbol main(0);
  std::size_t best = SIZE_MAX;
  for (std::size_t k = 0; k < kSymbolCount; ++k) {
    if (((sb >> k) & 1u) == 0) continue;
    const Symbol s(static_cast<std::uint8_t>(k));
    if (a.degree_in(s) < b.degree_in(s)) return false;
    const std::size_t lc_size = b.coefficients_in(s).back().size();
    if (lc_size < best) {
      best = lc_size;
      main = s;
    }
  }
  std::vector<Poly> A = a.coefficients_in(main);
  const std::vector<Poly> B = b.coefficients_in(main);
  const std::size_t db = B.size() - 1;
  const std::size_t da = A.size() - 1;
  std::vector<Poly> Q(da - db + 1);
  for (std::size_t k = da + 1; k-- > db;) {
    if (A[k].is_zero()) continue;
    Poly qk;
    if (!try_divide(A[k], B[db], &qk)) return false;
    for (std::size_t j = 0; j <= db; ++j) A[k - db + j] -= qk * B[j];
    Q[k - db] = std::move(qk);
  }
  for (std::size_t k = 0; k < db; ++k) {
    if (!A[k].is_zero()) return false;
  }
  *quotient = Poly::from_coefficients(main, Q);
  return true;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  Poly q;
  if (!try_divide(a, b, &q)) throw NotDivisible("polynomial does not divide exactly");
  return q;
}

// ---------------------------------------------------------------------------
// GCD: recursive primitive remainder sequences.

namespace {

using Uni = std::vector<Poly>;  // coefficient k multiplies main^k

void trim(Uni& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// Coefficients of p viewed as a polynomial in the symbols of `mask`.
std::vector<Poly> coefficients_wrt(const Poly& p, std::uint32_t mask) {
  std::map<Monomial, std::vector<Poly::Term>> groups;
  for (const auto& [m, c] : p.terms()) {
    Monomial outer, inner = m;
    for (std::size_t k = 0; k < kSymbolCount; ++k) {
      if (((mask >> k) & 1u) == 0) continue;
      const Symbol s(static_cast<std::uint8_t>(k));
      outer = outer * Monomial::of(s, m.exponent(s));
      inner = inner.without(s);
    }
    groups[outer].emplace_back(inner, c);
  }
  std::vector<Poly> out;
  out.reserve(groups.size());
  for (auto& [outer, terms] : groups) out.push_back(Poly::from_terms(std::move(terms)));
  // Smallest coefficients first: they tend to terminate the gcd fold early.
  std::sort(out.begin(), out.end(), [](const Poly& l, const Poly& r) { return l.size() < r.size(); });
  return out;
}

Poly content(const Uni& u) {
  Poly g;
  for (const auto& c : u) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return Poly(1);
  }
  return g;
}

Uni primitive_part(Uni u) {
  trim(u);
  if (u.empty()) return u;
  const Poly c = content(u);
  if (c.is_constant()) {
    const Scalar inv = u.back().leading_term().second.inverse();
    for (auto& k : u) k *= inv;
    return u;
  }
  for (auto& k : u) k = divide_exact(k, c);
  return u;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Uni pseudo_remainder(Uni a, const Uni& b) {
  const Poly& lc = b.back();
  const bool scalar_lc = lc.is_constant();
  const Scalar lc_inv = scalar_lc ? lc.leading_term().second.inverse() : Scalar(0);
  trim(a);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Poly top = a.back();
    if (scalar_lc) {
      const Poly f = top * lc_inv;
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    } else {
      for (auto& k : a) k *= lc;
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= top * b[j];
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();

  const std::uint32_t sa = a.support();
  const std::uint32_t sb = b.support();
  // Symbols present on one side only: the gcd lives in the other side's
  // ring, so fold over the coefficients with respect to those symbols.
  if ((sa & ~sb) != 0) {
    Poly g = b;
    for (const auto& c : coefficients_wrt(a, sa & ~sb)) {
      g = gcd(g, c);
      if (g.is_constant()) return Poly(1);
    }
    return g.monic();
  }
  if ((sb & ~sa) != 0) return gcd(b, a);

  Poly q;
  if (a.size() >= b.size() && try_divide(a, b, &q)) return b.monic();
  if (b.size() > a.size() && try_divide(b, a, &q)) return a.monic();

  // Same support: primitive PRS in the symbol of lowest combined degree.
  Symbol main(0);
  unsigned best = ~0u;
  for (std::size_t k = 0; k < kSymbolCount; ++k) {
    if (((sa >> k) & 1u) == 0) continue;
    const Symbol s(static_cast<std::uint8_t>(k));
    const unsigned deg = std::max(a.degree_in(s), b.degree_in(s));
    if (deg < best) {
      best = deg;
      main = s;
    }
  }
  Uni ua = a.coefficients_in(main);
  Uni ub = b.coefficients_in(main);
  const Poly ca = content(ua);
  const Poly cb = content(ub);
  const Poly c = gcd(ca, cb);
  ua = primitive_part(std::move(ua));
  ub = primitive_part(std::move(ub));
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (true) {
    Uni r = pseudo_remainder(ua, ub);
    if (r.empty()) break;
    if (r.size() == 1) {
      ub = Uni{Poly(1)};
      break;
    }
    ua = std::move(ub);
    ub = primitive_part(std::move(r));
  }
  return (c * Poly::from_coefficients(main, primitive_part(std::move(ub)))).monic();
}

Poly poly_gcd(const Poly& a, const Poly& b, Symbol var) {
  Poly g = gcd(a, b);
  if (g.is_zero()) return g;
  const Poly lc = g.coefficients_in(var).back();
  if (lc.is_constant()) g *= lc.leading_term().second.inverse();
  return g;
}

}  // namespace rbi
