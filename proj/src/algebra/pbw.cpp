#include "rbi/algebra/pbw.hpp"

#include <algorithm>
#include <sstream>

#include "rbi/errors.hpp"

namespace rbi {

std::string to_string(AlgebraKind kind) {
  return kind == AlgebraKind::Racah ? "racah" : "bannai-ito";
}

namespace {

unsigned mono_degree(const PbwMonomial& m) { return unsigned(m[0]) + m[1] + m[2]; }

bool deglex_greater(const PbwMonomial& a, const PbwMonomial& b) {
  const unsigned da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

PbwElement::PbwElement(AlgebraKind kind, const PbwMonomial& m, Poly c) : kind_(kind) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

Poly PbwElement::coefficient(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Poly() : it->second;
}

unsigned PbwElement::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

void PbwElement::add_term(const PbwMonomial& m, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PbwElement& PbwElement::operator+=(const PbwElement& o) {
  if (o.kind_ != kind_) throw MixedAlgebras("adding elements of different algebras");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& o) {
  if (o.kind_ != kind_) throw MixedAlgebras("subtracting elements of different algebras");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PbwElement& PbwElement::operator*=(const Poly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = v * c;
  return *this;
}

PbwElement PbwElement::operator-() const {
  PbwElement r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

std::string PbwElement::to_string() const {
  if (terms_.empty()) return "0";
  static const std::array<std::string, 3> racah{"kappa1", "kappa2", "kappa3"};
  static const std::array<std::string, 3> bi{"X", "Y", "Z"};
  const auto& names = kind_ == AlgebraKind::Racah ? racah : bi;

  std::vector<const std::pair<const PbwMonomial, Poly>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return deglex_greater(a->first, b->first); });

  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    std::string mono;
    for (unsigned g = 0; g < 3; ++g) {
      if (t->first[g] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[g];
      if (t->first[g] > 1) mono += "^" + std::to_string(t->first[g]);
    }
    const Poly& c = t->second;
    std::string term;
    if (mono.empty()) {
      term = c.size() == 1 ? c.to_string() : "(" + c.to_string() + ")";
    } else if (c == Poly(1)) {
      term = mono;
    } else if (c == Poly(-1)) {
      term = "-" + mono;
    } else if (c.is_constant()) {
      term = c.constant_term().pretty() + "*" + mono;
    } else {
      term = "(" + c.to_string() + ")*" + mono;
    }
    if (first) {
      os << term;
    } else if (term[0] == '-') {
      os << " - " << term.substr(1);
    } else {
      os << " + " << term;
    }
    first = false;
  }
  return os.str();
}

PbwAlgebra::PbwAlgebra(AlgebraKind kind, std::array<std::string, 3> names)
    : kind_(kind), names_(std::move(names)) {}

PbwAlgebra PbwAlgebra::racah(const RacahConstants& c) {
  PbwAlgebra alg(AlgebraKind::Racah, {"kappa1", "kappa2", "kappa3"});
  // {k1,k2} = 2 k1k2 - k3 once k2k1 is reordered.
  alg.rules_[1][0].rhs = {{Poly(1), {0, 1}}, {Poly(-1), {2}}};
  alg.rules_[2][0].rhs = {{Poly(1), {0, 2}},        {c.a1, {0, 0}}, {c.a2 * Scalar(2), {0, 1}},
                          {-c.a2, {2}},             {c.c2, {1}},    {c.d, {0}},
                          {c.e2, {}}};
  alg.rules_[2][1].rhs = {{Poly(1), {1, 2}},         {-c.a2, {1, 1}}, {c.a1 * Scalar(-2), {0, 1}},
                          {c.a1, {2}},               {-c.c1, {0}},    {-c.d, {1}},
                          {-c.e1, {}}};
  return alg;
}

PbwAlgebra PbwAlgebra::bannai_ito(const BiConstants& c) {
  PbwAlgebra alg(AlgebraKind::BannaiIto, {"X", "Y", "Z"});
  alg.rules_[1][0].rhs = {{Poly(-1), {0, 1}}, {Poly(1), {2}}, {c.omega_z, {}}};
  alg.rules_[2][0].rhs = {{Poly(-1), {0, 2}}, {Poly(1), {1}}, {c.omega_y, {}}};
  alg.rules_[2][1].rhs = {{Poly(-1), {1, 2}}, {Poly(1), {0}}, {c.omega_x, {}}};
  return alg;
}

PbwElement PbwAlgebra::gen(unsigned i) const {
  if (i >= 3) throw UnknownGenerator("generator index " + std::to_string(i));
  PbwMonomial m{};
  m[i] = 1;
  return PbwElement(kind_, m, Poly(1));
}

PbwElement PbwAlgebra::one() const { return PbwElement(kind_, PbwMonomial{}, Poly(1)); }

PbwElement PbwAlgebra::constant(const Poly& c) const { return PbwElement(kind_, PbwMonomial{}, c); }

unsigned PbwAlgebra::generator_index(const std::string& name) const {
  for (unsigned i = 0; i < 3; ++i) {
    if (names_[i] == name) return i;
  }
  if (kind_ == AlgebraKind::Racah) {
    static const std::array<std::string, 3> greek{"κ1", "κ2", "κ3"};
    static const std::array<std::string, 3> shortnames{"k1", "k2", "k3"};
    for (unsigned i = 0; i < 3; ++i) {
      if (greek[i] == name || shortnames[i] == name) return i;
    }
  }
  throw UnknownGenerator("unknown generator '" + name + "' for the " + to_string(kind_) + " algebra");
}

Word PbwAlgebra::parse_word(const std::string& text) const {
  Word w;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) w.push_back(static_cast<std::uint8_t>(generator_index(cur)));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '*' || ch == ' ' || ch == '\t') {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return w;
}

void PbwAlgebra::check(const PbwElement& e) const {
  if (e.kind() != kind_) {
    throw MixedAlgebras("element of the " + to_string(e.kind()) + " algebra used with the " +
                        to_string(kind_) + " algebra");
  }
}

const PbwElement& PbwAlgebra::mul_gen(const PbwMonomial& m, unsigned g) {
  const auto key = std::make_pair(m, g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  int last = -1;
  for (int i = 2; i >= 0; --i) {
    if (m[i] != 0) {
      last = i;
      break;
    }
  }
  PbwElement out(kind_);
  if (last <= static_cast<int>(g)) {
    PbwMonomial n = m;
    ++n[g];
    out = PbwElement(kind_, n, Poly(1));
  } else {
    if (++steps_ > step_limit_) throw Error("rewrite step limit exceeded");
    PbwMonomial head = m;
    --head[last];
    const PbwElement prefix(kind_, head, Poly(1));
    for (const auto& [c, w] : rules_[last][g].rhs) {
      if (c.is_zero()) continue;
      out += mul_word(prefix, w) * c;
    }
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

PbwElement PbwAlgebra::mul_element_gen(const PbwElement& e, unsigned g) {
  PbwElement out(kind_);
  for (const auto& [m, c] : e.terms()) out += mul_gen(m, g) * c;
  return out;
}

PbwElement PbwAlgebra::mul_word(const PbwElement& e, const Word& w) {
  PbwElement cur = e;
  for (std::uint8_t g : w) cur = mul_element_gen(cur, g);
  return cur;
}

PbwElement PbwAlgebra::normal_form(const Word& w, const Poly& coeff) {
  for (std::uint8_t g : w) {
    if (g >= 3) throw UnknownGenerator("generator index " + std::to_string(g));
  }
  return mul_word(constant(coeff), w);
}

PbwElement PbwAlgebra::mul(const PbwElement& a, const PbwElement& b) {
  check(a);
  check(b);
  PbwElement out(kind_);
  for (const auto& [mb, cb] : b.terms()) {
    Word w;
    for (std::uint8_t g = 0; g < 3; ++g) w.insert(w.end(), mb[g], g);
    out += mul_word(a, w) * cb;
  }
  return out;
}

PbwElement PbwAlgebra::pow(const PbwElement& a, unsigned n) {
  PbwElement r = one();
  for (unsigned i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

PbwElement PbwAlgebra::bracket(const PbwElement& a, const PbwElement& b, BracketKind kind) {
  if (a.kind() != b.kind()) throw MixedAlgebras("bracket of elements of different algebras");
  return kind == BracketKind::Commutator ? mul(a, b) - mul(b, a) : mul(a, b) + mul(b, a);
}

CentralityResult PbwAlgebra::is_central(const PbwElement& x) {
  CentralityResult r;
  r.central = true;
  for (unsigned g = 0; g < 3; ++g) {
    PbwElement res = commutator(x, gen(g));
    if (!res.is_zero()) r.central = false;
    r.residuals.emplace_back(names_[g], std::move(res));
  }
  return r;
}

IdentityResult PbwAlgebra::verify_identity(const PbwElement& lhs, const PbwElement& rhs) const {
  check(lhs);
  check(rhs);
  IdentityResult r{false, lhs - rhs};
  r.ok = r.residual.is_zero();
  return r;
}

PbwElement racah_casimir(PbwAlgebra& alg, const RacahConstants& c) {
  const PbwElement k1 = alg.gen(0), k2 = alg.gen(1), k3 = alg.gen(2);
  const PbwElement k1sq = alg.mul(k1, k1), k2sq = alg.mul(k2, k2);
  PbwElement t = alg.anticommutator(k1sq, k2) * c.a1;
  t += alg.anticommutator(k1, k2sq) * c.a2;
  t += k1sq * (c.a1 * c.a1 + c.c1);
  t += k2sq * (c.a2 * c.a2 + c.c2);
  t += alg.mul(k3, k3);
  t += alg.anticommutator(k1, k2) * (c.d + c.a1 * c.a2);
  t += k1 * (c.e1 * Scalar(2) + c.d * c.a1);
  t += k2 * (c.e2 * Scalar(2) + c.d * c.a2);
  return t;
}

PbwElement bi_casimir(PbwAlgebra& alg) {
  PbwElement u(alg.kind());
  for (unsigned g = 0; g < 3; ++g) u += alg.mul(alg.gen(g), alg.gen(g));
  return u;
}

QuadraticEmbedding build_quadratic_embedding(PbwAlgebra& bi) {
  if (bi.kind() != AlgebraKind::BannaiIto) throw MixedAlgebras("quadratic embedding needs the Bannai-Ito algebra");
  const Poly quarter(Scalar::frac(1, 4));
  auto combo = [&](unsigned g) {
    const PbwElement x = bi.gen(g);
    return (bi.mul(x, x) - x - bi.constant(Poly(Scalar::frac(3, 4)))) * quarter;
  };
  QuadraticEmbedding e{combo(0), combo(1), combo(2),
                       bi.gen(0) + bi.gen(1) + bi.gen(2) - bi.constant(Poly(Scalar::frac(3, 2))),
                       PbwElement(bi.kind())};
  e.Delta = bi.commutator(e.A, e.B) * Poly(Scalar::frac(1, 2));
  return e;
}

PbwElement equitable_central_term(const Poly& wa, const Poly& wb, const PbwElement& I) {
  const Poly half(Scalar::frac(1, 2));
  const Poly diff = (wa - wb) * half;
  PbwElement inner = -I;
  inner += PbwElement(I.kind(), PbwMonomial{}, (wa + wb) * half);
  return inner * (diff * Poly(Scalar::frac(1, 16)));
}

}  // namespace rbi
