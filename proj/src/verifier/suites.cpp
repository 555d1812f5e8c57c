#include "rbi/verifier/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <initializer_list>
#include <optional>
#include <random>
#include <thread>

#include "rbi/algebra/pbw.hpp"
#include "rbi/dunkl/realizations.hpp"
#include "rbi/errors.hpp"
#include "rbi/shift/realizations.hpp"

namespace rbi {

namespace {

using Subs = std::vector<std::pair<Symbol, Poly>>;
using Params = std::vector<std::pair<std::string, std::string>>;

namespace anchor {
const char* const racah_relations = "Racah algebra defining relations";
const char* const racah_casimir = "Racah algebra Casimir";
const char* const bi_relations = "Bannai-Ito algebra defining relations";
const char* const bi_casimir = "Bannai-Ito algebra Casimir";
const char* const embedding = "equitable Racah algebra from quadratic Bannai-Ito combinations";
const char* const racah_standard = "Racah difference operator realization";
const char* const bi_standard = "Bannai-Ito difference-reflection operator realization";
const char* const bispectral = "tridiagonal action in the eigenbasis of the difference operator";
const char* const su11 = "su(1,1) realization in one variable";
const char* const osp12 = "osp(1|2) realization with a Dunkl operator";
const char* const coproduct = "coproduct lifts to several variables";
const char* const racah_problem = "Racah algebra from intermediate su(1,1) Casimirs";
const char* const bi_problem = "Bannai-Ito algebra from intermediate osp(1|2) Casimirs";
const char* const embedding_dunkl = "Racah algebra from Bannai-Ito combinations with reflections";
const char* const engine = "rewriting engine consistency";
}  // namespace anchor

struct Task {
  std::string id;  // reported when the task throws
  std::string anchor;
  Params params;
  std::function<std::vector<CheckReport>()> run;
  std::vector<std::string> produces = {};  // check-id prefixes; defaults to {id}
};

struct Overrides {
  Subs subs;
  Params params;
};

Overrides overrides(const SuiteConfig& cfg, std::initializer_list<Symbol> symbols) {
  Overrides o;
  for (Symbol s : symbols) {
    const std::string name(s.name());
    const auto it = cfg.params.find(name);
    if (it != cfg.params.end() && it->second) {
      o.subs.emplace_back(s, Poly(Scalar(*it->second)));
      o.params.emplace_back(name, rational_to_string(*it->second));
    } else {
      o.params.emplace_back(name, "symbolic");
    }
  }
  return o;
}

Poly value_of(Symbol s, const Subs& subs) { return Poly::var(s).substitute(subs); }

CheckReport report(std::string id, std::string statement, bool ok, std::string residual, std::string value = {}) {
  CheckReport r;
  r.check_id = std::move(id);
  r.statement = std::move(statement);
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  if (!ok) r.residual = std::move(residual);
  r.value = std::move(value);
  return r;
}

CheckReport pbw_identity(const PbwAlgebra& alg, std::string id, std::string statement, const PbwElement& lhs,
                         const PbwElement& rhs) {
  const auto res = alg.verify_identity(lhs, rhs);
  return report(std::move(id), std::move(statement), res.ok, res.residual.to_string());
}

CheckReport op_identity(std::string id, std::string statement, const ShiftOp& lhs, const ShiftOp& rhs) {
  const auto res = verify_operator_identity(lhs, rhs);
  return report(std::move(id), std::move(statement), res.ok, res.residual.to_string());
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), salt};
  return std::mt19937_64(seq);
}

// Samplers for the associativity checks.

Scalar sample_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return Scalar(q);
}

Poly sample_poly(std::mt19937_64& rng, const std::vector<Symbol>& symbols, int terms, unsigned max_deg) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::vector<Poly::Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (auto s : symbols) m = m * Monomial::of(s, deg(rng));
    out.emplace_back(m, sample_scalar(rng));
  }
  return Poly::from_terms(std::move(out));
}

PbwElement sample_pbw(std::mt19937_64& rng, PbwAlgebra& alg) {
  std::uniform_int_distribution<int> len(0, 3), nterms(1, 3), letter(0, 2);
  const std::vector<Symbol> syms = alg.kind() == AlgebraKind::BannaiIto
                                       ? std::vector<Symbol>{sym::omega_x, sym::omega_z}
                                       : std::vector<Symbol>{sym::a1, sym::d};
  PbwElement e(alg.kind());
  for (int t = nterms(rng); t > 0; --t) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& g : w) g = static_cast<std::uint8_t>(letter(rng));
    e += alg.normal_form(w, sample_poly(rng, syms, 2, 1));
  }
  return e;
}

ShiftOp sample_shift(std::mt19937_64& rng, Symbol var) {
  std::uniform_int_distribution<int> shift(-2, 2), refl(0, 1), nterms(1, 3);
  std::uniform_int_distribution<long> pole(1, 5);
  ShiftOp op(var);
  for (int t = nterms(rng); t > 0; --t) {
    const Poly num = sample_poly(rng, {var}, 2, 2);
    if (num.is_zero()) continue;
    const Poly den = Poly::var(var) + Poly(Scalar::frac(2 * pole(rng) + 1, 3));
    op += ShiftOp::term(var, shift(rng), refl(rng), RatFunc::normalize(num, den, var));
  }
  return op;
}

DunklElement sample_dunkl(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 3), a(-2, 2), b(0, 2), refl(0, 7), coin(0, 3);
  DunklElement out;
  for (int t = nterms(rng); t > 0; --t) {
    DunklKey k;
    for (int i = 0; i < 3; ++i) {
      k.a[i] = static_cast<std::int16_t>(a(rng));
      k.b[i] = static_cast<std::uint16_t>(b(rng));
    }
    k.refl = static_cast<std::uint8_t>(refl(rng));
    Scalar c;
    while (c.is_zero()) {
      const Rational re = sample_scalar(rng).re();
      c = Scalar(re, sample_scalar(rng).re());
    }
    Poly coeff(c);
    if (coin(rng) == 0) coeff = coeff * Poly::var(sym::mu1) + Poly(1);
    out += DunklElement::monomial(k, coeff);
  }
  return out;
}

template <typename T, typename Sample, typename Mul>
CheckReport associativity(std::string id, std::string statement, long long trials, Sample sample, Mul mul) {
  for (long long trial = 0; trial < trials; ++trial) {
    const T a = sample(), b = sample(), c = sample();
    const T lhs = mul(mul(a, b), c);
    const T rhs = mul(a, mul(b, c));
    if (!(lhs == rhs)) {
      return report(std::move(id), std::move(statement), false,
                    "trial " + std::to_string(trial) + ": " + (lhs - rhs).to_string());
    }
  }
  return report(std::move(id), std::move(statement), true, {}, std::to_string(trials) + " triples");
}

Task pbw_associativity_task(const SuiteConfig& cfg, AlgebraKind kind, std::string id, std::uint32_t salt) {
  const long long trials = cfg.trials;
  const std::uint64_t seed = cfg.seed;
  return {id, anchor::engine, {}, [=] {
            auto rng = make_rng(seed, salt);
            auto alg = kind == AlgebraKind::Racah ? PbwAlgebra::racah() : PbwAlgebra::bannai_ito();
            return std::vector<CheckReport>{associativity<PbwElement>(
                id, "(ab)c = a(bc) for random PBW elements", trials, [&] { return sample_pbw(rng, alg); },
                [&](const PbwElement& a, const PbwElement& b) { return alg.mul(a, b); })};
          }};
}

Task shift_associativity_task(const SuiteConfig& cfg, Symbol var, std::string id, std::uint32_t salt) {
  const long long trials = cfg.trials;
  const std::uint64_t seed = cfg.seed;
  return {id, anchor::engine, {}, [=] {
            auto rng = make_rng(seed, salt);
            return std::vector<CheckReport>{associativity<ShiftOp>(
                id, "(ab)c = a(bc) for random shift-reflection operators", trials,
                [&] { return sample_shift(rng, var); }, [](const ShiftOp& a, const ShiftOp& b) { return a * b; })};
          }};
}

Task dunkl_associativity_task(const SuiteConfig& cfg, std::uint32_t salt) {
  const long long trials = cfg.trials;
  const std::uint64_t seed = cfg.seed;
  const std::string id = "dunkl.engine.associativity";
  return {id, anchor::engine, {}, [=] {
            auto rng = make_rng(seed, salt);
            return std::vector<CheckReport>{associativity<DunklElement>(
                id, "(ab)c = a(bc) for random Dunkl operator words", trials, [&] { return sample_dunkl(rng); },
                [](const DunklElement& a, const DunklElement& b) { return a * b; })};
          }};
}

RacahConstants specialize(RacahConstants c, const Subs& subs) {
  for (Poly* p : {&c.a1, &c.a2, &c.c1, &c.c2, &c.d, &c.e1, &c.e2}) *p = p->substitute(subs);
  return c;
}

BiConstants specialize(BiConstants c, const Subs& subs) {
  for (Poly* p : {&c.omega_x, &c.omega_y, &c.omega_z}) *p = p->substitute(subs);
  return c;
}

void add_racah_abstract(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  const auto ov = overrides(cfg, {a1, a2, c1, c2, d, e1, e2});
  const RacahConstants c = specialize(RacahConstants::symbolic(), ov.subs);
  out.push_back({"racah_pbw.relations", anchor::racah_relations, ov.params, [c] {
                   auto alg = PbwAlgebra::racah(c);
                   const auto k1 = alg.gen(0), k2 = alg.gen(1), k3 = alg.gen(2);
                   const auto k12 = alg.anticommutator(k1, k2);
                   const auto rhs23 = alg.mul(k2, k2) * c.a2 + k12 * c.a1 + k1 * c.c1 + k2 * c.d + alg.constant(c.e1);
                   const auto rhs31 = alg.mul(k1, k1) * c.a1 + k12 * c.a2 + k2 * c.c2 + k1 * c.d + alg.constant(c.e2);
                   return std::vector<CheckReport>{
                       pbw_identity(alg, "racah_pbw.relations.k1k2", "[k1,k2] = k3", alg.commutator(k1, k2), k3),
                       pbw_identity(alg, "racah_pbw.relations.k2k3",
                                    "[k2,k3] = a2 k2^2 + a1 {k1,k2} + c1 k1 + d k2 + e1", alg.commutator(k2, k3),
                                    rhs23),
                       pbw_identity(alg, "racah_pbw.relations.k3k1",
                                    "[k3,k1] = a1 k1^2 + a2 {k1,k2} + c2 k2 + d k1 + e2", alg.commutator(k3, k1),
                                    rhs31)};
                 }});
  out.push_back({"racah_pbw.casimir", anchor::racah_casimir, ov.params, [c] {
                   auto alg = PbwAlgebra::racah(c);
                   const auto res = alg.is_central(racah_casimir(alg, c));
                   std::vector<CheckReport> reports;
                   for (std::size_t g = 0; g < 3; ++g) {
                     const auto& w = res.residuals.at(g).second;
                     reports.push_back(report("racah_pbw.casimir.central-k" + std::to_string(g + 1),
                                              "[T, k" + std::to_string(g + 1) + "] = 0", w.is_zero(), w.to_string()));
                   }
                   return reports;
                 }});
  out.push_back(pbw_associativity_task(cfg, AlgebraKind::Racah, "racah_pbw.engine.associativity", 101));
}

void add_bi_abstract(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  const auto ov = overrides(cfg, {omega_x, omega_y, omega_z});
  const BiConstants c = specialize(BiConstants::symbolic(), ov.subs);
  out.push_back({"bi_pbw.relations", anchor::bi_relations, ov.params, [c] {
                   auto alg = PbwAlgebra::bannai_ito(c);
                   const auto X = alg.gen(0), Y = alg.gen(1), Z = alg.gen(2);
                   return std::vector<CheckReport>{
                       pbw_identity(alg, "bi_pbw.relations.anticomm-xy", "{X,Y} = Z + wZ", alg.anticommutator(X, Y),
                                    Z + alg.constant(c.omega_z)),
                       pbw_identity(alg, "bi_pbw.relations.anticomm-yz", "{Y,Z} = X + wX", alg.anticommutator(Y, Z),
                                    X + alg.constant(c.omega_x)),
                       pbw_identity(alg, "bi_pbw.relations.anticomm-zx", "{Z,X} = Y + wY", alg.anticommutator(Z, X),
                                    Y + alg.constant(c.omega_y))};
                 }});
  out.push_back({"bi_pbw.casimir", anchor::bi_casimir, ov.params, [c] {
                   auto alg = PbwAlgebra::bannai_ito(c);
                   const auto res = alg.is_central(bi_casimir(alg));
                   static const char* const names[] = {"x", "y", "z"};
                   static const char* const gens[] = {"X", "Y", "Z"};
                   std::vector<CheckReport> reports;
                   for (std::size_t g = 0; g < 3; ++g) {
                     const auto& w = res.residuals.at(g).second;
                     reports.push_back(report(std::string("bi_pbw.casimir.central-") + names[g],
                                              std::string("[X^2 + Y^2 + Z^2, ") + gens[g] + "] = 0", w.is_zero(),
                                              w.to_string()));
                   }
                   return reports;
                 }});
  out.push_back(pbw_associativity_task(cfg, AlgebraKind::BannaiIto, "bi_pbw.engine.associativity", 102));
}

// The checks shared by the abstract and the realized embedding, written
// once over an "algebra" of values T with the operations in Ops.
template <typename T, typename Ops>
std::vector<CheckReport> embedding_checks(const std::string& prefix, Ops& ops, const T& X, const T& Y, const T& Z,
                                          const T& A, const T& B, const T& C, const T& I, const T& Delta,
                                          const T& casimir_sum, const BiConstants& w) {
  auto combo = [&](const T& g) { return ops.scale(ops.mul(g, g) - g - ops.constant(Scalar::frac(3, 4)), Scalar::frac(1, 4)); };
  auto central = [&](const Poly& wa, const Poly& wb) { return ops.central_term(wa, wb, I); };
  const T two_delta = ops.scale(Delta, Scalar(2));
  std::vector<CheckReport> r;
  r.push_back(ops.identity(prefix + ".combination.a", "A = (X^2 - X - 3/4)/4", A, combo(X)));
  r.push_back(ops.identity(prefix + ".combination.b", "B = (Y^2 - Y - 3/4)/4", B, combo(Y)));
  r.push_back(ops.identity(prefix + ".combination.c", "C = (Z^2 - Z - 3/4)/4", C, combo(Z)));
  r.push_back(ops.identity(prefix + ".combination.sum", "A + B + C = (X^2 + Y^2 + Z^2 - I - 15/4)/4", A + B + C,
                           casimir_sum));
  r.push_back(ops.identity(prefix + ".commutators.ab", "[A,B] = 2 Delta", ops.commutator(A, B), two_delta));
  r.push_back(ops.identity(prefix + ".commutators.bc", "[B,C] = 2 Delta", ops.commutator(B, C), two_delta));
  r.push_back(ops.identity(prefix + ".commutators.ca", "[C,A] = 2 Delta", ops.commutator(C, A), two_delta));
  r.push_back(ops.identity(prefix + ".relation.a",
                           "[A,Delta] = BA - AC + (1/16)((wY - wZ)/2)((wY + wZ)/2 - I)", ops.commutator(A, Delta),
                           ops.mul(B, A) - ops.mul(A, C) + central(w.omega_y, w.omega_z)));
  r.push_back(ops.identity(prefix + ".relation.b",
                           "[B,Delta] = CB - BA + (1/16)((wZ - wX)/2)((wZ + wX)/2 - I)", ops.commutator(B, Delta),
                           ops.mul(C, B) - ops.mul(B, A) + central(w.omega_z, w.omega_x)));
  r.push_back(ops.identity(prefix + ".relation.c",
                           "[C,Delta] = AC - CB + (1/16)((wX - wY)/2)((wX + wY)/2 - I)", ops.commutator(C, Delta),
                           ops.mul(A, C) - ops.mul(C, B) + central(w.omega_x, w.omega_y)));
  const T zero = ops.constant(Scalar());
  r.push_back(ops.identity(prefix + ".i.commutes-a", "[I,A] = 0 with I = X + Y + Z - 3/2", ops.commutator(I, A), zero));
  r.push_back(ops.identity(prefix + ".i.commutes-b", "[I,B] = 0", ops.commutator(I, B), zero));
  r.push_back(ops.identity(prefix + ".i.commutes-c", "[I,C] = 0", ops.commutator(I, C), zero));
  return r;
}

struct PbwOps {
  PbwAlgebra& alg;
  PbwElement mul(const PbwElement& a, const PbwElement& b) { return alg.mul(a, b); }
  PbwElement commutator(const PbwElement& a, const PbwElement& b) { return alg.commutator(a, b); }
  PbwElement scale(const PbwElement& a, const Scalar& c) { return a * Poly(c); }
  PbwElement constant(const Scalar& c) { return alg.constant(Poly(c)); }
  PbwElement central_term(const Poly& wa, const Poly& wb, const PbwElement& I) {
    return equitable_central_term(wa, wb, I);
  }
  CheckReport identity(std::string id, std::string statement, const PbwElement& lhs, const PbwElement& rhs) {
    return pbw_identity(alg, std::move(id), std::move(statement), lhs, rhs);
  }
};

struct ShiftOps {
  Symbol var;
  ShiftOp mul(const ShiftOp& a, const ShiftOp& b) { return a * b; }
  ShiftOp commutator(const ShiftOp& a, const ShiftOp& b) { return rbi::commutator(a, b); }
  ShiftOp scale(const ShiftOp& a, const Scalar& c) { return a * c; }
  ShiftOp constant(const Scalar& c) { return ShiftOp::scalar(var, RatFunc(Poly(c), var)); }
  ShiftOp central_term(const Poly& wa, const Poly& wb, const ShiftOp& I) { return equitable_central_operator(wa, wb, I); }
  CheckReport identity(std::string id, std::string statement, const ShiftOp& lhs, const ShiftOp& rhs) {
    return op_identity(std::move(id), std::move(statement), lhs, rhs);
  }
};

void add_embedding_abstract(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  const auto ov = overrides(cfg, {omega_x, omega_y, omega_z});
  const BiConstants c = specialize(BiConstants::symbolic(), ov.subs);
  out.push_back({"embedding_pbw", anchor::embedding, ov.params, [c] {
                   auto alg = PbwAlgebra::bannai_ito(c);
                   const auto e = build_quadratic_embedding(alg);
                   PbwOps ops{alg};
                   const auto sum = (bi_casimir(alg) - e.I - alg.constant(Scalar::frac(15, 4))) * Poly(Scalar::frac(1, 4));
                   return embedding_checks<PbwElement>("embedding_pbw", ops, alg.gen(0), alg.gen(1), alg.gen(2), e.A,
                                                       e.B, e.C, e.I, e.Delta, sum, c);
                 }});
}

RacahParams racah_params(const Subs& subs) {
  using namespace sym;
  return {value_of(alpha, subs), value_of(beta, subs), value_of(gamma, subs), value_of(delta, subs)};
}

BiParams bi_params(const Subs& subs) {
  using namespace sym;
  return {value_of(rho1, subs), value_of(rho2, subs), value_of(r1, subs), value_of(r2, subs)};
}

std::string join_named(const std::vector<std::pair<std::string, Poly>>& named) {
  std::string out;
  for (const auto& [name, p] : named) {
    if (!out.empty()) out += ", ";
    out += name + " = " + p.to_string();
  }
  return out;
}

void add_racah_standard(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  const auto ov = overrides(cfg, {alpha, beta, gamma, delta});
  const RacahParams p = racah_params(ov.subs);
  out.push_back({"racah.relations", anchor::racah_standard, ov.params, [p] {
                   const RacahRealization r = build_standard_racah(p);
                   std::optional<RacahFit> fitted;
                   try {
                     fitted.emplace(fit_racah_constants(r));
                   } catch (const Error& e) {
                     return std::vector<CheckReport>{report(
                         "racah.constants.fit", "[k2,k3] and [k3,k1] lie in the span of k2^2, {k1,k2}, k1^2, k1, k2, 1",
                         false, e.what())};
                   }
                   const RacahFit& fit = *fitted;
                   const RacahConstants& c = fit.constants;
                   const Symbol v = r.k1.var();
                   auto k = [&](const Poly& q) { return RatFunc(q, v); };
                   const ShiftOp &k1 = r.k1, &k2 = r.k2, &k3 = fit.k3;
                   const ShiftOp one = ShiftOp::identity(v);
                   const ShiftOp k12 = anticommutator(k1, k2);
                   std::vector<CheckReport> reports;
                   reports.push_back(report("racah.constants.fit",
                                            "[k2,k3] and [k3,k1] determine the structure constants uniquely", true, {},
                                            join_named(c.named())));
                   reports.push_back(op_identity("racah.relations.k2k3",
                                                 "[k2,k3] = a2 k2^2 + a1 {k1,k2} + c1 k1 + d k2 + e1", commutator(k2, k3),
                                                 k2 * k2 * k(c.a2) + k12 * k(c.a1) + k1 * k(c.c1) + k2 * k(c.d) +
                                                     one * k(c.e1)));
                   reports.push_back(op_identity("racah.relations.k3k1",
                                                 "[k3,k1] = a1 k1^2 + a2 {k1,k2} + c2 k2 + d k1 + e2", commutator(k3, k1),
                                                 k1 * k1 * k(c.a1) + k12 * k(c.a2) + k2 * k(c.c2) + k1 * k(c.d) +
                                                     one * k(c.e2)));
                   try {
                     const RatFunc t = racah_casimir_scalar(r, fit);
                     reports.push_back(report("racah.casimir.scalar", "the Casimir T acts as a scalar", true, {},
                                              t.to_string()));
                   } catch (const NotScalar& e) {
                     reports.push_back(report("racah.casimir.scalar", "the Casimir T acts as a scalar", false, e.what()));
                   }
                   return reports;
                 },
                 {"racah.constants", "racah.relations", "racah.casimir"}});
  out.push_back({"racah.operators", anchor::racah_standard, ov.params, [p, subs = ov.subs] {
                   const RacahRealization r = build_standard_racah(p);
                   const Symbol v = r.k1.var();
                   const RatFunc image = r.k1.apply(RatFunc(Poly(1), v));
                   return std::vector<CheckReport>{
                       report("racah.k1.annihilates-one", "k1 1 = 0", image.is_zero(), image.to_string()),
                       op_identity("racah.k2.multiplication", "k2 = multiplication by x(x + gamma + delta + 1)", r.k2,
                                   ShiftOp::multiplication(RatFunc(Poly::var(v) * (Poly::var(v) + Poly::var(gamma) +
                                                                                   Poly::var(delta) + Poly(1)),
                                                                   v)
                                                               .substitute(subs)))};
                 },
                 {"racah.k1", "racah.k2"}});
  out.push_back(shift_associativity_task(cfg, sym::x, "racah.engine.associativity", 201));
}

void add_bi_standard(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  const auto ov = overrides(cfg, {rho1, rho2, r1, r2});
  const BiParams p = bi_params(ov.subs);
  out.push_back({"bi.relations", anchor::bi_standard, ov.params, [p] {
                   const BiRealization r = build_standard_bi(p);
                   std::optional<BiFit> fitted;
                   try {
                     fitted.emplace(fit_bi_constants(r));
                   } catch (const Error& e) {
                     return std::vector<CheckReport>{
                         report("bi.constants.fit", "{Y,{X,Y}} - X lies in the span of Y and 1", false, e.what())};
                   }
                   const BiFit& fit = *fitted;
                   const Poly& a = p.rho1;
                   const Poly& b = p.rho2;
                   const Poly& c = p.r1;
                   const Poly& d = p.r2;
                   const Symbol v = r.X.var();
                   auto w = [&](const Poly& q) { return ShiftOp::scalar(v, RatFunc(q, v)); };
                   auto omega = [](std::string id, std::string statement, const Poly& fitted, const Poly& expected) {
                     return report(std::move(id), std::move(statement), fitted == expected,
                                   (fitted - expected).to_string(), fitted.to_string());
                   };
                   const BiConstants& k = fit.constants;
                   const ShiftOp &X = r.X, &Y = r.Y, &Z = fit.Z;
                   std::vector<CheckReport> reports{
                       omega("bi.constants.omega-x", "wX = 4(rho1 rho2 + r1 r2)", k.omega_x, (a * b + c * d) * Scalar(4)),
                       omega("bi.constants.omega-y", "wY = 2(rho1^2 + rho2^2 - r1^2 - r2^2)", k.omega_y,
                             (a * a + b * b - c * c - d * d) * Scalar(2)),
                       omega("bi.constants.omega-z", "wZ = 4(rho1 rho2 - r1 r2)", k.omega_z, (a * b - c * d) * Scalar(4)),
                       op_identity("bi.relations.anticomm-xy", "{X,Y} = Z + wZ", anticommutator(X, Y), Z + w(k.omega_z)),
                       op_identity("bi.relations.anticomm-yz", "{Y,Z} = X + wX", anticommutator(Y, Z), X + w(k.omega_x)),
                       op_identity("bi.relations.anticomm-zx", "{Z,X} = Y + wY", anticommutator(Z, X), Y + w(k.omega_y))};
                   const std::string statement = "X^2 + Y^2 + Z^2 = 2(rho1^2 + rho2^2 + r1^2 + r2^2) - 1/4";
                   try {
                     const RatFunc u = bi_casimir_scalar(r, fit);
                     const RatFunc expected((a * a + b * b + c * c + d * d) * Scalar(2) - Poly(Scalar::frac(1, 4)), v);
                     reports.push_back(report("bi.casimir.scalar", statement, u == expected, (u - expected).to_string(),
                                              u.to_string()));
                   } catch (const NotScalar& e) {
                     reports.push_back(report("bi.casimir.scalar", statement, false, e.what()));
                   }
                   return reports;
                 },
                 {"bi.constants", "bi.relations", "bi.casimir"}});
  out.push_back({"bi.x.degree-preservation", anchor::bi_standard, ov.params, [p] {
                   const BiRealization r = build_standard_bi(p);
                   const Symbol v = r.X.var();
                   const std::string statement = "deg X z^n <= n for n <= 12";
                   for (unsigned n = 0; n <= 12; ++n) {
                     try {
                       const Poly image = r.X.apply_to_polynomial(Poly::var(v, n));
                       if (image.degree_in(v) > n) {
                         return std::vector<CheckReport>{report("bi.x.degree-preservation", statement, false,
                                                                "X z^" + std::to_string(n) + " = " + image.to_string())};
                       }
                     } catch (const NotPolynomialPreserving& e) {
                       return std::vector<CheckReport>{report("bi.x.degree-preservation", statement, false, e.what())};
                     }
                   }
                   return std::vector<CheckReport>{report("bi.x.degree-preservation", statement, true, {})};
                 }});
  out.push_back(shift_associativity_task(cfg, sym::z, "bi.engine.associativity", 301));
}

void add_embedding_standard(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  const auto ov = overrides(cfg, {rho1, rho2, r1, r2});
  const BiParams p = bi_params(ov.subs);
  out.push_back({"embedding", anchor::embedding, ov.params, [p] {
                   const BiRealization r = build_standard_bi(p);
                   const BiFit fit = fit_bi_constants(r);
                   const QuadraticCombos c = build_quadratic_combos(r, fit);
                   const Symbol v = r.X.var();
                   ShiftOps ops{v};
                   const RatFunc u = bi_casimir_scalar(r, fit);
                   const ShiftOp sum =
                       (ShiftOp::scalar(v, u) - c.I - ops.constant(Scalar::frac(15, 4))) * Scalar::frac(1, 4);
                   return embedding_checks<ShiftOp>("embedding", ops, r.X, r.Y, fit.Z, c.A, c.B, c.C, c.I, c.Delta,
                                                    sum, fit.constants);
                 }});
}

std::string scalar_string(const Poly& p) { return p.constant_term().to_string(); }

template <typename ParamsT>
std::vector<CheckReport> bispectral_reports(const std::string& prefix, const BispectralData& d,
                                            const ParamsT& params, const std::string& dump_dir) {
  Params shown;
  for (const auto& [name, value] : params.named()) shown.emplace_back(name, scalar_string(value));
  const auto entry = [](const char* m, const ScalarMatrix& mat, std::pair<std::size_t, std::size_t> at) {
    return std::string(m) + "(" + std::to_string(at.first) + "," + std::to_string(at.second) +
           ") = " + mat(at.first, at.second).to_string();
  };
  std::vector<CheckReport> reports{
      report(prefix + ".tridiagonal",
             "multiplication operator is tridiagonal in the eigenbasis (columns 0..M)", !d.off_band,
             d.off_band ? entry("mult", d.mult, *d.off_band) : std::string()),
      report(prefix + ".diagonal", "difference operator is diagonal in the eigenbasis", !d.off_diag,
             d.off_diag ? entry("diag", d.diag, *d.off_diag) : std::string())};
  for (auto& r : reports) r.params = shown;
  if (!dump_dir.empty()) {
    std::filesystem::create_directories(dump_dir);
    const std::pair<const char*, const ScalarMatrix*> mats[] = {
        {"difference", &d.triangular}, {"eigenvectors", &d.P}, {"diagonal", &d.diag}, {"multiplication", &d.mult}};
    for (const auto& [name, m] : mats) {
      const auto path = std::filesystem::path(dump_dir) / (prefix + "." + name + ".csv");
      std::ofstream f(path, std::ios::binary);
      f << matrix_to_csv(*m, d.basis);
      if (!f) throw Error("cannot write " + path.string());
    }
  }
  return reports;
}

void add_bispectral(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  const unsigned M = static_cast<unsigned>(cfg.degree);
  const std::string dump = cfg.dump_dir;
  const std::uint64_t seed = cfg.seed;
  constexpr int kRandomSets = 5;
  constexpr int kAttempts = 50;

  const auto racah_ov = overrides(cfg, {alpha, beta, gamma, delta});
  if (racah_ov.subs.size() == 4) {
    const RacahParams p = racah_params(racah_ov.subs);
    out.push_back({"bispectral.racah.set0", anchor::bispectral, {}, [=] {
                     return bispectral_reports("bispectral.racah.set0", bispectral_racah(p, M), p, dump);
                   }});
  } else {
    for (int k = 0; k < kRandomSets; ++k) {
      const std::string id = "bispectral.racah.set" + std::to_string(k);
      out.push_back({id, anchor::bispectral, {}, [=] {
                       auto rng = make_rng(seed, 400 + static_cast<std::uint32_t>(k));
                       for (int attempt = 0;; ++attempt) {
                         const RacahParams p = random_racah_params(rng);
                         try {
                           return bispectral_reports(id, bispectral_racah(p, M), p, dump);
                         } catch (const DegenerateSpectrum&) {
                           if (attempt + 1 == kAttempts) throw;
                         }
                       }
                     }});
    }
  }

  const auto bi_ov = overrides(cfg, {rho1, rho2, r1, r2});
  if (bi_ov.subs.size() == 4) {
    const BiParams p = bi_params(bi_ov.subs);
    out.push_back({"bispectral.bi.set0", anchor::bispectral, {}, [=] {
                     return bispectral_reports("bispectral.bi.set0", bispectral_bi(p, M), p, dump);
                   }});
  } else {
    for (int k = 0; k < kRandomSets; ++k) {
      const std::string id = "bispectral.bi.set" + std::to_string(k);
      out.push_back({id, anchor::bispectral, {}, [=] {
                       auto rng = make_rng(seed, 500 + static_cast<std::uint32_t>(k));
                       for (int attempt = 0;; ++attempt) {
                         const BiParams p = random_bi_params(rng);
                         try {
                           return bispectral_reports(id, bispectral_bi(p, M), p, dump);
                         } catch (const DegenerateSpectrum&) {
                           if (attempt + 1 == kAttempts) throw;
                         }
                       }
                     }});
    }
  }
}

// Runs a Dunkl verification and keeps the checks whose name starts with
// `filter`, specializing residuals and values to the numeric overrides.
Task dunkl_task(std::string id, const char* anchor_text, const Overrides& ov,
                std::function<std::vector<DunklCheck>()> make, std::string filter) {
  return {id, anchor_text, ov.params, [subs = ov.subs, make = std::move(make), filter = std::move(filter)] {
            std::vector<CheckReport> reports;
            for (const auto& c : make()) {
              if (c.name.rfind(filter, 0) != 0) continue;
              const DunklElement residual = c.residual.substitute(subs);
              reports.push_back(report(c.name, c.statement, residual.is_zero(), residual.to_string(),
                                       c.value ? c.value->substitute(subs).to_string() : std::string()));
            }
            return reports;
          }};
}

void add_su11(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  const auto ov = overrides(cfg, {g1, g2, g3});
  for (int i = 1; i <= 3; ++i) {
    const std::string id = "su11.x" + std::to_string(i);
    out.push_back(dunkl_task(id, anchor::su11, ov, [i] { return verify_su11_relations(i); }, id + "."));
  }
  out.push_back(dunkl_task("coproduct.su11", anchor::coproduct, ov, verify_coproducts, "coproduct.su11."));
  out.push_back(dunkl_associativity_task(cfg, 601));
}

void add_osp12(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  const auto ov = overrides(cfg, {mu1, mu2, mu3});
  for (int i = 1; i <= 3; ++i) {
    const std::string id = "osp12.x" + std::to_string(i);
    out.push_back(dunkl_task(id, anchor::osp12, ov, [i] { return verify_scasimir_relations(i); }, id + "."));
  }
  out.push_back(dunkl_task("coproduct.osp12", anchor::coproduct, ov, verify_coproducts, "coproduct.osp12."));
}

void add_racah_problem(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  out.push_back(dunkl_task("racah_problem", anchor::racah_problem, overrides(cfg, {g1, g2, g3}), verify_racah_problem,
                           "racah_problem."));
}

void add_bi_problem(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  out.push_back(dunkl_task("bi_problem", anchor::bi_problem, overrides(cfg, {mu1, mu2, mu3}), verify_bi_problem,
                           "bi_problem."));
}

void add_embedding_dunkl(const SuiteConfig& cfg, std::vector<Task>& out) {
  using namespace sym;
  out.push_back(dunkl_task("embedding_dunkl", anchor::embedding_dunkl, overrides(cfg, {mu1, mu2, mu3}),
                           verify_dunkl_embedding, "embedding_dunkl."));
}

using Builder = void (*)(const SuiteConfig&, std::vector<Task>&);

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> r{
      {"racah-abstract", add_racah_abstract},   {"bi-abstract", add_bi_abstract},
      {"embedding-abstract", add_embedding_abstract}, {"racah-standard", add_racah_standard},
      {"bi-standard", add_bi_standard},         {"embedding-standard", add_embedding_standard},
      {"bispectral", add_bispectral},           {"su11", add_su11},
      {"osp12", add_osp12},                     {"racah-problem", add_racah_problem},
      {"bi-problem", add_bi_problem},           {"embedding-dunkl", add_embedding_dunkl}};
  return r;
}

std::vector<CheckReport> run_task(const Task& task) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckReport> reports;
  try {
    reports = task.run();
  } catch (const std::exception& e) {
    CheckReport r;
    r.check_id = task.id;
    r.statement = "computation of " + task.id;
    r.status = CheckStatus::Error;
    r.residual = e.what();
    reports.push_back(std::move(r));
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : reports) {
    if (r.anchor.empty()) r.anchor = task.anchor;
    if (r.params.empty()) r.params = task.params;
    r.elapsed_ms = ms;
  }
  return reports;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, builder] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  std::vector<Task> tasks;
  bool found = false;
  for (const auto& [name, builder] : registry()) {
    if (cfg.suite == "all" || cfg.suite == name) {
      builder(cfg, tasks);
      found = true;
    }
  }
  if (!found) throw UnknownSuite("unknown suite '" + cfg.suite + "'");

  auto starts = [](const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; };
  auto selected = [&](const std::string& id, bool task) {
    if (cfg.checks.empty()) return true;
    return std::any_of(cfg.checks.begin(), cfg.checks.end(),
                       [&](const std::string& p) { return starts(id, p) || (task && starts(p, id)); });
  };
  std::erase_if(tasks, [&](const Task& t) {
    if (t.produces.empty()) return !selected(t.id, true);
    return std::none_of(t.produces.begin(), t.produces.end(), [&](const std::string& id) { return selected(id, true); });
  });

  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) results[i] = run_task(tasks[i]);
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  std::vector<CheckReport> reports;
  for (auto& r : results) {
    for (auto& c : r) {
      if (c.status == CheckStatus::Error || selected(c.check_id, false)) reports.push_back(std::move(c));
    }
  }
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].check_id == reports[i - 1].check_id) throw Error("duplicate check id " + reports[i].check_id);
  }
  return reports;
}

}  // namespace rbi
