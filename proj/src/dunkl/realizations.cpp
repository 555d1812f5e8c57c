#include "rbi/dunkl/realizations.hpp"

#include <utility>

#include "rbi/errors.hpp"

namespace rbi {

namespace {

using E = DunklElement;

Symbol g_sym(int i) { return Symbol(static_cast<std::uint8_t>(sym::g1.index() + i - 1)); }
Symbol mu_sym(int i) { return Symbol(static_cast<std::uint8_t>(sym::mu1.index() + i - 1)); }

const Scalar kQuarter = Scalar::frac(1, 4);
const Scalar kHalf = Scalar::frac(1, 2);

E mu(int i) { return E(Poly::var(mu_sym(i))); }
E g(int i) { return E(Poly::var(g_sym(i))); }
E R(int i) { return E::refl(i); }

std::optional<Poly> scalar_or_none(const E& e) {
  if (!e.is_scalar()) return std::nullopt;
  return e.scalar_value();
}

std::string idx(int i) { return std::to_string(i); }

DunklCheck check(std::string name, std::string statement, E residual, std::optional<Poly> value = std::nullopt) {
  return DunklCheck{std::move(name), std::move(statement), std::move(residual), std::move(value)};
}

// [A,Omega] - (BA - AC + (l2 - l3)(l4 - l1)) and cyclically, Omega = [A,B]/2.
void racah_relations(std::vector<DunklCheck>& out, const std::string& prefix, const E& A, const E& B,
                     const E& C, const std::vector<E>& l) {
  const E AB = commutator(A, B);
  out.push_back(check(prefix + ".commutators.ab-bc", "[A,B] = [B,C]", AB - commutator(B, C)));
  out.push_back(check(prefix + ".commutators.bc-ca", "[B,C] = [C,A]", commutator(B, C) - commutator(C, A)));
  const E Omega = AB * kHalf;
  out.push_back(check(prefix + ".relation.a", "[A,Omega] = BA - AC + (l2-l3)(l4-l1)",
                      commutator(A, Omega) - (B * A - A * C + (l[1] - l[2]) * (l[3] - l[0]))));
  out.push_back(check(prefix + ".relation.b", "[B,Omega] = CB - BA + (l3-l1)(l4-l2)",
                      commutator(B, Omega) - (C * B - B * A + (l[2] - l[0]) * (l[3] - l[1]))));
  out.push_back(check(prefix + ".relation.c", "[C,Omega] = AC - CB + (l1-l2)(l4-l3)",
                      commutator(C, Omega) - (A * C - C * B + (l[0] - l[1]) * (l[3] - l[2]))));
}

}  // namespace

std::string to_string(LieKind k) { return k == LieKind::Su11 ? "su11" : "osp12"; }

Su11Single build_su11_single(int i) {
  const E x = E::x(i), dx = E::d(i), pot = g(i) * E::x(i, -2);
  Su11Single s;
  s.gens.K0 = (-dx * dx + x * x + pot) * kQuarter;
  s.gens.Kp = ((x - dx).pow(2) - pot) * kQuarter;
  s.gens.Km = ((x + dx).pow(2) - pot) * kQuarter;
  s.C = su11_casimir(s.gens);
  return s;
}

Osp12Single build_osp12_single(int i) {
  const E x = E::x(i), dx = E::d(i), refl_term = mu(i) * E::x(i, -1) * R(i);
  Osp12Single s;
  s.gens.Ap = (x - dx + refl_term) * kHalf;
  s.gens.Am = (x + dx - refl_term) * kHalf;
  s.gens.A0 = (-dx * dx + x * x + reflection_strength(i) * E::x(i, -2)) * kQuarter;
  s.gens.P = R(i);
  s.S = osp12_scasimir(s.gens);
  s.Q = osp12_casimir(s.gens);
  return s;
}

Su11Generators su11_coproduct(const Su11Generators& l, const Su11Generators& r) {
  return {l.K0 + r.K0, l.Kp + r.Kp, l.Km + r.Km};
}

Osp12Generators osp12_coproduct(const Osp12Generators& l, const Osp12Generators& r) {
  return {l.Ap * r.P + r.Ap, l.Am * r.P + r.Am, l.A0 + r.A0, l.P * r.P};
}

DunklElement su11_casimir(const Su11Generators& g) { return g.K0 * g.K0 - g.Kp * g.Km - g.K0; }

DunklElement osp12_scasimir(const Osp12Generators& g) {
  return g.Ap * g.Am * Scalar(2) - g.A0 * Scalar(2) + E(Poly(kHalf));
}

DunklElement osp12_casimir(const Osp12Generators& g) { return osp12_scasimir(g) * g.P; }

Su11Generators su11_lift(Legs legs) {
  auto s = [](int i) { return build_su11_single(i).gens; };
  switch (legs) {
    case Legs::L12: return su11_coproduct(s(1), s(2));
    case Legs::L23: return su11_coproduct(s(2), s(3));
    case Legs::L123: return su11_coproduct(s(1), su11_coproduct(s(2), s(3)));
  }
  throw Error("bad legs");
}

Osp12Generators osp12_lift(Legs legs) {
  auto s = [](int i) { return build_osp12_single(i).gens; };
  switch (legs) {
    case Legs::L12: return osp12_coproduct(s(1), s(2));
    case Legs::L23: return osp12_coproduct(s(2), s(3));
    case Legs::L123: return osp12_coproduct(s(1), osp12_coproduct(s(2), s(3)));
  }
  throw Error("bad legs");
}

Su11Generators su11_lift_left_nested() {
  return su11_coproduct(su11_lift(Legs::L12), build_su11_single(3).gens);
}

Osp12Generators osp12_lift_left_nested() {
  return osp12_coproduct(osp12_lift(Legs::L12), build_osp12_single(3).gens);
}

DunklElement coproduct_lift(LieKind kind, std::string_view generator, Legs legs) {
  if (kind == LieKind::Su11) {
    const Su11Generators g = su11_lift(legs);
    if (generator == "K0") return g.K0;
    if (generator == "K+") return g.Kp;
    if (generator == "K-") return g.Km;
    if (generator == "C") return su11_casimir(g);
  } else {
    const Osp12Generators g = osp12_lift(legs);
    if (generator == "A+") return g.Ap;
    if (generator == "A-") return g.Am;
    if (generator == "A0") return g.A0;
    if (generator == "P") return g.P;
    if (generator == "S") return osp12_scasimir(g);
    if (generator == "Q") return osp12_casimir(g);
  }
  throw UnknownGenerator("no generator '" + std::string(generator) + "' in " + to_string(kind));
}

Su11Casimirs su11_intermediate_casimirs() {
  return {build_su11_single(1).C,          build_su11_single(2).C,          build_su11_single(3).C,
          su11_casimir(su11_lift(Legs::L12)), su11_casimir(su11_lift(Legs::L23)),
          su11_casimir(su11_lift(Legs::L123))};
}

Osp12Casimirs osp12_intermediate_casimirs() {
  const Osp12Generators total = osp12_lift(Legs::L123);
  return {build_osp12_single(1).Q,
          build_osp12_single(2).Q,
          build_osp12_single(3).Q,
          osp12_casimir(osp12_lift(Legs::L12)),
          osp12_casimir(osp12_lift(Legs::L23)),
          osp12_casimir(total),
          osp12_scasimir(total)};
}

DunklElement sphere_hamiltonian(const std::vector<DunklElement>& strengths) {
  E L2, r2, pot;
  for (int i = 1; i <= 3; ++i) {
    const E L = E::angular(i);
    L2 += L * L;
    r2 += E::x(i, 2);
    pot += strengths.at(i - 1) * E::x(i, -2);
  }
  return L2 + r2 * pot;
}

DunklElement reflection_strength(int i) { return mu(i) * (mu(i) - R(i)); }

DunklElement constant_of_motion(int i, const DunklElement& vj, const DunklElement& vk) {
  const int j = i % 3 + 1, k = j % 3 + 1;
  const E L = E::angular(i);
  return (L * L + (E::x(j, 2) + E::x(k, 2)) * (vj * E::x(j, -2) + vk * E::x(k, -2)) - E(1)) * kQuarter;
}

BiClosedForms bi_closed_forms() {
  const E i_unit{Poly(Scalar::i())};
  const E half{Poly(kHalf)};
  BiClosedForms f;
  f.X = (i_unit * E::angular(1) + mu(2) * E::x(3) * E::x(2, -1) * R(2) - mu(3) * E::x(2) * E::x(3, -1) * R(3)) * R(2) +
        mu(2) * R(3) + mu(3) * R(2) + half * R(2) * R(3);
  f.Y = (-i_unit * E::angular(2) + mu(1) * E::x(3) * E::x(1, -1) * R(1) - mu(3) * E::x(1) * E::x(3, -1) * R(3)) *
            R(1) * R(2) +
        mu(1) * R(3) + mu(3) * R(1) + half * R(1) * R(3);
  f.Z = (i_unit * E::angular(3) + mu(1) * E::x(2) * E::x(1, -1) * R(1) - mu(2) * E::x(1) * E::x(2, -1) * R(2)) * R(1) +
        mu(1) * R(2) + mu(2) * R(1) + half * R(1) * R(2);
  return f;
}

BiStructureOperators bi_structure_operators(const DunklElement& l1, const DunklElement& l2, const DunklElement& l3,
                                            const DunklElement& l4) {
  return {(l2 * l3 + l1 * l4) * Scalar(2), (l1 * l3 + l2 * l4) * Scalar(2), (l1 * l2 + l3 * l4) * Scalar(2)};
}

std::vector<DunklCheck> verify_su11_relations(int i) {
  const Su11Single s = build_su11_single(i);
  const auto& [K0, Kp, Km] = s.gens;
  const std::string p = "su11.x" + idx(i);
  const Poly expected = (Poly::var(g_sym(i)) - Poly(Scalar::frac(3, 4))) * kQuarter;
  return {
      check(p + ".k0-kplus", "[K0,K+] = K+", commutator(K0, Kp) - Kp),
      check(p + ".k0-kminus", "[K0,K-] = -K-", commutator(K0, Km) + Km),
      check(p + ".kminus-kplus", "[K-,K+] = 2K0", commutator(Km, Kp) - K0 * Scalar(2)),
      check(p + ".casimir", "C = (g - 3/4)/4", s.C - E(expected), scalar_or_none(s.C)),
  };
}

std::vector<DunklCheck> verify_scasimir_relations(int i) {
  const Osp12Single s = build_osp12_single(i);
  const auto& [Ap, Am, A0, P] = s.gens;
  const E Jp = Ap * Ap, Jm = Am * Am;
  const E C = A0 * A0 - Jp * Jm - A0;
  const std::string p = "osp12.x" + idx(i);
  
  return {
      check(p + ".a0-aplus", "[A0,A+] = A+/2", commutator(A0, Ap) - Ap * kHalf),
      check(p + ".a0-aminus", "[A0,A-] = -A-/2", commutator(A0, Am) + Am * kHalf),
      check(p + ".aplus-aminus", "{A+,A-} = 2A0", anticommutator(Ap, Am) - A0 * Scalar(2)),
      check(p + ".a0-p", "[A0,P] = 0", commutator(A0, P)),
      check(p + ".aplus-p", "{A+,P} = 0", anticommutator(Ap, P)),
      check(p + ".aminus-p", "{A-,P} = 0", anticommutator(Am, P)),
      check(p + ".p-squared", "P^2 = 1", P * P - E(1)),
      check(p + ".a0-jplus", "[A0,J+] = J+", commutator(A0, Jp) - Jp),
      check(p + ".a0-jminus", "[A0,J-] = -J-", commutator(A0, Jm) + Jm),
      check(p + ".jminus-jplus", "[J-,J+] = 2A0", commutator(Jm, Jp) - A0 * Scalar(2)),
      check(p + ".scasimir-aplus", "{S,A+} = 0", anticommutator(s.S, Ap)),
      check(p + ".scasimir-aminus", "{S,A-} = 0", anticommutator(s.S, Am)),
      check(p + ".scasimir-a0", "[S,A0] = 0", commutator(s.S, A0)),
      check(p + ".scasimir-value", "S = -mu R", s.S + mu(i) * R(i)),
      check(p + ".casimir-value", "Q = -mu", s.Q + mu(i), scalar_or_none(s.Q)),
      check(p + ".casimir-aplus", "[Q,A+] = 0", commutator(s.Q, Ap)),
      check(p + ".casimir-aminus", "[Q,A-] = 0", commutator(s.Q, Am)),
      check(p + ".casimir-a0", "[Q,A0] = 0", commutator(s.Q, A0)),
      check(p + ".even-casimir-scasimir", "A0^2 - J+J- - A0 = (S^2 + S - 3/4)/4",
            C - (s.S * s.S + s.S - E(Poly(Scalar::frac(3, 4)))) * kQuarter),
      check(p + ".even-casimir-value", "A0^2 - J+J- - A0 = (mu^2 - mu R - 3/4)/4",
            C - (mu(i) * mu(i) - mu(i) * R(i) - E(Poly(Scalar::frac(3, 4)))) * kQuarter),
  };
}

std::vector<DunklCheck> verify_coproducts() {
  std::vector<DunklCheck> out;
  const Su11Generators su = su11_lift(Legs::L123), su_left = su11_lift_left_nested();
  out.push_back(check("coproduct.su11.coassociative.k0", "(1xD)D(K0) = (Dx1)D(K0)", su.K0 - su_left.K0));
  out.push_back(check("coproduct.su11.coassociative.kplus", "(1xD)D(K+) = (Dx1)D(K+)", su.Kp - su_left.Kp));
  out.push_back(check("coproduct.su11.coassociative.kminus", "(1xD)D(K-) = (Dx1)D(K-)", su.Km - su_left.Km));
  out.push_back(check("coproduct.su11.coassociative.casimir", "(1xD)D(C) = (Dx1)D(C)",
                      su11_casimir(su) - su11_casimir(su_left)));
  out.push_back(check("coproduct.su11.total.k0", "K0 on 123 = K0(x1) + K0(x2) + K0(x3)",
                      su.K0 - (build_su11_single(1).gens.K0 + build_su11_single(2).gens.K0 + build_su11_single(3).gens.K0)));
  out.push_back(check("coproduct.su11.total.kminus-kplus", "[K-,K+] = 2K0 on 123", commutator(su.Km, su.Kp) - su.K0 * Scalar(2)));
  out.push_back(check("coproduct.su11.total.k0-kplus", "[K0,K+] = K+ on 123", commutator(su.K0, su.Kp) - su.Kp));

  const Osp12Generators osp = osp12_lift(Legs::L123), osp_left = osp12_lift_left_nested();
  out.push_back(check("coproduct.osp12.coassociative.aplus", "(1xD)D(A+) = (Dx1)D(A+)", osp.Ap - osp_left.Ap));
  out.push_back(check("coproduct.osp12.coassociative.aminus", "(1xD)D(A-) = (Dx1)D(A-)", osp.Am - osp_left.Am));
  out.push_back(check("coproduct.osp12.coassociative.a0", "(1xD)D(A0) = (Dx1)D(A0)", osp.A0 - osp_left.A0));
  out.push_back(check("coproduct.osp12.coassociative.p", "(1xD)D(P) = (Dx1)D(P)", osp.P - osp_left.P));
  out.push_back(check("coproduct.osp12.coassociative.casimir", "(1xD)D(Q) = (Dx1)D(Q)",
                      osp12_casimir(osp) - osp12_casimir(osp_left)));
  out.push_back(check("coproduct.osp12.total.p", "P on 123 = R1R2R3", osp.P - R(1) * R(2) * R(3)));
  out.push_back(check("coproduct.osp12.pair.aplus", "A+ on 12 = A+(x1)R2 + A+(x2)",
                      osp12_lift(Legs::L12).Ap - (build_osp12_single(1).gens.Ap * R(2) + build_osp12_single(2).gens.Ap)));
  out.push_back(check("coproduct.osp12.total.aplus-aminus", "{A+,A-} = 2A0 on 123",
                      anticommutator(osp.Ap, osp.Am) - osp.A0 * Scalar(2)));
  out.push_back(check("coproduct.osp12.total.aplus-p", "{A+,P} = 0 on 123", anticommutator(osp.Ap, osp.P)));
  out.push_back(check("coproduct.osp12.total.a0-aplus", "[A0,A+] = A+/2 on 123", commutator(osp.A0, osp.Ap) - osp.Ap * kHalf));
  return out;
}

std::vector<DunklCheck> verify_racah_problem() {
  std::vector<DunklCheck> out;
  const Su11Casimirs c = su11_intermediate_casimirs();
  const Su11Generators total = su11_lift(Legs::L123);
  const E& A = c.C23;
  const E& Cc = c.C12;
  const E B = c.C1 + c.C2 + c.C3 + c.C4 - A - Cc;

  const std::vector<const E*> initial{&c.C1, &c.C2, &c.C3};
  std::vector<E> lambda;
  for (int i = 1; i <= 3; ++i) {
    const E& ci = *initial[i - 1];
    const Poly expected = (Poly::var(g_sym(i)) - Poly(Scalar::frac(3, 4))) * kQuarter;
    out.push_back(check("racah_problem.lambda" + idx(i) + ".scalar", "C(i) is the scalar (g_i - 3/4)/4",
                        ci - E(expected), scalar_or_none(ci)));
    lambda.push_back(ci);
  }
  lambda.push_back(c.C4);

  const std::pair<const char*, const E*> gens[] = {{"k0", &total.K0}, {"kplus", &total.Kp}, {"kminus", &total.Km}};
  for (const auto& [name, gen] : gens) {
    out.push_back(check(std::string("racah_problem.total_casimir.central.") + name, "[C(4), K] = 0 on 123",
                        commutator(c.C4, *gen)));
    out.push_back(check(std::string("racah_problem.a.commutes.") + name, "[C(23), K] = 0 on 123", commutator(A, *gen)));
    out.push_back(check(std::string("racah_problem.c.commutes.") + name, "[C(12), K] = 0 on 123", commutator(Cc, *gen)));
  }
  out.push_back(check("racah_problem.total_casimir.central.a", "[A, C(4)] = 0", commutator(A, c.C4)));
  out.push_back(check("racah_problem.total_casimir.central.b", "[B, C(4)] = 0", commutator(B, c.C4)));
  out.push_back(check("racah_problem.total_casimir.central.c", "[C, C(4)] = 0", commutator(Cc, c.C4)));

  racah_relations(out, "racah_problem", A, B, Cc, lambda);

  out.push_back(check("racah_problem.closed_form.a", "A = (L1^2 + (x2^2+x3^2)(g2/x2^2 + g3/x3^2) - 1)/4",
                      A - constant_of_motion(1, g(2), g(3))));
  out.push_back(check("racah_problem.closed_form.b", "B = (L2^2 + (x3^2+x1^2)(g3/x3^2 + g1/x1^2) - 1)/4",
                      B - constant_of_motion(2, g(3), g(1))));
  out.push_back(check("racah_problem.closed_form.c", "C = (L3^2 + (x1^2+x2^2)(g1/x1^2 + g2/x2^2) - 1)/4",
                      Cc - constant_of_motion(3, g(1), g(2))));
  out.push_back(check("racah_problem.total_casimir.closed_form", "C(4) = (H - 3/4)/4 with H the generic sphere Hamiltonian",
                      c.C4 - (sphere_hamiltonian({g(1), g(2), g(3)}) - E(Poly(Scalar::frac(3, 4)))) * kQuarter));
  return out;
}

std::vector<DunklCheck> verify_bi_problem() {
  std::vector<DunklCheck> out;
  const Osp12Casimirs q = osp12_intermediate_casimirs();
  const Osp12Generators total = osp12_lift(Legs::L123);
  const E Z = -q.Q12, X = -q.Q23;
  const E l1 = mu(1), l2 = mu(2), l3 = mu(3), l4 = -q.Q4;
  const auto [wX, wY, wZ] = bi_structure_operators(l1, l2, l3, l4);
  const E Y = anticommutator(Z, X) - wY;

  const E* initial[] = {&q.Q1, &q.Q2, &q.Q3};
  for (int i = 1; i <= 3; ++i) {
    const E& qi = *initial[i - 1];
    out.push_back(check("bi_problem.lambda" + idx(i) + ".scalar", "Q(i) = -mu_i", qi + mu(i),
                        scalar_or_none(qi)));
  }
  const std::pair<const char*, const E*> gens[] = {{"aplus", &total.Ap}, {"aminus", &total.Am}, {"a0", &total.A0}};
  for (const auto& [name, gen] : gens) {
    out.push_back(check(std::string("bi_problem.total_casimir.central.") + name, "[Q(4), A] = 0 on 123",
                        commutator(q.Q4, *gen)));
    out.push_back(check(std::string("bi_problem.x.commutes.") + name, "[Q(23), A] = 0 on 123", commutator(X, *gen)));
    out.push_back(check(std::string("bi_problem.z.commutes.") + name, "[Q(12), A] = 0 on 123", commutator(Z, *gen)));
  }
  out.push_back(check("bi_problem.total_casimir.central.x", "[Q(4), X] = 0", commutator(q.Q4, X)));
  out.push_back(check("bi_problem.total_casimir.central.y", "[Q(4), Y] = 0", commutator(q.Q4, Y)));
  out.push_back(check("bi_problem.total_casimir.central.z", "[Q(4), Z] = 0", commutator(q.Q4, Z)));

  out.push_back(check("bi_problem.relation.xy", "{X,Y} = Z + wZ", anticommutator(X, Y) - Z - wZ));
  out.push_back(check("bi_problem.relation.yz", "{Y,Z} = X + wX", anticommutator(Y, Z) - X - wX));

  const BiClosedForms f = bi_closed_forms();
  out.push_back(check("bi_problem.closed_form.x", "X = (iL1 + mu2 x3/x2 R2 - mu3 x2/x3 R3)R2 + mu2R3 + mu3R2 + R2R3/2", X - f.X));
  out.push_back(check("bi_problem.closed_form.y", "Y = (-iL2 + mu1 x3/x1 R1 - mu3 x1/x3 R3)R1R2 + mu1R3 + mu3R1 + R1R3/2", Y - f.Y));
  out.push_back(check("bi_problem.closed_form.z", "Z = (iL3 + mu1 x2/x1 R1 - mu2 x1/x2 R2)R1 + mu1R2 + mu2R1 + R1R2/2", Z - f.Z));

  const E R123 = R(1) * R(2) * R(3);
  out.push_back(check("bi_problem.total_scasimir.grading", "S(4) = Q(4) R1R2R3", q.S4 - q.Q4 * R123));
  const E H = sphere_hamiltonian({reflection_strength(1), reflection_strength(2), reflection_strength(3)});
  out.push_back(check("bi_problem.hamiltonian", "S(4)^2 + S(4) = H with reflections", q.S4 * q.S4 + q.S4 - H));
  const E* xyz[] = {&X, &Y, &Z};
  const char* names[] = {"x", "y", "z"};
  for (int k = 0; k < 3; ++k) {
    out.push_back(check(std::string("bi_problem.total_scasimir.commutes.") + names[k], "[S(4), X] = 0",
                        commutator(q.S4, *xyz[k])));
    out.push_back(check(std::string("bi_problem.parity.commutes.") + names[k], "[R1R2R3, X] = 0", commutator(R123, *xyz[k])));
  }
  const E U = X * X + Y * Y + Z * Z;
  out.push_back(check("bi_problem.casimir", "X^2 + Y^2 + Z^2 = S(4)^2 + mu1^2 + mu2^2 + mu3^2 - 1/4",
                      U - (q.S4 * q.S4 + l1 * l1 + l2 * l2 + l3 * l3 - E(Poly(kQuarter)))));
  return out;
}

std::vector<DunklCheck> verify_dunkl_embedding() {
  std::vector<DunklCheck> out;
  const Osp12Casimirs q = osp12_intermediate_casimirs();
  const E Z = -q.Q12, X = -q.Q23;
  const E Y = anticommutator(Z, X) - bi_structure_operators(mu(1), mu(2), mu(3), -q.Q4).wY;
  const E three_quarters{Poly(Scalar::frac(3, 4))};

  const E A = (X * X - X * R(2) * R(3) - three_quarters) * kQuarter;
  const E B = (Y * Y - Y * R(3) * R(1) - three_quarters) * kQuarter;
  const E C = (Z * Z - Z * R(1) * R(2) - three_quarters) * kQuarter;

  std::vector<E> V;
  for (int i = 1; i <= 3; ++i) V.push_back(reflection_strength(i));
  out.push_back(check("embedding_dunkl.closed_form.a", "A = (L1^2 + (x2^2+x3^2)(mu2(mu2-R2)/x2^2 + mu3(mu3-R3)/x3^2) - 1)/4",
                      A - constant_of_motion(1, V[1], V[2])));
  out.push_back(check("embedding_dunkl.closed_form.b", "B = (L2^2 + (x3^2+x1^2)(mu3(mu3-R3)/x3^2 + mu1(mu1-R1)/x1^2) - 1)/4",
                      B - constant_of_motion(2, V[2], V[0])));
  out.push_back(check("embedding_dunkl.closed_form.c", "C = (L3^2 + (x1^2+x2^2)(mu1(mu1-R1)/x1^2 + mu2(mu2-R2)/x2^2) - 1)/4",
                      C - constant_of_motion(3, V[0], V[1])));

  const E* abc[] = {&A, &B, &C};
  const char* names[] = {"a", "b", "c"};
  for (int k = 0; k < 3; ++k) {
    for (int i = 1; i <= 3; ++i) {
      out.push_back(check("embedding_dunkl.reflections." + std::string(names[k]) + "-r" + idx(i), "[A, R_i] = 0",
                          commutator(*abc[k], R(i))));
    }
  }

  std::vector<E> lambda;
  for (int i = 1; i <= 3; ++i) {
    lambda.push_back((mu(i) * mu(i) - mu(i) * R(i) - three_quarters) * kQuarter);
    const E k = mu(i) - R(i) * kHalf;
    out.push_back(check("embedding_dunkl.substitution.k" + idx(i), "(mu_i - R_i/2)^2 - 1/4 = mu_i(mu_i - R_i)",
                        k * k - E(Poly(kQuarter)) - V[i - 1]));
  }
  lambda.push_back((sphere_hamiltonian(V) - three_quarters) * kQuarter);
  for (int i = 1; i <= 4; ++i) {
    for (int k = 0; k < 3; ++k) {
      out.push_back(check("embedding_dunkl.lambda" + idx(i) + ".central." + names[k], "[lambda_i, A] = 0",
                          commutator(lambda[i - 1], *abc[k])));
    }
  }
  racah_relations(out, "embedding_dunkl", A, B, C, lambda);

  // The su(1,1) constants of motion become A, B, C under g_i -> mu_i(mu_i - R_i).
  auto specialize = [&](E e) {
    for (int i = 1; i <= 3; ++i) e = e.substitute_operator(g_sym(i), V[i - 1]);
    return e;
  };
  out.push_back(check("embedding_dunkl.specialization.a", "A = su(1,1) A with g_i -> mu_i(mu_i - R_i)",
                      A - specialize(constant_of_motion(1, g(2), g(3)))));
  out.push_back(check("embedding_dunkl.specialization.b", "B = su(1,1) B with g_i -> mu_i(mu_i - R_i)",
                      B - specialize(constant_of_motion(2, g(3), g(1)))));
  out.push_back(check("embedding_dunkl.specialization.c", "C = su(1,1) C with g_i -> mu_i(mu_i - R_i)",
                      C - specialize(constant_of_motion(3, g(1), g(2)))));
  return out;
}

}  // namespace rbi
