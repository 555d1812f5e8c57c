#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbi/dunkl/element.hpp"

namespace rbi {

enum class LieKind { Su11, Osp12 };
enum class Legs { L12, L23, L123 };

std::string to_string(LieKind k);

/// K0, K+, K- realized on one variable or lifted to several.
struct Su11Generators {
  DunklElement K0, Kp, Km;
};

/// A+, A-, A0 and the grade involution P.
struct Osp12Generators {
  DunklElement Ap, Am, A0, P;
};

/// K0 = (-d^2 + x^2 + g/x^2)/4, K+- = ((x -+ d)^2 - g/x^2)/4 in x_i with
/// g = g_i standing for k_i^2 - 1/4.
struct Su11Single {
  Su11Generators gens;
  DunklElement C;
};

/// A+- = (x -+ d +- mu R/x)/2, A0 = (-d^2 + x^2 + mu(mu - R)/x^2)/4, P = R
/// in x_i with mu = mu_i.
struct Osp12Single {
  Osp12Generators gens;
  DunklElement S, Q;
};

Su11Single build_su11_single(int i);
Osp12Single build_osp12_single(int i);

/// Coproduct with the left factor in `l` and the right factor in `r`:
/// K -> K (x) 1 + 1 (x) K for su(1,1); A+- -> A+- (x) P + 1 (x) A+-,
/// A0 -> A0 (x) 1 + 1 (x) A0, P -> P (x) P for osp(1|2).
Su11Generators su11_coproduct(const Su11Generators& l, const Su11Generators& r);
Osp12Generators osp12_coproduct(const Osp12Generators& l, const Osp12Generators& r);

/// K0^2 - K+K- - K0.
DunklElement su11_casimir(const Su11Generators& g);
/// 2A+A- - 2A0 + 1/2.
DunklElement osp12_scasimir(const Osp12Generators& g);
/// S P.
DunklElement osp12_casimir(const Osp12Generators& g);

/// Generators lifted to the given legs; L123 uses (1 (x) Delta) Delta.
Su11Generators su11_lift(Legs legs);
Osp12Generators osp12_lift(Legs legs);
/// L123 via (Delta (x) 1) Delta.
Su11Generators su11_lift_left_nested();
Osp12Generators osp12_lift_left_nested();

/// Generator names: K0, K+, K-, C for su11; A+, A-, A0, P, S, Q for osp12.
/// Throws UnknownGenerator.
DunklElement coproduct_lift(LieKind kind, std::string_view generator, Legs legs);

struct Su11Casimirs {
  DunklElement C1, C2, C3, C12, C23, C4;
};

struct Osp12Casimirs {
  DunklElement Q1, Q2, Q3, Q12, Q23, Q4, S4;
};

Su11Casimirs su11_intermediate_casimirs();
Osp12Casimirs osp12_intermediate_casimirs();

/// (L1^2 + L2^2 + L3^2 + (x1^2 + x2^2 + x3^2) sum_i V_i / x_i^2) with the
/// potential strengths V_i placed to the left of x_i^-2.
DunklElement sphere_hamiltonian(const std::vector<DunklElement>& strengths);
/// V_i = mu_i (mu_i - R_i).
DunklElement reflection_strength(int i);

/// (L_i^2 + (x_j^2 + x_k^2)(V_j/x_j^2 + V_k/x_k^2) - 1)/4 with (i, j, k)
/// cyclic.
DunklElement constant_of_motion(int i, const DunklElement& vj, const DunklElement& vk);

/// X, Y, Z as printed in closed form for the osp(1|2) tensor product.
struct BiClosedForms {
  DunklElement X, Y, Z;
};
BiClosedForms bi_closed_forms();

/// wX = 2(l2 l3 + l1 l4), wY = 2(l1 l3 + l2 l4), wZ = 2(l1 l2 + l3 l4); the
/// l_i may be operators that commute with each other.
struct BiStructureOperators {
  DunklElement wX, wY, wZ;
};
BiStructureOperators bi_structure_operators(const DunklElement& l1, const DunklElement& l2, const DunklElement& l3,
                                            const DunklElement& l4);

/// A named residual; the check passes when the residual is exactly zero.
struct DunklCheck {
  std::string name;
  std::string statement;
  DunklElement residual;
  std::optional<Poly> value;  // computed scalar, when the check has one
  bool ok() const { return residual.is_zero(); }
};

/// Single-variable su(1,1) relations and the Casimir value in x_i.
std::vector<DunklCheck> verify_su11_relations(int i);
/// Single-variable osp(1|2) relations, sCasimir identities and Q = -mu_i.
std::vector<DunklCheck> verify_scasimir_relations(int i);
/// Coassociativity and leg examples of the coproduct lifts.
std::vector<DunklCheck> verify_coproducts();
/// Racah relations for the su(1,1) intermediate Casimirs.
std::vector<DunklCheck> verify_racah_problem();
/// Bannai-Ito relations for the osp(1|2) intermediate Casimirs.
std::vector<DunklCheck> verify_bi_problem();
/// Quadratic combinations of the Bannai-Ito operators with reflections.
std::vector<DunklCheck> verify_dunkl_embedding();

}  // namespace rbi
