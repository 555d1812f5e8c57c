#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rbi/algebra/constants.hpp"
#include "rbi/kernel/matrix.hpp"
#include "rbi/shift/operator.hpp"

namespace rbi {

/// Parameters of the Racah difference operator; each is a symbol or a value.
struct RacahParams {
  Poly alpha, beta, gamma, delta;
  static RacahParams symbolic();
  std::vector<std::pair<std::string, Poly>> named() const;
};

/// Parameters of the Bannai-Ito difference-reflection operator.
struct BiParams {
  Poly rho1, rho2, r1, r2;
  static BiParams symbolic();
  std::vector<std::pair<std::string, Poly>> named() const;
};

/// k1 = B T^+ + D T^- - (B + D), k2 = multiplication by lambda(x), with
///   B(x) = (x+a+1)(x+b+d+1)(x+g+1)(x+g+d+1) / ((2x+g+d+1)(2x+g+d+2))
///   D(x) = x(x-a+g+d)(x-b+g)(x+d) / ((2x+g+d)(2x+g+d+1))
///   lambda(x) = x(x+g+d+1)
/// for (a, b, g, d) = (alpha, beta, gamma, delta).
struct RacahRealization {
  RacahParams params;
  RatFunc B, D, lambda;
  ShiftOp k1, k2;
};

/// X = F T^+ R + G R - (F + G - h), Y = 2z + 1/2, with
///   F(z) = (z-r1+1/2)(z-r2+1/2)/(z+1/2),  G(z) = (z-rho1)(z-rho2)/(-z),
///   h = rho1 + rho2 - r1 - r2 + 1/2.
struct BiRealization {
  BiParams params;
  RatFunc F, G;
  Poly h;
  ShiftOp X, Y;
};

RacahRealization build_standard_racah(const RacahParams& p = RacahParams::symbolic());
BiRealization build_standard_bi(const BiParams& p = BiParams::symbolic());

/// Coefficients u with target = sum_j u_j basis_j, found by matching the
/// (shift, reflection) coefficients at sample points of the variable and
/// then checked as an exact operator identity. The u_j are free of the
/// variable. Throws Singular when the basis does not determine u uniquely
/// and Inconsistent when target is not in the span.
std::vector<RatFunc> fit_linear_combination(const ShiftOp& target, const std::vector<ShiftOp>& basis);

struct RacahFit {
  RacahConstants constants;
  ShiftOp k3;  // [k1, k2]
};

/// Fits [k2,k3] over {k2^2, {k1,k2}, k1^2, k1, k2, 1} and [k3,k1] over the
/// same basis, reads off a1, a2, c1, c2, d, e1, e2 and checks that the
/// shared constants agree and the unused basis slots vanish. Throws
/// Inconsistent.
RacahFit fit_racah_constants(const RacahRealization& r);

struct BiFit {
  BiConstants constants;
  ShiftOp Z;  // {X, Y} - omega_z
};

/// Fits {Y, {X,Y}} - X = 2 wZ Y + wX, sets Z = {X,Y} - wZ and checks that
/// {Z,X} - Y is a scalar wY and {Y,Z} - X equals wX. Throws Inconsistent.
BiFit fit_bi_constants(const BiRealization& r);

/// Value of T in the realization; throws NotScalar.
RatFunc racah_casimir_scalar(const RacahRealization& r, const RacahFit& fit);
/// Value of U = X^2 + Y^2 + Z^2 in the realization; throws NotScalar.
RatFunc bi_casimir_scalar(const BiRealization& r, const BiFit& fit);

/// A = (X^2 - X - 3/4)/4 and cyclically, I = X + Y + Z - 3/2, Delta = [A,B]/2.
struct QuadraticCombos {
  ShiftOp A, B, C, I, Delta;
};

QuadraticCombos build_quadratic_combos(const BiRealization& r, const BiFit& fit);

/// (1/16)((wa - wb)/2)((wa + wb)/2 - I) as an operator.
ShiftOp equitable_central_operator(const Poly& wa, const Poly& wb, const ShiftOp& I);

/// Coefficients c_k with p = sum_k c_k lambda(x)^k. Throws NotSymmetric when
/// p is not invariant under x -> -x - gamma - delta - 1.
std::vector<Poly> to_lambda_basis(const Poly& p, const RacahParams& params);

/// Exact bispectrality data on a basis of size M + 2.
struct BispectralData {
  std::string basis;      // "lambda" or "z"
  ScalarMatrix triangular;  // difference operator on {lambda^k} resp. {z^k}
  ScalarMatrix P;           // eigenvectors, unit upper-triangular
  ScalarMatrix diag;        // P^-1 * triangular * P
  ScalarMatrix mult;        // multiplication operator in the eigenbasis
  /// First entry (row, col) with col <= M outside the three central
  /// diagonals of mult, if any.
  std::optional<std::pair<std::size_t, std::size_t>> off_band;
  /// First off-diagonal nonzero of diag, if any.
  std::optional<std::pair<std::size_t, std::size_t>> off_diag;
};

/// Throws DegenerateSpectrum and NotPolynomialPreserving. Parameters must be
/// numeric.
BispectralData bispectral_racah(const RacahParams& numeric, unsigned M);
BispectralData bispectral_bi(const BiParams& numeric, unsigned M);

/// Random numeric parameters with small numerators and denominators.
RacahParams random_racah_params(std::mt19937_64& rng);
BiParams random_bi_params(std::mt19937_64& rng);

}  // namespace rbi
