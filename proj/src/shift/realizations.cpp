#include "rbi/shift/realizations.hpp"

#include <algorithm>

#include "rbi/errors.hpp"

namespace rbi {

namespace {

const Symbol X_VAR = sym::x;
const Symbol Z_VAR = sym::z;

Poly px() { return Poly::var(X_VAR); }
Poly pz() { return Poly::var(Z_VAR); }
Poly q(long n, long d = 1) { return Poly(Scalar::frac(n, d)); }

RatFunc rf(const Poly& p, Symbol v) { return RatFunc(p, v); }

ShiftOp scalar_op(Symbol v, const Poly& c) { return ShiftOp::scalar(v, RatFunc(c, v)); }

Poly to_poly(const RatFunc& r, const std::string& what) {
  if (!r.is_polynomial()) throw Inconsistent(what + " is not polynomial in the parameters: " + r.to_string());
  return r.num() * r.den().constant_term().inverse();
}

}  // namespace

RacahParams RacahParams::symbolic() {
  return {Poly::var(sym::alpha), Poly::var(sym::beta), Poly::var(sym::gamma), Poly::var(sym::delta)};
}

std::vector<std::pair<std::string, Poly>> RacahParams::named() const {
  return {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}};
}

BiParams BiParams::symbolic() {
  return {Poly::var(sym::rho1), Poly::var(sym::rho2), Poly::var(sym::r1), Poly::var(sym::r2)};
}

std::vector<std::pair<std::string, Poly>> BiParams::named() const {
  return {{"rho1", rho1}, {"rho2", rho2}, {"r1", r1}, {"r2", r2}};
}

RacahRealization build_standard_racah(const RacahParams& p) {
  const Poly x = px();
  const Poly gd = p.gamma + p.delta;
  RacahRealization r{p, RatFunc(X_VAR), RatFunc(X_VAR), RatFunc(X_VAR), ShiftOp(X_VAR), ShiftOp(X_VAR)};
  r.B = RatFunc::normalize((x + p.alpha + q(1)) * (x + p.beta + p.delta + q(1)) * (x + p.gamma + q(1)) * (x + gd + q(1)),
                           (x * Scalar(2) + gd + q(1)) * (x * Scalar(2) + gd + q(2)), X_VAR);
  r.D = RatFunc::normalize(x * (x - p.alpha + gd) * (x - p.beta + p.gamma) * (x + p.delta),
                           (x * Scalar(2) + gd) * (x * Scalar(2) + gd + q(1)), X_VAR);
  r.lambda = rf(x * (x + gd + q(1)), X_VAR);
  r.k1 = ShiftOp::term(X_VAR, 1, 0, r.B) + ShiftOp::term(X_VAR, -1, 0, r.D) - ShiftOp::scalar(X_VAR, r.B + r.D);
  r.k2 = ShiftOp::multiplication(r.lambda);
  return r;
}

BiRealization build_standard_bi(const BiParams& p) {
  const Poly z = pz();
  const Poly half = q(1, 2);
  BiRealization r{p, RatFunc(Z_VAR), RatFunc(Z_VAR), Poly(), ShiftOp(Z_VAR), ShiftOp(Z_VAR)};
  r.F = RatFunc::normalize((z - p.r1 + half) * (z - p.r2 + half), z + half, Z_VAR);
  r.G = RatFunc::normalize((z - p.rho1) * (z - p.rho2), -z, Z_VAR);
  r.h = p.rho1 + p.rho2 - p.r1 - p.r2 + half;
  r.X = ShiftOp::term(Z_VAR, 1, 1, r.F) + ShiftOp::term(Z_VAR, 0, 1, r.G) -
        ShiftOp::scalar(Z_VAR, r.F + r.G - rf(r.h, Z_VAR));
  r.Y = ShiftOp::multiplication(rf(z * Scalar(2) + half, Z_VAR));
  return r;
}

std::vector<RatFunc> fit_linear_combination(const ShiftOp& target, const std::vector<ShiftOp>& basis) {
  const Symbol v = target.var();
  std::vector<ShiftKey> keys;
  auto add_keys = [&](const ShiftOp& op) {
    for (const auto& [k, c] : op.terms()) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
  };
  add_keys(target);
  for (const auto& b : basis) add_keys(b);
  std::sort(keys.begin(), keys.end());

  const std::size_t n = basis.size();
  std::vector<std::vector<RatFunc>> rows;
  std::vector<RatFunc> rhs;
  const std::size_t points = n + 2;
  // Sample points j + 1/7 avoid the integer and half-integer poles of the
  // realizations' coefficients.
  for (std::size_t j = 1, used = 0; used < points && j < 8 * points; ++j) {
    const Poly at(Scalar(Rational(7 * long(j) + 1, 7)));
    const std::vector<std::pair<Symbol, Poly>> sub{{v, at}};
    std::vector<std::vector<RatFunc>> block;
    std::vector<RatFunc> block_rhs;
    try {
      for (const auto& k : keys) {
        std::vector<RatFunc> row;
        bool nonzero = false;
        for (const auto& b : basis) {
          row.push_back(b.coefficient(k.shift, k.refl).substitute(sub));
          nonzero = nonzero || !row.back().is_zero();
        }
        RatFunc t = target.coefficient(k.shift, k.refl).substitute(sub);
        if (!nonzero && t.is_zero()) continue;
        block.push_back(std::move(row));
        block_rhs.push_back(std::move(t));
      }
    } catch (const ZeroDenominator&) {
      continue;
    }
    for (auto& r : block) rows.push_back(std::move(r));
    for (auto& r : block_rhs) rhs.push_back(std::move(r));
    ++used;
  }
  if (rows.empty()) {
    if (n == 0) return {};
    throw Singular("no equations for the fit");
  }
  ExactMatrix<RatFunc> a(rows.size(), n, RatFunc(v));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  }
  std::vector<RatFunc> u = mat_solve_linear<RatFunc>(a, rhs);

  ShiftOp combo(v);
  for (std::size_t j = 0; j < n; ++j) combo += basis[j] * u[j];
  const auto check = verify_operator_identity(target, combo);
  if (!check.ok) throw Inconsistent("operator is not in the span; residual " + check.residual.to_string());
  return u;
}

RacahFit fit_racah_constants(const RacahRealization& r) {
  const ShiftOp& k1 = r.k1;
  const ShiftOp& k2 = r.k2;
  RacahFit fit{RacahConstants{}, commutator(k1, k2)};
  const ShiftOp& k3 = fit.k3;
  const std::vector<ShiftOp> basis{k2 * k2, anticommutator(k1, k2), k1 * k1, k1, k2, ShiftOp::identity(X_VAR)};

  // [k2,k3] = a2 k2^2 + a1 {k1,k2} + c1 k1 + d k2 + e1
  const auto u23 = fit_linear_combination(commutator(k2, k3), basis);
  // [k3,k1] = a1 k1^2 + a2 {k1,k2} + c2 k2 + d k1 + e2
  const auto u31 = fit_linear_combination(commutator(k3, k1), basis);

  if (!u23[2].is_zero()) throw Inconsistent("[k2,k3] has a k1^2 component " + u23[2].to_string());
  if (!u31[0].is_zero()) throw Inconsistent("[k3,k1] has a k2^2 component " + u31[0].to_string());
  if (!(u23[0] == u31[1])) throw Inconsistent("a2 differs between the two relations");
  if (!(u23[1] == u31[2])) throw Inconsistent("a1 differs between the two relations");
  if (!(u23[4] == u31[3])) throw Inconsistent("d differs between the two relations");

  RacahConstants& c = fit.constants;
  c.a2 = to_poly(u23[0], "a2");
  c.a1 = to_poly(u23[1], "a1");
  c.c1 = to_poly(u23[3], "c1");
  c.d = to_poly(u23[4], "d");
  c.e1 = to_poly(u23[5], "e1");
  c.c2 = to_poly(u31[4], "c2");
  c.e2 = to_poly(u31[5], "e2");
  return fit;
}

BiFit fit_bi_constants(const BiRealization& r) {
  const ShiftOp& X = r.X;
  const ShiftOp& Y = r.Y;
  const ShiftOp Z0 = anticommutator(X, Y);  // Z + wZ
  // {Y, Z + wZ} - X = ({Y,Z} - X) + 2 wZ Y = wX + 2 wZ Y
  const auto u = fit_linear_combination(anticommutator(Y, Z0) - X, {Y, ShiftOp::identity(Z_VAR)});
  BiFit fit{BiConstants{}, ShiftOp(Z_VAR)};
  fit.constants.omega_z = to_poly(u[0] * Scalar::frac(1, 2), "omega_z");
  fit.constants.omega_x = to_poly(u[1], "omega_x");
  fit.Z = Z0 - scalar_op(Z_VAR, fit.constants.omega_z);
  const ShiftOp& Z = fit.Z;

  const auto wy = (anticommutator(Z, X) - Y).as_scalar();
  if (!wy) throw Inconsistent("{Z,X} - Y is not a scalar");
  fit.constants.omega_y = to_poly(*wy, "omega_y");

  if (!verify_operator_identity(anticommutator(Y, Z) - X, scalar_op(Z_VAR, fit.constants.omega_x)).ok) {
    throw Inconsistent("{Y,Z} - X differs from omega_x");
  }
  return fit;
}

RatFunc racah_casimir_scalar(const RacahRealization& r, const RacahFit& fit) {
  const RacahConstants& c = fit.constants;
  const ShiftOp& k1 = r.k1;
  const ShiftOp& k2 = r.k2;
  const ShiftOp& k3 = fit.k3;
  auto cf = [](const Poly& p) { return RatFunc(p, X_VAR); };
  const ShiftOp k1sq = k1 * k1, k2sq = k2 * k2;
  ShiftOp t = anticommutator(k1sq, k2) * cf(c.a1);
  t += anticommutator(k1, k2sq) * cf(c.a2);
  t += k1sq * cf(c.a1 * c.a1 + c.c1);
  t += k2sq * cf(c.a2 * c.a2 + c.c2);
  t += k3 * k3;
  t += anticommutator(k1, k2) * cf(c.d + c.a1 * c.a2);
  t += k1 * cf(c.e1 * Scalar(2) + c.d * c.a1);
  t += k2 * cf(c.e2 * Scalar(2) + c.d * c.a2);
  const auto s = t.as_scalar();
  if (!s) throw NotScalar("Racah Casimir is not a multiple of the identity: " + t.to_string());
  return *s;
}

RatFunc bi_casimir_scalar(const BiRealization& r, const BiFit& fit) {
  const ShiftOp u = r.X * r.X + r.Y * r.Y + fit.Z * fit.Z;
  const auto s = u.as_scalar();
  if (!s) throw NotScalar("Bannai-Ito Casimir is not a multiple of the identity: " + u.to_string());
  return *s;
}

QuadraticCombos build_quadratic_combos(const BiRealization& r, const BiFit& fit) {
  auto combo = [](const ShiftOp& g) {
    return (g * g - g - scalar_op(Z_VAR, q(3, 4))) * Scalar::frac(1, 4);
  };
  QuadraticCombos c{combo(r.X), combo(r.Y), combo(fit.Z), r.X + r.Y + fit.Z - scalar_op(Z_VAR, q(3, 2)),
                    ShiftOp(Z_VAR)};
  c.Delta = commutator(c.A, c.B) * Scalar::frac(1, 2);
  return c;
}

ShiftOp equitable_central_operator(const Poly& wa, const Poly& wb, const ShiftOp& I) {
  const Symbol v = I.var();
  const Poly half = q(1, 2);
  ShiftOp inner = scalar_op(v, (wa + wb) * half) - I;
  return inner * RatFunc((wa - wb) * half * q(1, 16), v);
}

std::vector<Poly> to_lambda_basis(const Poly& p, const RacahParams& params) {
  const Poly x = px();
  const Poly shift = params.gamma + params.delta + q(1);
  if (p.substitute(X_VAR, -x - shift) != p) {
    throw NotSymmetric("polynomial " + p.to_string() + " is not invariant under x -> -x - gamma - delta - 1");
  }
  const Poly lambda = x * (x + shift);
  const unsigned deg = p.degree_in(X_VAR);
  std::vector<Poly> powers{Poly(1)};
  for (unsigned k = 1; 2 * k <= deg; ++k) powers.push_back(powers.back() * lambda);
  std::vector<Poly> out(deg / 2 + 1);
  Poly rest = p;
  while (!rest.is_zero()) {
    const unsigned d = rest.degree_in(X_VAR);
    if (d % 2 != 0) throw NotSymmetric("odd-degree remainder " + rest.to_string());
    const Poly lead = rest.coefficients_in(X_VAR).back();
    out[d / 2] = lead;
    rest -= lead * powers[d / 2];
  }
  return out;
}

namespace {

Scalar as_number(const Poly& p) {
  if (!p.is_constant()) throw Error("bispectral matrices need numeric parameters, got " + p.to_string());
  return p.constant_term();
}

void finish_bispectral(BispectralData& out, const ScalarMatrix& mult_on_basis, unsigned M) {
  const auto eig = mat_eig_triangular(out.triangular);
  out.P = eig.P;
  const ScalarMatrix Pinv = unit_upper_inverse(eig.P, Scalar(1));
  out.diag = Pinv * out.triangular * out.P;
  out.mult = Pinv * mult_on_basis * out.P;
  const std::size_t n = out.mult.rows();
  for (std::size_t j = 0; j < n && !out.off_diag; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j && !out.diag(i, j).is_zero()) {
        out.off_diag = std::make_pair(i, j);
        break;
      }
    }
  }
  for (std::size_t j = 0; j <= M && !out.off_band; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap > 1 && !out.mult(i, j).is_zero()) {
        out.off_band = std::make_pair(i, j);
        break;
      }
    }
  }
}

}  // namespace

BispectralData bispectral_racah(const RacahParams& numeric, unsigned M) {
  for (const auto& [name, v] : numeric.named()) as_number(v);
  const RacahRealization r = build_standard_racah(numeric);
  const std::size_t n = M + 2;
  BispectralData out{"lambda", ScalarMatrix(n, n), {}, {}, {}, std::nullopt, std::nullopt};
  Poly lam_k(1);
  const Poly lambda = r.lambda.as_poly();
  for (std::size_t k = 0; k < n; ++k) {
    const auto coeffs = to_lambda_basis(r.k1.apply_to_polynomial(lam_k), numeric);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i >= n) throw NotTriangular("difference operator raises the degree");
      out.triangular(i, k) = as_number(coeffs[i]);
    }
    lam_k *= lambda;
  }
  ScalarMatrix mult(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) mult(k + 1, k) = Scalar(1);
  finish_bispectral(out, mult, M);
  return out;
}

BispectralData bispectral_bi(const BiParams& numeric, unsigned M) {
  for (const auto& [name, v] : numeric.named()) as_number(v);
  const BiRealization r = build_standard_bi(numeric);
  const std::size_t n = M + 2;
  BispectralData out{"z", ScalarMatrix(n, n), {}, {}, {}, std::nullopt, std::nullopt};
  for (std::size_t k = 0; k < n; ++k) {
    const Poly image = r.X.apply_to_polynomial(Poly::var(Z_VAR, static_cast<unsigned>(k)));
    const auto coeffs = image.coefficients_in(Z_VAR);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      if (i >= n) throw NotTriangular("difference operator raises the degree");
      out.triangular(i, k) = as_number(coeffs[i]);
    }
  }
  // Y z^k = 2 z^(k+1) + z^k / 2
  ScalarMatrix mult(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    mult(k, k) = Scalar::frac(1, 2);
    if (k + 1 < n) mult(k + 1, k) = Scalar(2);
  }
  finish_bispectral(out, mult, M);
  return out;
}

namespace {

Poly random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 13);
  std::uniform_int_distribution<long> den(1, 11);
  std::bernoulli_distribution neg(0.3);
  const long n = num(rng);
  const long d = den(rng);
  return Poly(Scalar::frac(neg(rng) ? -n : n, d));
}

}  // namespace

RacahParams random_racah_params(std::mt19937_64& rng) {
  RacahParams p;
  p.alpha = random_value(rng);
  p.beta = random_value(rng);
  p.gamma = random_value(rng);
  p.delta = random_value(rng);
  return p;
}

BiParams random_bi_params(std::mt19937_64& rng) {
  BiParams p;
  p.rho1 = random_value(rng);
  p.rho2 = random_value(rng);
  p.r1 = random_value(rng);
  p.r2 = random_value(rng);
  return p;
}

}  // namespace rbi
