#include <gtest/gtest.h>

#include <random>

#include "rbi/errors.hpp"
#include "rbi/shift/realizations.hpp"
#include "support/random.hpp"

using namespace rbi;

namespace {

const Symbol zv = sym::z;
const Symbol xv = sym::x;

Poly v(Symbol s) { return Poly::var(s); }
Poly q(long n, long d = 1) { return Poly(Scalar::frac(n, d)); }
RatFunc rz(const Poly& p) { return RatFunc(p, zv); }
RatFunc rx(const Poly& p) { return RatFunc(p, xv); }

BiParams sample_bi() { return {q(1), q(3, 2), q(1, 2), q(2)}; }

// f evaluated at a number, straight from numerator and denominator.
Scalar eval_at(const RatFunc& f, const Scalar& at) {
  const std::vector<std::pair<Symbol, Poly>> sub{{f.var(), Poly(at)}};
  return f.num().substitute(sub).constant_term() / f.den().substitute(sub).constant_term();
}

ShiftOp random_op(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> shift(-2, 2), refl(0, 1), nterms(1, 3);
  std::uniform_int_distribution<long> pole(1, 5);
  ShiftOp op(zv);
  for (int t = nterms(rng); t > 0; --t) {
    const Poly num = testutil::random_poly(rng, {zv}, 2, 2);
    if (num.is_zero()) continue;
    const Poly den = v(zv) + Poly(Scalar::frac(2 * pole(rng) + 1, 3));
    op += ShiftOp::term(zv, shift(rng), refl(rng), RatFunc::normalize(num, den, zv));
  }
  return op;
}

}  // namespace

TEST(ShiftOp, ReflectionShiftExchange) {
  const RatFunc one = rz(Poly(1));
  const ShiftOp R = ShiftOp::term(zv, 0, 1, one);
  const ShiftOp Tp = ShiftOp::term(zv, 1, 0, one);
  EXPECT_EQ(op_compose(R, Tp), ShiftOp::term(zv, -1, 1, one));
  EXPECT_EQ(op_compose(R, R), ShiftOp::identity(zv));
}

TEST(ShiftOp, SingleTermRule) {
  const BiRealization r = build_standard_bi();
  const ShiftOp lhs = op_compose(ShiftOp::term(zv, 1, 1, r.F), ShiftOp::term(zv, 0, 1, r.G));
  // G(-z-1) = (-z-1-rho1)(-z-1-rho2)/(z+1), written out by hand.
  const Poly zz = v(zv);
  const RatFunc g_moved =
      RatFunc::normalize((-zz - q(1) - v(sym::rho1)) * (-zz - q(1) - v(sym::rho2)), zz + q(1), zv);
  EXPECT_EQ(lhs, ShiftOp::term(zv, 1, 0, r.F * g_moved));
}

TEST(ShiftOp, VariableMismatch) {
  EXPECT_THROW(op_compose(ShiftOp::identity(zv), ShiftOp::identity(xv)), VariableMismatch);
  EXPECT_THROW(ShiftOp::identity(zv).apply(rx(v(xv))), VariableMismatch);
}

TEST(ShiftOpProperty, CompositionMatchesSequentialApplication) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const ShiftOp a = random_op(rng), b = random_op(rng);
    const RatFunc f = RatFunc::normalize(testutil::random_poly(rng, {zv}, 3, 3) + q(1), v(zv) * v(zv) + q(2), zv);
    ASSERT_EQ(op_compose(a, b).apply(f), a.apply(b.apply(f))) << "trial " << trial;
  }
}

TEST(ShiftOpProperty, PointwiseAction) {
  // (c T^k R^e f)(v) = c(v) f((-1)^e (v + k)) at sample points.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> shift(-3, 3), refl(0, 1);
    const int k = shift(rng), e = refl(rng);
    const RatFunc c = rz(testutil::random_poly(rng, {zv}, 3, 2));
    const Poly f = testutil::random_poly(rng, {zv}, 4, 4);
    const RatFunc image = ShiftOp::term(zv, k, e, c).apply(rz(f));
    for (long p = -3; p <= 3; ++p) {
      const Scalar at = Scalar::frac(2 * p + 1, 5);
      const Scalar moved = (e ? Scalar(-1) : Scalar(1)) * (at + Scalar(k));
      ASSERT_EQ(eval_at(image, at), eval_at(c, at) * eval_at(rz(f), moved));
    }
  }
}

TEST(ShiftOpProperty, Associativity) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const ShiftOp a = random_op(rng), b = random_op(rng), c = random_op(rng);
    ASSERT_EQ(op_compose(op_compose(a, b), c), op_compose(a, op_compose(b, c))) << "trial " << trial;
  }
}

TEST(StandardRacah, Operators) {
  const RacahRealization r = build_standard_racah();
  const Poly gd1 = v(sym::gamma) + v(sym::delta) + q(1);
  ASSERT_EQ(r.k2.terms().size(), 1u);
  EXPECT_EQ(r.k2.coefficient(0, 0), rx(v(xv) * v(xv) + gd1 * v(xv)));
  EXPECT_TRUE(r.k1.apply(rx(Poly(1))).is_zero());
  EXPECT_TRUE(r.D.substitute({{xv, Poly(0)}}).is_zero());
  EXPECT_EQ(r.k1.apply_to_polynomial(Poly(1)), Poly());
}

TEST(StandardBi, Operators) {
  const BiRealization r = build_standard_bi(sample_bi());
  EXPECT_EQ(r.h, q(1, 2));
  EXPECT_EQ(r.X.apply_to_polynomial(Poly(1)), r.h);
  EXPECT_EQ(r.Y, ShiftOp::multiplication(rz(v(zv) * Scalar(2) + q(1, 2))));
  const Poly image = r.X.apply_to_polynomial(v(zv));
  EXPECT_EQ(image.degree_in(zv), 1u);

  const BiRealization s = build_standard_bi();
  EXPECT_EQ(s.X.apply_to_polynomial(Poly(1)), s.h);
}

TEST(StandardBi, FittedStructureConstantsSymbolic) {
  using namespace sym;
  const BiRealization r = build_standard_bi();
  const BiFit fit = fit_bi_constants(r);
  EXPECT_EQ(fit.constants.omega_x, (v(rho1) * v(rho2) + v(r1) * v(r2)) * Scalar(4));
  EXPECT_EQ(fit.constants.omega_y,
            (v(rho1) * v(rho1) + v(rho2) * v(rho2) - v(r1) * v(r1) - v(r2) * v(r2)) * Scalar(2));
  EXPECT_EQ(fit.constants.omega_z, (v(rho1) * v(rho2) - v(r1) * v(r2)) * Scalar(4));

  auto w = [&](const Poly& p) { return ShiftOp::scalar(zv, rz(p)); };
  EXPECT_TRUE(verify_operator_identity(anticommutator(r.X, r.Y), fit.Z + w(fit.constants.omega_z)).ok);
  EXPECT_TRUE(verify_operator_identity(anticommutator(r.Y, fit.Z), r.X + w(fit.constants.omega_x)).ok);
  EXPECT_TRUE(verify_operator_identity(anticommutator(fit.Z, r.X), r.Y + w(fit.constants.omega_y)).ok);
}

TEST(StandardBi, FittedStructureConstantsNumeric) {
  const BiFit fit = fit_bi_constants(build_standard_bi(sample_bi()));
  EXPECT_EQ(fit.constants.omega_y, q(-2));
  EXPECT_EQ(fit.constants.omega_z, q(2));
  EXPECT_EQ(fit.constants.omega_x, q(10));
}

TEST(StandardBi, CasimirScalar) {
  using namespace sym;
  const BiRealization r = build_standard_bi();
  const RatFunc u = bi_casimir_scalar(r, fit_bi_constants(r));
  const Poly expected =
      (v(rho1) * v(rho1) + v(rho2) * v(rho2) + v(r1) * v(r1) + v(r2) * v(r2)) * Scalar(2) - q(1, 4);
  EXPECT_EQ(u, rz(expected));

  const BiRealization n = build_standard_bi(sample_bi());
  EXPECT_EQ(bi_casimir_scalar(n, fit_bi_constants(n)), rz(q(59, 4)));
  const BiRealization zero = build_standard_bi({Poly(), Poly(), Poly(), Poly()});
  EXPECT_EQ(bi_casimir_scalar(zero, fit_bi_constants(zero)), rz(q(-1, 4)));
}

TEST(StandardBi, NonScalarCasimirRejected) {
  const BiRealization r = build_standard_bi(sample_bi());
  BiFit fit = fit_bi_constants(r);
  fit.Z = fit.Z + r.Y;
  EXPECT_THROW(bi_casimir_scalar(r, fit), NotScalar);
}

TEST(QuadraticCombos, EquitableRacahRelations) {
  const BiRealization r = build_standard_bi();
  const BiFit fit = fit_bi_constants(r);
  const QuadraticCombos c = build_quadratic_combos(r, fit);
  const Poly y = v(zv) * Scalar(2) + q(1, 2);
  EXPECT_EQ(c.B, ShiftOp::multiplication(rz((y * y - y - q(3, 4)) * Scalar::frac(1, 4))));
  EXPECT_EQ(c.I, r.X + r.Y + fit.Z - ShiftOp::scalar(zv, rz(q(3, 2))));

  const RatFunc u = bi_casimir_scalar(r, fit);
  const ShiftOp a2 = (ShiftOp::scalar(zv, u) - c.I - ShiftOp::scalar(zv, rz(q(15, 4)))) * Scalar::frac(1, 4);
  EXPECT_TRUE(verify_operator_identity(c.A + c.B + c.C, a2).ok);

  for (const ShiftOp* g : {&c.A, &c.B, &c.C}) EXPECT_TRUE(commutator(*g, c.I).is_zero());
  EXPECT_EQ(commutator(c.B, c.C), c.Delta * Scalar(2));
  EXPECT_EQ(commutator(c.C, c.A), c.Delta * Scalar(2));

  const auto& w = fit.constants;
  const auto r1 = verify_operator_identity(commutator(c.A, c.Delta),
                                           c.B * c.A - c.A * c.C + equitable_central_operator(w.omega_y, w.omega_z, c.I));
  const auto r2 = verify_operator_identity(commutator(c.B, c.Delta),
                                           c.C * c.B - c.B * c.A + equitable_central_operator(w.omega_z, w.omega_x, c.I));
  const auto r3 = verify_operator_identity(commutator(c.C, c.Delta),
                                           c.A * c.C - c.C * c.B + equitable_central_operator(w.omega_x, w.omega_y, c.I));
  EXPECT_TRUE(r1.ok) << r1.residual.to_string();
  EXPECT_TRUE(r2.ok) << r2.residual.to_string();
  EXPECT_TRUE(r3.ok) << r3.residual.to_string();
}

TEST(StandardRacah, FittedConstantsSatisfyRelations) {
  const RacahRealization r = build_standard_racah();
  const RacahFit fit = fit_racah_constants(r);
  const RacahConstants& c = fit.constants;
  auto k = [&](const Poly& p) { return rx(p); };
  const ShiftOp &k1 = r.k1, &k2 = r.k2, &k3 = fit.k3;
  const ShiftOp one = ShiftOp::identity(xv);
  const ShiftOp rhs23 = k2 * k2 * k(c.a2) + anticommutator(k1, k2) * k(c.a1) + k1 * k(c.c1) + k2 * k(c.d) + one * k(c.e1);
  const ShiftOp rhs31 = k1 * k1 * k(c.a1) + anticommutator(k1, k2) * k(c.a2) + k2 * k(c.c2) + k1 * k(c.d) + one * k(c.e2);
  EXPECT_TRUE(verify_operator_identity(commutator(k2, k3), rhs23).ok);
  EXPECT_TRUE(verify_operator_identity(commutator(k3, k1), rhs31).ok);
  EXPECT_EQ(commutator(k1, k2), k3);

  const RatFunc t = racah_casimir_scalar(r, fit);
  EXPECT_FALSE(t.depends_on(xv));

  // Fitting at a rational point agrees with specializing the symbolic fit.
  const RacahParams num{q(1, 3), q(1, 5), q(1, 7), q(1, 11)};
  const std::vector<std::pair<Symbol, Poly>> sub{
      {sym::alpha, num.alpha}, {sym::beta, num.beta}, {sym::gamma, num.gamma}, {sym::delta, num.delta}};
  const RacahFit numeric = fit_racah_constants(build_standard_racah(num));
  const auto sym_named = c.named();
  const auto num_named = numeric.constants.named();
  for (std::size_t i = 0; i < sym_named.size(); ++i) {
    EXPECT_EQ(sym_named[i].second.substitute(sub), num_named[i].second) << sym_named[i].first;
  }
}

TEST(Fit, Errors) {
  const RacahRealization r = build_standard_racah(RacahParams{q(1, 3), q(1, 5), q(1, 7), q(1, 11)});
  EXPECT_THROW(fit_linear_combination(r.k1, {r.k2}), Inconsistent);
  EXPECT_THROW(fit_linear_combination(r.k1, {r.k1, r.k1}), Singular);
  const auto u = fit_linear_combination(r.k1 * Scalar(3) + r.k2, {r.k1, r.k2});
  EXPECT_EQ(u[0], rx(q(3)));
  EXPECT_EQ(u[1], rx(q(1)));
}

TEST(ApplyToPolynomial, NonPreservingOperatorRejected) {
  const ShiftOp inv = ShiftOp::multiplication(RatFunc::normalize(Poly(1), v(zv), zv));
  EXPECT_THROW(inv.apply_to_polynomial(v(zv) + q(1)), NotPolynomialPreserving);
}

TEST(ApplyToPolynomialProperty, DegreePreservation) {
  std::mt19937_64 rng(37);
  for (int set = 0; set < 5; ++set) {
    const BiRealization r = build_standard_bi(random_bi_params(rng));
    for (unsigned n = 0; n <= 12; ++n) {
      const Poly image = r.X.apply_to_polynomial(Poly::var(zv, n));
      EXPECT_LE(image.degree_in(zv), n) << "set " << set << " n " << n;
    }
  }
}

TEST(LambdaBasis, Conversion) {
  const RacahParams p = RacahParams::symbolic();
  const Poly lambda = v(xv) * (v(xv) + v(sym::gamma) + v(sym::delta) + q(1));
  EXPECT_EQ(to_lambda_basis(lambda * lambda, p), (std::vector<Poly>{Poly(), Poly(), Poly(1)}));
  EXPECT_EQ(to_lambda_basis(Poly(1), p), (std::vector<Poly>{Poly(1)}));
  EXPECT_THROW(to_lambda_basis(v(xv), p), NotSymmetric);
  const auto mixed = to_lambda_basis(lambda * lambda * q(3) - lambda * v(sym::alpha) + q(7), p);
  EXPECT_EQ(mixed, (std::vector<Poly>{q(7), -v(sym::alpha), q(3)}));
}

namespace {

// Three-term recurrence checked directly on the eigenpolynomials:
// mult * p_n = sum_i mult(i, n) p_i and difference * p_n = theta_n p_n.
template <typename Op>
void check_eigenpolynomials(const BispectralData& d, const std::vector<Poly>& basis, const Op& diff_op,
                            const Poly& mult_poly, unsigned M) {
  const std::size_t n = basis.size();
  std::vector<Poly> p(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) p[k] += basis[i] * d.P(i, k);
  }
  for (std::size_t k = 0; k < n; ++k) {
    EXPECT_EQ(diff_op(p[k]), p[k] * d.triangular(k, k)) << "eigenpolynomial " << k;
  }
  for (std::size_t k = 0; k <= M; ++k) {
    Poly rhs;
    for (std::size_t i = 0; i < n; ++i) rhs += p[i] * d.mult(i, k);
    EXPECT_EQ(mult_poly * p[k], rhs) << "recurrence at " << k;
  }
}

}  // namespace

TEST(Bispectral, RacahTridiagonal) {
  const RacahParams params{q(1, 3), q(1, 5), q(1, 7), q(1, 11)};
  const unsigned M = 4;
  const BispectralData d = bispectral_racah(params, M);
  EXPECT_FALSE(d.off_band.has_value());
  EXPECT_FALSE(d.off_diag.has_value());
  EXPECT_TRUE(d.diag.is_diagonal());
  const RacahRealization r = build_standard_racah(params);
  std::vector<Poly> basis{Poly(1)};
  for (unsigned k = 1; k < M + 2; ++k) basis.push_back(basis.back() * r.lambda.as_poly());
  check_eigenpolynomials(d, basis, [&](const Poly& f) { return r.k1.apply_to_polynomial(f); }, r.lambda.as_poly(), M);
}

TEST(Bispectral, BannaiItoTridiagonal) {
  const unsigned M = 4;
  const BispectralData d = bispectral_bi(sample_bi(), M);
  EXPECT_FALSE(d.off_band.has_value());
  EXPECT_FALSE(d.off_diag.has_value());
  const BiRealization r = build_standard_bi(sample_bi());
  std::vector<Poly> basis;
  for (unsigned k = 0; k < M + 2; ++k) basis.push_back(Poly::var(zv, k));
  check_eigenpolynomials(d, basis, [&](const Poly& f) { return r.X.apply_to_polynomial(f); },
                         v(zv) * Scalar(2) + q(1, 2), M);
}

TEST(Bispectral, SmallestBasis) {
  const BispectralData d = bispectral_racah(RacahParams{q(1, 3), q(1, 5), q(1, 7), q(1, 11)}, 0);
  ASSERT_EQ(d.mult.rows(), 2u);
  EXPECT_FALSE(d.off_band.has_value());
  EXPECT_FALSE(d.mult(1, 0).is_zero());
}

TEST(Bispectral, RequiresNumericParameters) {
  EXPECT_THROW(bispectral_bi(BiParams::symbolic(), 2), Error);
}

TEST(Bispectral, DegenerateSpectrum) {
  // X z^n has leading coefficient (-1)^n (h + n); h = -1/2 makes the first two agree.
  EXPECT_THROW(bispectral_bi(BiParams{Poly(-1), Poly(), Poly(), Poly()}, 4), DegenerateSpectrum);
  EXPECT_NO_THROW(bispectral_bi(BiParams{Poly(), Poly(), Poly(), Poly()}, 4));
}

TEST(BispectralProperty, RandomParameters) {
  std::mt19937_64 rng(41);
  for (int family = 0; family < 2; ++family) {
    int done = 0;
    for (int attempt = 0; done < 5 && attempt < 50; ++attempt) {
      try {
        const BispectralData d = family == 0 ? bispectral_racah(random_racah_params(rng), 10)
                                             : bispectral_bi(random_bi_params(rng), 10);
        EXPECT_FALSE(d.off_band.has_value());
        EXPECT_FALSE(d.off_diag.has_value());
        ++done;
      } catch (const DegenerateSpectrum&) {
      }
    }
    EXPECT_EQ(done, 5);
  }
}
