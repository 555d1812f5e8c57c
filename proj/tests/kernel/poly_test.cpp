#include <gtest/gtest.h>

#include <random>

#include "rbi/errors.hpp"
#include "rbi/kernel/matrix.hpp"
#include "rbi/kernel/poly.hpp"
#include "rbi/kernel/ratfunc.hpp"
#include "../support/random.hpp"

using namespace rbi;

namespace {

const Poly z = Poly::var(sym::z);
const Poly rho1 = Poly::var(sym::rho1);
const Poly rho2 = Poly::var(sym::rho2);

Poly c(long n, long d = 1) { return Poly(Scalar::frac(n, d)); }

}  // namespace

TEST(Poly, ArithmeticAndPrinting) {
  const Poly p = (z - c(1)) * (z + c(1));
  EXPECT_EQ(p, z.pow(2) - c(1));
  EXPECT_EQ(p.to_string(), "z^2 - 1");
  EXPECT_EQ((c(4) * rho1 * rho2 + c(1, 2)).to_string(), "4*rho1*rho2 + 1/2");
  EXPECT_EQ(p.degree_in(sym::z), 2u);
  EXPECT_TRUE(c(3).is_constant());
  EXPECT_EQ((z - z), Poly());
}

TEST(Poly, SubstituteAffineArgument) {
  const Poly p = z.pow(2) + c(2) * z * rho1;
  // p(-z-1) = (z+1)^2 - 2(z+1) rho1
  const Poly expected = (z + c(1)).pow(2) - c(2) * (z + c(1)) * rho1;
  EXPECT_EQ(p.substitute(sym::z, -z - c(1)), expected);
}

TEST(Poly, ExactDivision) {
  const Poly a = (z - rho1) * (z + rho2) * (c(2) * z + c(3));
  EXPECT_EQ(divide_exact(a, z - rho1), (z + rho2) * (c(2) * z + c(3)));
  Poly q;
  EXPECT_FALSE(try_divide(a, z - c(7), &q));
  EXPECT_THROW(divide_exact(a, Poly()), ZeroDenominator);
}

TEST(PolyGcd, RepeatedAndSharedFactor) {
  // (z-1)(z+1) vs (z-1)^2
  EXPECT_EQ(poly_gcd(z.pow(2) - c(1), z.pow(2) - c(2) * z + c(1), sym::z), z - c(1));
}

TEST(PolyGcd, WithZeroIsMonicInput) {
  const Poly p = c(3) * z.pow(2) + c(6) * z - c(1);
  EXPECT_EQ(poly_gcd(p, Poly(), sym::z), z.pow(2) + c(2) * z - c(1, 3));
  EXPECT_EQ(gcd(Poly(), Poly()), Poly());
}

TEST(PolyGcd, CoprimeLinearFactors) { EXPECT_EQ(poly_gcd(z + c(1, 2), z, sym::z), c(1)); }

TEST(PolyGcd, ParametricFactors) {
  const Poly f = (z - rho1) * (z - rho2);
  const Poly g = (z - rho1) * (z + c(1, 2)) * (rho1 - rho2);
  EXPECT_EQ(gcd(f, g), (z - rho1).monic());
  EXPECT_EQ(gcd((rho1 - rho2) * f, c(2) * g), ((z - rho1) * (rho1 - rho2)).monic());
}

TEST(PolyGcdProperty, DividesBothAndRecoversCommonFactor) {
  std::mt19937_64 rng(11);
  const std::vector<Symbol> syms{sym::z, sym::rho1, sym::r1};
  for (int trial = 0; trial < 60; ++trial) {
    const Poly a = testutil::random_poly(rng, syms, 3, 2);
    const Poly b = testutil::random_poly(rng, syms, 3, 2);
    Poly common = testutil::random_poly(rng, syms, 2, 1);
    if (common.is_zero() || a.is_zero() || b.is_zero()) continue;
    const Poly g = gcd(a * common, b * common);
    Poly q;
    ASSERT_TRUE(try_divide(a * common, g, &q));
    ASSERT_TRUE(try_divide(b * common, g, &q));
    ASSERT_TRUE(try_divide(g, common, &q)) << "gcd " << g << " misses " << common;
  }
}

TEST(RatFunc, RemovableFactor) {
  EXPECT_EQ(ratfunc_normalize(z.pow(2) - c(1), z - c(1), sym::z), RatFunc(z + c(1), sym::z));
}

TEST(RatFunc, ZeroNumerator) {
  const RatFunc r = ratfunc_normalize(Poly(), z, sym::z);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(r.den(), c(1));
  EXPECT_THROW(ratfunc_normalize(z, Poly(), sym::z), ZeroDenominator);
}

TEST(RatFunc, ReflectionCoefficientHasMonicDenominator) {
  const RatFunc g = ratfunc_normalize((z - rho1) * (z - rho2), -z, sym::z);
  EXPECT_EQ(g.num(), -((z - rho1) * (z - rho2)));
  EXPECT_EQ(g.den(), z);
}

TEST(RatFunc, ArithmeticCancels) {
  const RatFunc a = ratfunc_normalize(c(1), z, sym::z);
  const RatFunc b = ratfunc_normalize(c(1), z + c(1), sym::z);
  // 1/z - 1/(z+1) = 1/(z(z+1))
  EXPECT_EQ(a - b, ratfunc_normalize(c(1), z * (z + c(1)), sym::z));
  EXPECT_EQ((a - b) * RatFunc(z * (z + c(1)), sym::z), RatFunc(c(1), sym::z));
  EXPECT_EQ(a / a, RatFunc(c(1), sym::z));
  EXPECT_EQ(a.affine_arg(-1, Scalar(-1)), ratfunc_normalize(c(-1), z + c(1), sym::z));
}

TEST(RatFuncProperty, CanonicalFormIgnoresCommonFactors) {
  std::mt19937_64 rng(5);
  const std::vector<Symbol> syms{sym::z, sym::rho1};
  for (int trial = 0; trial < 80; ++trial) {
    const Poly a = testutil::random_poly(rng, syms, 3, 2);
    const Poly b = testutil::random_poly(rng, syms, 3, 2);
    const Poly k = testutil::random_poly(rng, syms, 2, 2);
    if (b.is_zero() || k.is_zero()) continue;
    EXPECT_EQ(ratfunc_normalize(a * k, b * k, sym::z), ratfunc_normalize(a, b, sym::z));
  }
}

TEST(RatFuncProperty, FieldOperationsAgreeWithCrossMultiplication) {
  std::mt19937_64 rng(9);
  const std::vector<Symbol> syms{sym::z, sym::r1};
  for (int trial = 0; trial < 60; ++trial) {
    const Poly n1 = testutil::random_poly(rng, syms, 3, 2);
    const Poly d1 = testutil::random_poly(rng, syms, 2, 2);
    const Poly n2 = testutil::random_poly(rng, syms, 3, 2);
    const Poly d2 = testutil::random_poly(rng, syms, 2, 2);
    if (d1.is_zero() || d2.is_zero()) continue;
    const RatFunc a = ratfunc_normalize(n1, d1, sym::z);
    const RatFunc b = ratfunc_normalize(n2, d2, sym::z);
    EXPECT_EQ(a + b, ratfunc_normalize(n1 * d2 + n2 * d1, d1 * d2, sym::z));
    EXPECT_EQ(a * b, ratfunc_normalize(n1 * n2, d1 * d2, sym::z));
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(Matrix, EigOfDiagonalIsIdentity) {
  const auto m = ScalarMatrix::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  const auto eig = mat_eig_triangular(m);
  EXPECT_EQ(eig.diag, (std::vector<Scalar>{1, 2, 3}));
  EXPECT_EQ(eig.P, ScalarMatrix::identity(3, 1));
}

TEST(Matrix, EigTwoByTwo) {
  const auto eig = mat_eig_triangular(ScalarMatrix::from_rows({{1, 1}, {0, 2}}));
  EXPECT_EQ(eig.diag, (std::vector<Scalar>{1, 2}));
  EXPECT_EQ(eig.P, ScalarMatrix::from_rows({{1, 1}, {0, 1}}));
}

TEST(Matrix, EigErrors) {
  EXPECT_THROW(mat_eig_triangular(ScalarMatrix::from_rows({{1, 5}, {0, 1}})), DegenerateSpectrum);
  EXPECT_THROW(mat_eig_triangular(ScalarMatrix::from_rows({{1, 0}, {1, 2}})), NotTriangular);
}

TEST(MatrixProperty, EigRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = Scalar(long(i) * 3 + 1) + Scalar(testutil::random_rational(rng, 1, 3));
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = testutil::random_scalar(rng);
    }
    TriangularEigen<Scalar> eig;
    try {
      eig = mat_eig_triangular(m);
    } catch (const DegenerateSpectrum&) {
      continue;
    }
    ScalarMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = eig.diag[i];
    const ScalarMatrix pinv = unit_upper_inverse(eig.P, Scalar(1));
    EXPECT_EQ(eig.P * pinv, ScalarMatrix::identity(n, 1));
    EXPECT_EQ(eig.P * d * pinv, m);
    EXPECT_TRUE((pinv * m * eig.P).is_diagonal());
  }
}

TEST(Matrix, SolveLinear) {
  EXPECT_EQ(mat_solve_linear(ScalarMatrix::identity(3, 1), {4, 5, 6}), (std::vector<Scalar>{4, 5, 6}));
  EXPECT_EQ(mat_solve_linear(ScalarMatrix::from_rows({{2}}), {1}), (std::vector<Scalar>{Scalar::frac(1, 2)}));
  // consistent overdetermined
  EXPECT_EQ(mat_solve_linear(ScalarMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}}), {1, 2, 3}), (std::vector<Scalar>{1, 2}));
  EXPECT_THROW(mat_solve_linear(ScalarMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}}), {1, 2, 4}), Inconsistent);
  EXPECT_THROW(mat_solve_linear(ScalarMatrix::from_rows({{1, 1}, {2, 2}}), {1, 2}), Singular);
}

TEST(Matrix, SolveOverRationalFunctions) {
  // [[rho1, 1], [1, -1]] x = [rho1^2 + rho2, rho1 - rho2]  ->  x = (rho1, rho2)
  const RatFunc R1(rho1, sym::z), R2(rho2, sym::z), one(c(1), sym::z);
  auto a = ExactMatrix<RatFunc>::from_rows({{R1, one}, {one, -one}}, RatFunc(sym::z));
  const auto x = mat_solve_linear<RatFunc>(a, {R1 * R1 + R2, R1 - R2});
  EXPECT_EQ(x[0], R1);
  EXPECT_EQ(x[1], R2);
}

TEST(Matrix, CsvRoundTrip) {
  const auto m = ScalarMatrix::from_rows({{Scalar::frac(1, 2), 0}, {3, Scalar::frac(-7, 3)}});
  const std::string csv = matrix_to_csv(m, "lambda");
  EXPECT_EQ(csv, "# rows=2 cols=2 basis=lambda\n1/2,0/1\n3/1,-7/3\n");
  const auto [back, basis] = matrix_from_csv(csv);
  EXPECT_EQ(back, m);
  EXPECT_EQ(basis, "lambda");
  EXPECT_THROW(matrix_from_csv("rows=1\n"), ParseError);
}
