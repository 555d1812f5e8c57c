#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "rbi/algebra/pbw.hpp"
#include "rbi/errors.hpp"
#include "support/random.hpp"

using namespace rbi;

namespace {

Poly v(Symbol s) { return Poly::var(s); }
Poly q(long n, long d = 1) { return Poly(Scalar::frac(n, d)); }

PbwElement mono(AlgebraKind k, std::uint16_t a, std::uint16_t b, std::uint16_t c, Poly coeff = Poly(1)) {
  return PbwElement(k, PbwMonomial{a, b, c}, std::move(coeff));
}

// Leftmost-descent rewriting over raw words, with the relations transcribed
// as written (anticommutators left unexpanded). Independent of PbwAlgebra's
// right-multiplication strategy.
class WordRewriter {
 public:
  explicit WordRewriter(AlgebraKind k) : kind_(k) {}

  PbwElement normalize(const Word& w) {
    std::map<Word, Poly> pending{{w, Poly(1)}};
    PbwElement out(kind_);
    while (!pending.empty()) {
      auto node = pending.extract(pending.begin());
      const Word& word = node.key();
      const Poly& c = node.mapped();
      std::size_t i = 0;
      while (i + 1 < word.size() && word[i] <= word[i + 1]) ++i;
      if (i + 1 >= word.size()) {
        PbwMonomial m{};
        for (auto g : word) ++m[g];
        out += PbwElement(kind_, m, c);
        continue;
      }
      for (const auto& [rc, rw] : rhs(word[i], word[i + 1])) {
        Word next(word.begin(), word.begin() + i);
        next.insert(next.end(), rw.begin(), rw.end());
        next.insert(next.end(), word.begin() + i + 2, word.end());
        Poly& slot = pending[next];
        slot += c * rc;
        if (slot.is_zero()) pending.erase(next);
      }
    }
    return out;
  }

 private:
  std::vector<std::pair<Poly, Word>> rhs(std::uint8_t hi, std::uint8_t lo) const {
    using namespace sym;
    if (kind_ == AlgebraKind::BannaiIto) {
      // {X,Y} = Z + wZ etc.
      if (hi == 1 && lo == 0) return {{q(-1), {0, 1}}, {q(1), {2}}, {v(omega_z), {}}};
      if (hi == 2 && lo == 0) return {{q(-1), {0, 2}}, {q(1), {1}}, {v(omega_y), {}}};
      return {{q(-1), {1, 2}}, {q(1), {0}}, {v(omega_x), {}}};
    }
    if (hi == 1 && lo == 0) return {{q(1), {0, 1}}, {q(-1), {2}}};
    if (hi == 2 && lo == 0) {
      return {{q(1), {0, 2}}, {v(a1), {0, 0}}, {v(a2), {0, 1}}, {v(a2), {1, 0}},
              {v(c2), {1}},   {v(d), {0}},     {v(e2), {}}};
    }
    return {{q(1), {1, 2}},     {-v(a2), {1, 1}}, {-v(a1), {0, 1}}, {-v(a1), {1, 0}},
            {-v(c1), {0}},      {-v(d), {1}},     {-v(e1), {}}};
  }

  AlgebraKind kind_;
};

Word random_word(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> g(0, 2);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<std::uint8_t>(g(rng)));
  return w;
}

PbwElement random_element(std::mt19937_64& rng, PbwAlgebra& alg, unsigned max_deg) {
  std::uniform_int_distribution<unsigned> len(0, max_deg);
  std::uniform_int_distribution<int> nterms(1, 3);
  const std::vector<Symbol> syms = alg.kind() == AlgebraKind::BannaiIto
                                       ? std::vector<Symbol>{sym::omega_x, sym::omega_z}
                                       : std::vector<Symbol>{sym::a1, sym::d};
  PbwElement e(alg.kind());
  for (int t = nterms(rng); t > 0; --t) {
    e += alg.normal_form(random_word(rng, len(rng)), testutil::random_poly(rng, syms, 2, 1));
  }
  return e;
}

}  // namespace

TEST(PbwNormalForm, BannaiItoReordering) {
  auto bi = PbwAlgebra::bannai_ito();
  const auto k = AlgebraKind::BannaiIto;
  EXPECT_EQ(bi.normal_form({1, 0}), mono(k, 1, 1, 0, q(-1)) + mono(k, 0, 0, 1) + mono(k, 0, 0, 0, v(sym::omega_z)));
  EXPECT_EQ(bi.normal_form({0, 0}), mono(k, 2, 0, 0));
  EXPECT_EQ(bi.normal_form({1, 0}).to_string(), "-X*Y + Z + omegaZ");
  EXPECT_EQ(bi.normal_form(bi.parse_word("Y*X")), bi.normal_form({1, 0}));
}

TEST(PbwNormalForm, RacahReordering) {
  auto r = PbwAlgebra::racah();
  const auto k = AlgebraKind::Racah;
  EXPECT_EQ(r.normal_form({1, 0}), mono(k, 1, 1, 0) - mono(k, 0, 0, 1));
  EXPECT_EQ(r.normal_form(r.parse_word("κ2 κ1")), r.normal_form({1, 0}));
  EXPECT_THROW(r.parse_word("X"), UnknownGenerator);
  EXPECT_THROW(r.normal_form({3}), UnknownGenerator);
}

TEST(PbwNormalForm, DefiningRelationsAsBrackets) {
  using namespace sym;
  auto bi = PbwAlgebra::bannai_ito();
  const auto X = bi.gen(0), Y = bi.gen(1), Z = bi.gen(2);
  EXPECT_TRUE(bi.commutator(X, X).is_zero());
  EXPECT_EQ(bi.anticommutator(Y, Z), X + bi.constant(v(omega_x)));
  EXPECT_EQ(bi.anticommutator(Z, X), Y + bi.constant(v(omega_y)));
  EXPECT_EQ(bi.anticommutator(X, Y), Z + bi.constant(v(omega_z)));

  auto r = PbwAlgebra::racah();
  const auto k1 = r.gen(0), k2 = r.gen(1), k3 = r.gen(2);
  EXPECT_EQ(r.commutator(k1, k2), k3);
  const PbwElement rhs31 = r.mul(k1, k1) * v(a1) + r.anticommutator(k1, k2) * v(a2) + k2 * v(c2) + k1 * v(d) +
                           r.constant(v(e2));
  EXPECT_EQ(r.commutator(k3, k1), rhs31);
  const PbwElement rhs23 = r.mul(k2, k2) * v(a2) + r.anticommutator(k1, k2) * v(a1) + k1 * v(c1) + k2 * v(d) +
                           r.constant(v(e1));
  EXPECT_EQ(r.commutator(k2, k3), rhs23);
}

TEST(PbwNormalForm, MixedAlgebrasRejected) {
  auto bi = PbwAlgebra::bannai_ito();
  auto r = PbwAlgebra::racah();
  EXPECT_THROW(bi.mul(bi.gen(0), r.gen(0)), MixedAlgebras);
  EXPECT_THROW(bi.bracket(bi.gen(0), r.gen(0), BracketKind::Commutator), MixedAlgebras);
}

TEST(PbwNormalFormProperty, AgreesWithLeftmostDescentRewriting) {
  std::mt19937_64 rng(3);
  for (auto kind : {AlgebraKind::BannaiIto, AlgebraKind::Racah}) {
    auto alg = kind == AlgebraKind::BannaiIto ? PbwAlgebra::bannai_ito() : PbwAlgebra::racah();
    WordRewriter oracle(kind);
    for (int trial = 0; trial < 150; ++trial) {
      const Word w = random_word(rng, 1 + trial % 5);
      ASSERT_EQ(alg.normal_form(w), oracle.normalize(w)) << "trial " << trial;
    }
  }
}

TEST(PbwCentrality, BannaiItoCasimir) {
  auto bi = PbwAlgebra::bannai_ito();
  const auto res = bi.is_central(bi_casimir(bi));
  EXPECT_TRUE(res.central);
  ASSERT_EQ(res.residuals.size(), 3u);
  for (const auto& [g, r] : res.residuals) EXPECT_TRUE(r.is_zero()) << g << ": " << r.to_string();
}

TEST(PbwCentrality, RacahCasimir) {
  auto r = PbwAlgebra::racah();
  const auto res = r.is_central(racah_casimir(r));
  for (const auto& [g, w] : res.residuals) EXPECT_TRUE(w.is_zero()) << g << ": " << w.to_string();
  EXPECT_TRUE(res.central);
}

TEST(PbwCentrality, GeneratorIsNotCentral) {
  auto bi = PbwAlgebra::bannai_ito();
  const auto res = bi.is_central(bi.gen(0));
  EXPECT_FALSE(res.central);
  // [X,Y] = XY - YX = 2XY - Z - wZ
  const auto k = AlgebraKind::BannaiIto;
  EXPECT_EQ(res.residuals[1].second,
            mono(k, 1, 1, 0, q(2)) - mono(k, 0, 0, 1) - mono(k, 0, 0, 0, v(sym::omega_z)));
  EXPECT_TRUE(res.residuals[0].second.is_zero());
}

TEST(QuadraticEmbedding, CombinationsAndCentralElement) {
  auto bi = PbwAlgebra::bannai_ito();
  const auto e = build_quadratic_embedding(bi);
  const auto k = AlgebraKind::BannaiIto;
  EXPECT_EQ(e.A, mono(k, 2, 0, 0, q(1, 4)) + mono(k, 1, 0, 0, q(-1, 4)) + mono(k, 0, 0, 0, q(-3, 16)));
  EXPECT_EQ(e.I, bi.gen(0) + bi.gen(1) + bi.gen(2) - bi.constant(q(3, 2)));

  const PbwElement U = bi_casimir(bi);
  const PbwElement rhs = (U - e.I - bi.constant(q(15, 4))) * q(1, 4);
  EXPECT_TRUE(bi.verify_identity(e.A + e.B + e.C, rhs).ok);
  for (const auto* x : {&e.A, &e.B, &e.C}) EXPECT_TRUE(bi.commutator(*x, e.I).is_zero());
}

TEST(QuadraticEmbedding, EquitableRelations) {
  using namespace sym;
  auto bi = PbwAlgebra::bannai_ito();
  const auto e = build_quadratic_embedding(bi);
  const PbwElement two_delta = e.Delta * q(2);
  EXPECT_EQ(bi.commutator(e.A, e.B), two_delta);
  EXPECT_EQ(bi.commutator(e.B, e.C), two_delta);
  EXPECT_EQ(bi.commutator(e.C, e.A), two_delta);

  const Poly wx = v(omega_x), wy = v(omega_y), wz = v(omega_z);
  const auto r1 = bi.verify_identity(bi.commutator(e.A, e.Delta),
                                     bi.mul(e.B, e.A) - bi.mul(e.A, e.C) + equitable_central_term(wy, wz, e.I));
  const auto r2 = bi.verify_identity(bi.commutator(e.B, e.Delta),
                                     bi.mul(e.C, e.B) - bi.mul(e.B, e.A) + equitable_central_term(wz, wx, e.I));
  const auto r3 = bi.verify_identity(bi.commutator(e.C, e.Delta),
                                     bi.mul(e.A, e.C) - bi.mul(e.C, e.B) + equitable_central_term(wx, wy, e.I));
  EXPECT_TRUE(r1.ok) << r1.residual.to_string();
  EXPECT_TRUE(r2.ok) << r2.residual.to_string();
  EXPECT_TRUE(r3.ok) << r3.residual.to_string();
}

TEST(QuadraticEmbedding, WrongCentralTermIsDetected) {
  using namespace sym;
  auto bi = PbwAlgebra::bannai_ito();
  const auto e = build_quadratic_embedding(bi);
  const auto r = bi.verify_identity(bi.commutator(e.A, e.Delta),
                                    bi.mul(e.B, e.A) - bi.mul(e.A, e.C) +
                                        equitable_central_term(v(omega_z), v(omega_y), e.I));
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.residual.is_zero());
}

TEST(PbwProperty, Associativity) {
  std::mt19937_64 rng(17);
  for (auto kind : {AlgebraKind::BannaiIto, AlgebraKind::Racah}) {
    auto alg = kind == AlgebraKind::BannaiIto ? PbwAlgebra::bannai_ito() : PbwAlgebra::racah();
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_element(rng, alg, 3);
      const auto y = random_element(rng, alg, 3);
      const auto z = random_element(rng, alg, 3);
      ASSERT_EQ(alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z))) << to_string(kind) << " trial " << trial;
    }
  }
}

TEST(PbwProperty, RewritingTerminatesWithinBound) {
  // Each memo entry (monomial, generator) costs at most one relation
  // application and words never grow, so 3 * #{monomials of degree <= L}
  // bounds the step count.
  std::mt19937_64 rng(5);
  for (auto kind : {AlgebraKind::BannaiIto, AlgebraKind::Racah}) {
    for (std::size_t len = 1; len <= 12; ++len) {
      auto alg = kind == AlgebraKind::BannaiIto ? PbwAlgebra::bannai_ito() : PbwAlgebra::racah();
      const std::size_t bound = 3 * (len + 1) * (len + 2) * (len + 3) / 6;
      alg.set_step_limit(bound);
      Word w = random_word(rng, len);
      std::sort(w.begin(), w.end(), std::greater<>());
      ASSERT_NO_THROW(alg.normal_form(w)) << to_string(kind) << " length " << len;
      EXPECT_LE(alg.rewrite_steps(), bound);
    }
  }
}
