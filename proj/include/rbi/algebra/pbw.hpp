#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rbi/algebra/constants.hpp"
#include "rbi/kernel/poly.hpp"

namespace rbi {

enum class AlgebraKind { Racah, BannaiIto };

std::string to_string(AlgebraKind kind);

/// Exponents (e0, e1, e2) of the ordered monomial g0^e0 g1^e1 g2^e2.
using PbwMonomial = std::array<std::uint16_t, 3>;

/// A generator word, letters 0..2 (k1 < k2 < k3, resp. X < Y < Z).
using Word = std::vector<std::uint8_t>;

/// Linear combination of ordered monomials with polynomial coefficients.
/// Only PbwAlgebra produces values whose monomials are products in the
/// algebra; addition and scaling are plain linear algebra.
class PbwElement {
 public:
  explicit PbwElement(AlgebraKind kind) : kind_(kind) {}
  PbwElement(AlgebraKind kind, const PbwMonomial& m, Poly c);

  AlgebraKind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<PbwMonomial, Poly>& terms() const noexcept { return terms_; }
  /// Coefficient of a monomial (zero when absent).
  Poly coefficient(const PbwMonomial& m) const;
  unsigned degree() const;

  PbwElement& operator+=(const PbwElement& o);
  PbwElement& operator-=(const PbwElement& o);
  PbwElement& operator*=(const Poly& c);
  friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
  friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
  friend PbwElement operator*(PbwElement a, const Poly& c) { return a *= c; }
  friend PbwElement operator*(const Poly& c, PbwElement a) { return a *= c; }
  PbwElement operator-() const;

  friend bool operator==(const PbwElement& a, const PbwElement& b) {
    return a.kind_ == b.kind_ && a.terms_ == b.terms_;
  }

  /// Terms in decreasing deg-lex order, e.g. "-X*Y + Z + omega_z".
  std::string to_string() const;

 private:
  void add_term(const PbwMonomial& m, const Poly& c);

  AlgebraKind kind_;
  std::map<PbwMonomial, Poly> terms_;
};

enum class BracketKind { Commutator, Anticommutator };

/// Result of a normal-form comparison: ok iff the residual is zero.
struct IdentityResult {
  bool ok = false;
  PbwElement residual;
};

/// Result of a centrality test; residuals[g] = [x, g] for each generator g.
struct CentralityResult {
  bool central = false;
  std::vector<std::pair<std::string, PbwElement>> residuals;
};

/// Rewriting engine for one presentation. Products are computed by
/// right-multiplying ordered monomials by single generators; an
/// out-of-order pair hg (h > g) is replaced using the defining relation.
/// Results are memoized per instance, so an engine must not be shared
/// between threads without external locking.
class PbwAlgebra {
 public:
  static PbwAlgebra racah(const RacahConstants& c = RacahConstants::symbolic());
  static PbwAlgebra bannai_ito(const BiConstants& c = BiConstants::symbolic());

  AlgebraKind kind() const noexcept { return kind_; }
  const std::array<std::string, 3>& generator_names() const noexcept { return names_; }

  PbwElement gen(unsigned i) const;
  PbwElement one() const;
  PbwElement constant(const Poly& c) const;
  /// Generator index for a name such as "X" or "kappa2". Throws UnknownGenerator.
  unsigned generator_index(const std::string& name) const;

  /// Normal form of coeff * w[0] w[1] ... Throws UnknownGenerator.
  PbwElement normal_form(const Word& w, const Poly& coeff = Poly(1));
  /// Parses a word of generator names separated by '*' or spaces.
  Word parse_word(const std::string& text) const;

  PbwElement mul(const PbwElement& a, const PbwElement& b);
  PbwElement pow(const PbwElement& a, unsigned n);
  /// ab - ba or ab + ba. Throws MixedAlgebras.
  PbwElement bracket(const PbwElement& a, const PbwElement& b, BracketKind kind);
  PbwElement commutator(const PbwElement& a, const PbwElement& b) {
    return bracket(a, b, BracketKind::Commutator);
  }
  PbwElement anticommutator(const PbwElement& a, const PbwElement& b) {
    return bracket(a, b, BracketKind::Anticommutator);
  }

  CentralityResult is_central(const PbwElement& x);
  /// Throws MixedAlgebras when the operands belong to different algebras.
  IdentityResult verify_identity(const PbwElement& lhs, const PbwElement& rhs) const;

  /// Number of relation applications performed so far.
  std::size_t rewrite_steps() const noexcept { return steps_; }
  /// Throw once more than `limit` relation applications have been made.
  void set_step_limit(std::size_t limit) noexcept { step_limit_ = limit; }

 private:
  struct Rule {
    // Replacement of the descent (hi, lo) as coeff * word pairs; the first
    // entry is the reordered pair lo hi.
    std::vector<std::pair<Poly, Word>> rhs;
  };

  PbwAlgebra(AlgebraKind kind, std::array<std::string, 3> names);
  void check(const PbwElement& e) const;
  const PbwElement& mul_gen(const PbwMonomial& m, unsigned g);
  PbwElement mul_word(const PbwElement& e, const Word& w);
  PbwElement mul_element_gen(const PbwElement& e, unsigned g);

  AlgebraKind kind_;
  std::array<std::string, 3> names_;
  // rules_[hi][lo] for hi > lo
  std::array<std::array<Rule, 3>, 3> rules_{};
  std::map<std::pair<PbwMonomial, unsigned>, PbwElement> memo_;
  std::size_t steps_ = 0;
  std::size_t step_limit_ = static_cast<std::size_t>(-1);
};

/// Racah Casimir
///   T = a1{k1^2,k2} + a2{k1,k2^2} + (a1^2+c1)k1^2 + (a2^2+c2)k2^2 + k3^2
///     + (d+a1a2){k1,k2} + (2e1+d a1)k1 + (2e2+d a2)k2
PbwElement racah_casimir(PbwAlgebra& alg, const RacahConstants& c = RacahConstants::symbolic());
/// Bannai-Ito Casimir U = X^2 + Y^2 + Z^2.
PbwElement bi_casimir(PbwAlgebra& alg);

/// Quadratic combinations of Bannai-Ito generators realizing the equitable
/// Racah algebra:
///   A = (X^2 - X - 3/4)/4 and cyclically, I = X + Y + Z - 3/2,
///   Delta = [A,B]/2.
struct QuadraticEmbedding {
  PbwElement A, B, C, I, Delta;
};

QuadraticEmbedding build_quadratic_embedding(PbwAlgebra& bi);

/// Central term (1/16)((wa - wb)/2)((wa + wb)/2 - I) of the equitable
/// relations, for the ordered pair of structure constants (wa, wb).
PbwElement equitable_central_term(const Poly& wa, const Poly& wb, const PbwElement& I);

}  // namespace rbi
