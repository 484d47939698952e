#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gla/lie_algebra.hpp"

namespace gla {

/// Formal bracket word in named generators: a generator, or a bracket of
/// two words.  Immutable; copies share structure.
class LieWord {
 public:
  explicit LieWord(std::string generator) : gen_(std::move(generator)) {}
  LieWord(LieWord left, LieWord right)
      : left_(std::make_shared<LieWord>(std::move(left))),
        right_(std::make_shared<LieWord>(std::move(right))) {}

  /// (ad actor)^power target: target, [actor,target], [actor,[actor,...]].
  static LieWord ad(const LieWord& actor, int power, LieWord target);

  bool is_generator() const { return left_ == nullptr; }
  const std::string& generator() const { return gen_; }
  const LieWord& left() const { return *left_; }
  const LieWord& right() const { return *right_; }

  std::string to_string() const;

 private:
  std::string gen_;
  std::shared_ptr<const LieWord> left_, right_;
};

/// Homogeneous linear combination of bracket words, to be set to zero.
struct Relator {
  std::vector<std::pair<Scalar, LieWord>> terms;

  Relator(LieWord word) : terms{{Scalar(1), std::move(word)}} {}
  explicit Relator(std::vector<std::pair<Scalar, LieWord>> t)
      : terms(std::move(t)) {}
};

/// Generators and relators defining a graded Lie algebra through degree N.
struct Presentation {
  Field field;
  std::vector<BasisElement> generators;
  std::vector<Relator> relators;
  int truncation = 0;
};

/// A finished quotient: the algebra, plus the class of each generator in
/// it (the zero vector when a relator killed the generator).  Basis names
/// are the defining bracket words, e.g. "[a,[a,x2]]".
struct PresentedAlgebra {
  GradedLieAlgebra algebra;
  std::vector<SparseVec> generator_images;
};

/// Free graded Lie algebra on the generators through degree N, built
/// degree by degree with full structure constants.  Every run is checked
/// against an independent dimension oracle: the basis counts must equal
/// the enveloping-series inversion of the tensor-algebra series of the
/// generators.  The cube law [x,[x,x]] = 0 is part of the definition in
/// every characteristic (it is independent only in characteristic 3).
PresentedAlgebra free_lie(const Field& field,
                          const std::vector<BasisElement>& generators, int N);

/// Degree-by-degree quotient of the free algebra by the ideal the relators
/// generate.  Saturation is implicit: once a relator vanishes in its
/// degree, every bracket it feeds vanishes in the degrees above.  The
/// result is independent of relator order.
PresentedAlgebra quotient(const Presentation& pres);

/// The free product of the presented algebra with a free algebra on fresh
/// generators: same relators, extra generators.  Colliding names get
/// apostrophes appended.
Presentation free_product(const Presentation& base,
                          const std::vector<BasisElement>& fresh);

/// A named example algebra, available both as a presentation and as its
/// finished quotient.
struct BuiltinResult {
  Presentation presentation;
  PresentedAlgebra presented;
};

/// Builtin examples:
///  - "example3": abelian, concentrated in odd degrees 1, 3, 5, 11, 21, ...
///    where each degree exceeds the sum of all earlier ones, so envelope
///    monomials have pairwise distinct degrees (re-verified by enumeration
///    at construction).
///  - "example4": generators a of degree 2 and x_n of degree 2^n+1 (n >= 2),
///    with (ad a)^{n+1} x_n = 0 and all brackets of a-shifts of the x's
///    zero; solvable but not nilpotent.
///  - "free_product_demo": a one-dimensional algebra (odd u with [u,u] = 0)
///    merged with a fresh free generator v.
/// Parameterized relator families expand eagerly up to degree N.
BuiltinResult builtin(const std::string& name, int N);

}  // namespace gla
