#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "gla/error.hpp"
#include "gla/presentation.hpp"
#include "gla/series.hpp"

using namespace gla;

namespace {

SparseVec unit(int i) {
  SparseVec v;
  v.push(i, Scalar(1));
  return v;
}

LieWord w(const std::string& name) { return LieWord(name); }

LieWord br(LieWord a, LieWord b) { return LieWord(std::move(a), std::move(b)); }

DimensionSequence dims_at(int N, const std::map<int, long>& nonzero) {
  DimensionSequence d = DimensionSequence::zeros(N);
  for (auto [degree, count] : nonzero) d.set(degree, count);
  return d;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Internal;
}

bool same_algebra(const GradedLieAlgebra& a, const GradedLieAlgebra& b) {
  if (a.size() != b.size() || !(a.dims() == b.dims())) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a.element(i).name != b.element(i).name ||
        a.element(i).degree != b.element(i).degree)
      return false;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i; j < a.size(); ++j) {
      if (a.element(i).degree + a.element(j).degree > a.truncation()) continue;
      if (a.basis_bracket(i, j) != b.basis_bracket(i, j)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("the free algebra on one even generator is a line") {
  PresentedAlgebra out = free_lie(Field::rationals(), {{"a", 2}}, 8);
  CHECK(out.algebra.dims() == dims_at(8, {{2, 1}}));
  CHECK(out.algebra.element(0).name == "a");
  CHECK(out.algebra.table().empty());
  REQUIRE(out.generator_images.size() == 1);
  CHECK(out.generator_images[0] == unit(0));
}

TEST_CASE("the free algebra on one odd generator stops after its self bracket") {
  PresentedAlgebra out = free_lie(Field::rationals(), {{"x", 1}}, 6);
  CHECK(out.algebra.dims() == dims_at(6, {{1, 1}, {2, 1}}));
  CHECK(out.algebra.element(1).name == "[x,x]");
  CHECK(out.algebra.basis_bracket(0, 0) == unit(1));
  CHECK(out.algebra.basis_bracket(0, 1).empty());  // [x,[x,x]] = 0
  CHECK(out.algebra.validate().empty());
}

TEST_CASE("the cube law holds over every field") {
  // In characteristic 3 the instance [x,[x,x]] = 0 is not a consequence of
  // the other axioms and has to be imposed separately; elsewhere it follows.
  for (const Field& f :
       {Field::rationals(), Field::prime(3), Field::prime(5)}) {
    PresentedAlgebra out = free_lie(f, {{"x", 1}}, 6);
    CHECK(out.algebra.dims() == dims_at(6, {{1, 1}, {2, 1}}));
    CHECK(out.algebra.validate().empty());
  }
}

TEST_CASE("the free algebra on two odd generators has the known dimensions") {
  PresentedAlgebra out = free_lie(Field::rationals(), {{"x", 1}, {"y", 1}}, 8);
  CHECK(out.algebra.dims() ==
        DimensionSequence({0, 2, 3, 2, 3, 6, 11, 18, 30}, 8));
  CHECK(out.algebra.validate().empty());
  CHECK(out.generator_images[0] == unit(0));
  CHECK(out.generator_images[1] == unit(1));
  // Degree 2 carries the two self brackets and the mixed bracket.
  CHECK(out.algebra.find("[x,x]") >= 0);
  CHECK(out.algebra.find("[y,y]") >= 0);
  CHECK(out.algebra.find("[x,y]") >= 0);
}

TEST_CASE("a quotient with no relators is the free algebra") {
  Field q = Field::rationals();
  std::vector<BasisElement> gens = {{"x", 1}, {"y", 2}};
  Presentation pres{q, gens, {}, 7};
  CHECK(same_algebra(quotient(pres).algebra, free_lie(q, gens, 7).algebra));
}

TEST_CASE("a self bracket relator cuts the free line down") {
  Presentation pres{Field::rationals(), {{"u", 1}},
                    {Relator(br(w("u"), w("u")))}, 6};
  PresentedAlgebra out = quotient(pres);
  CHECK(out.algebra.dims() == dims_at(6, {{1, 1}}));
  CHECK(out.algebra.table().empty());
  CHECK(out.generator_images[0] == unit(0));
}

TEST_CASE("a linear relator identifies two generators") {
  Presentation pres{Field::rationals(), {{"x", 1}, {"y", 1}}, {}, 5};
  pres.relators.push_back(
      Relator(std::vector<std::pair<Scalar, LieWord>>{{Scalar(1), w("x")},
                                                      {Scalar(-1), w("y")}}));
  PresentedAlgebra out = quotient(pres);
  CHECK(out.algebra.dims() == dims_at(5, {{1, 1}, {2, 1}}));
  CHECK(out.algebra.find("y") == 0);
  CHECK(out.algebra.find("x") == -1);
  CHECK(out.generator_images[0] == out.generator_images[1]);
  CHECK(out.generator_images[0] == unit(0));
}

TEST_CASE("the heisenberg presentation reproduces the heisenberg algebra") {
  Presentation pres{Field::rationals(), {{"x", 1}, {"y", 1}}, {}, 6};
  pres.relators.push_back(Relator(br(w("x"), w("x"))));
  pres.relators.push_back(Relator(br(w("y"), w("y"))));
  pres.relators.push_back(Relator(br(w("x"), br(w("x"), w("y")))));
  pres.relators.push_back(Relator(br(w("y"), br(w("x"), w("y")))));
  PresentedAlgebra out = quotient(pres);
  CHECK(out.algebra.dims() == dims_at(6, {{1, 2}, {2, 1}}));
  CHECK(out.algebra.validate().empty());
  int z = out.algebra.find("[x,y]");
  REQUIRE(z >= 0);
  CHECK(out.algebra.basis_bracket(0, 1) == unit(z));
  // z is central: both brackets with the generators vanish.
  CHECK(out.algebra.basis_bracket(0, z).empty());
  CHECK(out.algebra.basis_bracket(1, z).empty());
}

TEST_CASE("the quotient does not depend on relator order") {
  Field q = Field::rationals();
  std::vector<BasisElement> gens = {{"x", 1}, {"y", 1}};
  std::vector<Relator> forward = {Relator(br(w("x"), w("x"))),
                                  Relator(br(w("y"), br(w("y"), w("x"))))};
  std::vector<Relator> backward = {forward[1], forward[0]};
  PresentedAlgebra a = quotient({q, gens, forward, 7});
  PresentedAlgebra b = quotient({q, gens, backward, 7});
  CHECK(same_algebra(a.algebra, b.algebra));
  CHECK(a.generator_images[0] == b.generator_images[0]);
  CHECK(a.generator_images[1] == b.generator_images[1]);
}

TEST_CASE("relators act through their whole ideal, not just their own degree") {
  // Killing [x,y] in degree 2 must also kill [x,[x,y]] etc. above it.
  Presentation pres{Field::rationals(), {{"x", 1}, {"y", 1}},
                    {Relator(br(w("x"), w("y")))}, 6};
  PresentedAlgebra out = quotient(pres);
  // What survives is the product of two free lines: x, [x,x], y, [y,y].
  CHECK(out.algebra.dims() == dims_at(6, {{1, 2}, {2, 2}}));
  CHECK(out.algebra.validate().empty());
  CHECK(out.algebra.find("[x,y]") == -1);
}

TEST_CASE("builtin example3 is abelian with unit envelope coefficients") {
  BuiltinResult out = builtin("example3", 100);
  std::vector<int> degrees;
  std::map<int, long> expected;
  for (const BasisElement& g : out.presentation.generators) {
    degrees.push_back(g.degree);
    expected[g.degree] = 1;
  }
  CHECK(degrees == std::vector<int>{1, 3, 5, 11, 21, 43, 85});
  CHECK(out.presented.algebra.dims() == dims_at(100, expected));
  CHECK(out.presented.algebra.table().empty());  // abelian
  // Every degree mixes at most one monomial in the envelope: no two
  // subsets of the generator degrees share a sum.
  DimensionSequence envelope = pbw_series(out.presented.algebra.dims());
  for (int n = 0; n <= 100; ++n) CHECK(envelope.at(n) <= 1);
}

TEST_CASE("builtin example4 realizes the adjoint shift pattern") {
  BuiltinResult out = builtin("example4", 50);
  std::map<int, long> expected = {{2, 1}};
  for (int n = 2; (1 << n) + 1 <= 50; ++n)
    for (int k = 0; k <= n; ++k) {
      int degree = (1 << n) + 1 + 2 * k;
      if (degree <= 50) expected[degree] += 1;
    }
  CHECK(out.presented.algebra.dims() == dims_at(50, expected));
  CHECK(out.presented.algebra.validate().empty());
  const GradedLieAlgebra& L = out.presented.algebra;
  int a = L.find("a");
  int x2 = L.find("x2");
  int ax2 = L.find("[a,x2]");
  int aax2 = L.find("[a,[a,x2]]");
  REQUIRE(a >= 0);
  REQUIRE(x2 >= 0);
  REQUIRE(ax2 >= 0);
  REQUIRE(aax2 >= 0);
  CHECK(L.element(aax2).degree == 9);
  CHECK(L.basis_bracket(a, x2) == unit(ax2));
  CHECK(L.basis_bracket(a, ax2) == unit(aax2));
  CHECK(L.basis_bracket(a, aax2).empty());  // (ad a)^3 x2 = 0
  CHECK(L.find("[a,[a,[a,x2]]]") == -1);
  CHECK(L.basis_bracket(x2, L.find("x3")).empty());
}

TEST_CASE("builtin free product demo joins a line and a free algebra") {
  BuiltinResult out = builtin("free_product_demo", 10);
  REQUIRE(out.presentation.generators.size() == 2);
  CHECK(out.presentation.generators[0].name == "u");
  CHECK(out.presentation.generators[1].name == "v");
  CHECK(out.presented.algebra.dims() ==
        DimensionSequence({0, 2, 2, 1, 1, 2, 3, 4, 5, 8, 13}, 10));
  const GradedLieAlgebra& L = out.presented.algebra;
  int u = L.find("u");
  int v = L.find("v");
  REQUIRE(u >= 0);
  REQUIRE(v >= 0);
  CHECK(L.basis_bracket(u, u).empty());
  CHECK_FALSE(L.basis_bracket(v, v).empty());
}

TEST_CASE("free products rename colliding generators") {
  Presentation base{Field::rationals(), {{"u", 1}}, {}, 4};
  Presentation merged = free_product(base, {{"u", 2}, {"v", 1}});
  std::vector<std::string> names;
  for (const BasisElement& g : merged.generators) names.push_back(g.name);
  CHECK(names == std::vector<std::string>{"u", "u'", "v"});
}

TEST_CASE("unknown builtin names are rejected") {
  CHECK(kind_of([] { builtin("example5", 10); }) == ErrorKind::BadInput);
}

TEST_CASE("malformed presentations are rejected") {
  Field q = Field::rationals();
  CHECK(kind_of([&] { free_lie(q, {{"x", 0}}, 5); }) == ErrorKind::BadInput);
  CHECK(kind_of([&] { free_lie(q, {{"x", 7}}, 5); }) == ErrorKind::BadInput);
  CHECK(kind_of([&] { free_lie(q, {{"x", 1}, {"x", 2}}, 5); }) ==
        ErrorKind::BadInput);
  CHECK(kind_of([&] { free_lie(q, {{"", 1}}, 5); }) == ErrorKind::BadInput);
  CHECK(kind_of([&] {
          quotient({q, {{"x", 1}}, {Relator(br(w("x"), w("zz")))}, 5});
        }) == ErrorKind::BadInput);
  // Mixed degrees in one relator.
  CHECK(kind_of([&] {
          quotient({q,
                    {{"x", 1}},
                    {Relator(std::vector<std::pair<Scalar, LieWord>>{
                        {Scalar(1), w("x")}, {Scalar(1), br(w("x"), w("x"))}})},
                    5});
        }) == ErrorKind::BadInput);
  // Relator beyond the truncation.
  CHECK(kind_of([&] {
          quotient({q, {{"x", 1}}, {Relator(br(w("x"), w("x")))}, 1});
        }) == ErrorKind::BadInput);
}

TEST_CASE("the empty presentation gives the zero algebra") {
  PresentedAlgebra out = free_lie(Field::rationals(), {}, 4);
  CHECK(out.algebra.size() == 0);
  CHECK(out.algebra.dims() == DimensionSequence::zeros(4));
  CHECK(out.generator_images.empty());
}

TEST_CASE("bracket words print as nested brackets") {
  LieWord word = LieWord::ad(w("a"), 2, w("x"));
  CHECK(word.to_string() == "[a,[a,x]]");
  CHECK(LieWord::ad(w("a"), 0, w("x")).to_string() == "x");
}
