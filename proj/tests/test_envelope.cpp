#include <functional>
#include <vector>

#include "doctest.h"
#include "gla/envelope.hpp"
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

// x, y odd of degree 1, z = [x,y] of degree 2; all else zero.
GradedLieAlgebra heisenberg(int truncation = 8) {
  Field q = Field::rationals();
  return GradedLieAlgebra(q, {{"x", 1}, {"y", 1}, {"z", 2}},
                          {{0, 1, unit(2)}}, truncation);
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

}  // namespace

TEST_CASE("one even generator yields a polynomial line") {
  Field q = Field::rationals();
  GradedLieAlgebra L(q, {{"a", 2}}, {}, 8);
  EnvelopeBasis B(L, 8);
  CHECK(B.dims() == DimensionSequence({1, 0, 1, 0, 1, 0, 1, 0, 1}, 8));
  CHECK(B.name(0) == "1");
  CHECK(B.name(1) == "a");
  CHECK(B.name(2) == "a^2");
  // a * a^k = a^{k+1} all the way up the window.
  CHECK(B.left_mult(0, 0) == unit(1));
  CHECK(B.left_mult(0, 1) == unit(2));
  CHECK(B.left_mult(0, 3) == unit(4));
  CHECK(B.find({0, 0, 0}) == 3);
}

TEST_CASE("one abelian odd generator squares to zero") {
  Field q = Field::rationals();
  GradedLieAlgebra L(q, {{"x", 3}}, {}, 7);
  EnvelopeBasis B(L, 7);
  CHECK(B.dims() == DimensionSequence({1, 0, 0, 1, 0, 0, 0, 0}, 7));
  CHECK(B.find({0, 0}) == -1);   // odd letters never repeat
  CHECK(B.left_mult(0, 1).empty());  // x*x = [x,x]/2 = 0
}

TEST_CASE("heisenberg envelope straightens products") {
  GradedLieAlgebra L = heisenberg();
  EnvelopeBasis B(L, 6);
  // (1+t)^2/(1-t^2) = (1+t)/(1-t): one monomial at 0, two from degree 1 on.
  CHECK(B.dims() == DimensionSequence({1, 2, 2, 2, 2, 2, 2}, 6));
  DimensionSequence full = pbw_series(L.dims());
  for (int n = 0; n <= 6; ++n) CHECK(B.dims().at(n) == full.at(n));
  int xy = B.find({0, 1});
  int z1 = B.find({2});
  REQUIRE(xy >= 0);
  REQUIRE(z1 >= 0);
  CHECK(B.find({0, 0}) == -1);
  CHECK(B.find({1, 0}) == -1);
  // y*x = z - x*y  (graded commutator [x,y] = xy + yx = z).
  SparseVec yx = B.left_mult(1, B.find({0}));
  REQUIRE(yx.entries.size() == 2);
  CHECK(yx == make_vec(L.field(), {{xy, Scalar(-1)}, {z1, Scalar(1)}}));
  // x*(y*x) = x*z - x*x*y = xz - [x,x]/2*y = xz.
  SparseVec xyx = B.left_mult_vec(0, yx);
  CHECK(xyx == unit(B.find({0, 2})));
}

TEST_CASE("odd free generator squares to half its self-bracket") {
  PresentedAlgebra P = free_lie(Field::rationals(), {{"x", 1}}, 4);
  const GradedLieAlgebra& L = P.algebra;
  REQUIRE(L.size() == 2);  // x and [x,x]; degree 3 dies by the cube law
  EnvelopeBasis B(L, 4);
  CHECK(B.dims() == DimensionSequence({1, 1, 1, 1, 1}, 4));
  int w = L.find("[x,x]");
  REQUIRE(w >= 0);
  // x*x = [x,x]/2.
  CHECK(B.left_mult(0, B.find({0})) ==
        make_vec(L.field(), {{B.find({w}), Scalar(1, 2)}}));
  // x*(x*[x,x]) = [x,x]^2/2.
  SparseVec xw = B.left_mult(0, B.find({w}));
  CHECK(xw == unit(B.find({0, w})));
  CHECK(B.left_mult_vec(0, xw) ==
        make_vec(L.field(), {{B.find({w, w}), Scalar(1, 2)}}));
}

TEST_CASE("monomial counts always match the enveloping series") {
  PresentedAlgebra P = free_lie(Field::rationals(), {{"x", 1}, {"y", 1}}, 6);
  EnvelopeBasis B(P.algebra, 6);
  DimensionSequence expect = pbw_series(P.algebra.dims());
  CHECK(B.dims() == expect);
  for (int n = 0; n <= 6; ++n)
    CHECK(expect.at(n) == BigInt(1) << n);  // tensor algebra on two letters
}

TEST_CASE("window errors are truncation errors") {
  GradedLieAlgebra L = heisenberg(5);
  CHECK(kind_of([&] { EnvelopeBasis(L, 6); }) == ErrorKind::Truncation);
  EnvelopeBasis B(L, 4);
  // x * (monomial of degree 4) leaves the window.
  int top = B.at_degree(4).front();
  CHECK(kind_of([&] { B.left_mult(0, top); }) == ErrorKind::Truncation);
  CHECK(kind_of([&] { B.at_degree(5); }) == ErrorKind::Truncation);
}
