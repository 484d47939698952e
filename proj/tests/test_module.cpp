#include <functional>
#include <vector>

#include "doctest.h"
#include "gla/envelope.hpp"
#include "gla/error.hpp"
#include "gla/module.hpp"
#include "gla/presentation.hpp"

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

TEST_CASE("the trivial module is one ground-field line with zero action") {
  Field q = Field::rationals();
  GradedLieAlgebra L = heisenberg();
  GradedModule M = trivial_module(q);
  CHECK(M.size() == 1);
  CHECK(M.element(0).degree == 0);
  CHECK(M.truncation() == 0);
  CHECK(M.complete());
  for (int i = 0; i < L.size(); ++i) CHECK(M.act(L, i, 0).entries.empty());
  CHECK(M.validate(L).empty());
}

TEST_CASE("the adjoint module acts by the bracket and satisfies the law") {
  GradedLieAlgebra L = heisenberg();
  GradedModule M = adjoint_module(L);
  CHECK(M.size() == 3);
  CHECK(M.complete());
  CHECK(M.dims() == DimensionSequence({0, 2, 1, 0, 0, 0, 0, 0, 0}, 8));
  int x = M.find("x"), y = M.find("y"), z = M.find("z");
  CHECK(M.act(L, 0, y) == unit(z));  // x.y = z
  // [y,x] = -(-1)^{|x||y|}[x,y] = +z since both are odd.
  CHECK(M.act(L, 1, x) == unit(z));
  CHECK(M.act(L, 2, x).entries.empty());   // z central
  CHECK(M.act(L, 2, z).entries.empty());
  CHECK(M.validate(L).empty());
}

TEST_CASE("a module-law failure is reported as data, not thrown") {
  GradedLieAlgebra L = heisenberg();
  // x.m0 = m1 and y.m1 = m2 but z.m0 = 0 contradicts [x,y] = z.
  GradedModule M(L.field(), {{"m0", 0}, {"m1", 1}, {"m2", 2}},
                 {{0, 0, unit(1)}, {1, 1, unit(2)}}, 2, true);
  auto v = M.validate(L);
  REQUIRE(v.size() == 1);
  CHECK(v[0].axiom == "module");
}

TEST_CASE("an inhomogeneous action entry is reported") {
  GradedLieAlgebra L = heisenberg();
  // x has degree 1, so x.m0 must land in degree 1, not back in degree 0.
  GradedModule M(L.field(), {{"m0", 0}, {"m1", 1}}, {{0, 0, unit(0)}}, 2,
                 true);
  auto v = M.validate(L);
  bool found = false;
  for (const auto& viol : v) found = found || viol.axiom == "homogeneity";
  CHECK(found);
}

TEST_CASE("left multiplication on the envelope satisfies the module law") {
  GradedLieAlgebra L = heisenberg(6);
  EnvelopeBasis B(L, 6);
  GradedModule M = envelope_module(B);
  CHECK(M.size() == B.size());
  CHECK(!M.complete());  // an even generator makes the envelope infinite
  CHECK(M.validate(L).empty());
}

TEST_CASE("an all-odd abelian envelope is complete past its top degree") {
  Field q = Field::rationals();
  GradedLieAlgebra L(q, {{"u", 1}, {"v", 3}}, {}, 6);
  REQUIRE(L.complete());
  EnvelopeBasis B(L, 4);
  GradedModule M = envelope_module(B);
  CHECK(M.complete());
  CHECK(M.dims() == DimensionSequence({1, 1, 0, 1, 1}, 4));
  int uv = B.find({0, 1});
  REQUIRE(uv >= 0);
  // u.(u v) has target degree 5, past the window, yet is genuinely zero
  // because nothing about a complete module is unknown.
  CHECK(M.act(L, 0, uv).entries.empty());
  CHECK(M.validate(L).empty());
}

TEST_CASE("an incomplete module refuses to answer past its window") {
  Field q = Field::rationals();
  PresentedAlgebra P = free_lie(q, {{"x", 1}, {"y", 1}}, 6);
  GradedLieAlgebra L = P.algebra;
  REQUIRE(!L.complete());
  GradedModule M = adjoint_module(L);
  int top = -1;
  for (int m = 0; m < M.size(); ++m)
    if (M.element(m).degree == 6) top = m;
  REQUIRE(top >= 0);
  CHECK(kind_of([&] { M.act(L, 0, top); }) == ErrorKind::Truncation);
}

TEST_CASE("the dual of the adjoint module is contragredient") {
  GradedLieAlgebra L = heisenberg();
  GradedModule M = adjoint_module(L);
  CHECK(dual_shift(M) == 8);
  GradedModule D = dual_module(L, M);
  CHECK(D.complete());
  CHECK(D.truncation() == 8);
  int xd = D.find("x^"), yd = D.find("y^"), zd = D.find("z^");
  REQUIRE(xd >= 0);
  CHECK(D.element(xd).degree == 7);
  CHECK(D.element(zd).degree == 6);
  // (x.z^)(m) = -(-1)^{|x||z^|} z^(x.m) picks out m = y with sign -1.
  const Field& F = L.field();
  CHECK(D.act(L, 0, zd) == vec_scale(F, unit(yd), F.neg(F.one())));
  CHECK(D.act(L, 0, xd).entries.empty());
  CHECK(D.validate(L).empty());
}

TEST_CASE("dualizing twice restores the original degrees") {
  GradedLieAlgebra L = heisenberg();
  GradedModule M = adjoint_module(L);
  GradedModule DD = dual_module(L, dual_module(L, M));
  CHECK(DD.size() == M.size());
  DimensionSequence d = DD.dims();
  CHECK(d.at(1) == 2);
  CHECK(d.at(2) == 1);
  CHECK(DD.validate(L).empty());
}

TEST_CASE("the dual of an envelope window validates") {
  GradedLieAlgebra L = heisenberg(4);
  EnvelopeBasis B(L, 4);
  GradedModule D = dual_module(L, envelope_module(B));
  CHECK(D.complete());
  CHECK(D.validate(L).empty());
}

TEST_CASE("the diagonal tensor action satisfies the module law") {
  GradedLieAlgebra L = heisenberg();
  GradedModule M = adjoint_module(L);
  GradedModule T = tensor_module(L, M, M);
  CHECK(T.truncation() == 4);
  CHECK(T.complete());
  DimensionSequence d = T.dims();
  CHECK(d.at(2) == 4);
  CHECK(d.at(3) == 4);
  CHECK(d.at(4) == 1);
  CHECK(T.validate(L).empty());
  int xy = T.find("x⊗y");
  REQUIRE(xy >= 0);
  // x.(x (x) y) = (x.x) (x) y - x (x) (x.y) = -x (x) z.
  const Field& F = L.field();
  int xz = T.find("x⊗z");
  CHECK(T.act(L, 0, xy) == vec_scale(F, unit(xz), F.neg(F.one())));
}

TEST_CASE("a tensor with an incomplete factor narrows its window") {
  Field q = Field::rationals();
  PresentedAlgebra P = free_lie(q, {{"x", 1}, {"y", 1}}, 5);
  GradedLieAlgebra L = P.algebra;
  GradedModule M = adjoint_module(L);  // incomplete, truncation 5, bottom 1
  GradedModule T = tensor_module(L, M, M);
  CHECK(!T.complete());
  // min degree of the other factor is 1, so the window closes at 5 + 1.
  CHECK(T.truncation() == 6);
  CHECK(T.validate(L).empty());
}

TEST_CASE("summands act through their own factors in an external tensor") {
  Field q = Field::rationals();
  GradedLieAlgebra L1 = heisenberg();
  GradedLieAlgebra L2(q, {{"a", 2}}, {}, 8);
  GradedLieAlgebra S = direct_sum(L1, L2);
  GradedModule A = adjoint_module(L1);
  GradedModule B = adjoint_module(L2);
  GradedModule T = external_tensor(S, L1, A, L2, B);
  CHECK(T.complete());
  DimensionSequence d = T.dims();
  CHECK(d.at(3) == 2);
  CHECK(d.at(4) == 1);
  CHECK(T.validate(S).empty());
  int xa = T.find("x⊗a");
  int za = T.find("z⊗a");
  REQUIRE(xa >= 0);
  // y in the ambient sum still brackets x to z inside the left factor,
  // and [y,x] = +z because both are odd.
  CHECK(T.act(S, 1, xa) == unit(za));
  // The right summand generator is abelian, so it acts by zero.
  CHECK(T.act(S, 3, xa).entries.empty());
}

TEST_CASE("malformed module data is rejected up front") {
  GradedLieAlgebra L = heisenberg();
  Field q = Field::rationals();
  CHECK(kind_of([&] {
          GradedModule M(q, {{"m", 0}}, {}, -1, true);
        }) == ErrorKind::BadInput);
  CHECK(kind_of([&] {
          GradedModule M(q, {{"m", 3}}, {}, 2, true);
        }) == ErrorKind::BadInput);
  CHECK(kind_of([&] {
          GradedModule M(q, {{"m", 0}, {"m", 1}}, {}, 2, true);
        }) == ErrorKind::BadInput);
  CHECK(kind_of([&] {
          GradedModule M(q, {{"m", 0}, {"n", 1}},
                         {{0, 0, unit(1)}, {0, 0, unit(1)}}, 2, true);
        }) == ErrorKind::BadInput);
  GradedModule F5 = trivial_module(Field::prime(5));
  CHECK(kind_of([&] { F5.validate(L); }) == ErrorKind::BadInput);
  GradedLieAlgebra L2(q, {{"a", 2}}, {}, 8);
  GradedModule A = adjoint_module(L);
  GradedModule B = adjoint_module(L2);
  // The ambient algebra must really be the direct sum of the two summands.
  CHECK(kind_of([&] { external_tensor(L, L, A, L2, B); }) ==
        ErrorKind::BadInput);
}
