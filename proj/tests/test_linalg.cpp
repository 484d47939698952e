#include <utility>
#include <vector>

#include "doctest.h"
#include "gla/linalg.hpp"

using namespace gla;

namespace {

SparseVec sv(std::vector<std::pair<int, long>> terms) {
  Field q = Field::rationals();
  std::vector<std::pair<int, Scalar>> t;
  for (auto& [c, v] : terms) t.emplace_back(c, Scalar(v));
  return make_vec(q, std::move(t));
}

}  // namespace

TEST_CASE("make_vec combines duplicates and drops zeros") {
  Field q = Field::rationals();
  SparseVec v = make_vec(q, {{2, Scalar(1)}, {0, Scalar(3)}, {2, Scalar(-1)}});
  REQUIRE(v.entries.size() == 1);
  CHECK(v.entries[0].first == 0);
  CHECK(v.entries[0].second == 3);
}

TEST_CASE("vec_add merges with cancellation") {
  Field q = Field::rationals();
  SparseVec a = sv({{0, 1}, {1, 2}});
  SparseVec b = sv({{0, -1}, {1, 3}, {4, 1}});
  SparseVec c = vec_add(q, a, b);
  REQUIRE(c.entries.size() == 2);
  CHECK(c.entries[0] == std::pair<int, Scalar>(1, Scalar(5)));
  CHECK(c.entries[1] == std::pair<int, Scalar>(4, Scalar(1)));
}

TEST_CASE("row reduction over the rationals") {
  Field q = Field::rationals();
  RowReducer red(q, 3);
  CHECK(red.insert(sv({{0, 1}, {1, 2}, {2, 3}})));
  CHECK(red.insert(sv({{0, 2}, {1, 4}, {2, 8}})));
  // Third row = first + second: dependent.
  CHECK_FALSE(red.insert(sv({{0, 3}, {1, 6}, {2, 11}})));
  CHECK(red.rank() == 2);
  CHECK(red.contains(sv({{0, 5}, {1, 10}, {2, 17}})));
  CHECK_FALSE(red.contains(sv({{1, 1}})));

  red.to_rref();
  auto rows = red.sorted_rows();
  REQUIRE(rows.size() == 2);
  // RREF of {(1,2,3),(2,4,8)} is {(1,2,0),(0,0,1)}.
  CHECK(rows[0]->entries ==
        std::vector<std::pair<int, Scalar>>{{0, Scalar(1)}, {1, Scalar(2)}});
  CHECK(rows[1]->entries ==
        std::vector<std::pair<int, Scalar>>{{2, Scalar(1)}});
  CHECK(red.pivot_columns() == std::vector<int>{0, 2});
  // The original rows still reduce to zero afterwards.
  CHECK(red.contains(sv({{0, 2}, {1, 4}, {2, 8}})));
}

TEST_CASE("rational rows are kept primitive with positive lead") {
  Field q = Field::rationals();
  RowReducer red(q, 2);
  SparseVec v = make_vec(
      q, {{0, Scalar(mpq_class(1, 2))}, {1, Scalar(mpq_class(-1, 3))}});
  CHECK(red.insert(std::move(v)));
  auto rows = red.sorted_rows();
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]->entries ==
        std::vector<std::pair<int, Scalar>>{{0, Scalar(3)}, {1, Scalar(-2)}});

  RowReducer neg(q, 2);
  CHECK(neg.insert(sv({{0, -4}, {1, 6}})));
  CHECK(neg.sorted_rows()[0]->entries ==
        std::vector<std::pair<int, Scalar>>{{0, Scalar(2)}, {1, Scalar(-3)}});
}

TEST_CASE("row reduction over a prime field") {
  Field f5 = Field::prime(5);
  RowReducer red(f5, 3);
  CHECK(red.insert(make_vec(f5, {{0, Scalar(2)}, {2, Scalar(3)}})));
  // Rows are monic.
  CHECK(red.sorted_rows()[0]->entries ==
        std::vector<std::pair<int, Scalar>>{{0, Scalar(1)},
                                            {2, Scalar(4)}});  // 3/2 = 4 mod 5
  // 5 == 0 mod 5: inserting a multiple of 5 adds nothing.
  CHECK_FALSE(red.insert(make_vec(f5, {{0, Scalar(10)}, {2, Scalar(15)}})));
  CHECK(red.rank() == 1);
  CHECK(red.contains(make_vec(f5, {{0, Scalar(4)}, {2, Scalar(6)}})));
  CHECK_FALSE(red.contains(make_vec(f5, {{0, Scalar(4)}, {2, Scalar(8)}})));
}

TEST_CASE("rank and kernel of a linear map") {
  Field q = Field::rationals();
  // e1 -> f1, e2 -> 2 f1, e3 -> f2
  std::vector<SparseVec> images = {sv({{0, 1}}), sv({{0, 2}}), sv({{1, 1}})};
  MapKernel mk = map_rank_kernel(q, 2, images, true);
  CHECK(mk.rank == 2);
  REQUIRE(mk.kernel.size() == 1);
  CHECK(mk.kernel[0].entries ==
        std::vector<std::pair<int, Scalar>>{{0, Scalar(2)}, {1, Scalar(-1)}});
}

TEST_CASE("kernel of the zero and identity maps") {
  Field q = Field::rationals();
  std::vector<SparseVec> zero_images(3);  // everything dies
  MapKernel z = map_rank_kernel(q, 2, zero_images, true);
  CHECK(z.rank == 0);
  CHECK(z.kernel.size() == 3);

  std::vector<SparseVec> id_images = {sv({{0, 1}}), sv({{1, 1}})};
  MapKernel i = map_rank_kernel(q, 2, id_images, true);
  CHECK(i.rank == 2);
  CHECK(i.kernel.empty());
}

TEST_CASE("kernel vectors actually map to zero") {
  Field f7 = Field::prime(7);
  // A 5 -> 3 map with entries (i * j + i + j) mod 7.
  std::vector<SparseVec> images;
  for (int i = 0; i < 5; ++i) {
    std::vector<std::pair<int, Scalar>> terms;
    for (int j = 0; j < 3; ++j)
      terms.emplace_back(j, f7.from_long(i * j + i + j));
    images.push_back(make_vec(f7, std::move(terms)));
  }
  MapKernel mk = map_rank_kernel(f7, 3, images, true);
  CHECK(mk.rank + static_cast<int>(mk.kernel.size()) == 5);
  for (const SparseVec& k : mk.kernel) {
    SparseVec image;
    for (const auto& [col, c] : k.entries)
      image = vec_add(f7, image, vec_scale(f7, images[col], c));
    CHECK(image.empty());
  }
}
