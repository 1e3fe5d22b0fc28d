#include "testutil.hpp"

#include <doctest.h>

using namespace lojex;
using namespace lojex::testing;

TEST_CASE("determinant and rank") {
  IMat m(2, 2);
  m << Int(2), Int(3), Int(5), Int(7);
  CHECK(determinant(m) == Int(-1));

  IMat s(3, 3);
  s << Int(1), Int(2), Int(3), Int(4), Int(5), Int(6), Int(7), Int(8), Int(9);
  CHECK(determinant(s) == Int(0));
  CHECK(rank_of(s) == 2);

  IMat big(4, 4);
  big << Int(3), Int(0), Int(0), Int(1), Int(0), Int(2), Int(0), Int(0), Int(0), Int(0), Int(5),
      Int(0), Int(1), Int(0), Int(0), Int(4);
  CHECK(determinant(big) == Int(110));
}

TEST_CASE("affine dimension") {
  std::vector<IVec> pts = {ivec({0, 0}), ivec({1, 1}), ivec({2, 2})};
  CHECK(affine_dim(pts) == 1);
  CHECK(affine_dim({ivec({5, 5})}) == 0);
  CHECK(affine_dim(std::vector<IVec>{}) == -1);
  CHECK(affine_dim({ivec({3, 0})}, {ivec({1, 0})}) == 1);
  CHECK(affine_dim({ivec({3, 0})}, {ivec({1, 0}), ivec({0, 1})}) == 2);
}

TEST_CASE("extreme rays of simple cones") {
  // Dual of the positive orthant is itself.
  std::vector<IVec> gens = {ivec({1, 0}), ivec({0, 1})};
  auto rays = extreme_rays(gens);
  REQUIRE(rays.size() == 2);
  CHECK(rays[0] == ivec({0, 1}));
  CHECK(rays[1] == ivec({1, 0}));

  // A half-plane cone has lineality; must be rejected.
  CHECK_THROWS_AS(extreme_rays({ivec({1, 0, 0})}), std::invalid_argument);
}

TEST_CASE("polytope facets of a simplex") {
  std::vector<IVec> pts = {ivec({0, 0}), ivec({2, 0}), ivec({0, 2})};
  auto facets = polytope_facets(pts);
  CHECK(facets.size() == 3);
  for (const auto& hs : facets)
    for (const IVec& p : pts) CHECK(dot(hs.normal, p) >= hs.offset);
}

TEST_CASE("orthant polyhedron facets match the brute-force oracle") {
  auto check_equal = [](const std::vector<IVec>& pts) {
    auto got = orthant_polyhedron_facets(pts);
    auto want = brute_orthant_facets(pts);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CAPTURE(i);
      CHECK(got[i].normal == want[i].normal);
      CHECK(got[i].offset == want[i].offset);
    }
  };

  check_equal({ivec({3, 0}), ivec({0, 7})});
  check_equal({ivec({2, 0}), ivec({0, 2})});
  check_equal({ivec({2, 1})});
  check_equal(support_points(fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7")));
  check_equal(support_points(fn("z1^2*z2+z2^3*z3+z3^4*z1+z4^2")));
  check_equal(support_points(fn("z1^7+z1^4*z2+z2^7")));

  std::uint64_t state = 31337;
  int done = 0;
  for (int iter = 0; iter < 40 && done < 25; ++iter) {
    int n = 2 + static_cast<int>(state % 3);
    auto f = random_function(state, n, 8, true, false);
    if (!f) continue;
    ++done;
    CAPTURE(format_function(*f));
    check_equal(support_points(*f));
  }
  CHECK(done >= 25);
}

TEST_CASE("facets are independent of input point order") {
  auto pts = support_points(fn("z1^2*z2+z2^3*z3+z3^4*z1+z4^2"));
  auto base = orthant_polyhedron_facets(pts);
  std::reverse(pts.begin(), pts.end());
  auto reversed = orthant_polyhedron_facets(pts);
  REQUIRE(base.size() == reversed.size());
  for (std::size_t i = 0; i < base.size(); ++i) CHECK(base[i].normal == reversed[i].normal);
}

TEST_CASE("extreme point filtering") {
  // (1,1) sits on the segment between (2,0) and (0,2); (3,3) is dominated.
  std::vector<IVec> pts = {ivec({2, 0}), ivec({0, 2}), ivec({1, 1}), ivec({3, 3})};
  auto idx = extreme_point_indices(pts);
  REQUIRE(idx.size() == 2);
  CHECK(pts[idx[0]] == ivec({2, 0}));
  CHECK(pts[idx[1]] == ivec({0, 2}));
}

TEST_CASE("minkowski sum with pruning") {
  std::vector<IVec> a = {ivec({1, 0}), ivec({0, 1})};
  std::vector<IVec> b = {ivec({2, 0}), ivec({0, 3})};
  auto sum = minkowski_sum(a, b, 1000);
  // extremes of {3,0},{1,3},{2,1},{0,4}: (2,1) is dominated-free but interior
  REQUIRE(sum.size() == 3);
  CHECK_THROWS_AS(minkowski_sum(a, b, 3), SizeCapError);
}
