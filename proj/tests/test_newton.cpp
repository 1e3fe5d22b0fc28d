#include "testutil.hpp"

#include <doctest.h>

using namespace lojex;
using namespace lojex::testing;

namespace {

const NewtonFacet* find_facet(const NewtonPolyhedron& poly, const IVec& normal) {
  for (const auto& facet : poly.facets)
    if (facet.normal == normal) return &facet;
  return nullptr;
}

}  // namespace

TEST_CASE("build_polyhedron: worked examples") {
  NewtonPolyhedron brieskorn = build_polyhedron(fn("z1^3+z2^7"));
  const NewtonFacet* bf = find_facet(brieskorn, ivec({7, 3}));
  REQUIRE(bf != nullptr);
  CHECK(bf->offset == Int(21));
  int strictly_positive = 0;
  for (const auto& facet : brieskorn.facets) {
    bool strict = true;
    for (int i = 0; i < 2; ++i)
      if (facet.normal[i] == 0) strict = false;
    strictly_positive += strict;
  }
  CHECK(strictly_positive == 1);

  NewtonPolyhedron quadric = build_polyhedron(fn("z1^2+z2^2"));
  const NewtonFacet* qf = find_facet(quadric, ivec({1, 1}));
  REQUIRE(qf != nullptr);
  CHECK(qf->offset == Int(2));

  NewtonPolyhedron big = build_polyhedron(fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7"));
  CHECK(find_facet(big, ivec({7, 21, 12, 12})) != nullptr);

  CHECK_THROWS_AS(build_polyhedron(fn("z1^2", 7)), std::invalid_argument);  // n cap
}

TEST_CASE("every support point is on the valid side of every facet") {
  std::uint64_t state = 555;
  int done = 0;
  for (int iter = 0; iter < 60 && done < 30; ++iter) {
    auto f = random_function(state, 2 + static_cast<int>(state % 3), 8, true, false);
    if (!f) continue;
    ++done;
    NewtonPolyhedron poly = build_polyhedron(*f);
    for (const auto& facet : poly.facets) {
      bool any_tight = false;
      for (const auto& sp : poly.support) {
        Int v = dot(facet.normal, sp.coords);
        CHECK(v >= facet.offset);
        if (v == facet.offset) any_tight = true;
      }
      CHECK(any_tight);
    }
  }
  CHECK(done >= 30);
}

TEST_CASE("min_face: worked examples") {
  MixedFunction f = fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7");
  NewtonPolyhedron poly = build_polyhedron(f);

  QVec S = weights_q({ratio(0), ratio(1), ratio(1, 7), ratio(1, 7)});
  FaceData face = min_face(poly, S);
  CHECK(face.value == ratio(1));
  REQUIRE(face.points.size() == 3);
  std::set<std::vector<int>> coords;
  for (int idx : face.points) {
    const ExpVec& c = poly.support[idx].coords;
    coords.insert({c[0], c[1], c[2], c[3]});
  }
  CHECK(coords == std::set<std::vector<int>>{{9, 1, 0, 0}, {0, 0, 7, 0}, {0, 0, 0, 7}});

  NewtonPolyhedron brieskorn = build_polyhedron(fn("z1^3+z2^7"));
  FaceData bf = min_face(brieskorn, weights({1, 1}));
  CHECK(bf.value == ratio(3));
  REQUIRE(bf.points.size() == 1);
  CHECK(brieskorn.support[bf.points[0]].coords == exps({3, 0}));

  // a normalized weight always has value 1
  NormalizedWeight nw = normalize_weight(f, weights({7, 21, 12, 12}));
  CHECK(min_face(poly, nw.hat).value == ratio(1));

  CHECK_THROWS_AS(min_face(poly, weights({0, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("min_face: scale invariance and admissible segments") {
  std::uint64_t state = 808;
  int done = 0;
  for (int iter = 0; iter < 60 && done < 20; ++iter) {
    int n = 2 + static_cast<int>(state % 3);
    auto f = random_function(state, n, 7, false, false);
    if (!f) continue;
    ++done;
    NewtonPolyhedron poly = build_polyhedron(*f);
    QVec P(n);
    for (int i = 0; i < n; ++i) P[i] = ratio(1 + static_cast<long>((state >> (3 * i)) % 6));
    FaceData base = min_face(poly, P);
    QVec scaled = P * ratio(3, 2);
    FaceData s = min_face(poly, scaled);
    CHECK(s.points == base.points);
    CHECK(s.value == base.value * ratio(3, 2));

    // P admissible with a facet through one of its minimizers:
    // interior points of the segment cut out the intersection face.
    for (const auto& facet : poly.facets) {
      if (!std::includes(facet.tight.begin(), facet.tight.end(), base.points.begin(),
                         base.points.begin() + 1))
        continue;
      QVec Q = to_rational_vec(facet.normal);
      FaceData fq = min_face(poly, Q);
      std::vector<int> expect;
      std::set_intersection(base.points.begin(), base.points.end(), fq.points.begin(),
                            fq.points.end(), std::back_inserter(expect));
      if (expect.empty()) continue;
      for (long num : {1L, 2L, 3L}) {
        QVec mid = P * ratio(num, 4) + Q * ratio(4 - num, 4);
        CHECK(min_face(poly, mid).points == expect);
      }
      break;
    }
  }
  CHECK(done >= 20);
}

TEST_CASE("boundary dimension") {
  CHECK(build_polyhedron(fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7")).boundary_dim == 3);
  CHECK(build_polyhedron(fn("z1^2*z2")).boundary_dim == 0);
  CHECK(build_polyhedron(fn("z1^3+z2^7")).boundary_dim == 1);
  CHECK(build_polyhedron(fn("z1^2", 1)).boundary_dim == 0);
  CHECK(build_polyhedron(fn("z1*z2+z1^3", 2)).boundary_dim == 1);
}

TEST_CASE("facet list is independent of term order") {
  MixedFunction a = fn("z1^2*z2+z2^3*z3+z3^4*z1+z4^2");
  MixedFunction b = fn("z4^2+z3^4*z1+z2^3*z3+z1^2*z2");
  NewtonPolyhedron pa = build_polyhedron(a), pb = build_polyhedron(b);
  REQUIRE(pa.facets.size() == pb.facets.size());
  for (std::size_t i = 0; i < pa.facets.size(); ++i)
    CHECK(pa.facets[i].normal == pb.facets[i].normal);
}

TEST_CASE("compact faces cover vertices through facets") {
  NewtonPolyhedron poly = build_polyhedron(fn("z1^3+z2^7"));
  auto faces = compact_faces(poly);
  // two vertex faces and the segment between them
  int dim0 = 0, dim1 = 0;
  for (const auto& face : faces) {
    if (face.dim == 0) ++dim0;
    if (face.dim == 1) ++dim1;
    FaceData check = min_face(poly, to_rational_vec(face.weight));
    CHECK(check.points == face.points);
    for (Eigen::Index i = 0; i < face.weight.size(); ++i) CHECK(face.weight[i] > 0);
  }
  CHECK(dim0 == 2);
  CHECK(dim1 == 1);
}
