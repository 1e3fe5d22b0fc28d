#include "testutil.hpp"

#include <doctest.h>

using namespace lojex;
using namespace lojex::testing;

namespace {

const FanVertex* find_vertex(const std::vector<FanVertex>& vs, const IVec& weight) {
  for (const auto& v : vs)
    if (v.weight == weight) return &v;
  return nullptr;
}

}  // namespace

TEST_CASE("fan vertices: worked examples") {
  MixedFunction f = fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7");
  NewtonPolyhedron poly = build_polyhedron(f);
  auto vs = fan_vertices(poly);

  std::vector<const FanVertex*> strict;
  for (const auto& v : vs)
    if (v.strictly_positive()) strict.push_back(&v);
  REQUIRE(strict.size() == 1);
  CHECK(strict[0]->weight == ivec({7, 21, 12, 12}));

  const FanVertex* S = find_vertex(vs, ivec({0, 7, 1, 1}));
  REQUIRE(S != nullptr);
  CHECK(S->kind == VertexKind::Vanishing);
  REQUIRE(S->vanishing_subset.has_value());
  CHECK(*S->vanishing_subset == VariableSubset({0}));

  MixedFunction g = fn("z1^2*z2+z2^3*z3+z3^4*z1+z4^2");
  auto gs = fan_vertices(build_polyhedron(g));
  std::vector<const FanVertex*> gstrict;
  for (const auto& v : gs)
    if (v.strictly_positive()) gstrict.push_back(&v);
  REQUIRE(gstrict.size() == 1);
  CHECK(gstrict[0]->weight == ivec({18, 14, 8, 25}));

  auto qs = fan_vertices(build_polyhedron(fn("z1^2+z2^2")));
  CHECK(find_vertex(qs, ivec({1, 1})) != nullptr);
  const FanVertex* e1 = find_vertex(qs, ivec({1, 0}));
  const FanVertex* e2 = find_vertex(qs, ivec({0, 1}));
  REQUIRE(e1 != nullptr);
  REQUIRE(e2 != nullptr);
  CHECK(e1->kind == VertexKind::Elementary);
  CHECK(e2->kind == VertexKind::Elementary);

  CHECK_THROWS_AS(fan_vertices(build_polyhedron(fn("z1^2*z2"))), BoundaryDimensionError);
}

TEST_CASE("fan vertex invariants over the catalog") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    MixedFunction f = fn(entry.expr);
    NewtonPolyhedron poly = build_polyhedron(f);
    if (poly.boundary_dim != f.n() - 1) continue;
    for (const auto& v : fan_vertices(poly)) {
      if (v.vanishing_direction()) {
        CHECK(restrict_to(f, *v.vanishing_subset).is_zero());
        CHECK(v.face.value > ratio(0));
      }
      if (v.strictly_positive()) {
        CHECK(v.face.dim == f.n() - 1);
        // every variable appears on the face
        for (int j = 0; j < f.n(); ++j) {
          bool present = false;
          for (int idx : v.face.points)
            if (poly.support[idx].coords[j] > 0) present = true;
          CHECK(present);
        }
      }
    }
  }
}

TEST_CASE("region classification: worked examples") {
  MixedFunction f = fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7");
  NewtonPolyhedron poly = build_polyhedron(f);
  auto vs = fan_vertices(poly);

  RegionClass rc = region_class(poly, vs, weights({2, 6, 3, 3}));
  CHECK(rc.tag == RegionTag::VanishingBoundary);
  REQUIRE(rc.witness.has_value());
  CHECK(rc.witness->weight == ivec({0, 7, 1, 1}));

  RegionClass rr = region_class(poly, vs, weights({7, 21, 12, 12}));
  CHECK(rr.tag != RegionTag::VanishingBoundary);

  NewtonPolyhedron bk = build_polyhedron(fn("z1^3+z2^7"));
  auto bkv = fan_vertices(bk);
  CHECK(region_class(bk, bkv, weights({7, 3})).tag == RegionTag::Inner);

  // scale invariance
  RegionClass scaled = region_class(poly, vs, weights({4, 12, 6, 6}));
  CHECK(scaled.tag == rc.tag);

  CHECK_THROWS_AS(region_class(poly, vs, weights({1, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("jacobian diagram: worked examples") {
  MixedFunction f = fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7");
  JacobianDiagram diagram = jacobian_diagram(f);

  const FanVertex* P = find_vertex(diagram.vertices, ivec({2, 6, 3, 3}));
  REQUIRE(P != nullptr);
  CHECK(P->strictly_positive());
  MixedFunction face = face_function_of(f, diagram.base, P->face.points);
  CHECK(face == fn("z3^7+z4^7", 4));
  CHECK(find_vertex(diagram.base_vertices, ivec({2, 6, 3, 3})) == nullptr);

  // The refined subdivision retains the base direction.
  CHECK(find_vertex(diagram.vertices, ivec({7, 21, 12, 12})) != nullptr);

  bool p_in_vjpp = false;
  for (int idx : diagram.vjpp)
    if (diagram.vertices[idx].weight == ivec({2, 6, 3, 3})) p_in_vjpp = true;
  CHECK(p_in_vjpp);

  JacobianDiagram bk = jacobian_diagram(fn("z1^3+z2^7"));
  CHECK(bk.vjpp.empty());

  JacobianDiagram quad = jacobian_diagram(fn("z1^2+z2^2"));
  for (const auto& v : quad.base_vertices)
    if (v.strictly_positive()) CHECK(find_vertex(quad.vertices, v.weight) != nullptr);
  std::size_t strict_base = 0, strict_refined = 0;
  for (const auto& v : quad.base_vertices) strict_base += v.strictly_positive();
  for (const auto& v : quad.vertices) strict_refined += v.strictly_positive();
  CHECK(strict_base == strict_refined);  // gradient is linear, nothing refines
}

TEST_CASE("refinement keeps base directions over the catalog") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    MixedFunction f = fn(entry.expr);
    NewtonPolyhedron poly = build_polyhedron(f);
    if (poly.boundary_dim != f.n() - 1) continue;
    JacobianDiagram diagram = jacobian_diagram(f);
    for (const auto& v : diagram.base_vertices) {
      if (!v.strictly_positive()) continue;
      CHECK(find_vertex(diagram.vertices, v.weight) != nullptr);
    }
    for (int idx : diagram.vjpp) CHECK(diagram.vertices[idx].strictly_positive());
  }
}

TEST_CASE("size cap reports the blowup") {
  MixedFunction f = fn("z1^2*z2+z2^3*z3+z3^4*z1+z4^2");
  CHECK_THROWS_AS(jacobian_diagram(f, 4), SizeCapError);
}
