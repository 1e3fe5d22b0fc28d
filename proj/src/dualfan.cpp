#include "lojex/dualfan.hpp"

#include <algorithm>
#include <set>

namespace lojex {

const char* vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::StrictlyPositive: return "strictly-positive";
    case VertexKind::Elementary: return "elementary";
    case VertexKind::Vanishing: return "vanishing";
    case VertexKind::OtherNonPositive: return "other-nonpositive";
  }
  return "?";
}

const char* region_tag_name(RegionTag t) {
  switch (t) {
    case RegionTag::Inner: return "inner";
    case RegionTag::RegularBoundary: return "regular-boundary";
    case RegionTag::VanishingBoundary: return "vanishing-boundary";
  }
  return "?";
}

FanVertex classify_vertex(const NewtonPolyhedron& poly, IVec weight) {
  FanVertex v;
  v.weight = std::move(weight);
  v.face = min_face(poly, to_rational_vec(v.weight));

  const int n = poly.n;
  std::vector<int> zeros;
  int positive = 0;
  for (int i = 0; i < n; ++i) {
    if (v.weight[i] == 0) zeros.push_back(i);
    else ++positive;
  }
  const bool unit = positive == 1 && [&] {
    for (int i = 0; i < n; ++i)
      if (v.weight[i] != 0 && v.weight[i] != 1) return false;
    return true;
  }();

  if (v.face.value > Rational(Int(0))) {
    QVec hat(n);
    for (int i = 0; i < n; ++i) hat[i] = Rational(v.weight[i]) / v.face.value;
    v.normalized = std::move(hat);
    if (!zeros.empty()) v.vanishing_subset = VariableSubset(zeros);
  }

  if (zeros.empty()) v.kind = VertexKind::StrictlyPositive;
  else if (unit) v.kind = VertexKind::Elementary;
  else if (v.face.value > Rational(Int(0))) v.kind = VertexKind::Vanishing;
  else v.kind = VertexKind::OtherNonPositive;
  return v;
}

std::vector<FanVertex> fan_vertices(const NewtonPolyhedron& poly) {
  if (poly.boundary_dim != poly.n - 1)
    throw BoundaryDimensionError("Newton boundary has dimension " +
                                 std::to_string(poly.boundary_dim) + ", expected n-1 = " +
                                 std::to_string(poly.n - 1));
  std::vector<FanVertex> out;
  out.reserve(poly.facets.size());
  for (const auto& facet : poly.facets) out.push_back(classify_vertex(poly, facet.normal));
  return out;
}

namespace {

// Delta(W) contains Delta(P) iff the tight points of P are tight for W and
// the zero coordinates of P are zero for W.
bool face_contains(const NewtonPolyhedron& poly, const FanVertex& W,
                   const std::vector<int>& tight_P, const std::vector<int>& zeros_P) {
  if (!std::includes(W.face.points.begin(), W.face.points.end(), tight_P.begin(), tight_P.end()))
    return false;
  for (int i : zeros_P)
    if (W.weight[i] != 0) return false;
  return true;
}

}  // namespace

RegionClass region_class(const NewtonPolyhedron& poly, const std::vector<FanVertex>& vertices,
                         const QVec& P) {
  FaceData face = min_face(poly, P);
  if (face.value.numerator() == 0)
    throw std::invalid_argument("region classification requires d(P,f) > 0");
  std::vector<int> zeros;
  for (Eigen::Index i = 0; i < P.size(); ++i)
    if (P[i].numerator() == 0) zeros.push_back(static_cast<int>(i));

  RegionClass rc;
  for (const auto& v : vertices) {
    if (!v.vanishing_direction() || v.strictly_positive()) continue;
    if (face_contains(poly, v, face.points, zeros)) {
      rc.tag = RegionTag::VanishingBoundary;
      rc.witness = v;
      return rc;
    }
  }
  for (const auto& v : vertices) {
    if (v.kind != VertexKind::Elementary || v.vanishing_direction()) continue;
    if (face_contains(poly, v, face.points, zeros)) {
      rc.tag = RegionTag::RegularBoundary;
      rc.witness = v;
      return rc;
    }
  }
  rc.tag = RegionTag::Inner;
  return rc;
}

std::vector<const FanVertex*> JacobianDiagram::strictly_positive_base() const {
  std::vector<const FanVertex*> out;
  for (const auto& v : base_vertices)
    if (v.strictly_positive()) out.push_back(&v);
  return out;
}

JacobianDiagram jacobian_diagram(const MixedFunction& f, std::size_t cap) {
  JacobianDiagram diagram;
  diagram.base = build_polyhedron(f);
  diagram.base_vertices = fan_vertices(diagram.base);

  const int n = f.n();
  auto combined_points = [n](const MixedFunction& g) {
    std::set<IVec, IVecLess> pts;
    for (const auto& [e, c] : g.terms()) pts.insert(to_int_vec(e.combined()));
    return std::vector<IVec>(pts.begin(), pts.end());
  };

  std::vector<IVec> acc = combined_points(f);
  {
    std::vector<IVec> kept;
    for (int idx : extreme_point_indices(acc)) kept.push_back(acc[idx]);
    acc = std::move(kept);
  }
  for (int j = 0; j < n; ++j)
    for (bool conj : {false, true}) {
      MixedFunction d = wirtinger_derivative(f, j, conj);
      if (d.is_zero()) continue;
      acc = minkowski_sum(acc, combined_points(d), cap);
    }
  diagram.product_support = acc;

  NewtonPolyhedron product = build_polyhedron_from_points(acc, n);
  for (const auto& facet : product.facets)
    diagram.vertices.push_back(classify_vertex(diagram.base, facet.normal));

  diagram.regions.resize(diagram.vertices.size());
  for (std::size_t i = 0; i < diagram.vertices.size(); ++i) {
    const FanVertex& v = diagram.vertices[i];
    if (!v.strictly_positive()) continue;
    diagram.regions[i] =
        region_class(diagram.base, diagram.base_vertices, to_rational_vec(v.weight));
    if (diagram.regions[i]->tag == RegionTag::VanishingBoundary)
      diagram.vjpp.push_back(static_cast<int>(i));
  }
  return diagram;
}

}  // namespace lojex
