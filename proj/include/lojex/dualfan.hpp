#pragma once

#include "lojex/newton.hpp"

#include <optional>

namespace lojex {

enum class VertexKind { StrictlyPositive, Elementary, Vanishing, OtherNonPositive };

const char* vertex_kind_name(VertexKind k);

/// A one-dimensional cone generator of the dual subdivision: a primitive
/// facet normal of the Newton polyhedron, classified against f.
struct FanVertex {
  IVec weight;
  std::optional<QVec> normalized;  // weight / d(weight,f) when the degree is positive
  FaceData face;                   // minimizing face of f
  VertexKind kind = VertexKind::OtherNonPositive;
  /// Zero-coordinate set I(P) when d(weight,f) > 0; the restriction of f to
  /// it vanishes identically. Populated for e_i-shaped vertices too.
  std::optional<VariableSubset> vanishing_subset;

  bool strictly_positive() const { return kind == VertexKind::StrictlyPositive; }
  bool vanishing_direction() const { return vanishing_subset.has_value(); }
};

/// Classifies an arbitrary weight direction against f (used for both the base
/// subdivision's facet normals and the refined one's).
FanVertex classify_vertex(const NewtonPolyhedron& poly, IVec weight);

/// One vertex per facet of the polyhedron. Requires boundary dimension n-1.
std::vector<FanVertex> fan_vertices(const NewtonPolyhedron& poly);

enum class RegionTag { Inner, RegularBoundary, VanishingBoundary };

const char* region_tag_name(RegionTag t);

struct RegionClass {
  RegionTag tag = RegionTag::Inner;
  std::optional<FanVertex> witness;
};

/// Classifies the equivalence class of P in the base subdivision by the
/// face-containment closure test. Requires d(P,f) > 0.
RegionClass region_class(const NewtonPolyhedron& poly, const std::vector<FanVertex>& vertices,
                         const QVec& P);

/// The refined subdivision that also fixes the faces of every Wirtinger
/// derivative, realized as the dual of the product polyhedron (Minkowski sum
/// of the supports of f and its nonzero derivatives).
struct JacobianDiagram {
  NewtonPolyhedron base;
  std::vector<FanVertex> base_vertices;
  std::vector<IVec> product_support;        // extreme points of the sum
  std::vector<FanVertex> vertices;          // refined vertices, classified against f
  std::vector<std::optional<RegionClass>> regions;  // per vertex, strictly positive only
  std::vector<int> vjpp;                    // indices of vanishing-boundary members of V_J^+

  std::vector<const FanVertex*> strictly_positive_base() const;
};

JacobianDiagram jacobian_diagram(const MixedFunction& f, std::size_t cap = 200000);

}  // namespace lojex
