#pragma once

#include "lojex/geometry.hpp"
#include "lojex/poly.hpp"

#include <optional>
#include <vector>

namespace lojex {

struct BoundaryDimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A lattice point nu+mu of the support together with the monomials mapping
/// to it (several mixed exponent pairs can share a combined exponent).
struct SupportPoint {
  ExpVec coords;
  std::vector<ExponentPair> sources;
};

/// One facet of conv(support) + R+^n: primitive normal >= 0, inequality
/// normal.point >= offset, tight exactly on `tight` (indices into support).
struct NewtonFacet {
  IVec normal;
  Int offset;
  std::vector<int> tight;
};

/// The face data of a weight vector: indices of the minimizing support
/// points, their affine dimension, and the attained minimum d(P,f).
struct FaceData {
  std::vector<int> points;
  int dim = -1;
  Rational value{Int(0)};
};

class NewtonPolyhedron {
 public:
  int n = 0;
  std::vector<SupportPoint> support;
  std::vector<NewtonFacet> facets;
  int boundary_dim = -1;

  const SupportPoint& point(int idx) const { return support[idx]; }

  /// Index lookup of a support coordinate vector; -1 when absent.
  int find_point(const ExpVec& coords) const;
};

/// Exact facet description of the Newton polyhedron of f. Rejects the zero
/// function and dimensions above 6.
NewtonPolyhedron build_polyhedron(const MixedFunction& f);

/// Same construction for a bare support point set (used for derived
/// polyhedra such as the Minkowski product).
NewtonPolyhedron build_polyhedron_from_points(const std::vector<IVec>& points, int n);

/// Minimizing face of a weight; weight >= 0 and nonzero.
FaceData min_face(const NewtonPolyhedron& poly, const QVec& weight);

/// Affine dimension of the union of compact faces.
int boundary_dimension(const NewtonPolyhedron& poly);

/// One compact face: its support points and a strictly positive integer
/// weight whose minimizing set is exactly that face.
struct CompactFace {
  std::vector<int> points;
  int dim;
  IVec weight;
};

/// All compact faces of the polyhedron (vertices up to facets of the
/// boundary), deduplicated.
std::vector<CompactFace> compact_faces(const NewtonPolyhedron& poly);

/// Monomials of f supported on the given support-point subset.
MixedFunction face_function_of(const MixedFunction& f, const NewtonPolyhedron& poly,
                               const std::vector<int>& point_indices);

}  // namespace lojex
