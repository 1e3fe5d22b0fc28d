#pragma once

#include "lojex/rational.hpp"

#include <vector>

namespace lojex {

struct IVecLess {
  bool operator()(const IVec& a, const IVec& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  }
};

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(IMat m);

/// Exact rank of the row span.
int rank_of(IMat m);

/// Affine dimension of a point set (-1 when empty).
int affine_dim(const std::vector<IVec>& points);

/// Affine dimension of conv(points) + cone(rays).
int affine_dim(const std::vector<IVec>& points, const std::vector<IVec>& rays);

/// Extreme rays of the pointed cone {y : g.y >= 0 for all g in generators},
/// enumerated by constraint-incremental double description. Throws when the
/// generators do not span (cone has lineality) or the ray count exceeds cap.
std::vector<IVec> extreme_rays(const std::vector<IVec>& generators, std::size_t cap = 100000);

/// One inequality normal.point >= offset of a polyhedron, tight on a facet.
struct HalfSpace {
  IVec normal;  // primitive
  Int offset;
};

/// Facets of the convex hull of a full-dimensional finite point set.
std::vector<HalfSpace> polytope_facets(const std::vector<IVec>& points);

/// Facets of conv(points) + R+^n, computed over the padded point set
/// {s} u {s + D e_i} with D = 1 + (n+1) * (max coordinate). All returned
/// normals are >= 0, nonzero, primitive; offsets are re-derived as the exact
/// minimum over the original points.
std::vector<HalfSpace> orthant_polyhedron_facets(const std::vector<IVec>& points);

/// Indices of the points that are vertices of conv(points) + R+^n.
std::vector<int> extreme_point_indices(const std::vector<IVec>& points);

/// Pairwise-sum Minkowski addition pruned to extreme points; throws when the
/// intermediate product exceeds cap.
std::vector<IVec> minkowski_sum(const std::vector<IVec>& a, const std::vector<IVec>& b,
                                std::size_t cap);

struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lojex
