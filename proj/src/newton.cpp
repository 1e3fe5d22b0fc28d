#include "lojex/newton.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lojex {

int NewtonPolyhedron::find_point(const ExpVec& coords) const {
  for (std::size_t i = 0; i < support.size(); ++i)
    if (support[i].coords == coords) return static_cast<int>(i);
  return -1;
}

namespace {

NewtonPolyhedron build_common(std::vector<SupportPoint> support, int n) {
  if (n > 6)
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " exceeds the exact-hull cap of 6 variables");
  NewtonPolyhedron poly;
  poly.n = n;
  poly.support = std::move(support);

  std::vector<IVec> pts;
  pts.reserve(poly.support.size());
  for (const auto& sp : poly.support) pts.push_back(to_int_vec(sp.coords));

  for (auto& hs : orthant_polyhedron_facets(pts)) {
    NewtonFacet facet;
    facet.normal = std::move(hs.normal);
    facet.offset = std::move(hs.offset);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(facet.normal, pts[i]) == facet.offset) facet.tight.push_back(static_cast<int>(i));
    poly.facets.push_back(std::move(facet));
  }
  poly.boundary_dim = boundary_dimension(poly);
  return poly;
}

}  // namespace

NewtonPolyhedron build_polyhedron(const MixedFunction& f) {
  if (f.is_zero()) throw std::invalid_argument("Newton polyhedron of the zero function");
  std::map<std::vector<int>, SupportPoint> by_coords;
  for (const auto& [e, c] : f.terms()) {
    ExpVec combined = e.combined();
    std::vector<int> key(combined.data(), combined.data() + combined.size());
    auto it = by_coords.find(key);
    if (it == by_coords.end()) {
      SupportPoint sp;
      sp.coords = combined;
      sp.sources.push_back(e);
      by_coords.emplace(std::move(key), std::move(sp));
    } else {
      it->second.sources.push_back(e);
    }
  }
  std::vector<SupportPoint> support;
  support.reserve(by_coords.size());
  for (auto& [k, sp] : by_coords) support.push_back(std::move(sp));
  return build_common(std::move(support), f.n());
}

NewtonPolyhedron build_polyhedron_from_points(const std::vector<IVec>& points, int n) {
  std::vector<SupportPoint> support;
  support.reserve(points.size());
  for (const IVec& p : points) {
    SupportPoint sp;
    sp.coords = ExpVec(n);
    for (int i = 0; i < n; ++i) sp.coords[i] = p[i].convert_to<int>();
    support.push_back(std::move(sp));
  }
  return build_common(std::move(support), n);
}

FaceData min_face(const NewtonPolyhedron& poly, const QVec& weight) {
  bool nonzero = false;
  for (Eigen::Index i = 0; i < weight.size(); ++i) {
    if (weight[i] < Rational(Int(0))) throw std::invalid_argument("negative weight entry");
    if (weight[i].numerator() != 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("zero weight vector");

  FaceData face;
  bool first = true;
  for (std::size_t i = 0; i < poly.support.size(); ++i) {
    Rational d = dot(weight, poly.support[i].coords);
    if (first || d < face.value) {
      face.value = d;
      face.points.assign(1, static_cast<int>(i));
      first = false;
    } else if (d == face.value) {
      face.points.push_back(static_cast<int>(i));
    }
  }
  std::vector<IVec> pts;
  for (int idx : face.points) pts.push_back(to_int_vec(poly.support[idx].coords));
  face.dim = affine_dim(pts);
  return face;
}

std::vector<CompactFace> compact_faces(const NewtonPolyhedron& poly) {
  const int n = poly.n;
  // Closure of the facet tight sets under intersection gives every face's
  // support-point set; a face is compact iff the facets through it have no
  // common zero coordinate in their normals.
  std::set<std::vector<int>> tight_sets;
  for (const auto& facet : poly.facets) tight_sets.insert(facet.tight);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(tight_sets.begin(), tight_sets.end());
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        std::vector<int> meet;
        std::set_intersection(current[a].begin(), current[a].end(), current[b].begin(),
                              current[b].end(), std::back_inserter(meet));
        if (!meet.empty() && tight_sets.insert(meet).second) grew = true;
      }
  }

  std::vector<CompactFace> out;
  for (const auto& T : tight_sets) {
    IVec weight = IVec::Zero(n);
    std::vector<int> carrier;  // intersection of all facet tight sets containing T
    bool first = true;
    for (const auto& facet : poly.facets) {
      if (!std::includes(facet.tight.begin(), facet.tight.end(), T.begin(), T.end())) continue;
      weight += facet.normal;
      if (first) {
        carrier = facet.tight;
        first = false;
      } else {
        std::vector<int> meet;
        std::set_intersection(carrier.begin(), carrier.end(), facet.tight.begin(),
                              facet.tight.end(), std::back_inserter(meet));
        carrier = std::move(meet);
      }
    }
    if (carrier != T) continue;  // not the full tight set of a face
    bool strictly_positive = true;
    for (int i = 0; i < n; ++i)
      if (weight[i] == 0) { strictly_positive = false; break; }
    if (!strictly_positive) continue;

    std::vector<IVec> pts;
    for (int idx : T) pts.push_back(to_int_vec(poly.support[idx].coords));
    out.push_back({T, affine_dim(pts), primitive(std::move(weight))});
  }
  std::sort(out.begin(), out.end(), [](const CompactFace& a, const CompactFace& b) {
    if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
    return a.points < b.points;
  });
  return out;
}

int boundary_dimension(const NewtonPolyhedron& poly) {
  int dim = -1;
  for (const auto& face : compact_faces(poly)) dim = std::max(dim, face.dim);
  return dim;
}

MixedFunction face_function_of(const MixedFunction& f, const NewtonPolyhedron& poly,
                               const std::vector<int>& point_indices) {
  MixedFunction out(f.n());
  for (int idx : point_indices)
    for (const ExponentPair& e : poly.support[idx].sources) out.add_term(e, f.terms().at(e));
  return out;
}

}  // namespace lojex
