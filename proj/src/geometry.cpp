#include "lojex/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lojex {

Int determinant(IMat m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = k + 1; r < n; ++r)
        if (m(r, k) != 0) { pivot = r; break; }
      if (pivot < 0) return 0;
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

int rank_of(IMat m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (m(r, col) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    m.row(row).swap(m.row(pivot));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (m(r, col) == 0) continue;
      Int f1 = m(row, col), f2 = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) = m(r, c) * f1 - m(row, c) * f2;
    }
    ++row;
    ++rank;
  }
  return rank;
}

int affine_dim(const std::vector<IVec>& points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  IMat m(points.size() - 1, points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i) m.row(i - 1) = (points[i] - points[0]).transpose();
  return rank_of(std::move(m));
}

int affine_dim(const std::vector<IVec>& points, const std::vector<IVec>& rays) {
  if (points.empty()) return -1;
  IMat m(points.size() - 1 + rays.size(), points[0].size());
  Eigen::Index r = 0;
  for (std::size_t i = 1; i < points.size(); ++i) m.row(r++) = (points[i] - points[0]).transpose();
  for (const IVec& d : rays) m.row(r++) = d.transpose();
  if (r == 0) return 0;
  return rank_of(m.topRows(r));
}

namespace {

struct Ray {
  IVec dir;
  std::vector<std::uint64_t> tight;  // over processed constraint indices

  bool tight_at(std::size_t k) const { return (tight[k >> 6] >> (k & 63)) & 1; }
  void set_tight(std::size_t k) { tight[k >> 6] |= std::uint64_t(1) << (k & 63); }
};

bool tight_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

std::vector<IVec> extreme_rays(const std::vector<IVec>& generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("no constraint generators");
  const Eigen::Index d = generators[0].size();

  // Greedy selection of d linearly independent constraints for the seed cone.
  std::vector<std::size_t> seed;
  {
    IMat acc(d, d);
    int have = 0;
    for (std::size_t k = 0; k < generators.size() && have < d; ++k) {
      acc.row(have) = generators[k].transpose();
      if (rank_of(acc.topRows(have + 1)) == have + 1) {
        seed.push_back(k);
        ++have;
      }
    }
    if (have < d) throw std::invalid_argument("cone has lineality; generators do not span");
  }

  IMat B(d, d);
  for (Eigen::Index i = 0; i < d; ++i) B.row(i) = generators[seed[i]].transpose();
  const Int detB = determinant(B);

  const std::size_t words = (generators.size() + 63) / 64;
  std::vector<Ray> rays;
  for (Eigen::Index k = 0; k < d; ++k) {
    // Cramer column: B * y = det(B) * e_k, negated when det < 0.
    IVec y(d);
    for (Eigen::Index i = 0; i < d; ++i) {
      IMat Bk = B;
      for (Eigen::Index r = 0; r < d; ++r) Bk(r, i) = (r == k) ? 1 : 0;
      y[i] = determinant(std::move(Bk));
    }
    if (detB < 0) y = -y;
    Ray ray{primitive(std::move(y)), std::vector<std::uint64_t>(words, 0)};
    for (Eigen::Index j = 0; j < d; ++j)
      if (j != k) ray.set_tight(seed[j]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(generators.size(), false);
  for (std::size_t k : seed) processed[k] = true;

  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (processed[k]) continue;
    const IVec& a = generators[k];
    std::vector<Int> val(rays.size());
    bool any_neg = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r].dir);
      if (val[r] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (val[r] == 0) rays[r].set_tight(k);
      processed[k] = true;
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) {
        next.push_back(rays[r]);
        if (val[r] == 0) next.back().set_tight(k);
      }

    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        // Combinatorial adjacency: no third ray's tight set contains both.
        std::vector<std::uint64_t> common(words);
        for (std::size_t w = 0; w < words; ++w)
          common[w] = rays[p].tight[w] & rays[q].tight[w];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size(); ++r) {
          if (r == p || r == q) continue;
          if (tight_subset(common, rays[r].tight)) { adjacent = false; break; }
        }
        if (!adjacent) continue;
        Ray nr;
        nr.dir = primitive(val[p] * rays[q].dir - val[q] * rays[p].dir);
        nr.tight = std::move(common);
        nr.set_tight(k);
        next.push_back(std::move(nr));
        if (next.size() > cap) throw SizeCapError("extreme ray count exceeds cap");
      }
    }
    rays = std::move(next);
    processed[k] = true;
  }

  std::vector<IVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.dir));
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) { return IVecLess{}(a, b); });
  return out;
}

std::vector<HalfSpace> polytope_facets(const std::vector<IVec>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const Eigen::Index n = points[0].size();
  std::vector<IVec> gens;
  gens.reserve(points.size());
  for (const IVec& p : points) {
    IVec g(n + 1);
    g.head(n) = p;
    g[n] = 1;
    gens.push_back(std::move(g));
  }
  std::vector<HalfSpace> out;
  for (const IVec& ray : extreme_rays(gens)) {
    IVec normal = ray.head(n);
    if (normal.isZero()) continue;
    out.push_back({std::move(normal), -ray[n]});
  }
  return out;
}

std::vector<HalfSpace> orthant_polyhedron_facets(const std::vector<IVec>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const Eigen::Index n = points[0].size();

  Int maxc = 0;
  for (const IVec& p : points)
    for (Eigen::Index i = 0; i < n; ++i) maxc = std::max(maxc, p[i]);
  const Int pad = 1 + Int(n + 1) * maxc;

  std::set<IVec, IVecLess> padded(points.begin(), points.end());
  for (const IVec& p : points)
    for (Eigen::Index i = 0; i < n; ++i) {
      IVec q = p;
      q[i] += pad;
      padded.insert(std::move(q));
    }

  std::vector<HalfSpace> out;
  std::set<IVec, IVecLess> seen;
  for (auto& hs : polytope_facets(std::vector<IVec>(padded.begin(), padded.end()))) {
    bool nonneg = true;
    for (Eigen::Index i = 0; i < n; ++i)
      if (hs.normal[i] < 0) { nonneg = false; break; }
    if (!nonneg || !seen.insert(hs.normal).second) continue;

    Int offset = dot(hs.normal, points[0]);
    for (const IVec& p : points) offset = std::min(offset, dot(hs.normal, p));
    std::vector<IVec> tight, rays;
    for (const IVec& p : points)
      if (dot(hs.normal, p) == offset) tight.push_back(p);
    for (Eigen::Index i = 0; i < n; ++i)
      if (hs.normal[i] == 0) {
        IVec e = IVec::Zero(n);
        e[i] = 1;
        rays.push_back(std::move(e));
      }
    if (affine_dim(tight, rays) == n - 1) out.push_back({hs.normal, offset});
  }
  std::sort(out.begin(), out.end(),
            [](const HalfSpace& a, const HalfSpace& b) { return IVecLess{}(a.normal, b.normal); });
  return out;
}

std::vector<int> extreme_point_indices(const std::vector<IVec>& points) {
  const Eigen::Index n = points[0].size();
  auto facets = orthant_polyhedron_facets(points);
  std::vector<int> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    IMat tight(facets.size(), n);
    Eigen::Index r = 0;
    for (const auto& hs : facets)
      if (dot(hs.normal, points[i]) == hs.offset) tight.row(r++) = hs.normal.transpose();
    if (r >= n && rank_of(tight.topRows(r)) == n) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<IVec> minkowski_sum(const std::vector<IVec>& a, const std::vector<IVec>& b,
                                std::size_t cap) {
  if (a.size() * b.size() > cap)
    throw SizeCapError("Minkowski sum exceeds the intermediate point cap (" +
                       std::to_string(a.size() * b.size()) + " pairwise sums)");
  std::set<IVec, IVecLess> sums;
  for (const IVec& p : a)
    for (const IVec& q : b) sums.insert(p + q);
  std::vector<IVec> pts(sums.begin(), sums.end());
  std::vector<IVec> out;
  for (int idx : extreme_point_indices(pts)) out.push_back(pts[idx]);
  return out;
}

}  // namespace lojex
