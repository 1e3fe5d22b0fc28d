#include "lojex/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace lojex {

std::vector<std::pair<VariableSubset, MixedFunction>> decompose_join(const MixedFunction& f) {
  auto comps = interaction_components(f);
  std::size_t covered = 0;
  for (const auto& c : comps) covered += c.size();
  if (covered != static_cast<std::size_t>(f.n()))
    throw NonIsolatedError(
        "some variable appears in no monomial; the singular locus is positive-dimensional");
  std::vector<std::pair<VariableSubset, MixedFunction>> out;
  for (const auto& c : comps) out.emplace_back(c, extract_reindexed(f, c));
  return out;
}

namespace {

struct ComponentBound {
  Rational upper{Int(0)};
  std::string path;
  bool exact = false;
  std::vector<std::pair<std::string, Rational>> paths;
  std::vector<Verdict> assumptions;
  std::optional<InvariantSheet> sheet;
  std::vector<std::string> notes;
};

void gate(const Verdict& v, const BoundConfig& config, ComponentBound& out) {
  out.assumptions.push_back(v);
  if (v.status == VerdictStatus::DegenerateWitness) {
    if (config.assume_nondegenerate) {
      out.notes.push_back("degeneracy witness overridden by --assume-nondegenerate on face " +
                          (v.witness ? v.witness->face : std::string("?")));
      return;
    }
    throw DegenerateWitnessError(v);
  }
  if (v.status == VerdictStatus::Inconclusive) {
    if (config.assume_nondegenerate) {
      out.notes.push_back("inconclusive verdict overridden by --assume-nondegenerate: " + v.note);
      return;
    }
    throw InconclusiveError(v);
  }
}

// Exactly one strictly positive vertex whose face carries every support point.
bool radially_weighted_homogeneous(const NewtonPolyhedron& poly,
                                   const std::vector<FanVertex>& vertices,
                                   const FanVertex** R_out) {
  const FanVertex* R = nullptr;
  for (const auto& v : vertices) {
    if (!v.strictly_positive()) continue;
    if (R) return false;
    R = &v;
  }
  if (!R || R->face.points.size() != poly.support.size()) return false;
  *R_out = R;
  return true;
}

ComponentBound component_bound(const MixedFunction& f, const BoundConfig& config) {
  ComponentBound out;
  const bool mixed = !f.is_holomorphic() || config.force_mixed;

  ConvenientProfile prof = convenient_profile(f);
  std::optional<Verdict> face_verdict, loj_verdict;
  auto need_face = [&]() -> const Verdict& {
    if (!face_verdict) {
      face_verdict = check_face_nondegeneracy(f, config.nd);
      gate(*face_verdict, config, out);
    }
    return *face_verdict;
  };
  auto need_loj = [&](const AxisMonomialTable& table) -> const Verdict& {
    if (!loj_verdict) {
      loj_verdict = check_loj_nondegeneracy(f, table, config.nd);
      gate(*loj_verdict, config, out);
    }
    return *loj_verdict;
  };

  if (prof.convenient) {
    need_face();
    Rational value = ratio(prof.B - 1);
    out.paths.emplace_back("convenient-B-minus-1", value);
    if (!prof.has_non_exceptional())
      out.notes.push_back(
          "every axis monomial at level B is exceptional; equality at B-1 is not certified");
  }

  NewtonPolyhedron poly;
  bool boundary_ok = false;
  try {
    poly = build_polyhedron(f);
    boundary_ok = poly.boundary_dim == f.n() - 1;
  } catch (const std::exception&) {
    boundary_ok = false;
  }

  if (boundary_ok) {
    auto subspaces = vanishing_subspaces(f);
    AxisMonomialTable table = axis_monomial_table(f, subspaces);  // may refuse: non-isolated

    auto vertices = fan_vertices(poly);
    const FanVertex* R = nullptr;
    if (radially_weighted_homogeneous(poly, vertices, &R)) {
      need_face();
      need_loj(table);
      Rational value = eta(f, to_rational_vec(R->weight));
      out.paths.emplace_back("weighted-homogeneous-eta-R", value);
    }

    need_face();
    need_loj(table);
    JacobianDiagram diagram = jacobian_diagram(f, config.minkowski_cap);
    InvariantSheet sheet = invariant_sheet(f, diagram);
    out.sheet = sheet;
    if (diagram.vjpp.empty()) {
      out.paths.emplace_back("general-eta-max", sheet.eta_max);
    } else {
      out.paths.emplace_back("general-eta-dprime", sheet.eta_dprime);
      out.notes.push_back(
          "vanishing-boundary classification uses the conservative face-containment closure "
          "test; it can only enlarge the bound");
      if (mixed)
        out.notes.push_back(
            "mixed eta' maximized over every denominator index, subsuming the m(R) form");
    }
    if (table.xi_f)
      out.notes.push_back("max almost-axis exponent xi = " + std::to_string(*table.xi_f));
  } else if (!prof.convenient) {
    throw BoundaryDimensionError(
        "Newton boundary dimension is below n-1 and the function is not convenient; no "
        "estimate applies");
  }

  auto bestIt = std::min_element(out.paths.begin(), out.paths.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
  out.upper = bestIt->second;
  out.path = bestIt->first;
  out.exact = false;
  if (prof.convenient && prof.has_non_exceptional() && out.upper == ratio(prof.B - 1)) {
    out.exact = true;
    out.path = "convenient-B-minus-1";
  }
  return out;
}

}  // namespace

BoundReport upper_bound(const MixedFunction& f, const BoundConfig& config) {
  auto components = decompose_join(f);
  BoundReport report;

  if (components.size() == 1) {
    ComponentBound cb = component_bound(components[0].second, config);
    report.upper = cb.upper;
    report.path = cb.path;
    report.exact = cb.exact;
    report.paths_applied = cb.paths;
    report.assumptions = cb.assumptions;
    report.sheet = cb.sheet;
    report.notes = cb.notes;
    return report;
  }

  std::vector<ComponentBound> child_bounds;
  std::ostringstream path;
  path << "join(";
  bool first = true;
  std::size_t argmax = 0;
  for (std::size_t k = 0; k < components.size(); ++k) {
    ComponentBound cb = component_bound(components[k].second, config);
    if (!first) path << "; ";
    path << components[k].first.str() << ":" << cb.path << "=" << to_string(cb.upper);
    first = false;
    if (child_bounds.empty() || cb.upper > child_bounds[argmax].upper) argmax = k;
    child_bounds.push_back(std::move(cb));
    for (auto& a : child_bounds.back().assumptions) report.assumptions.push_back(a);
    for (auto& note : child_bounds.back().notes)
      report.notes.push_back(components[k].first.str() + ": " + note);
    for (auto& p : child_bounds.back().paths)
      report.paths_applied.emplace_back(components[k].first.str() + ":" + p.first, p.second);
  }
  path << ")";
  report.upper = child_bounds[argmax].upper;
  report.exact = child_bounds[argmax].exact;
  report.sheet = child_bounds[argmax].sheet;
  report.path = path.str();
  return report;
}

BoundReport bracket(const MixedFunction& f, const BoundConfig& config) {
  BoundReport report = upper_bound(f, config);
  JacobianDiagram diagram = jacobian_diagram(f, config.minkowski_cap);
  LowerBoundResult lb = sample_lower_bound(f, diagram, config.sampler, config.force_mixed);
  if (lb.best) {
    report.lower = lb.best;
    report.witness = lb.witness;
    report.witness_orders = lb.witness_orders;
    report.tight = (*lb.best == report.upper);
    if (report.tight) report.notes.push_back("tight: sampled lower bound equals the upper bound");
    report.notes.push_back("mixed curve exponents use the canonical modified gradient pair");
  }
  return report;
}

ConvenienceThreshold convenience_exponents(const MixedFunction& f, const BoundConfig& config) {
  JacobianDiagram diagram = jacobian_diagram(f, config.minkowski_cap);
  InvariantSheet sheet = invariant_sheet(f, diagram);
  ConvenienceThreshold out;
  out.eta_dprime = sheet.eta_dprime;
  out.N = floor_plus_one(sheet.eta_dprime + Rational(Int(1)));
  out.mixed_split = !f.is_holomorphic();
  return out;
}

}  // namespace lojex
