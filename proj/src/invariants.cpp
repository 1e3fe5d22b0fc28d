#include "lojex/invariants.hpp"

#include <algorithm>

namespace lojex {

NormalizedWeight normalize_weight(const MixedFunction& f, const QVec& P) {
  NormalizedWeight nw;
  nw.raw = P;
  nw.d = min_radial_degree(P, f);
  if (nw.d.numerator() <= 0)
    throw std::invalid_argument("weight direction has d(P,f) <= 0, not normalizable");
  nw.hat = QVec(P.size());
  bool first = true;
  for (Eigen::Index i = 0; i < P.size(); ++i) {
    nw.hat[i] = P[i] / nw.d;
    if (P[i].numerator() == 0) continue;
    if (first || nw.hat[i] < nw.m) nw.m = nw.hat[i];
    if (first || nw.hat[i] > nw.M) nw.M = nw.hat[i];
    first = false;
  }
  return nw;
}

Rational eta(const MixedFunction& f, const QVec& P) {
  NormalizedWeight nw = normalize_weight(f, P);
  return Rational(Int(1)) / nw.m - Rational(Int(1));
}

Rational eta_ij(const MixedFunction& f, const QVec& P, int i, int j) {
  if (P[i].numerator() == 0) throw std::invalid_argument("eta_ij needs p_i > 0");
  return (min_radial_degree(P, f) - P[j]) / P[i];
}

Rational eta_prime(const MixedFunction& f, const QVec& P, int k, int i) {
  if (P[k].numerator() == 0) throw std::invalid_argument("eta' needs p_k > 0");
  std::optional<Rational> num;
  for (bool conj : {false, true}) {
    MixedFunction d = wirtinger_derivative(f, i, conj);
    if (d.is_zero()) continue;
    Rational deg = min_radial_degree(P, d);
    if (!num || deg < *num) num = deg;
  }
  if (!num) throw std::invalid_argument("both derivatives of the requested index vanish");
  return *num / P[k];
}

InvariantSheet invariant_sheet(const MixedFunction& f, const JacobianDiagram& diagram) {
  InvariantSheet sheet;
  const int n = f.n();

  bool have = false;
  for (const auto& v : diagram.base_vertices) {
    if (!v.strictly_positive()) continue;
    Rational e = eta(f, to_rational_vec(v.weight));
    sheet.contributions.push_back({v.weight, e, false});
    if (!have || e > sheet.eta_max) sheet.eta_max = e;
    have = true;
  }
  if (!have)
    throw BoundaryDimensionError("no strictly positive vertex; boundary is degenerate");

  sheet.eta_J_max = sheet.eta_max;
  for (int idx : diagram.vjpp) {
    const FanVertex& v = diagram.vertices[idx];
    Rational e = eta(f, to_rational_vec(v.weight));
    sheet.contributions.push_back({v.weight, e, true});
    sheet.eta_J_max = std::max(sheet.eta_J_max, e);

    QVec P = to_rational_vec(v.weight);
    for (int i = 0; i < n; ++i) {
      bool exists = !wirtinger_derivative(f, i, false).is_zero() ||
                    !wirtinger_derivative(f, i, true).is_zero();
      if (!exists) continue;
      for (int k = 0; k < n; ++k) {
        Rational e2 = eta_prime(f, P, k, i);
        if (!sheet.eta_prime_J_max || e2 > *sheet.eta_prime_J_max) sheet.eta_prime_J_max = e2;
      }
    }
  }
  sheet.eta_dprime = sheet.eta_J_max;
  if (sheet.eta_prime_J_max)
    sheet.eta_dprime = std::max(sheet.eta_dprime, *sheet.eta_prime_J_max);
  return sheet;
}

ConvenientProfile convenient_profile(const MixedFunction& f) {
  const int n = f.n();
  ConvenientProfile prof;
  prof.b.assign(n, std::nullopt);
  prof.convenient = true;

  std::vector<std::vector<ExponentPair>> axis_terms(n);
  for (const auto& [e, c] : f.terms()) {
    auto sup = e.support();
    if (sup.size() == 1) axis_terms[sup[0]].push_back(e);
  }
  for (int i = 0; i < n; ++i) {
    for (const auto& e : axis_terms[i]) {
      int deg = e.combined_at(i);
      if (!prof.b[i] || deg < *prof.b[i]) prof.b[i] = deg;
    }
    if (!prof.b[i]) prof.convenient = false;
  }
  if (!prof.convenient) return prof;

  prof.B = 0;
  for (int i = 0; i < n; ++i) prof.B = std::max(prof.B, *prof.b[i]);

  // Axis i carries an exceptional witness when some monomial z_i^a zbar_i^b w_j
  // with a+b < B-1 and a single extra variable of combined degree one exists.
  auto axis_exceptional = [&](int i) {
    for (const auto& [e, c] : f.terms()) {
      auto sup = e.support();
      if (sup.size() != 2) continue;
      int other = sup[0] == i ? sup[1] : (sup[1] == i ? sup[0] : -1);
      if (other < 0 || e.combined_at(other) != 1) continue;
      if (e.combined_at(i) < prof.B - 1) return true;
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    if (*prof.b[i] != prof.B) continue;
    bool exc = axis_exceptional(i);
    for (const auto& e : axis_terms[i])
      if (e.combined_at(i) == prof.B) prof.loj_monomials.push_back({i, e, exc});
  }
  return prof;
}

AxisMonomialTable axis_monomial_table(const MixedFunction& f,
                                      const std::vector<VariableSubset>& subspaces) {
  AxisMonomialTable table;
  for (const auto& I : subspaces) {
    SubsetTable st;
    st.I = I;
    for (int i : I.members) {
      std::map<int, AxisEntry> best;  // j -> entry
      for (const auto& [e, c] : f.terms()) {
        auto sup = e.support();
        if (sup.size() != 2) continue;
        int other = sup[0] == i ? sup[1] : (sup[1] == i ? sup[0] : -1);
        if (other < 0 || e.combined_at(other) != 1) continue;
        int ell = e.combined_at(i);
        auto it = best.find(other);
        if (it == best.end() || ell < it->second.ell)
          best[other] = AxisEntry{i, other, ell, e};
      }
      if (best.empty())
        throw NonIsolatedError("vanishing subspace C^" + I.str() + ": axis " +
                               std::to_string(i + 1) +
                               " has no almost-axis monomial (non-isolated-singularity "
                               "evidence)");
      auto& Ji = st.J[i];
      for (auto& [j, entry] : best) {
        Ji.push_back(j);
        st.xi = std::max(st.xi, entry.ell);
        st.entries.push_back(entry);
      }
    }
    if (!table.xi_f || st.xi > *table.xi_f) table.xi_f = st.xi;
    table.subsets.push_back(std::move(st));
  }
  return table;
}

}  // namespace lojex
