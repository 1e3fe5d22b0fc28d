#include "testutil.hpp"

#include <doctest.h>

using namespace lojex;
using namespace lojex::testing;

TEST_CASE("normalize_weight: worked examples") {
  MixedFunction f = fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7");
  NormalizedWeight nw = normalize_weight(f, weights({7, 21, 12, 12}));
  CHECK(nw.d == ratio(84));
  CHECK(nw.hat == weights_q({ratio(1, 12), ratio(1, 4), ratio(1, 7), ratio(1, 7)}));
  CHECK(nw.m == ratio(1, 12));

  NormalizedWeight q = normalize_weight(fn("z1^2+z2^2"), weights({3, 3}));
  CHECK(q.hat == weights_q({ratio(1, 2), ratio(1, 2)}));
  CHECK(q.m == ratio(1, 2));
  CHECK(q.M == ratio(1, 2));

  NormalizedWeight b = normalize_weight(fn("z1^3+z2^7"), weights({7, 3}));
  CHECK(b.d == ratio(21));
  CHECK(b.hat == weights_q({ratio(1, 3), ratio(1, 7)}));
  CHECK(b.m == ratio(1, 7));

  CHECK_THROWS_AS(normalize_weight(fn("z1^3*z2+z2^5"), weights({1, 0})),
                  std::invalid_argument);  // d = 0 along e_1
}

TEST_CASE("eta family: worked examples") {
  MixedFunction f = fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7");
  CHECK(eta(f, weights({7, 21, 12, 12})) == ratio(11));

  MixedFunction g = fn("z1^2*z2+z2^3*z3+z3^4*z1+z4^2");
  CHECK(eta(g, weights_q({ratio(9, 25), ratio(7, 25), ratio(4, 25), ratio(1, 2)})) ==
        ratio(21, 4));
  CHECK(eta(g, weights({18, 14, 8, 25})) == ratio(21, 4));

  // d(P, f_1)/p_1 at the refined vertex
  CHECK(eta_prime(f, weights({2, 6, 3, 3}), 0, 0) == ratio(11));
  CHECK(eta_prime(f, weights_q({ratio(2, 21), ratio(2, 7), ratio(1, 7), ratio(1, 7)}), 0, 0) ==
        ratio(11));

  CHECK_THROWS_AS(eta_prime(f, weights({0, 7, 1, 1}), 0, 0), std::invalid_argument);
}

TEST_CASE("eta: both computation routes agree") {
  std::uint64_t state = 2024;
  int done = 0;
  for (int iter = 0; iter < 60 && done < 25; ++iter) {
    int n = 2 + static_cast<int>(state % 3);
    auto f = random_function(state, n, 7, true, false);
    if (!f) continue;
    ++done;
    QVec P(n);
    for (int i = 0; i < n; ++i) P[i] = ratio(1 + static_cast<long>((state >> (4 * i)) % 7));
    NormalizedWeight nw = normalize_weight(*f, P);
    Rational m_raw = P[0];
    for (int i = 1; i < n; ++i) m_raw = std::min(m_raw, P[i]);
    CHECK(eta(*f, P) == nw.d / m_raw - ratio(1));
    CHECK(eta(*f, P) == ratio(1) / nw.m - ratio(1));
    // eta_ij <= eta when p_i attains the minimum and p_j >= m
    for (int i = 0; i < n; ++i) {
      if (P[i] != m_raw) continue;
      for (int j = 0; j < n; ++j)
        if (P[j] >= m_raw) CHECK(eta_ij(*f, P, i, j) <= eta(*f, P));
    }
  }
  CHECK(done >= 25);
}

TEST_CASE("invariant sheet: worked examples") {
  MixedFunction f = fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7");
  InvariantSheet sheet = invariant_sheet(f, jacobian_diagram(f));
  CHECK(sheet.eta_max == ratio(11));

  MixedFunction bk = fn("z1^3+z2^7");
  InvariantSheet bs = invariant_sheet(bk, jacobian_diagram(bk));
  CHECK(bs.eta_max == ratio(6));
  CHECK(!bs.eta_prime_J_max.has_value());
  CHECK(bs.eta_dprime == ratio(6));

  MixedFunction q = fn("z1^2+z2^2");
  CHECK(invariant_sheet(q, jacobian_diagram(q)).eta_max == ratio(1));
}

TEST_CASE("convenient profile: worked examples") {
  ConvenientProfile p1 = convenient_profile(fn("z1^3+z2^7"));
  CHECK(p1.convenient);
  CHECK(*p1.b[0] == 3);
  CHECK(*p1.b[1] == 7);
  CHECK(p1.B == 7);
  REQUIRE(p1.loj_monomials.size() == 1);
  CHECK(p1.loj_monomials[0].axis == 1);
  CHECK(!p1.loj_monomials[0].exceptional);

  CHECK(!convenient_profile(fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7")).convenient);

  ConvenientProfile p3 = convenient_profile(fn("z1^7+z1^4*z2+z2^7"));
  CHECK(p3.convenient);
  CHECK(p3.B == 7);
  REQUIRE(p3.loj_monomials.size() == 2);
  bool z1_exceptional = false, z2_exceptional = true;
  for (const auto& m : p3.loj_monomials) {
    if (m.axis == 0) z1_exceptional = m.exceptional;
    if (m.axis == 1) z2_exceptional = m.exceptional;
  }
  CHECK(z1_exceptional);   // z1^4 z2 undercuts z1^7
  CHECK(!z2_exceptional);  // z1^4 z2 is not of the shape z2^B' w_1

  // mixed reading on combined exponents
  ConvenientProfile pm = convenient_profile(fn("z1^2*~z1+z2^3"));
  CHECK(pm.convenient);
  CHECK(pm.B == 3);
  CHECK(pm.has_non_exceptional());
}

TEST_CASE("axis monomial table: worked examples") {
  MixedFunction f = fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7");
  AxisMonomialTable t1 = axis_monomial_table(f, vanishing_subspaces(f));
  REQUIRE(t1.subsets.size() == 1);
  CHECK(t1.subsets[0].I == VariableSubset({0}));
  REQUIRE(t1.subsets[0].entries.size() == 1);
  CHECK(t1.subsets[0].entries[0].i == 0);
  CHECK(t1.subsets[0].entries[0].j == 1);
  CHECK(t1.subsets[0].entries[0].ell == 9);
  CHECK(t1.subsets[0].xi == 9);
  CHECK(*t1.xi_f == 9);

  MixedFunction g = fn("z1^2*z2+z2^3*z3+z3^4*z1+z4^2");
  AxisMonomialTable t2 = axis_monomial_table(g, vanishing_subspaces(g));
  REQUIRE(t2.subsets.size() == 3);
  CHECK(t2.subsets[0].entries[0].ell == 2);  // z1^2 z2
  CHECK(t2.subsets[1].entries[0].ell == 3);  // z2^3 z3
  CHECK(t2.subsets[2].entries[0].ell == 4);  // z3^4 z1
  CHECK(*t2.xi_f == 4);

  MixedFunction bk = fn("z1^3+z2^7");
  AxisMonomialTable t3 = axis_monomial_table(bk, vanishing_subspaces(bk));
  CHECK(t3.subsets.empty());
  CHECK(!t3.xi_f.has_value());

  // z1^2*z2^2 has vanishing axes but no almost-axis monomial: refused
  MixedFunction bad = fn("z1^2*z2^2+z2^5");
  CHECK_THROWS_AS(axis_monomial_table(bad, vanishing_subspaces(bad)), NonIsolatedError);
}

TEST_CASE("finite almost-axis exponents stay below eta_max") {
  for (const auto& entry : catalog()) {
    if (!entry.has_vanishing || !entry.nondegenerate) continue;
    CAPTURE(entry.name);
    MixedFunction f = fn(entry.expr);
    AxisMonomialTable table = axis_monomial_table(f, vanishing_subspaces(f));
    InvariantSheet sheet = invariant_sheet(f, jacobian_diagram(f));
    for (const auto& st : table.subsets)
      for (const auto& e : st.entries) CHECK(ratio(e.ell) <= sheet.eta_max);
  }
}

TEST_CASE("segment monotonicity of the eta family") {
  std::uint64_t state = 10101;
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    MixedFunction f = fn(entry.expr);
    NewtonPolyhedron poly = build_polyhedron(f);
    if (poly.boundary_dim != f.n() - 1) continue;
    const int n = f.n();
    int done = 0;
    for (int iter = 0; iter < 120 && done < 40; ++iter) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      QVec P(n);
      for (int i = 0; i < n; ++i) P[i] = ratio(1 + static_cast<long>((state >> (7 * i)) % 9));
      FaceData fp = min_face(poly, P);
      // pick a facet meeting the face of P to get an admissible partner
      const NewtonFacet* partner = nullptr;
      for (const auto& facet : poly.facets) {
        bool strict = true;
        for (int i = 0; i < n; ++i)
          if (facet.normal[i] == 0) strict = false;
        if (!strict) continue;
        std::vector<int> meet;
        std::set_intersection(facet.tight.begin(), facet.tight.end(), fp.points.begin(),
                              fp.points.end(), std::back_inserter(meet));
        if (!meet.empty()) { partner = &facet; break; }
      }
      if (!partner) continue;
      ++done;
      QVec Q = to_rational_vec(partner->normal);
      NormalizedWeight np = normalize_weight(f, P), nq = normalize_weight(f, Q);
      Rational eP = eta(f, np.hat), eQ = eta(f, nq.hat);
      for (long num : {1L, 2L, 3L}) {
        QVec R = np.hat * ratio(num, 4) + nq.hat * ratio(4 - num, 4);
        CHECK(eta(f, R) <= std::max(eP, eQ));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            CHECK(eta_ij(f, R, i, j) <= std::max(eta_ij(f, np.hat, i, j),
                                                 eta_ij(f, nq.hat, i, j)));
          }
      }
    }
  }
}

TEST_CASE("derivative degrees obey d(P,f_j) >= d(P,f) - p_j") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    MixedFunction f = fn(entry.expr);
    NewtonPolyhedron poly = build_polyhedron(f);
    if (poly.boundary_dim != f.n() - 1) continue;
    for (const auto& v : fan_vertices(poly)) {
      if (!v.strictly_positive()) continue;
      QVec P = to_rational_vec(v.weight);
      Rational d = min_radial_degree(P, f);
      MixedFunction face = face_function(f, P);
      for (int j = 0; j < f.n(); ++j) {
        MixedFunction dz = wirtinger_derivative(f, j, false);
        if (dz.is_zero()) continue;
        Rational dj = min_radial_degree(P, dz);
        CHECK(dj >= d - P[j]);
        bool in_face = !wirtinger_derivative(face, j, false).is_zero() ||
                       !wirtinger_derivative(face, j, true).is_zero();
        if (in_face) CHECK(dj == d - P[j]);
      }
    }
  }
}
