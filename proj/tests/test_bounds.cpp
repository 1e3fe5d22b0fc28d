#include "testutil.hpp"

#include <doctest.h>

using namespace lojex;
using namespace lojex::testing;

TEST_CASE("join decomposition") {
  auto parts = decompose_join(fn("z1^3+z2^7+z3^2"));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].second == fn("z1^3", 1));
  CHECK(parts[1].second == fn("z1^7", 1));
  CHECK(parts[2].second == fn("z1^2", 1));

  auto parts2 = decompose_join(fn("z1^2*z2+z2^3*z3+z3^4*z1+z4^2"));
  REQUIRE(parts2.size() == 2);
  CHECK(parts2[0].first == VariableSubset({0, 1, 2}));
  CHECK(parts2[1].first == VariableSubset({3}));

  CHECK(decompose_join(fn("z1^2*z2")).size() == 1);

  // an unused ambient variable is positive-dimensional singular locus
  CHECK_THROWS_AS(decompose_join(fn("z1^2", 2)), NonIsolatedError);
}

TEST_CASE("upper bound: worked examples") {
  BoundConfig config = fast_config(5);

  BoundReport bk = upper_bound(fn("z1^3+z2^7"), config);
  CHECK(bk.upper == ratio(6));
  CHECK(bk.exact);
  CHECK(bk.path == "convenient-B-minus-1");

  BoundReport join = upper_bound(fn("z1^2*z2+z2^3*z3+z3^4*z1+z4^2"), config);
  CHECK(join.upper == ratio(21, 4));
  CHECK(join.path.find("join(") == 0);
  CHECK(join.path.find("weighted-homogeneous-eta-R") != std::string::npos);

  BoundReport ex = upper_bound(fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7"), config);
  REQUIRE(ex.sheet.has_value());
  CHECK(ex.sheet->eta_max == ratio(11));
  CHECK(ex.upper == ex.sheet->eta_dprime);
  CHECK(ex.path == "general-eta-dprime");

  BoundReport exc = upper_bound(fn("z1^7+z1^4*z2+z2^7"), config);
  CHECK(exc.upper == ratio(6));
  CHECK(!exc.exact);  // only exceptional axis monomials at level B

  for (const auto& entry : catalog()) {
    if (!entry.upper || !entry.nondegenerate) continue;
    CAPTURE(entry.name);
    BoundReport r = upper_bound(fn(entry.expr), config);
    CHECK(to_fraction_string(r.upper) == entry.upper);
  }
}

TEST_CASE("degeneracy refuses certification unless assumed") {
  BoundConfig config = fast_config(5);
  CHECK_THROWS_AS(upper_bound(fn("z1^2+2*z1*z2+z2^2"), config), DegenerateWitnessError);
  CHECK_THROWS_AS(upper_bound(fn("z1*~z1+z2*~z2"), config), DegenerateWitnessError);

  BoundConfig assume = config;
  assume.assume_nondegenerate = true;
  BoundReport r = upper_bound(fn("z1^2+2*z1*z2+z2^2"), assume);
  CHECK(r.upper == ratio(1));  // eta of the (1,1) vertex, hypothesis not certified
  bool noted = false;
  for (const auto& note : r.notes)
    if (note.find("overridden") != std::string::npos) noted = true;
  CHECK(noted);
  bool witnessed = false;
  for (const auto& v : r.assumptions)
    if (v.status == VerdictStatus::DegenerateWitness) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("non-isolated evidence aborts the bound") {
  BoundConfig config = fast_config(5);
  CHECK_THROWS_AS(upper_bound(fn("z1^2*z2^2+z2^5"), config), NonIsolatedError);
}

TEST_CASE("join property on direct sums") {
  BoundConfig config = fast_config(9);
  std::uint64_t state = 4711;
  const auto& entries = catalog();
  int done = 0;
  for (int iter = 0; iter < 40 && done < 8; ++iter) {
    state = state * 2862933555777941757ULL + 3037000493ULL;
    const auto& a = entries[state % entries.size()];
    const auto& b = entries[(state >> 20) % entries.size()];
    MixedFunction g = fn(a.expr), h = fn(b.expr);
    if (g.n() + h.n() > 5) continue;
    if (!a.nondegenerate || !b.nondegenerate) continue;
    CAPTURE(a.name);
    CAPTURE(b.name);
    BoundReport rg = upper_bound(g, config);
    BoundReport rh = upper_bound(h, config);
    BoundReport sum = upper_bound(direct_sum(g, h), config);
    CHECK(sum.upper == std::max(rg.upper, rh.upper));
    ++done;
  }
  CHECK(done >= 8);
}

TEST_CASE("bracket is tight on the worked examples") {
  BoundConfig config = fast_config(2);
  config.sampler.budget = 800;

  BoundReport bk = bracket(fn("z1^3+z2^7"), config);
  REQUIRE(bk.lower.has_value());
  CHECK(*bk.lower == ratio(6));
  CHECK(bk.tight);

  BoundReport q = bracket(fn("z1^2+z2^2"), config);
  CHECK(*q.lower == ratio(1));
  CHECK(q.tight);

  BoundConfig big = config;
  big.sampler.budget = 2000;
  BoundReport w = bracket(fn("z1^2*z2+z2^3*z3+z3^4*z1+z4^2"), big);
  REQUIRE(w.lower.has_value());
  CHECK(*w.lower == ratio(21, 4));
  CHECK(w.tight);
}

TEST_CASE("convenience thresholds") {
  BoundConfig config = fast_config(3);
  CHECK(convenience_exponents(fn("(z1^9+z2^3+z3^6)*z2+z3^7+z4^7"), config).N == Int(13));
  CHECK(convenience_exponents(fn("z1^3+z2^7"), config).N == Int(8));
  CHECK(convenience_exponents(fn("z1^2+z2^2"), config).N == Int(3));
  CHECK(convenience_exponents(fn("z1^2*~z1+z2^3"), config).mixed_split);
  CHECK(!convenience_exponents(fn("z1^3+z2^7"), config).mixed_split);
}

TEST_CASE("convenient components report no vanishing subspaces") {
  for (const auto& entry : catalog()) {
    MixedFunction f = fn(entry.expr);
    ConvenientProfile prof = convenient_profile(f);
    if (prof.convenient) CHECK(vanishing_subspaces(f).empty());
  }
}

TEST_CASE("assumptions are recorded in the report") {
  BoundConfig config = fast_config(21);
  BoundReport r = upper_bound(fn("z1^2*z2+z2^3*z3+z3^4*z1+z4^2"), config);
  CHECK(r.assumptions.size() >= 2);  // face and Lojasiewicz checks per component
  for (const auto& v : r.assumptions) CHECK(v.ok());
}
