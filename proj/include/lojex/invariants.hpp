#pragma once

#include "lojex/dualfan.hpp"

#include <map>
#include <optional>

namespace lojex {

/// Raised when a vanishing subspace has an axis with no almost-axis monomial;
/// the germ then cannot have an isolated singularity at the origin and the
/// bound computation is refused.
struct NonIsolatedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NormalizedWeight {
  QVec raw;
  Rational d{Int(0)};   // d(P,f)
  QVec hat;             // raw / d
  Rational m{Int(0)};   // min of hat over the positive entries
  Rational M{Int(0)};
};

/// Requires d(P,f) > 0.
NormalizedWeight normalize_weight(const MixedFunction& f, const QVec& P);

/// eta(P) = d(P,f)/m(P) - 1, over the positive entries of P.
Rational eta(const MixedFunction& f, const QVec& P);

/// eta_{i,j}(P) = (d(P,f) - p_j) / p_i, 0-based indices, p_i > 0.
Rational eta_ij(const MixedFunction& f, const QVec& P, int i, int j);

/// eta'_{k,i}(P) = d(P, df/dz_i)/p_k for holomorphic f; for mixed f the
/// numerator is the smaller of the radial degrees of the two Wirtinger
/// derivatives of index i, identically-zero ones excluded.
/// Errors: p_k = 0, or both derivatives of index i vanish identically.
Rational eta_prime(const MixedFunction& f, const QVec& P, int k, int i);

struct VertexEta {
  IVec weight;
  Rational value;
  bool refined;  // true when the vertex only appears in the refined subdivision
};

struct InvariantSheet {
  Rational eta_max{Int(0)};
  Rational eta_J_max{Int(0)};
  std::optional<Rational> eta_prime_J_max;  // absent when V_J^{++} is empty
  Rational eta_dprime{Int(0)};
  std::vector<VertexEta> contributions;
};

/// Aggregates the eta family over the strictly positive vertices and the
/// vanishing-boundary refined vertices. Errors when V^+ is empty.
InvariantSheet invariant_sheet(const MixedFunction& f, const JacobianDiagram& diagram);

struct LojMonomial {
  int axis;  // 0-based
  ExponentPair exps;
  bool exceptional;
};

struct ConvenientProfile {
  bool convenient = false;
  std::vector<std::optional<int>> b;  // per-axis boundary intersection, combined exponent
  int B = 0;                          // max b_j, meaningful when convenient
  std::vector<LojMonomial> loj_monomials;

  bool has_non_exceptional() const {
    for (const auto& m : loj_monomials)
      if (!m.exceptional) return true;
    return false;
  }
};

ConvenientProfile convenient_profile(const MixedFunction& f);

/// One almost-axis monomial record: the smallest combined i-exponent among
/// monomials z_i^a zbar_i^b w_j, with its witness monomial.
struct AxisEntry {
  int i;
  int j;
  int ell;  // n_{ij} (combined exponents); absent entries mean infinity
  ExponentPair witness;
};

struct SubsetTable {
  VariableSubset I;
  std::vector<AxisEntry> entries;
  std::map<int, std::vector<int>> J;  // i -> J_i (0-based, sorted)
  int xi = 0;                         // max over the finite entries
};

struct AxisMonomialTable {
  std::vector<SubsetTable> subsets;
  std::optional<int> xi_f;  // absent when there are no vanishing subspaces
};

/// Per vanishing subset, the almost-axis monomial data. Throws
/// NonIsolatedError when some i in I has empty J_i.
AxisMonomialTable axis_monomial_table(const MixedFunction& f,
                                      const std::vector<VariableSubset>& subspaces);

}  // namespace lojex
