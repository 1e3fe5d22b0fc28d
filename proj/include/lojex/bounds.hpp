#pragma once

#include "lojex/curves.hpp"
#include "lojex/nondeg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lojex {

/// Certification refused: a face degeneracy witness was found.
struct DegenerateWitnessError : std::runtime_error {
  Verdict verdict;
  explicit DegenerateWitnessError(Verdict v)
      : std::runtime_error("degeneracy witness found on face " +
                           (v.witness ? v.witness->face : std::string("?"))),
        verdict(std::move(v)) {}
};

/// Certification refused: a verifier ran out of budget.
struct InconclusiveError : std::runtime_error {
  Verdict verdict;
  explicit InconclusiveError(Verdict v)
      : std::runtime_error("non-degeneracy check inconclusive: " + v.note), verdict(std::move(v)) {}
};

struct BoundConfig {
  EffortConfig nd;
  SamplerConfig sampler;
  bool assume_nondegenerate = false;
  bool force_mixed = false;  // drive holomorphic input through the mixed machinery
  std::size_t minkowski_cap = 200000;
};

struct BoundReport {
  Rational upper{Int(0)};
  std::string path;   // winning theorem path, join(...) for direct sums
  bool exact = false;
  std::vector<std::pair<std::string, Rational>> paths_applied;  // every valid path and its value
  std::vector<Verdict> assumptions;
  std::optional<InvariantSheet> sheet;
  std::optional<Rational> lower;
  std::optional<MonomialCurve> witness;
  std::optional<CurveOrders> witness_orders;
  bool tight = false;
  std::vector<std::string> notes;
};

/// Variable blocks of the interaction graph with their restricted functions.
/// Throws NonIsolatedError if some ambient variable appears in no monomial.
std::vector<std::pair<VariableSubset, MixedFunction>> decompose_join(const MixedFunction& f);

/// Certified upper bound for the Lojasiewicz gradient exponent: join
/// decomposition, then per component the best of the convenient, weighted
/// homogeneous and general estimates, gated by the non-degeneracy verdicts.
BoundReport upper_bound(const MixedFunction& f, const BoundConfig& config);

/// upper_bound plus the sampled lower bound and its witness curve.
BoundReport bracket(const MixedFunction& f, const BoundConfig& config);

struct ConvenienceThreshold {
  Int N;             // smallest integer with N > eta''_max + 1, uniform per axis
  Rational eta_dprime;
  bool mixed_split;  // mixed inputs must split N_i = m_i + n_i with n_i != m_i
};

/// Exponent threshold above which axis monomials can be added without
/// changing the local topology (threshold only; no topological claim checked).
ConvenienceThreshold convenience_exponents(const MixedFunction& f, const BoundConfig& config);

}  // namespace lojex
