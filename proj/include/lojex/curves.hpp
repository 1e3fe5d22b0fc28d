#pragma once

#include "lojex/dualfan.hpp"

#include <Eigen/Dense>

#include <optional>

namespace lojex {

/// Raised when the modified-pair iteration cannot finish: the strong
/// non-degeneracy hypothesis fails along the curve.
struct CurveDegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when every gradient component vanishes identically along the
/// curve (non-isolated-singularity evidence).
struct VanishingCurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Curve z_i(t) = a_i t^{p_i} (+ optional higher monomials) for i in the
/// support, zero elsewhere. Exact curves carry complex-rational coefficients;
/// sampler-generated polar witnesses carry floating ones.
struct MonomialCurve {
  int n = 0;
  VariableSubset support;
  std::vector<long> weights;  // aligned with support.members, all >= 1
  bool exact = true;
  std::vector<ComplexRat> coeffs_exact;            // when exact
  std::vector<std::complex<double>> coeffs_float;  // always usable

  struct ExtraTerm {
    int var;  // ambient 0-based index, must lie in the support
    long power;
    ComplexRat coeff;
  };
  std::vector<ExtraTerm> higher_terms;

  static MonomialCurve from_exact(int n, VariableSubset support, std::vector<long> weights,
                                  std::vector<ComplexRat> coeffs);
  static MonomialCurve from_float(int n, VariableSubset support, std::vector<long> weights,
                                  std::vector<std::complex<double>> coeffs);

  long ord_z() const;  // min weight over the support
  std::string str() const;
};

struct CurveOrders {
  long ord_z = 0;
  std::vector<std::optional<long>> ord_dz;     // order of df/dz_j along the curve
  std::vector<std::optional<long>> ord_dzbar;  // order of df/dzbar_j
  std::optional<long> ord_grad;                // min finite order over both families
  std::optional<Rational> exponent;            // ord_grad / ord_z

  bool all_infinite() const { return !ord_grad.has_value(); }
};

/// Exact (or float-path, for float curves) orders of every gradient
/// component after substitution.
CurveOrders curve_orders(const MixedFunction& f, const MonomialCurve& curve);

/// Two-scale consistency check of the float path's cancellation decisions:
/// gradient norms evaluated directly at t and t/2 must reproduce the slope of
/// the claimed surviving series within 1e-6. Exact curves always pass.
bool validate_float_orders(const MixedFunction& f, const MonomialCurve& curve,
                           const CurveOrders& orders);

struct ModifiedPair {
  bool base_is_g = true;  // false when the real-part gradient was modified
  std::vector<std::pair<long, double>> correction;  // rho(t) = sum rho_k t^{e_k}
  long ord_base = 0;
  long ord_modified = 0;
  Eigen::VectorXcd limit_base;      // leading coefficient vectors, unnormalized
  Eigen::VectorXcd limit_modified;
  double gram_det = 0.0;  // of the normalized real stackings, nonzero on success
  long iterations = 0;
};

/// Builds a good modified gradient pair along the curve per the correction
/// recurrence; trivial for holomorphic f unless force_mixed is set.
ModifiedPair modified_gradient_pair(const MixedFunction& f, const MonomialCurve& curve,
                                    bool force_mixed = false);

/// Lojasiewicz exponent of f along the curve: ord grad / ord z for
/// holomorphic f, the larger modified-pair order over ord z for mixed f.
/// Empty when every component vanishes identically.
std::optional<Rational> curve_exponent(const MixedFunction& f, const MonomialCurve& curve,
                                       bool force_mixed = false);

struct SamplerConfig {
  int budget = 2000;
  std::uint64_t seed = 0;
  long max_weight = 50;
};

struct LowerBoundResult {
  std::optional<Rational> best;
  std::optional<MonomialCurve> witness;
  std::optional<CurveOrders> witness_orders;
  long curves_tried = 0;
};

/// Maximizes curve_exponent over a generated population: scaled fan vertices
/// and perturbations, axis and crossover curves, random torus draws, and
/// numeric polar-style witnesses on faces.
LowerBoundResult sample_lower_bound(const MixedFunction& f, const JacobianDiagram& diagram,
                                    const SamplerConfig& config, bool force_mixed = false);

/// Random exact point on the unit circle (Pythagorean parametrization), for
/// torus coefficient draws that stay inside the exact path.
ComplexRat rational_circle_point(std::uint64_t& state);

}  // namespace lojex
