#pragma once

#include "lojex/invariants.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>

namespace lojex {

/// Budget for the multistart least-squares searches. The seed is part of the
/// contract: identical seed and budget give identical verdicts.
struct EffortConfig {
  int multistarts = 64;
  int max_iters = 200;
  double tol = 1e-9;
  double torus_box = 5.0;  // |log|z_i|| <= torus_box
  std::uint64_t seed = 0;
  std::size_t face_cap = 4096;
  std::size_t cone_cap = 4096;
};

enum class VerdictStatus { PresumedOk, DegenerateWitness, Inconclusive };

const char* verdict_status_name(VerdictStatus s);

struct DegeneracyWitness {
  std::string face;        // face function or restricted face system
  Eigen::VectorXcd point;  // torus point, full ambient dimension
  double residual;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::PresumedOk;
  std::optional<DegeneracyWitness> witness;
  long faces_checked = 0;
  long samples = 0;
  long iterations = 0;
  std::uint64_t seed = 0;
  std::string note;

  bool ok() const { return status == VerdictStatus::PresumedOk; }
};

/// Searches every compact face for a torus critical point of its face
/// function: a common zero of the holomorphic gradient, or a rank-drop of
/// the real 2 x 2n Jacobian in the mixed case.
Verdict check_face_nondegeneracy(const MixedFunction& f, const EffortConfig& budget);

/// Per vanishing subspace, verifies the almost-axis face systems over one
/// representative weight per refinement cone (restricted-derivative fans
/// plus the min-coordinate fan).
Verdict check_loj_nondegeneracy(const MixedFunction& f, const AxisMonomialTable& table,
                                const EffortConfig& budget);

namespace detail {

/// Damped least squares with forward-difference Jacobian. Returns the best
/// parameter vector found; `box` clamps the even-indexed (log-radius)
/// coordinates into [-box, box] when positive.
struct LsqResult {
  Eigen::VectorXd x;
  double residual;
  int iters;
};
LsqResult levenberg_marquardt(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& fn,
                              Eigen::VectorXd x0, int max_iters, double box);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

}  // namespace detail

}  // namespace lojex
