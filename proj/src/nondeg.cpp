#include "lojex/nondeg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace lojex {

const char* verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::PresumedOk: return "presumed-ok";
    case VerdictStatus::DegenerateWitness: return "degenerate-witness";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace detail {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xbf58476d1ce4e5b9ULL);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

LsqResult levenberg_marquardt(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& fn,
                              Eigen::VectorXd x0, int max_iters, double box) {
  const int k = static_cast<int>(x0.size());
  auto clamp = [&](Eigen::VectorXd& x) {
    if (box <= 0) return;
    for (int i = 0; i < k; i += 2) x[i] = std::clamp(x[i], -box, box);
  };
  clamp(x0);
  Eigen::VectorXd r = fn(x0);
  double best = r.norm();
  double lambda = 1e-3;
  int it = 0;
  for (; it < max_iters; ++it) {
    if (best < 1e-14 || lambda > 1e14) break;
    Eigen::MatrixXd J(r.size(), k);
    for (int i = 0; i < k; ++i) {
      double h = 1e-7 * std::max(1.0, std::abs(x0[i]));
      Eigen::VectorXd xp = x0;
      xp[i] += h;
      clamp(xp);
      double hh = xp[i] - x0[i];
      if (hh == 0.0) { J.col(i).setZero(); continue; }
      J.col(i) = (fn(xp) - r) / hh;
    }
    Eigen::MatrixXd JtJ = J.transpose() * J;
    Eigen::VectorXd g = J.transpose() * r;
    bool improved = false;
    for (int attempt = 0; attempt < 8 && !improved; ++attempt) {
      Eigen::MatrixXd A = JtJ;
      A.diagonal().array() += lambda;
      Eigen::VectorXd step = A.ldlt().solve(-g);
      Eigen::VectorXd x1 = x0 + step;
      clamp(x1);
      Eigen::VectorXd r1 = fn(x1);
      if (r1.norm() < best) {
        x0 = std::move(x1);
        r = std::move(r1);
        best = r.norm();
        lambda = std::max(lambda * 0.3, 1e-12);
        improved = true;
      } else {
        lambda *= 10;
      }
    }
    if (!improved) break;
  }
  return {std::move(x0), best, it};
}

}  // namespace detail

namespace {

using detail::mix_seed;

// One variable of the torus search: z = exp(u + i*theta) with u clamped.
Eigen::VectorXcd torus_point(const Eigen::VectorXd& params, const std::vector<int>& vars, int n) {
  Eigen::VectorXcd z = Eigen::VectorXcd::Ones(n);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    double u = params[2 * k];
    double th = params[2 * k + 1];
    z[vars[k]] = std::exp(std::complex<double>(u, th));
  }
  return z;
}

Eigen::VectorXd random_start(std::mt19937_64& rng, std::size_t nvars) {
  std::uniform_real_distribution<double> radial(-1.5, 1.5);
  std::uniform_real_distribution<double> angular(0.0, 2.0 * M_PI);
  Eigen::VectorXd x(2 * nvars);
  for (std::size_t k = 0; k < nvars; ++k) {
    x[2 * k] = radial(rng);
    x[2 * k + 1] = angular(rng);
  }
  return x;
}

std::vector<int> variables_of(const MixedFunction& g) {
  std::vector<bool> seen(g.n(), false);
  for (const auto& [e, c] : g.terms())
    for (int i : e.support()) seen[i] = true;
  std::vector<int> out;
  for (int i = 0; i < g.n(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

struct GradientData {
  std::vector<MixedFunction> dz;     // d/dz_i per ambient index
  std::vector<MixedFunction> dzbar;  // d/dzbar_i
};

GradientData gradients(const MixedFunction& g) {
  GradientData out;
  for (int i = 0; i < g.n(); ++i) {
    out.dz.push_back(wirtinger_derivative(g, i, false));
    out.dzbar.push_back(wirtinger_derivative(g, i, true));
  }
  return out;
}

// Optimal-phase residual u - alpha*v for the rank-two criterion; v is empty
// in the holomorphic case and the residual degenerates to u.
Eigen::VectorXd rank_residual(const GradientData& grad, const std::vector<int>& vars,
                              const Eigen::VectorXcd& z, bool mixed) {
  const std::size_t m = vars.size();
  Eigen::VectorXcd u(m), v(m);
  for (std::size_t k = 0; k < m; ++k) {
    u[k] = evaluate(grad.dz[vars[k]], z);
    v[k] = mixed ? std::conj(evaluate(grad.dzbar[vars[k]], z)) : std::complex<double>(0.0);
  }
  std::complex<double> alpha(1.0, 0.0);
  if (mixed) {
    std::complex<double> w = 0;
    for (std::size_t k = 0; k < m; ++k) w += v[k] * std::conj(u[k]);
    if (std::abs(w) > 0) alpha = std::conj(w) / std::abs(w);
  }
  Eigen::VectorXd r(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    std::complex<double> d = u[k] - alpha * v[k];
    r[2 * k] = d.real();
    r[2 * k + 1] = d.imag();
  }
  return r;
}

// Smallest singular value of the real 2 x 2m Jacobian of (Re g, Im g).
double jacobian_sigma_min(const GradientData& grad, const std::vector<int>& vars,
                          const Eigen::VectorXcd& z) {
  const std::size_t m = vars.size();
  Eigen::MatrixXd J(2, 2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    std::complex<double> fz = evaluate(grad.dz[vars[k]], z);
    std::complex<double> fzb = evaluate(grad.dzbar[vars[k]], z);
    // dzbar of the real and imaginary parts
    std::complex<double> gb = 0.5 * (fzb + std::conj(fz));
    std::complex<double> hb = (fzb - std::conj(fz)) / std::complex<double>(0, 2);
    J(0, 2 * k) = 2 * gb.real();
    J(0, 2 * k + 1) = 2 * gb.imag();
    J(1, 2 * k) = 2 * hb.real();
    J(1, 2 * k + 1) = 2 * hb.imag();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
  return svd.singularValues().minCoeff();
}

// Exact decision for a single mixed monomial face: the associated map has a
// torus critical point iff nu == mu on its support.
std::optional<bool> monomial_face_degenerate(const MixedFunction& g) {
  if (g.term_count() != 1) return std::nullopt;
  const auto& e = g.terms().begin()->first;
  return e.nu == e.mu;
}

struct SearchOutcome {
  bool found = false;
  Eigen::VectorXcd point;
  double residual = 0;
  long samples = 0;
  long iterations = 0;
};

// Multistart minimization of a residual built from a torus point.
SearchOutcome multistart_search(
    const std::function<Eigen::VectorXd(const Eigen::VectorXcd&)>& residual,
    const std::function<double(const Eigen::VectorXcd&)>& accept_value,
    const std::vector<int>& vars, int n, const EffortConfig& budget, std::uint64_t stream) {
  SearchOutcome out;
  for (int s = 0; s < budget.multistarts; ++s) {
    std::mt19937_64 rng(mix_seed(budget.seed, stream, static_cast<std::uint64_t>(s)));
    Eigen::VectorXd x0 = random_start(rng, vars.size());
    auto fn = [&](const Eigen::VectorXd& x) { return residual(torus_point(x, vars, n)); };
    auto res = detail::levenberg_marquardt(fn, std::move(x0), budget.max_iters, budget.torus_box);
    out.samples += 1;
    out.iterations += res.iters;
    Eigen::VectorXcd z = torus_point(res.x, vars, n);
    double val = accept_value(z);
    if (val < budget.tol) {
      out.found = true;
      out.point = std::move(z);
      out.residual = val;
      return out;
    }
  }
  return out;
}

}  // namespace

Verdict check_face_nondegeneracy(const MixedFunction& f, const EffortConfig& budget) {
  Verdict verdict;
  verdict.seed = budget.seed;
  const bool mixed = !f.is_holomorphic();

  NewtonPolyhedron poly = build_polyhedron(f);
  auto faces = compact_faces(poly);
  if (faces.size() > budget.face_cap) {
    verdict.status = VerdictStatus::Inconclusive;
    verdict.note = "face count " + std::to_string(faces.size()) + " exceeds cap";
    return verdict;
  }

  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    MixedFunction g = face_function_of(f, poly, faces[fi].points);
    verdict.faces_checked += 1;
    std::vector<int> vars = variables_of(g);

    if (auto mono = monomial_face_degenerate(g)) {
      if (!mixed || !*mono) continue;
      verdict.status = VerdictStatus::DegenerateWitness;
      verdict.witness = {format_function(g), Eigen::VectorXcd::Ones(f.n()), 0.0};
      return verdict;
    }

    GradientData grad = gradients(g);

    if (!mixed) {
      // A monomial gradient component never vanishes on the torus, so no
      // common zero can exist on this face.
      bool monomial_component = false;
      for (int i : vars)
        if (grad.dz[i].term_count() == 1) { monomial_component = true; break; }
      if (monomial_component) continue;
    }

    auto residual = [&](const Eigen::VectorXcd& z) { return rank_residual(grad, vars, z, mixed); };
    auto accept = [&](const Eigen::VectorXcd& z) {
      return mixed ? jacobian_sigma_min(grad, vars, z)
                   : rank_residual(grad, vars, z, false).norm();
    };
    auto outcome = multistart_search(residual, accept, vars, f.n(), budget,
                                     static_cast<std::uint64_t>(fi));
    verdict.samples += outcome.samples;
    verdict.iterations += outcome.iterations;
    if (outcome.found) {
      verdict.status = VerdictStatus::DegenerateWitness;
      verdict.witness = {format_function(g), outcome.point, outcome.residual};
      return verdict;
    }
  }
  return verdict;
}

Verdict check_loj_nondegeneracy(const MixedFunction& f, const AxisMonomialTable& table,
                                const EffortConfig& budget) {
  Verdict verdict;
  verdict.seed = budget.seed;
  const bool mixed = !f.is_holomorphic();
  const int n = f.n();

  for (std::size_t si = 0; si < table.subsets.size(); ++si) {
    const SubsetTable& st = table.subsets[si];
    const auto& I = st.I;
    const int m = static_cast<int>(I.size());

    std::vector<int> JI;
    for (const auto& [i, Ji] : st.J)
      for (int j : Ji) JI.push_back(j);
    std::sort(JI.begin(), JI.end());
    JI.erase(std::unique(JI.begin(), JI.end()), JI.end());

    // Restricted derivative family, kept per target index j.
    std::map<int, MixedFunction> restricted_dz, restricted_dzbar;
    std::vector<std::vector<IVec>> factors;
    auto project = [&](const MixedFunction& g) {
      std::set<IVec, IVecLess> pts;
      for (const auto& [e, c] : g.terms()) {
        IVec p(m);
        for (int k = 0; k < m; ++k) p[k] = Int(e.combined_at(I.members[k]));
        pts.insert(std::move(p));
      }
      return std::vector<IVec>(pts.begin(), pts.end());
    };
    for (int j : JI) {
      MixedFunction dz = restrict_to(wirtinger_derivative(f, j, false), I);
      MixedFunction dzb = restrict_to(wirtinger_derivative(f, j, true), I);
      if (!dz.is_zero()) factors.push_back(project(dz));
      if (!dzb.is_zero()) factors.push_back(project(dzb));
      restricted_dz.emplace(j, std::move(dz));
      restricted_dzbar.emplace(j, std::move(dzb));
    }
    // Min-coordinate fan contribution.
    {
      std::vector<IVec> simplex;
      for (int k = 0; k < m; ++k) {
        IVec e = IVec::Zero(m);
        e[k] = 1;
        simplex.push_back(std::move(e));
      }
      factors.push_back(std::move(simplex));
    }

    std::vector<IVec> acc = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k)
      acc = minkowski_sum(acc, factors[k], 200000);
    NewtonPolyhedron refinement = build_polyhedron_from_points(acc, m);
    auto cones = compact_faces(refinement);
    if (cones.size() > budget.cone_cap) {
      verdict.status = VerdictStatus::Inconclusive;
      verdict.note = "refinement produced " + std::to_string(cones.size()) +
                     " cones over C^" + I.str() + ", cap exceeded";
      return verdict;
    }

    for (std::size_t ci = 0; ci < cones.size(); ++ci) {
      // Representative strictly positive weight of the cone, embedded with
      // zeros outside I.
      QVec Q = QVec::Constant(n, Rational(Int(0)));
      Rational qmin(Int(0));
      bool first = true;
      for (int k = 0; k < m; ++k) {
        Q[I.members[k]] = Rational(cones[ci].weight[k]);
        if (first || Q[I.members[k]] < qmin) qmin = Q[I.members[k]];
        first = false;
      }
      std::vector<int> Iprime;
      for (int k = 0; k < m; ++k)
        if (Q[I.members[k]] == qmin) Iprime.push_back(I.members[k]);
      std::vector<int> JQ;
      for (int i : Iprime) {
        auto it = st.J.find(i);
        if (it != st.J.end()) JQ.insert(JQ.end(), it->second.begin(), it->second.end());
      }
      std::sort(JQ.begin(), JQ.end());
      JQ.erase(std::unique(JQ.begin(), JQ.end()), JQ.end());
      if (JQ.empty()) continue;

      verdict.faces_checked += 1;

      if (!mixed) {
        std::vector<MixedFunction> system;
        bool monomial_component = false;
        for (int j : JQ) {
          const MixedFunction& gj = restricted_dz.at(j);
          if (gj.is_zero()) continue;
          MixedFunction face = face_function(gj, Q);
          if (face.term_count() == 1) { monomial_component = true; break; }
          system.push_back(std::move(face));
        }
        if (monomial_component || system.empty()) continue;

        std::vector<int> vars;
        {
          std::set<int> vs;
          for (const auto& g : system)
            for (int v : variables_of(g)) vs.insert(v);
          vars.assign(vs.begin(), vs.end());
        }
        auto residual = [&](const Eigen::VectorXcd& z) {
          Eigen::VectorXd r(2 * system.size());
          for (std::size_t k = 0; k < system.size(); ++k) {
            std::complex<double> val = evaluate(system[k], z);
            r[2 * k] = val.real();
            r[2 * k + 1] = val.imag();
          }
          return r;
        };
        auto accept = [&](const Eigen::VectorXcd& z) { return residual(z).norm(); };
        auto outcome = multistart_search(residual, accept, vars, n, budget,
                                         mix_seed(0x10f, si, ci));
        verdict.samples += outcome.samples;
        verdict.iterations += outcome.iterations;
        if (outcome.found) {
          verdict.status = VerdictStatus::DegenerateWitness;
          std::string desc = "restricted face system over C^" + I.str();
          verdict.witness = {desc, outcome.point, outcome.residual};
          return verdict;
        }
      } else {
        // For every j the witness must balance |dF(j)/dz_j| = |dF(j)/dzbar_j|
        // with F(j) = z_j (f_j)|_I + zbar_j (f_jbar)|_I and weight 0 on z_j.
        struct Pair {
          std::optional<MixedFunction> A, B;
        };
        std::vector<Pair> pairs;
        bool impossible = false;
        for (int j : JQ) {
          const MixedFunction& a = restricted_dz.at(j);
          const MixedFunction& b = restricted_dzbar.at(j);
          std::optional<Rational> da, db;
          if (!a.is_zero()) da = min_radial_degree(Q, a);
          if (!b.is_zero()) db = min_radial_degree(Q, b);
          Pair p;
          if (da && (!db || *da <= *db)) p.A = face_function(a, Q);
          if (db && (!da || *db <= *da)) p.B = face_function(b, Q);
          // A one-sided monomial pair can never balance on the torus.
          if (!p.A && p.B && p.B->term_count() == 1) { impossible = true; break; }
          if (!p.B && p.A && p.A->term_count() == 1) { impossible = true; break; }
          pairs.push_back(std::move(p));
        }
        if (impossible) continue;

        std::vector<int> vars(I.members);
        auto residual = [&](const Eigen::VectorXcd& z) {
          Eigen::VectorXd r(pairs.size());
          for (std::size_t k = 0; k < pairs.size(); ++k) {
            double na = pairs[k].A ? std::abs(evaluate(*pairs[k].A, z)) : 0.0;
            double nb = pairs[k].B ? std::abs(evaluate(*pairs[k].B, z)) : 0.0;
            r[k] = na - nb;
          }
          return r;
        };
        auto accept = [&](const Eigen::VectorXcd& z) { return residual(z).norm(); };
        auto outcome = multistart_search(residual, accept, vars, n, budget,
                                         mix_seed(0x10f, si, ci));
        verdict.samples += outcome.samples;
        verdict.iterations += outcome.iterations;
        if (outcome.found) {
          verdict.status = VerdictStatus::DegenerateWitness;
          std::string desc = "modified gradient balance over C^" + I.str();
          verdict.witness = {desc, outcome.point, outcome.residual};
          return verdict;
        }
      }
    }
  }
  return verdict;
}

}  // namespace lojex
