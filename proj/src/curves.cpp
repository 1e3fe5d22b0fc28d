#include "lojex/curves.hpp"
#include "lojex/nondeg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace lojex {

namespace {

// --- univariate series in t -------------------------------------------------

struct ExactSeries {
  using Coeff = ComplexRat;
  std::map<long, ComplexRat> terms;

  void add(long e, const ComplexRat& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  std::optional<long> order() const {
    if (terms.empty()) return std::nullopt;
    return terms.begin()->first;
  }
  ComplexRat at(long e) const {
    auto it = terms.find(e);
    return it == terms.end() ? ComplexRat() : it->second;
  }
  std::optional<long> max_exp() const {
    if (terms.empty()) return std::nullopt;
    return terms.rbegin()->first;
  }
};

struct FloatSeries {
  using Coeff = std::complex<double>;
  struct Cell {
    std::complex<double> sum{0.0, 0.0};
    double mag = 0.0;
  };
  static constexpr double kCancelTol = 1e-9;
  std::map<long, Cell> terms;

  static bool live(const Cell& c) { return std::abs(c.sum) > kCancelTol * c.mag; }

  void add(long e, const std::complex<double>& c) {
    if (c == std::complex<double>(0.0, 0.0)) return;
    auto& cell = terms[e];
    cell.sum += c;
    cell.mag += std::abs(c);
  }
  std::optional<long> order() const {
    for (const auto& [e, c] : terms)
      if (live(c)) return e;
    return std::nullopt;
  }
  std::complex<double> at(long e) const {
    auto it = terms.find(e);
    return (it == terms.end() || !live(it->second)) ? std::complex<double>(0.0) : it->second.sum;
  }
  std::optional<long> max_exp() const {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
      if (live(it->second)) return it->first;
    return std::nullopt;
  }
};

template <class S>
S series_mul(const S& a, const S& b) {
  S out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      if constexpr (std::is_same_v<S, FloatSeries>) {
        if (!FloatSeries::live(ca) || !FloatSeries::live(cb)) continue;
        out.add(ea + eb, ca.sum * cb.sum);
      } else {
        out.add(ea + eb, ca * cb);
      }
    }
  return out;
}

template <class S>
S series_pow(const S& a, int k) {
  S out;
  if constexpr (std::is_same_v<S, FloatSeries>) out.add(0, {1.0, 0.0});
  else out.add(0, ComplexRat::integer(1));
  for (int i = 0; i < k; ++i) out = series_mul(out, a);
  return out;
}

// --- curve substitution ------------------------------------------------------

template <class S>
struct VariableSeries {
  std::vector<S> z, zbar;  // indexed by ambient variable
};

ComplexRat conj_of(const ComplexRat& c) { return c.conj(); }
std::complex<double> conj_of(const std::complex<double>& c) { return std::conj(c); }

template <class S>
VariableSeries<S> curve_series(const MonomialCurve& curve) {
  VariableSeries<S> vs;
  vs.z.resize(curve.n);
  vs.zbar.resize(curve.n);
  for (std::size_t k = 0; k < curve.support.members.size(); ++k) {
    int i = curve.support.members[k];
    if constexpr (std::is_same_v<S, ExactSeries>) {
      vs.z[i].add(curve.weights[k], curve.coeffs_exact[k]);
      vs.zbar[i].add(curve.weights[k], curve.coeffs_exact[k].conj());
    } else {
      vs.z[i].add(curve.weights[k], curve.coeffs_float[k]);
      vs.zbar[i].add(curve.weights[k], std::conj(curve.coeffs_float[k]));
    }
  }
  for (const auto& extra : curve.higher_terms) {
    if constexpr (std::is_same_v<S, ExactSeries>) {
      vs.z[extra.var].add(extra.power, extra.coeff);
      vs.zbar[extra.var].add(extra.power, extra.coeff.conj());
    } else {
      vs.z[extra.var].add(extra.power, extra.coeff.to_complex());
      vs.zbar[extra.var].add(extra.power, std::conj(extra.coeff.to_complex()));
    }
  }
  return vs;
}

template <class S>
S substitute(const MixedFunction& f, const VariableSeries<S>& vs) {
  S acc;
  for (const auto& [e, c] : f.terms()) {
    bool dead = false;
    for (int i = 0; i < f.n() && !dead; ++i) {
      if (e.nu[i] > 0 && vs.z[i].terms.empty()) dead = true;
      if (e.mu[i] > 0 && vs.zbar[i].terms.empty()) dead = true;
    }
    if (dead) continue;
    S m;
    if constexpr (std::is_same_v<S, ExactSeries>) m.add(0, c);
    else m.add(0, c.to_complex());
    for (int i = 0; i < f.n(); ++i) {
      if (e.nu[i] > 0) m = series_mul(m, series_pow(vs.z[i], e.nu[i]));
      if (e.mu[i] > 0) m = series_mul(m, series_pow(vs.zbar[i], e.mu[i]));
    }
    for (const auto& [exp, coeff] : m.terms) {
      if constexpr (std::is_same_v<S, FloatSeries>) {
        if (FloatSeries::live(coeff)) acc.add(exp, coeff.sum);
      } else {
        acc.add(exp, coeff);
      }
    }
  }
  return acc;
}

template <class S>
CurveOrders orders_impl(const MixedFunction& f, const MonomialCurve& curve) {
  auto vs = curve_series<S>(curve);
  CurveOrders out;
  out.ord_z = curve.ord_z();
  out.ord_dz.resize(f.n());
  out.ord_dzbar.resize(f.n());
  for (int j = 0; j < f.n(); ++j) {
    out.ord_dz[j] = substitute(wirtinger_derivative(f, j, false), vs).order();
    out.ord_dzbar[j] = substitute(wirtinger_derivative(f, j, true), vs).order();
    for (auto o : {out.ord_dz[j], out.ord_dzbar[j]})
      if (o && (!out.ord_grad || *o < *out.ord_grad)) out.ord_grad = o;
  }
  if (out.ord_grad) out.exponent = Rational(Int(*out.ord_grad), Int(out.ord_z));
  return out;
}

// --- modified pair -----------------------------------------------------------

template <class S>
struct GradientCurve {
  std::vector<S> comp;

  std::optional<long> order() const {
    std::optional<long> o;
    for (const auto& s : comp) {
      auto so = s.order();
      if (so && (!o || *so < *o)) o = so;
    }
    return o;
  }
  // Largest component index attaining the order.
  int leading_index(long d) const {
    int idx = -1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      auto so = comp[k].order();
      if (so && *so == d) idx = static_cast<int>(k);
    }
    return idx;
  }
  std::optional<long> max_exp() const {
    std::optional<long> o;
    for (const auto& s : comp) {
      auto so = s.max_exp();
      if (so && (!o || *so > *o)) o = so;
    }
    return o;
  }
};

// ch = rho * cg over the reals, if such a real rho exists.
std::optional<Rational> real_ratio(const ComplexRat& cg, const ComplexRat& ch) {
  ComplexRat prod = ch * cg.conj();
  if (prod.im.numerator() != 0) return std::nullopt;
  return prod.re / cg.norm2();
}

std::optional<double> real_ratio(const std::complex<double>& cg, const std::complex<double>& ch) {
  std::complex<double> prod = ch * std::conj(cg);
  double scale = std::abs(cg) * std::abs(ch);
  if (std::abs(prod.imag()) > 1e-9 * std::max(scale, 1e-300)) return std::nullopt;
  return prod.real() / std::norm(cg);
}

double as_double(const Rational& q) { return to_double(q); }
double as_double(double x) { return x; }

template <class S>
void subtract_scaled(GradientCurve<S>& target, const GradientCurve<S>& source,
                     const typename S::Coeff& rho, long shift) {
  for (std::size_t k = 0; k < target.comp.size(); ++k)
    for (const auto& [e, c] : source.comp[k].terms) {
      if constexpr (std::is_same_v<S, FloatSeries>) {
        if (!FloatSeries::live(c)) continue;
        target.comp[k].add(e + shift, -(rho * c.sum));
      } else {
        target.comp[k].add(e + shift, -(rho * c));
      }
    }
}

template <class S>
Eigen::VectorXcd leading_vector(const GradientCurve<S>& g, long d) {
  Eigen::VectorXcd v(g.comp.size());
  for (std::size_t k = 0; k < g.comp.size(); ++k) {
    if constexpr (std::is_same_v<S, FloatSeries>) v[k] = g.comp[k].at(d);
    else v[k] = g.comp[k].at(d).to_complex();
  }
  return v;
}

double normalized_gram_det(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd u = a / a.norm(), v = b / b.norm();
  double uu = u.squaredNorm(), vv = v.squaredNorm();
  double uv = (u.adjoint() * v)(0).real();
  return uu * vv - uv * uv;
}

template <class S>
ModifiedPair pair_impl(const MixedFunction& f, const MonomialCurve& curve) {
  MixedFunction g = real_part(f);
  MixedFunction h = imag_part(f);
  auto vs = curve_series<S>(curve);

  GradientCurve<S> vg, vh;
  for (int k = 0; k < f.n(); ++k) {
    vg.comp.push_back(substitute(wirtinger_derivative(g, k, true), vs));
    vh.comp.push_back(substitute(wirtinger_derivative(h, k, true), vs));
  }

  auto og = vg.order(), oh = vh.order();
  if (!og && !oh)
    throw VanishingCurveError("every gradient component vanishes along " + curve.str());
  if (!og || !oh)
    throw CurveDegeneracyError(
        "one of the real gradients vanishes identically along " + curve.str() +
        "; no independent pair exists (strong degeneracy)");

  ModifiedPair pair;
  pair.base_is_g = *og <= *oh;
  GradientCurve<S>& base = pair.base_is_g ? vg : vh;
  GradientCurve<S>& mod = pair.base_is_g ? vh : vg;
  const long d_base = pair.base_is_g ? *og : *oh;
  long d_mod = pair.base_is_g ? *oh : *og;

  // Iteration budget: orders may not pass d(P, f^I) - m(P) when the
  // restriction is nonzero; otherwise the series' own top exponent bounds it.
  long hard_bound;
  MixedFunction fI = restrict_to(f, curve.support);
  if (!fI.is_zero()) {
    QVec Q = QVec::Constant(f.n(), Rational(Int(0)));
    for (std::size_t k = 0; k < curve.support.members.size(); ++k)
      Q[curve.support.members[k]] = ratio(curve.weights[k]);
    Rational D = min_radial_degree(Q, fI);
    hard_bound = D.numerator().convert_to<long>() / D.denominator().convert_to<long>() -
                 curve.ord_z() - d_mod + 1;
  } else {
    auto top = mod.max_exp();
    hard_bound = (top ? *top : d_mod) - d_mod + 2;
  }
  hard_bound = std::max<long>(hard_bound, 1);

  while (true) {
    int gb = base.leading_index(d_base);
    auto omod = mod.order();
    if (!omod)
      throw CurveDegeneracyError("modified gradient vanished entirely along " + curve.str() +
                                 " (strong degeneracy)");
    d_mod = *omod;
    int gm = mod.leading_index(d_mod);
    if (gm != gb) break;
    auto cb = base.comp[gb].at(d_base);
    auto cm = mod.comp[gm].at(d_mod);
    auto rho = real_ratio(cb, cm);
    if (!rho) break;  // leading coefficients independent over R
    if (pair.iterations >= hard_bound)
      throw CurveDegeneracyError("modified-pair iteration bound exceeded along " + curve.str() +
                                 " (strong non-degeneracy suspect)");
    typename S::Coeff factor;
    if constexpr (std::is_same_v<S, FloatSeries>) factor = {*rho, 0.0};
    else factor = ComplexRat(*rho);
    subtract_scaled(mod, base, factor, d_mod - d_base);
    pair.correction.emplace_back(d_mod - d_base, as_double(*rho));
    pair.iterations += 1;
  }

  pair.ord_base = d_base;
  pair.ord_modified = d_mod;
  pair.limit_base = leading_vector(base, d_base);
  pair.limit_modified = leading_vector(mod, d_mod);
  pair.gram_det = normalized_gram_det(pair.limit_base, pair.limit_modified);
  return pair;
}

}  // namespace

MonomialCurve MonomialCurve::from_exact(int n, VariableSubset support, std::vector<long> weights,
                                        std::vector<ComplexRat> coeffs) {
  MonomialCurve c;
  c.n = n;
  c.support = std::move(support);
  c.weights = std::move(weights);
  c.exact = true;
  c.coeffs_exact = std::move(coeffs);
  for (const auto& a : c.coeffs_exact) {
    if (a.is_zero()) throw std::invalid_argument("curve coefficient must be nonzero");
    c.coeffs_float.push_back(a.to_complex());
  }
  return c;
}

MonomialCurve MonomialCurve::from_float(int n, VariableSubset support, std::vector<long> weights,
                                        std::vector<std::complex<double>> coeffs) {
  MonomialCurve c;
  c.n = n;
  c.support = std::move(support);
  c.weights = std::move(weights);
  c.exact = false;
  c.coeffs_float = std::move(coeffs);
  return c;
}

long MonomialCurve::ord_z() const {
  long m = weights[0];
  for (long w : weights) m = std::min(m, w);
  return m;
}

std::string MonomialCurve::str() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < support.members.size(); ++k) {
    if (k) out << ", ";
    out << "z" << (support.members[k] + 1) << "=";
    if (exact) out << coeffs_exact[k].str();
    else out << "(" << coeffs_float[k].real() << (coeffs_float[k].imag() < 0 ? "" : "+")
             << coeffs_float[k].imag() << "i)";
    out << "*t^" << weights[k];
  }
  return out.str();
}

CurveOrders curve_orders(const MixedFunction& f, const MonomialCurve& curve) {
  return curve.exact ? orders_impl<ExactSeries>(f, curve) : orders_impl<FloatSeries>(f, curve);
}

bool validate_float_orders(const MixedFunction& f, const MonomialCurve& curve,
                           const CurveOrders& orders) {
  if (curve.exact) return true;
  if (!orders.ord_grad) return false;

  auto grad_norm = [&](double t) {
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(f.n());
    for (std::size_t k = 0; k < curve.support.members.size(); ++k)
      z[curve.support.members[k]] = curve.coeffs_float[k] * std::pow(t, double(curve.weights[k]));
    double acc = 0;
    for (int j = 0; j < f.n(); ++j) {
      acc += std::norm(evaluate(wirtinger_derivative(f, j, false), z));
      acc += std::norm(evaluate(wirtinger_derivative(f, j, true), z));
    }
    return std::sqrt(acc);
  };
  // Claimed norm from the surviving series terms.
  auto vs = curve_series<FloatSeries>(curve);
  std::vector<FloatSeries> comps;
  for (int j = 0; j < f.n(); ++j) {
    comps.push_back(substitute(wirtinger_derivative(f, j, false), vs));
    comps.push_back(substitute(wirtinger_derivative(f, j, true), vs));
  }
  auto claimed_norm = [&](double t) {
    double acc = 0;
    for (const auto& s : comps) {
      std::complex<double> val = 0;
      for (const auto& [e, c] : s.terms)
        if (FloatSeries::live(c)) val += c.sum * std::pow(t, double(e));
      acc += std::norm(val);
    }
    return std::sqrt(acc);
  };

  const double t0 = 0.1;
  double raw_slope = std::log2(grad_norm(t0) / grad_norm(t0 / 2));
  double claimed_slope = std::log2(claimed_norm(t0) / claimed_norm(t0 / 2));
  if (!std::isfinite(raw_slope) || !std::isfinite(claimed_slope)) return false;
  return std::abs(raw_slope - claimed_slope) <= 1e-6;
}

ModifiedPair modified_gradient_pair(const MixedFunction& f, const MonomialCurve& curve,
                                    bool force_mixed) {
  if (f.is_holomorphic() && !force_mixed) {
    CurveOrders orders = curve_orders(f, curve);
    if (!orders.ord_grad) throw VanishingCurveError("gradient vanishes along " + curve.str());
    ModifiedPair pair;
    pair.base_is_g = true;
    pair.ord_base = pair.ord_modified = *orders.ord_grad;
    // conj(df)/2 and i conj(df)/2 share orders; their limits differ by i.
    Eigen::VectorXcd v(f.n());
    if (curve.exact) {
      auto vs = curve_series<ExactSeries>(curve);
      for (int k = 0; k < f.n(); ++k)
        v[k] = std::conj(substitute(wirtinger_derivative(f, k, false), vs)
                             .at(*orders.ord_grad)
                             .to_complex()) /
               2.0;
    } else {
      auto vsf = curve_series<FloatSeries>(curve);
      for (int k = 0; k < f.n(); ++k)
        v[k] = std::conj(
                   substitute(wirtinger_derivative(f, k, false), vsf).at(*orders.ord_grad)) /
               2.0;
    }
    pair.limit_base = v;
    pair.limit_modified = std::complex<double>(0, 1) * v;
    pair.gram_det = normalized_gram_det(pair.limit_base, pair.limit_modified);
    return pair;
  }
  return curve.exact ? pair_impl<ExactSeries>(f, curve) : pair_impl<FloatSeries>(f, curve);
}

std::optional<Rational> curve_exponent(const MixedFunction& f, const MonomialCurve& curve,
                                       bool force_mixed) {
  if (f.is_holomorphic() && !force_mixed) {
    CurveOrders orders = curve_orders(f, curve);
    return orders.exponent;
  }
  ModifiedPair pair = modified_gradient_pair(f, curve, force_mixed);
  long worst = std::max(pair.ord_base, pair.ord_modified);
  return Rational(Int(worst), Int(curve.ord_z()));
}

ComplexRat rational_circle_point(std::uint64_t& state) {
  state = detail::mix_seed(state, 0x5bd1e995, 0x27d4eb2f);
  long p = static_cast<long>(state % 13) - 6;       // slope numerator in [-6,6]
  long q = 1 + static_cast<long>((state >> 8) % 6); // denominator in [1,6]
  // (q^2 - p^2 + 2pq i) / (q^2 + p^2), a unit-modulus rational point
  Rational den(Int(q * q + p * p));
  ComplexRat a(Rational(Int(q * q - p * p)) / den, Rational(Int(2 * p * q)) / den);
  if ((state >> 16) & 1) a = a * ComplexRat(ratio(0), ratio(1));  // rotate a quadrant
  return a;
}

// --- sampler -----------------------------------------------------------------

namespace {

struct Best {
  std::optional<Rational> value;
  std::optional<MonomialCurve> curve;
  std::optional<CurveOrders> orders;
};

void consider(const MixedFunction& f, const MonomialCurve& curve, bool force_mixed, Best& best,
              long& tried) {
  tried += 1;
  std::optional<Rational> expo;
  try {
    expo = curve_exponent(f, curve, force_mixed);
  } catch (const CurveDegeneracyError&) {
    return;
  } catch (const VanishingCurveError&) {
    return;
  }
  if (!expo) return;
  CurveOrders orders = curve_orders(f, curve);
  if (!curve.exact && !validate_float_orders(f, curve, orders)) return;
  if (!best.value || *expo > *best.value) {
    best.value = expo;
    best.curve = curve;
    best.orders = orders;
  }
}

std::vector<ComplexRat> circle_coeffs(std::size_t count, std::uint64_t& state) {
  std::vector<ComplexRat> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(rational_circle_point(state));
  return out;
}

std::vector<ComplexRat> unit_coeffs(std::size_t count) {
  return std::vector<ComplexRat>(count, ComplexRat::integer(1));
}

}  // namespace

LowerBoundResult sample_lower_bound(const MixedFunction& f, const JacobianDiagram& diagram,
                                    const SamplerConfig& config, bool force_mixed) {
  const int n = f.n();
  Best best;
  long tried = 0;
  auto out_of_budget = [&] { return tried >= config.budget; };

  VariableSubset full;
  for (int i = 0; i < n; ++i) full.members.push_back(i);

  // (a) fan vertices of both subdivisions, plus unit perturbations.
  {
    std::uint64_t state = detail::mix_seed(config.seed, 0xa, 1);
    std::vector<IVec> weights;
    for (const auto& v : diagram.base_vertices)
      if (v.strictly_positive()) weights.push_back(v.weight);
    for (const auto& v : diagram.vertices)
      if (v.strictly_positive()) weights.push_back(v.weight);
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> todo;
    for (const IVec& w : weights) {
      std::vector<long> base(n);
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        base[i] = w[i].convert_to<long>();
        if (base[i] > config.max_weight) ok = false;
      }
      if (!ok) continue;
      if (seen.insert(base).second) todo.push_back(base);
      for (int i = 0; i < n; ++i) {
        auto pert = base;
        pert[i] += 1;
        if (pert[i] <= config.max_weight && seen.insert(pert).second) todo.push_back(pert);
      }
    }
    for (const auto& w : todo) {
      if (out_of_budget()) break;
      consider(f, MonomialCurve::from_exact(n, full, w, unit_coeffs(n)), force_mixed, best, tried);
      if (out_of_budget()) break;
      consider(f, MonomialCurve::from_exact(n, full, w, circle_coeffs(n, state)), force_mixed,
               best, tried);
    }
  }

  // (b) axis curves and crossover curves derived from the boundary data.
  {
    std::uint64_t state = detail::mix_seed(config.seed, 0xb, 1);
    for (int i = 0; i < n && !out_of_budget(); ++i) {
      VariableSubset axis(std::vector<int>{i});
      consider(f, MonomialCurve::from_exact(n, axis, {1}, unit_coeffs(1)), force_mixed, best,
               tried);
    }
    ConvenientProfile prof = convenient_profile(f);
    long top = 2;
    for (const auto& [e, c] : f.terms()) top = std::max<long>(top, e.total_degree());
    std::vector<long> Ns;
    if (prof.convenient)
      Ns = {std::max<long>(1, prof.B - 1), static_cast<long>(prof.B), static_cast<long>(prof.B) + 1};
    else
      Ns = {top, top + 1};
    for (int i = 0; i < n && !out_of_budget(); ++i) {
      for (long N : Ns) {
        if (N > config.max_weight || out_of_budget()) continue;
        std::vector<long> w(n, N);
        w[i] = 1;
        consider(f, MonomialCurve::from_exact(n, full, w, unit_coeffs(n)), force_mixed, best,
                 tried);
        consider(f, MonomialCurve::from_exact(n, full, w, circle_coeffs(n, state)), force_mixed,
                 best, tried);
      }
    }
    // Pair curves along the almost-axis data of vanishing subspaces.
    auto subspaces = vanishing_subspaces(f);
    if (!subspaces.empty()) {
      try {
        AxisMonomialTable table = axis_monomial_table(f, subspaces);
        for (const auto& st : table.subsets)
          for (const auto& entry : st.entries) {
            if (out_of_budget()) break;
            long N = std::min<long>(entry.ell + 1, config.max_weight);
            VariableSubset pair_sup(std::vector<int>{std::min(entry.i, entry.j),
                                                     std::max(entry.i, entry.j)});
            std::vector<long> w(2);
            w[pair_sup.members[0] == entry.i ? 0 : 1] = 1;
            w[pair_sup.members[0] == entry.i ? 1 : 0] = N;
            consider(f, MonomialCurve::from_exact(n, pair_sup, w, circle_coeffs(2, state)),
                     force_mixed, best, tried);
          }
      } catch (const NonIsolatedError&) {
        // leave those subsets to the bound computation's own guard
      }
    }
  }

  // (d) polar-style witnesses: kill the low-order face-gradient components.
  {
    std::vector<VariableSubset> supports;
    supports.push_back(full);
    for (const auto& comp : interaction_components(f))
      if (comp.size() < static_cast<std::size_t>(n)) supports.push_back(comp);
    if (n <= 4) {
      for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> mem;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) mem.push_back(i);
        if (mem.size() >= 2) supports.emplace_back(mem);
      }
    }
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

    int solve_counter = 0;
    for (const auto& I : supports) {
      if (out_of_budget()) break;
      MixedFunction h = extract_reindexed(f, I);
      if (h.is_zero()) continue;
      const int m = static_cast<int>(I.size());
      NewtonPolyhedron poly;
      try {
        poly = build_polyhedron(h);
      } catch (const std::exception&) {
        continue;
      }
      for (const auto& facet : poly.facets) {
        bool strict = true;
        for (int k = 0; k < m; ++k)
          if (facet.normal[k] == 0) { strict = false; break; }
        if (!strict || out_of_budget()) continue;

        std::vector<long> w(m);
        long wmin = 0;
        for (int k = 0; k < m; ++k) {
          w[k] = facet.normal[k].convert_to<long>();
          wmin = k == 0 ? w[k] : std::min(wmin, w[k]);
        }
        MixedFunction face = face_function_of(h, poly, facet.tight);
        std::vector<MixedFunction> kill;
        if (f.is_holomorphic() && !force_mixed) {
          for (int k = 0; k < m; ++k)
            if (w[k] > wmin) {
              MixedFunction d = wirtinger_derivative(face, k, false);
              if (!d.is_zero()) kill.push_back(std::move(d));
            }
        } else {
          kill.push_back(real_part(face));
          kill.push_back(imag_part(face));
        }
        if (kill.empty()) continue;

        std::vector<int> vars;
        for (int k = 0; k < m; ++k) vars.push_back(k);
        auto residual = [&](const Eigen::VectorXcd& z) {
          Eigen::VectorXd r(2 * kill.size());
          for (std::size_t q = 0; q < kill.size(); ++q) {
            auto val = evaluate(kill[q], z);
            r[2 * q] = val.real();
            r[2 * q + 1] = val.imag();
          }
          return r;
        };
        for (int start = 0; start < 8 && !out_of_budget(); ++start) {
          std::mt19937_64 rng(detail::mix_seed(config.seed, 0xd00 + solve_counter, start));
          std::uniform_real_distribution<double> radial(-1.0, 1.0), angular(0.0, 2.0 * M_PI);
          Eigen::VectorXd x0(2 * m);
          for (int k = 0; k < m; ++k) {
            x0[2 * k] = radial(rng);
            x0[2 * k + 1] = angular(rng);
          }
          auto fn = [&](const Eigen::VectorXd& x) {
            Eigen::VectorXcd z(m);
            for (int k = 0; k < m; ++k)
              z[k] = std::exp(std::complex<double>(x[2 * k], x[2 * k + 1]));
            return residual(z);
          };
          auto res = detail::levenberg_marquardt(fn, std::move(x0), 120, 5.0);
          if (res.residual > 1e-10) continue;
          std::vector<std::complex<double>> coeffs(m);
          for (int k = 0; k < m; ++k)
            coeffs[k] = std::exp(std::complex<double>(res.x[2 * k], res.x[2 * k + 1]));
          consider(f, MonomialCurve::from_float(n, I, w, coeffs), force_mixed, best, tried);
        }
        ++solve_counter;
      }
    }
  }

  // (c) random strictly positive weights with torus coefficients.
  {
    std::uint64_t state = detail::mix_seed(config.seed, 0xc, 1);
    long cap = std::min<long>(config.max_weight, 12);
    while (!out_of_budget()) {
      state = detail::mix_seed(state, tried, 0xc0ffee);
      std::vector<long> w(n);
      for (int i = 0; i < n; ++i) w[i] = 1 + static_cast<long>((state >> (5 * i)) % cap);
      consider(f, MonomialCurve::from_exact(n, full, w, circle_coeffs(n, state)), force_mixed,
               best, tried);
    }
  }

  LowerBoundResult result;
  result.best = best.value;
  result.witness = best.curve;
  result.witness_orders = best.orders;
  result.curves_tried = tried;
  return result;
}

}  // namespace lojex
