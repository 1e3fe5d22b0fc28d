#include "lojex/report.hpp"

#include <sstream>

namespace lojex {

using nlohmann::json;

json to_json(const Rational& q) { return to_fraction_string(q); }

static json to_json(const IVec& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i].convert_to<long long>());
  return arr;
}

static json to_json(const ExpVec& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

static json to_json(const QVec& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(to_fraction_string(v[i]));
  return arr;
}

static json subset_json(const VariableSubset& I) {
  json arr = json::array();
  for (int i : I.members) arr.push_back(i + 1);
  return arr;
}

json to_json(const Verdict& v) {
  json out;
  out["status"] = verdict_status_name(v.status);
  if (v.witness) {
    json w;
    w["face"] = v.witness->face;
    json pt = json::array();
    for (Eigen::Index i = 0; i < v.witness->point.size(); ++i)
      pt.push_back({v.witness->point[i].real(), v.witness->point[i].imag()});
    w["point"] = pt;
    w["residual"] = v.witness->residual;
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  out["faces_checked"] = v.faces_checked;
  out["samples"] = v.samples;
  out["iterations"] = v.iterations;
  out["seed"] = v.seed;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json to_json(const FanVertex& v) {
  json out;
  out["weight"] = to_json(v.weight);
  out["kind"] = vertex_kind_name(v.kind);
  out["d"] = to_fraction_string(v.face.value);
  out["normalized"] = v.normalized ? to_json(*v.normalized) : json(nullptr);
  out["face_dim"] = v.face.dim;
  out["face_points"] = v.face.points;
  out["vanishing_subset"] =
      v.vanishing_subset ? subset_json(*v.vanishing_subset) : json(nullptr);
  return out;
}

json to_json(const NewtonFacet& facet, const NewtonPolyhedron& poly) {
  json out;
  out["normal"] = to_json(facet.normal);
  out["offset"] = facet.offset.convert_to<long long>();
  json face = json::array();
  for (int idx : facet.tight) face.push_back(to_json(poly.support[idx].coords));
  out["face"] = face;
  return out;
}

json to_json(const InvariantSheet& sheet) {
  json out;
  out["eta_max"] = to_fraction_string(sheet.eta_max);
  out["eta_J_max"] = to_fraction_string(sheet.eta_J_max);
  out["eta_prime_J_max"] =
      sheet.eta_prime_J_max ? json(to_fraction_string(*sheet.eta_prime_J_max)) : json(nullptr);
  out["eta_dprime"] = to_fraction_string(sheet.eta_dprime);
  json contrib = json::array();
  for (const auto& c : sheet.contributions) {
    json e;
    e["weight"] = to_json(c.weight);
    e["eta"] = to_fraction_string(c.value);
    e["refined"] = c.refined;
    contrib.push_back(e);
  }
  out["vertices"] = contrib;
  return out;
}

json to_json(const ConvenientProfile& prof) {
  json out;
  out["convenient"] = prof.convenient;
  json b = json::array();
  for (const auto& v : prof.b) b.push_back(v ? json(*v) : json(nullptr));
  out["b"] = b;
  if (prof.convenient) {
    out["B"] = prof.B;
    json mono = json::array();
    for (const auto& m : prof.loj_monomials) {
      json e;
      e["axis"] = m.axis + 1;
      e["nu"] = to_json(m.exps.nu);
      e["mu"] = to_json(m.exps.mu);
      e["exceptional"] = m.exceptional;
      mono.push_back(e);
    }
    out["lojasiewicz_monomials"] = mono;
  }
  return out;
}

json to_json(const AxisMonomialTable& table) {
  json out = json::array();
  for (const auto& st : table.subsets) {
    json sub;
    sub["I"] = subset_json(st.I);
    json entries = json::array();
    for (const auto& e : st.entries) {
      json je;
      je["i"] = e.i + 1;
      je["j"] = e.j + 1;
      je["ell"] = e.ell;
      entries.push_back(je);
    }
    sub["entries"] = entries;
    sub["xi"] = st.xi;
    out.push_back(sub);
  }
  return out;
}

json to_json(const MonomialCurve& curve) {
  json out;
  out["support"] = subset_json(curve.support);
  json w = json::array();
  for (long p : curve.weights) w.push_back(p);
  out["weights"] = w;
  json coeffs = json::array();
  for (std::size_t k = 0; k < curve.support.members.size(); ++k) {
    if (curve.exact) coeffs.push_back(curve.coeffs_exact[k].str());
    else coeffs.push_back({curve.coeffs_float[k].real(), curve.coeffs_float[k].imag()});
  }
  out["coeffs"] = coeffs;
  out["exact"] = curve.exact;
  return out;
}

json bound_report_json(const BoundReport& report) {
  json out;
  out["upper"] = to_fraction_string(report.upper);
  out["exact"] = report.exact;
  out["path"] = report.path;
  json assumptions = json::array();
  for (const auto& v : report.assumptions) assumptions.push_back(to_json(v));
  out["assumptions"] = assumptions;
  out["lower"] = report.lower ? json(to_fraction_string(*report.lower)) : json(nullptr);
  if (report.witness) {
    json w = to_json(*report.witness);
    if (report.witness_orders) {
      w["ord_z"] = report.witness_orders->ord_z;
      if (report.witness_orders->ord_grad) w["ord_grad"] = *report.witness_orders->ord_grad;
    }
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  json notes = json::array();
  for (const auto& s : report.notes) notes.push_back(s);
  json paths = json::array();
  for (const auto& [name, value] : report.paths_applied)
    paths.push_back({{"path", name}, {"value", to_fraction_string(value)}});
  out["paths_applied"] = paths;
  out["notes"] = notes;
  if (report.sheet) out["sheet"] = to_json(*report.sheet);
  return out;
}

std::string bound_report_text(const BoundReport& report) {
  std::ostringstream out;
  out << "upper=" << to_string(report.upper) << (report.exact ? " exact" : "")
      << " path=" << report.path << "\n";
  for (const auto& [name, value] : report.paths_applied)
    out << "  candidate " << name << " = " << to_string(value) << "\n";
  for (const auto& v : report.assumptions) out << verdict_text("assumption", v);
  if (report.lower) {
    out << "lower=" << to_string(*report.lower) << (report.tight ? " (tight)" : "") << "\n";
    if (report.witness) {
      out << "  witness curve: " << report.witness->str();
      if (report.witness_orders && report.witness_orders->ord_grad)
        out << "  [ord z = " << report.witness_orders->ord_z
            << ", ord grad = " << *report.witness_orders->ord_grad << "]";
      out << "\n";
    }
  }
  for (const auto& s : report.notes) out << "note: " << s << "\n";
  return out.str();
}

std::string verdict_text(const std::string& name, const Verdict& v) {
  std::ostringstream out;
  out << name << ": " << verdict_status_name(v.status) << " (faces=" << v.faces_checked
      << " starts=" << v.samples << " iters=" << v.iterations << " seed=" << v.seed << ")";
  if (v.witness) {
    out << "\n  witness on " << v.witness->face << " residual=" << v.witness->residual << " at";
    for (Eigen::Index i = 0; i < v.witness->point.size(); ++i) {
      auto z = v.witness->point[i];
      out << " (" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    }
  }
  if (!v.note.empty()) out << "\n  note: " << v.note;
  out << "\n";
  return out.str();
}

}  // namespace lojex
