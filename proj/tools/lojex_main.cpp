#include "lojex/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace lojex;

struct Options {
  std::string expr;
  std::string file;
  bool json = false;
  bool jacobian = false;
  bool assume_nondegenerate = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int budget = 2000;
  bool budget_given = false;
  long max_weight = 50;
  int nd_starts = 64;
  int nd_iters = 200;
  double nd_tol = 1e-9;
};

std::string load_expression(const Options& opt) {
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) throw std::runtime_error("cannot open file: " + opt.file);
    std::ostringstream acc;
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      acc << line << " ";
    }
    return acc.str();
  }
  return opt.expr;
}

BoundConfig make_config(const Options& opt) {
  BoundConfig config;
  config.nd.multistarts = opt.nd_starts;
  config.nd.max_iters = opt.nd_iters;
  config.nd.tol = opt.nd_tol;
  config.nd.seed = opt.seed;
  config.sampler.budget = opt.budget;
  config.sampler.seed = opt.seed;
  config.sampler.max_weight = opt.max_weight;
  config.assume_nondegenerate = opt.assume_nondegenerate;
  return config;
}

int emit_error(const Options& opt, const std::string& kind, const std::string& message,
               int code) {
  if (opt.json) {
    nlohmann::json out;
    out["error"] = kind;
    out["message"] = message;
    std::cout << out.dump(2) << "\n";
  }
  std::cerr << "error (" << kind << "): " << message << "\n";
  return code;
}

int run_fan(const MixedFunction& f, const Options& opt) {
  nlohmann::json out;
  std::vector<FanVertex> vertices;
  NewtonPolyhedron poly = build_polyhedron(f);
  if (opt.jacobian) {
    JacobianDiagram diagram = jacobian_diagram(f);
    vertices = diagram.vertices;
    out["refined"] = true;
    nlohmann::json vjpp = nlohmann::json::array();
    for (int idx : diagram.vjpp) vjpp.push_back(to_json(diagram.vertices[idx]));
    out["vanishing_boundary_vertices"] = vjpp;
  } else {
    vertices = fan_vertices(poly);
    out["refined"] = false;
  }
  nlohmann::json facets = nlohmann::json::array();
  for (const auto& facet : poly.facets) facets.push_back(to_json(facet, poly));
  out["facets"] = facets;
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : vertices) verts.push_back(to_json(v));
  out["vertices"] = verts;

  if (opt.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& v : vertices) {
      std::cout << "vertex (";
      for (Eigen::Index i = 0; i < v.weight.size(); ++i)
        std::cout << (i ? "," : "") << v.weight[i];
      std::cout << ") " << vertex_kind_name(v.kind) << " d=" << to_string(v.face.value);
      if (v.vanishing_subset) std::cout << " I=" << v.vanishing_subset->str();
      std::cout << "\n";
    }
  }
  return 0;
}

int run_check(const MixedFunction& f, const Options& opt) {
  BoundConfig config = make_config(opt);
  Verdict face = check_face_nondegeneracy(f, config.nd);
  std::optional<Verdict> loj;
  if (face.status != VerdictStatus::DegenerateWitness) {
    AxisMonomialTable table = axis_monomial_table(f, vanishing_subspaces(f));
    loj = check_loj_nondegeneracy(f, table, config.nd);
  }
  if (opt.json) {
    nlohmann::json out;
    out["face_nondegeneracy"] = to_json(face);
    out["lojasiewicz_nondegeneracy"] = loj ? to_json(*loj) : nlohmann::json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << verdict_text("face-nondegeneracy", face);
    if (loj) std::cout << verdict_text("lojasiewicz-nondegeneracy", *loj);
  }
  VerdictStatus worst = face.status;
  if (loj && loj->status != VerdictStatus::PresumedOk) worst = loj->status;
  if (worst == VerdictStatus::DegenerateWitness) return 2;
  if (worst == VerdictStatus::Inconclusive) return 3;
  return 0;
}

int run_analyze(const MixedFunction& f, const Options& opt, bool with_bracket) {
  BoundConfig config = make_config(opt);
  nlohmann::json out;
  out["n"] = f.n();
  out["expression"] = format_function(f);
  out["holomorphic"] = f.is_holomorphic();

  nlohmann::json support = nlohmann::json::array();
  NewtonPolyhedron poly = build_polyhedron(f);
  for (const auto& sp : poly.support) {
    nlohmann::json pt = nlohmann::json::array();
    for (int i = 0; i < f.n(); ++i) pt.push_back(sp.coords[i]);
    support.push_back(pt);
  }
  out["support"] = support;
  out["boundary_dim"] = poly.boundary_dim;
  out["convenient_profile"] = to_json(convenient_profile(f));
  nlohmann::json vanishing = nlohmann::json::array();
  for (const auto& I : vanishing_subspaces(f)) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i : I.members) arr.push_back(i + 1);
    vanishing.push_back(arr);
  }
  out["vanishing_subspaces"] = vanishing;
  if (poly.boundary_dim == f.n() - 1) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : fan_vertices(poly)) verts.push_back(to_json(v));
    out["fan_vertices"] = verts;
  }

  BoundReport report = with_bracket ? bracket(f, config) : upper_bound(f, config);
  out["bound"] = bound_report_json(report);
  try {
    AxisMonomialTable table = axis_monomial_table(f, vanishing_subspaces(f));
    out["axis_monomials"] = to_json(table);
  } catch (const NonIsolatedError&) {
  }

  if (opt.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n=" << f.n() << " " << (f.is_holomorphic() ? "holomorphic" : "mixed") << " "
              << format_function(f) << "\n";
    std::cout << "boundary dimension: " << poly.boundary_dim << "\n";
    std::cout << "vanishing subspaces:";
    for (const auto& I : vanishing_subspaces(f)) std::cout << " " << I.str();
    std::cout << "\n";
    if (poly.boundary_dim == f.n() - 1)
      for (const auto& v : fan_vertices(poly)) {
        std::cout << "vertex (";
        for (Eigen::Index i = 0; i < v.weight.size(); ++i)
          std::cout << (i ? "," : "") << v.weight[i];
        std::cout << ") " << vertex_kind_name(v.kind) << "\n";
      }
    std::cout << bound_report_text(report);
  }
  return 0;
}

int run_bound(const MixedFunction& f, const Options& opt, bool with_bracket) {
  BoundConfig config = make_config(opt);
  BoundReport report = with_bracket ? bracket(f, config) : upper_bound(f, config);
  if (opt.json) std::cout << bound_report_json(report).dump(2) << "\n";
  else std::cout << bound_report_text(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified Lojasiewicz gradient exponent bounds from Newton boundary data"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--seed", opt.seed, "RNG seed for the verifiers and the sampler")
      ->each([&](const std::string&) { opt.seed_given = true; });
  app.add_option("--budget", opt.budget, "curve budget for the sampler")
      ->each([&](const std::string&) { opt.budget_given = true; });
  app.add_option("--max-weight", opt.max_weight, "cap on sampled curve weights");
  app.add_option("--nd-starts", opt.nd_starts, "multistarts per face check");
  app.add_option("--nd-iters", opt.nd_iters, "iterations per multistart");
  app.add_option("--nd-tol", opt.nd_tol, "residual acceptance threshold");
  app.add_flag("--assume-nondegenerate", opt.assume_nondegenerate,
               "emit bounds even when a verifier finds a witness (recorded in the report)");
  app.add_flag("--jacobian", opt.jacobian, "fan: dump the refined subdivision");
  app.add_option("--file", opt.file, "read the expression from a file (# comments allowed)");

  std::map<std::string, CLI::App*> verbs;
  for (const char* name : {"analyze", "bound", "verify", "fan", "check"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("expr", opt.expr, "polynomial expression");
    verbs[name] = sub;
  }

  CLI11_PARSE(app, argc, argv);
  std::string verb;
  for (auto& [name, sub] : verbs)
    if (sub->parsed()) verb = name;

  if ((verb == "verify" || verb == "check") && !opt.seed_given)
    return emit_error(opt, "usage", "--seed is required for " + verb + " (deterministic runs)", 3);
  if (opt.expr.empty() == opt.file.empty())
    return emit_error(opt, "usage", "provide exactly one of <expr> or --file", 3);

  MixedFunction f;
  try {
    f = parse_function(load_expression(opt));
  } catch (const ParseError& e) {
    return emit_error(opt, "syntax", e.what(), 3);
  } catch (const std::exception& e) {
    return emit_error(opt, "input", e.what(), 3);
  }

  try {
    if (verb == "fan") return run_fan(f, opt);
    if (verb == "check") return run_check(f, opt);
    if (verb == "analyze") return run_analyze(f, opt, opt.budget_given);
    if (verb == "bound") return run_bound(f, opt, false);
    if (verb == "verify") return run_bound(f, opt, true);
  } catch (const DegenerateWitnessError& e) {
    if (opt.json) {
      nlohmann::json out;
      out["error"] = "degenerate";
      out["message"] = e.what();
      out["verdict"] = to_json(e.verdict);
      std::cout << out.dump(2) << "\n";
    }
    std::cerr << "refused: " << e.what() << "\n";
    std::cerr << verdict_text("witness", e.verdict);
    return 2;
  } catch (const InconclusiveError& e) {
    return emit_error(opt, "inconclusive", e.what(), 3);
  } catch (const BoundaryDimensionError& e) {
    return emit_error(opt, "boundary-dimension", e.what(), 3);
  } catch (const NonIsolatedError& e) {
    return emit_error(opt, "non-isolated", e.what(), 3);
  } catch (const SizeCapError& e) {
    return emit_error(opt, "size-cap", e.what(), 3);
  } catch (const std::exception& e) {
    return emit_error(opt, "internal", e.what(), 3);
  }
  return 0;
}
