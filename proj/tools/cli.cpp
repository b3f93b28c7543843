#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <optional>

#include "triaco/triaco.hpp"

namespace triaco::cli {

namespace {

using nlohmann::json;

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

// One top-level key per line, values compact.
std::string layout(const json& j) {
  if (!j.is_object()) return j.dump();
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    s += first ? "\n  " : ",\n  ";
    s += json(k).dump() + ": " + v.dump();
    first = false;
  }
  return s + "\n}";
}

// Prefixes load failures with the offending file.
template <class F>
auto load(const std::string& path, F&& loader) {
  try {
    return loader(path);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + std::string(e.what()).substr(errc_name(e.code()).size() + 2));
  }
}

Trialgebra algebra_file(const std::string& p) { return load(p, [](const auto& q) { return load_algebra(q); }); }
TriBimodule module_file(const std::string& p) { return load(p, [](const auto& q) { return load_module(q); }); }
CocycleTriple cocycle_file(const std::string& p) { return load(p, [](const auto& q) { return load_cocycle(q); }); }
Matrix matrix_file(const std::string& p) { return load(p, [](const auto& q) { return load_matrix(q); }); }
TruncatedDeformation deformation_file(const std::string& p) {
  return load(p, [](const auto& q) { return load_deformation(q); });
}
FormalAutomorphism automorphism_file(const std::string& p) {
  return load(p, [](const auto& q) { return load_automorphism(q); });
}

std::string join(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json report_json(const ViolationReport& r) {
  json rows = json::array();
  for (const auto& v : r.rows)
    rows.push_back({{"rule", v.rule}, {"axiom", v.axiom}, {"order", v.order}, {"witness", v.witness},
                    {"defect", vector_json(v.defect)}});
  return {{"status", r.ok() ? "pass" : "fail"}, {"violations", r.size()}, {"rows", rows}};
}

int emit_report(const Output& o, const ViolationReport& r, json extra = json::object()) {
  if (o.json) {
    json j = report_json(r);
    j.update(extra);
    o.out << layout(j) << '\n';
  } else {
    o.out << (r.ok() ? "PASS" : "FAIL (" + std::to_string(r.size()) + " violations)") << '\n';
    if (!r.ok()) o.out << to_tsv(r);
  }
  return r.ok() ? 0 : 1;
}

int emit_subspace(const Output& o, const std::string& label, const Subspace& s) {
  if (o.json) {
    json basis = json::array();
    for (const auto& v : s.basis_vectors()) basis.push_back(vector_json(v));
    o.out << layout(json{{label, s.dim()}, {"ambient", s.ambient_dim()}, {"basis", basis}}) << '\n';
  } else {
    o.out << label << ' ' << s.dim() << '\n';
    for (const auto& v : s.basis_vectors()) o.out << join(v) << '\n';
  }
  return 0;
}

std::size_t env_max_degree() {
  const char* env = std::getenv("TRIACO_MAX_DEGREE");
  if (!env || !*env) return kDefaultMaxDegree;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
    throw Error(Errc::ParseError, "TRIACO_MAX_DEGREE must be a small non-negative integer");
  return std::stoul(s);
}

TriBimodule coefficients(const Trialgebra& t, const std::string& which) {
  if (which == "self") return adjoint_module(t);
  if (which == "trivial") return trivial_module(t, 1, Matrix::identity(1), Matrix::identity(1));
  return module_file(which);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with BiHom-associative trialgebras", "triaco"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");
  std::function<int(const Output&)> action;

  std::string algebra, module, cocycle, cocycle2, matrix, file2, file3;

  auto* check = app.add_subcommand("check", "Check the trialgebra axioms and multiplicativity");
  check->add_option("algebra", algebra, "Algebra file")->required();
  bool axioms_only = false;
  check->add_flag("--axioms-only", axioms_only, "Skip the multiplicativity check");
  check->add_flag("--json", as_json);
  check->callback([&] {
    action = [&](const Output& o) {
      const Trialgebra t = algebra_file(algebra);
      ViolationReport r = check_axioms(t);
      if (!axioms_only) r.append(check_multiplicative(t));
      return emit_report(o, r);
    };
  });

  auto* check_module = app.add_subcommand("check-module", "Check the module axioms");
  check_module->add_option("algebra", algebra)->required();
  check_module->add_option("module", module)->required();
  check_module->add_flag("--json", as_json);
  check_module->callback([&] {
    action = [&](const Output& o) { return emit_report(o, check_module_axioms(algebra_file(algebra), module_file(module))); };
  });

  auto* center_cmd = app.add_subcommand("center", "Compute the center");
  center_cmd->add_option("algebra", algebra)->required();
  center_cmd->add_flag("--json", as_json);
  center_cmd->callback([&] {
    action = [&](const Output& o) { return emit_subspace(o, "dim", center(algebra_file(algebra))); };
  });

  auto add_coho = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("algebra", algebra)->required();
    c->add_option("--module", module, "Central coefficient module file")->required();
    c->add_flag("--json", as_json);
    return c;
  };
  add_coho("cocycles", "Basis of the 2-cocycle space")->callback([&] {
    action = [&](const Output& o) { return emit_subspace(o, "dim", cocycle_space(algebra_file(algebra), module_file(module))); };
  });
  add_coho("coboundaries", "Basis of the 2-coboundary space")->callback([&] {
    action = [&](const Output& o) {
      return emit_subspace(o, "dim", coboundary_space(algebra_file(algebra), module_file(module)));
    };
  });
  add_coho("h2", "Second cohomology dimension and representatives")->callback([&] {
    action = [&](const Output& o) {
      const Quotient q = second_cohomology(algebra_file(algebra), module_file(module));
      if (o.json) {
        json reps = json::array();
        for (const auto& v : q.representatives) reps.push_back(vector_json(v));
        o.out << layout(json{{"dim", q.dim}, {"representatives", reps}}) << '\n';
      } else {
        o.out << "dim " << q.dim << '\n';
        for (const auto& v : q.representatives) o.out << join(v) << '\n';
      }
      return 0;
    };
  });

  auto* extend = add_coho("extend", "Build the central extension T_F");
  extend->add_option("--cocycle", cocycle, "Cocycle file")->required();
  extend->callback([&] {
    action = [&](const Output& o) {
      const Trialgebra t = algebra_file(algebra);
      const TriBimodule v = module_file(module);
      const CocycleTriple f = cocycle_file(cocycle);
      const CentralExtension e = central_extension(t, v, f);
      o.out << serialize(e.total);
      const ViolationReport r = is_two_cocycle(t, v, f);
      if (!r.ok()) o.err << "warning: F is not a 2-cocycle (" << r.size() << " violations)\n";
      return r.ok() ? 0 : 1;
    };
  });

  auto* equiv = add_coho("equiv-ext", "Decide whether T_F and T_G are equivalent extensions");
  equiv->add_option("--cocycle", cocycle, "F")->required();
  equiv->add_option("--other", cocycle2, "G")->required();
  equiv->callback([&] {
    action = [&](const Output& o) {
      const Trialgebra t = algebra_file(algebra);
      const TriBimodule v = module_file(module);
      const auto w = are_equivalent(central_extension(t, v, cocycle_file(cocycle)),
                                    central_extension(t, v, cocycle_file(cocycle2)));
      if (!w) {
        if (o.json)
          o.out << layout(json{{"equivalent", false}}) << '\n';
        else
          o.out << "not equivalent\n";
        return 1;
      }
      if (o.json) {
        json mu = json::parse(serialize(w->mu.matrix));
        json j = report_json(w->report);
        j.update({{"equivalent", true}, {"mu", mu}});
        o.out << layout(j) << '\n';
      } else {
        o.out << "equivalent\nmu\n" << to_string(w->mu.matrix) << '\n';
        o.out << (w->report.ok() ? "witness verified" : "witness FAILED verification") << '\n';
        if (!w->report.ok()) o.out << to_tsv(w->report);
      }
      return w->report.ok() ? 0 : 1;
    };
  });

  auto* hoch = app.add_subcommand("hochschild", "Cohomology table of the tree complex");
  hoch->add_option("algebra", algebra)->required();
  std::size_t degree = 2;
  std::string coeff = "trivial";
  std::optional<std::size_t> max_degree;
  hoch->add_option("--degree", degree, "Highest degree in the table")->check(CLI::PositiveNumber);
  hoch->add_option("--coeff", coeff, "self, trivial, or a module file");
  hoch->add_option("--max-degree", max_degree, "Override the degree guard");
  hoch->add_flag("--json", as_json);
  hoch->callback([&] {
    action = [&](const Output& o) {
      const Trialgebra t = algebra_file(algebra);
      const TriBimodule v = coefficients(t, coeff);
      HochschildOptions opts;
      opts.max_degree = max_degree.value_or(env_max_degree());
      const auto rows = cohomology_table(t, v, degree, opts);
      if (o.json) {
        json a = json::array();
        for (const auto& r : rows)
          a.push_back({{"degree", r.degree}, {"dim_C", r.cochain_dim}, {"rank_delta", r.coboundary_rank},
                       {"dim_H", r.cohomology_dim}});
        o.out << layout(a) << '\n';
      } else {
        o.out << to_tsv(rows);
      }
      return 0;
    };
  });

  auto* trees = app.add_subcommand("trees", "Planar trees of a given degree");
  std::size_t tree_degree = 0;
  bool list = false, count = false, labels = false;
  trees->add_option("--degree", tree_degree)->required()->check(CLI::Range(0, 8));
  trees->add_flag("--list", list);
  trees->add_flag("--count", count);
  trees->add_flag("--labels", labels, "Operation labels at positions 0..degree");
  trees->add_flag("--json", as_json);
  trees->callback([&] {
    action = [&](const Output& o) {
      const auto& ts = enumerate_trees(tree_degree);
      if (count && !list && !labels) {
        o.out << ts.size() << '\n';
        return 0;
      }
      json a = json::array();
      for (const auto& t : ts) {
        std::string line = t.serialize();
        json lab = json::array();
        if (labels && tree_degree >= 1)
          for (std::size_t i = 0; i <= tree_degree; ++i) {
            line += std::string(i ? " " : "\t") + std::string(op_symbol(op_label(t, i)));
            lab.push_back(std::string(op_name(op_label(t, i))));
          }
        if (o.json)
          a.push_back(labels ? json{{"tree", t.serialize()}, {"labels", lab}} : json(t.serialize()));
        else
          o.out << line << '\n';
      }
      if (o.json) o.out << layout(a) << '\n';
      return 0;
    };
  });

  auto* dverify = app.add_subcommand("deform-verify", "Verify a truncated deformation");
  dverify->add_option("deformation", file2)->required();
  dverify->add_flag("--json", as_json);
  dverify->callback([&] {
    action = [&](const Output& o) {
      const TruncatedDeformation d = deformation_file(file2);
      const ViolationReport r = verify_deformation(d);
      json extra = json::object();
      std::string note;
      if (d.order >= 1 && check_term_equivariance(d).ok()) {
        const bool cocycle_ok = is_infinitesimal_cocycle(d);
        extra["infinitesimal_cocycle"] = cocycle_ok;
        note = std::string("infinitesimal cocycle: ") + (cocycle_ok ? "yes" : "no") + "\n";
      }
      const int code = emit_report(o, r, extra);
      if (!o.json) o.out << note;
      return code;
    };
  });

  auto* dequiv = app.add_subcommand("deform-equiv", "Verify an equivalence of deformations");
  dequiv->add_option("first", file2)->required();
  dequiv->add_option("second", file3)->required();
  dequiv->add_option("automorphism", matrix)->required();
  dequiv->add_flag("--json", as_json);
  dequiv->callback([&] {
    action = [&](const Output& o) {
      return emit_report(o, verify_equivalence(deformation_file(file2), deformation_file(file3), automorphism_file(matrix)));
    };
  });

  auto add_transport = [&](const char* name, const char* help, bool forward) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("algebra", algebra)->required();
    c->add_option("map", matrix, "Invertible matrix file")->required();
    c->callback([&, forward] {
      action = [&, forward](const Output& o) {
        const Trialgebra t = algebra_file(algebra);
        const LinearMap phi(matrix_file(matrix));
        o.out << serialize(forward ? pushforward(t, phi) : pullback(t, phi));
        return 0;
      };
    });
  };
  add_transport("pushforward", "Transport an algebra along an invertible map", true);
  add_transport("pullback", "Pull an algebra back along an invertible map", false);

  auto* derive = app.add_subcommand("derive", "All generalized derivations");
  derive->add_option("algebra", algebra)->required();
  derive->add_flag("--json", as_json);
  derive->callback([&] {
    action = [&](const Output& o) {
      const SolutionFamily fam = solve_derivations(algebra_file(algebra));
      if (o.json) {
        json basis = json::array();
        for (const auto& v : fam.basis) basis.push_back(vector_json(v));
        o.out << layout(json{{"dim", fam.space.dim()}, {"parameters", fam.parameters}, {"basis", basis}}) << '\n';
      } else {
        o.out << "dim " << fam.space.dim() << '\n' << fam.pretty();
      }
      return 0;
    };
  });

  auto* companions = app.add_subcommand("derive-companions", "All (D', D'') completing a given D");
  companions->add_option("algebra", algebra)->required();
  companions->add_option("--given-d", matrix, "Matrix file for D")->required();
  companions->add_flag("--json", as_json);
  companions->callback([&] {
    action = [&](const Output& o) {
      const CompanionSolution s = solve_companions(algebra_file(algebra), matrix_file(matrix));
      if (o.json) {
        json j{{"solvable", s.particular.has_value()}, {"homogeneous_dim", s.homogeneous.dim()}};
        if (s.particular) {
          j["dp"] = json::parse(serialize(s.particular->dp));
          j["dpp"] = json::parse(serialize(s.particular->dpp));
        }
        o.out << layout(j) << '\n';
      } else if (s.particular) {
        o.out << "D'\n" << to_string(s.particular->dp) << "\nD''\n" << to_string(s.particular->dpp) << '\n';
        o.out << "homogeneous dim " << s.homogeneous.dim() << '\n';
      } else {
        o.out << "no companions\nhomogeneous dim " << s.homogeneous.dim() << '\n';
      }
      return s.particular ? 0 : 1;
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action(Output{out, err, as_json});
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace triaco::cli
