#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "contain/containment.hpp"
#include "contain/coresets.hpp"
#include "contain/harness.hpp"
#include "contain/instances.hpp"
#include "contain/io.hpp"
#include "contain/radii.hpp"

using namespace contain;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::string format = "json";
  Tolerance tol;
  std::uint64_t seed = 1;
  std::string input = "-";
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument, "malformed JSON in " + source + ": " + e.what());
  }
}

Instance load_instance(const Globals& g) {
  return instance_from_json(parse_json(read_all(g.input), g.input == "-" ? "stdin" : g.input), g.tol);
}

// A container argument is either a JSON file or a family name.
Container resolve_container(const std::string& spec, int d, std::optional<int> k,
                            const Tolerance& tol) {
  if (std::filesystem::exists(spec)) return container_from_json(parse_json(read_all(spec), spec), tol);
  return named_container(spec, d, k, tol);
}

Container pick_container(const Instance& inst, const std::string& spec, std::optional<int> k,
                         const Tolerance& tol) {
  if (!spec.empty()) {
    Container c = resolve_container(spec, inst.points.dim(), k, tol);
    require(c.dim() == inst.points.dim(), ErrorCode::kDimensionMismatch,
            "container and points differ in dimension");
    return c;
  }
  require(inst.container.has_value(), ErrorCode::kInvalidArgument,
          "no container: pass --container or include one in the instance");
  return *inst.container;
}

void emit(const Globals& g, const Json& j) {
  if (g.format == "csv" && j.is_object()) {
    std::string header, row;
    for (const auto& [key, value] : j.items()) {
      header += (header.empty() ? "" : ",") + key;
      std::string cell = value.is_string() ? value.get<std::string>() : value.dump();
      if (cell.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : cell) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        cell = quoted + "\"";
      }
      row += (row.empty() ? "" : ",") + cell;
    }
    std::cout << header << '\n' << row << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

void error_json(const std::string& code, const std::string& message) {
  Json err;
  err["error"] = code;
  err["message"] = message;
  std::cerr << err.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal homothetic containment, core-radii and core-sets"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol-feas", g.tol.feas, "Feasibility tolerance");
  app.add_option("--tol-pivot", g.tol.pivot, "Pivot tolerance");
  app.add_option("--tol-eq", g.tol.eq, "Equality tolerance");
  app.add_option("--seed", g.seed, "Seed for generated instances and experiments");
  app.add_option("--input", g.input, "Instance JSON file ('-' for stdin)");

  std::string container_spec;
  std::optional<int> k_opt;

  auto* solve = app.add_subcommand("solve", "Solve R(P, C) for an instance");
  std::string formulation = "auto";
  bool with_certificate = false;
  solve->add_option("--container", container_spec, "Container family or JSON file");
  solve->add_option("--k", k_opt, "k for symmetric-counterexample");
  solve->add_option("--formulation", formulation)->check(CLI::IsMember({"auto", "hrep", "vrep"}));
  solve->add_flag("--certificate", with_certificate, "Attach an optimality certificate");

  auto* radii = app.add_subcommand("radii", "Core radius R_k(P, C)");
  int radii_k = 1;
  bool radii_check = false;
  radii->add_option("--k", radii_k, "Core radius index")->required()->check(CLI::PositiveNumber);
  radii->add_option("--container", container_spec, "Container family or JSON file");
  radii->add_flag("--check", radii_check, "Also evaluate intersection and cylinder radii");

  auto* coreset = app.add_subcommand("coreset", "Core-sets");
  double eps = 0.0;
  coreset->add_option("--eps", eps, "Approximation parameter")->required()->check(CLI::NonNegativeNumber);
  coreset->add_option("--container", container_spec, "Container family or JSON file");
  auto* mode_group = coreset->add_option_group("mode");
  bool greedy = false, exact = false, zero = false;
  mode_group->add_flag("--greedy", greedy, "Farthest-point greedy");
  mode_group->add_flag("--exact", exact, "Smallest core-set by enumeration");
  mode_group->add_flag("--zero", zero, "Zero core-set from the optimal duals");
  mode_group->require_option(0, 1);

  auto* asym = app.add_subcommand("asym", "Minkowski asymmetry s(C)");
  int asym_dim = 0;
  asym->add_option("--container", container_spec, "Container family or JSON file")->required();
  asym->add_option("--dim", asym_dim, "Dimension for container families");
  asym->add_option("--k", k_opt, "k for symmetric-counterexample");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  InstanceSpec spec;
  std::string dist_name = "ball-uniform";
  gen->add_option("family", spec.family,
                  "regular-simplex, box-ambiguity, random, or a container family")
      ->required();
  gen->add_option("--dim", spec.d, "Dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--k", spec.k, "k for symmetric-counterexample");
  gen->add_option("--tau", spec.tau, "tau for box-ambiguity");
  gen->add_option("--n", spec.n, "Point count for random");
  gen->add_option("--dist", dist_name, "Distribution for random")
      ->check(CLI::IsMember({"ball-uniform", "sphere", "gauss", "simplex-hull"}));

  auto* verify = app.add_subcommand("verify", "Run harness experiments");
  std::string experiment;
  bool verify_all = false;
  verify->add_option("experiment", experiment, "Experiment id");
  verify->add_flag("--all", verify_all, "Run every experiment");
  verify->add_flag("--list", "List experiment ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_json("usage", e.what());
    return kExitUsage;
  }

  try {
    g.tol.validate();
    if (*solve) {
      const Instance inst = load_instance(g);
      const Container c = pick_container(inst, container_spec, k_opt, g.tol);
      const Formulation f = formulation == "hrep"   ? Formulation::kHRep
                            : formulation == "vrep" ? Formulation::kVRep
                                                    : Formulation::kAuto;
      const Solution sol = min_containment(inst.points, c, g.tol, f);
      Json out = to_json(sol);
      if (with_certificate) {
        if (sol.rho <= g.tol.feas) {
          out["certificate"] = nullptr;
        } else {
          const CertificateResult cert = make_certificate(inst.points, c, sol, g.tol);
          out["certificate"] = std::visit([](const auto& v) { return to_json(v); }, cert);
        }
      }
      emit(g, out);
      return kExitPass;
    }
    if (*radii) {
      const Instance inst = load_instance(g);
      const Container c = pick_container(inst, container_spec, std::nullopt, g.tol);
      const CoreRadiusResult res = core_radius(inst.points, c, radii_k, g.tol);
      Json out;
      out["k"] = res.k;
      out["value"] = res.value;
      out["witness"] = res.witness;
      if (radii_check) {
        out["intersection"] = intersection_radius_check(inst.points, c, radii_k, g.tol, res);
        if (c.is_ball() || c.has_vertices()) {
          out["cylinder"] = cylinder_radius_check(inst.points, c, radii_k, g.tol, res);
        }
      }
      emit(g, out);
      return kExitPass;
    }
    if (*coreset) {
      const Instance inst = load_instance(g);
      const Container c = pick_container(inst, container_spec, std::nullopt, g.tol);
      Json out;
      if (zero) {
        out = to_json(extract_zero_coreset(inst.points, c, g.tol));
      } else if (exact) {
        const int size = optimal_coreset_size(inst.points, c, eps, g.tol);
        std::vector<int> witness;
        if (size >= inst.points.size()) {
          witness.resize(static_cast<std::size_t>(inst.points.size()));
          for (int i = 0; i < inst.points.size(); ++i) witness[static_cast<std::size_t>(i)] = i;
        } else {
          witness = core_radius(inst.points, c, size - 1, g.tol).witness;
        }
        out["size"] = size;
        out["indices"] = witness;
        out["radius"] = subset_radius(inst.points, witness, c, g.tol);
      } else {
        require(eps > 0.0, ErrorCode::kInvalidArgument, "greedy core-set needs --eps > 0");
        out = to_json(greedy_coreset(inst.points, c, eps, g.tol));
      }
      emit(g, out);
      return kExitPass;
    }
    if (*asym) {
      std::optional<Container> c;
      if (std::filesystem::exists(container_spec)) {
        c = resolve_container(container_spec, 0, k_opt, g.tol);
      } else {
        require(asym_dim >= 1, ErrorCode::kInvalidArgument, "container families need --dim");
        c = named_container(container_spec, asym_dim, k_opt, g.tol);
      }
      Json out;
      out["dim"] = c->dim();
      out["asymmetry"] = minkowski_asymmetry(*c, g.tol);
      emit(g, out);
      return kExitPass;
    }
    if (*gen) {
      spec.seed = g.seed;
      spec.distribution = parse_distribution(dist_name);
      std::cout << to_json(make_instance(spec, g.tol)).dump() << '\n';
      return kExitPass;
    }
    if (*verify) {
      if (verify->count("--list") > 0) {
        for (const auto& id : experiment_ids()) std::cout << id << '\n';
        return kExitPass;
      }
      if (verify_all == !experiment.empty()) {
        error_json("usage", "verify takes exactly one of <experiment> or --all");
        return kExitUsage;
      }
      HarnessOptions opts;
      opts.tol = g.tol;
      opts.seed = g.seed;
      std::vector<ExperimentReport> reports;
      if (verify_all) {
        reports = run_all(opts);
      } else {
        reports.push_back(run_experiment(experiment, opts));
      }
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.passed();
      if (g.format == "csv") {
        std::cout << to_csv(reports);
      } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        std::cout << arr.dump(2) << '\n';
      }
      for (const auto& r : reports) {
        std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.id << " (" << r.rows.size()
                  << " rows, " << r.runtime_seconds << " s)\n";
      }
      return ok ? kExitPass : kExitFail;
    }
  } catch (const Error& e) {
    error_json(to_string(e.code()), e.what());
    return e.code() == ErrorCode::kInvalidArgument || e.code() == ErrorCode::kDimensionMismatch ||
                   e.code() == ErrorCode::kInvalidContainer ||
                   e.code() == ErrorCode::kMissingRepresentation
               ? kExitUsage
               : kExitFail;
  } catch (const std::exception& e) {
    error_json("internal", e.what());
    return kExitFail;
  }
  return kExitUsage;
}
