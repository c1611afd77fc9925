// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "approxsub/extensions.hpp"
#include "approxsub/greedy.hpp"
#include "approxsub/instances.hpp"
#include "approxsub/json_io.hpp"
#include "approxsub/metrics.hpp"
#include "approxsub/polytopes.hpp"
#include "approxsub/set_function.hpp"

namespace {

using namespace approxsub;

constexpr int kExitInvalidInput = 2;
constexpr int kExitViolation = 3;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::ostream& open_out(std::ofstream& file, const std::string& out) {
  if (out.empty()) return std::cout;
  file.open(out);
  if (!file) throw Error(ErrorCode::IoError, "cannot write " + out);
  return file;
}

std::vector<HypercubePoint> sample_points(int n, int count,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<HypercubePoint> xs;
  for (int i = 0; i < count; ++i) {
    HypercubePoint x(n);
    for (int j = 0; j < n; ++j) x(j) = unit(rng);
    xs.push_back(x);
  }
  return xs;
}

int run_metrics(const std::string& path, const std::vector<std::string>& which,
                const std::string& out) {
  const SetFunction f = load_set_function(path);
  if (f.n() > kCostWarnGroundSize) {
    std::cerr << "warning: n = " << f.n()
              << " makes metric enumeration expensive\n";
  }
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  auto wanted = [&](const std::string& name) {
    return which.empty() ||
           std::find(which.begin(), which.end(), name) != which.end();
  };
  if (wanted("global_distance")) {
    os << metric_report_to_json(global_distance(f)) << "\n";
  }
  if (wanted("marginal_violation")) {
    os << metric_report_to_json(marginal_violation(f)) << "\n";
  }
  if (wanted("submod_violation")) {
    os << metric_report_to_json(submod_violation(f, f.n() - 1, f.n())) << "\n";
  }
  return 0;
}

int run_extensions(const std::string& path, const std::string& check,
                   std::uint64_t seed) {
  const SetFunction f = load_set_function(path);
  const double d = marginal_violation(f).value;
  if (check == "sandwich") {
    const auto rep = sandwich_check(f, sample_points(f.n(), 100, seed));
    std::cout << "{\"max_gap\": " << fmt(rep.max_gap)
              << ", \"budget\": " << fmt(rep.budget)
              << ", \"pass\": " << (rep.pass ? "true" : "false") << "}\n";
    return rep.pass ? 0 : kExitViolation;
  }
  if (check == "hessian") {
    const auto rep = hessian_bound_check(f, sample_points(f.n(), 50, seed), d);
    std::cout << "{\"max_offdiag\": " << fmt(rep.max_offdiag)
              << ", \"bound\": " << fmt(rep.bound)
              << ", \"pass\": " << (rep.pass ? "true" : "false") << "}\n";
    return rep.pass ? 0 : kExitViolation;
  }
  // upconcave
  const auto rep = upconcavity_violation_sample(f, 10000, seed, d);
  std::cout << "{\"max_violation\": " << fmt(rep.max_violation)
            << ", \"budget\": " << fmt(rep.budget)
            << ", \"pass\": " << (rep.pass ? "true" : "false") << "}\n";
  return rep.pass ? 0 : kExitViolation;
}

int run_greedy(const std::string& path, int K, int L, bool all_bounds,
               const std::string& out) {
  const SetFunction f = load_set_function(path);
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  const BoundSuite suite = bound_suite(f, K, L);
  os << "greedy_value," << fmt(suite.greedy_value) << "\n";
  os << "opt_value," << fmt(suite.opt_value) << "\n";
  if (all_bounds) {
    // the nemhauser column is informational unless f is submodular
    const bool submod = certify_flags(f).submodular;
    for (const BoundReport& b : suite.bounds) {
      os << b.name << ",";
      if (b.applicable) os << fmt(b.value);
      os << "\n";
      if (b.name == "nemhauser" && !submod) continue;
      if (b.applicable && b.value > suite.greedy_value + 1e-9) {
        std::cerr << "bound " << b.name << " exceeds the greedy value\n";
        return kExitViolation;
      }
    }
  }
  return 0;
}

int run_cuts_cover(const std::string& path, unsigned long mask, double b,
                   double d_bound, const std::string& out) {
  const SetFunction f = load_set_function(path);
  std::vector<int> pi;
  for (int i = 0; i < f.n(); ++i) {
    if (!(mask & (1ul << i))) pi.push_back(i + 1);
  }
  const LinearCut cut =
      extended_cover_cut(f, static_cast<Mask>(mask), pi, b, d_bound);
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  os << cut_to_json(cut) << "\n";
  return cut.certificate.valid ? 0 : kExitViolation;
}

int run_cuts_epigraph(double p, const std::vector<double>& c, double sigma,
                      const std::string& out) {
  EpigraphInstance inst;
  inst.phi_kind = "power";
  inst.p = p;
  inst.phi = [p](double z) { return std::pow(z, p); };
  inst.c = Eigen::Map<const Eigen::VectorXd>(c.data(), c.size());
  inst.sigma = sigma;
  const SetFunction g = epigraph_set_function(inst);
  const double d = marginal_violation(g).value;
  std::vector<int> perm(g.n());
  for (int i = 0; i < g.n(); ++i) perm[i] = i + 1;
  const LinearCut cut =
      epigraph_cut(inst, gamma_of_perm(g, perm), std::max(0.0, d));
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  os << cut_to_json(cut) << "\n";
  return cut.certificate.valid ? 0 : kExitViolation;
}

int run_demo_ask(const std::string& out) {
  const AskInstance data = ask_data();
  const KnapsackInstance inst = build_ask();
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  const Mask cover = 0b1111;  // {1,2,3,4}
  os << "cover {1,2,3,4}: f = " << fmt(inst.f(cover))
     << ", minimal = " << (is_minimal_cover(inst.f, cover, inst.b) ? "yes"
                                                                   : "no")
     << "\n";
  const LinearCut cut =
      extended_cover_cut(inst.f, cover, {5, 6}, inst.b, ask_D_bound(data));
  os << cut_to_json(cut) << "\n";
  const auto [opt_mask, opt_obj] = knapsack_brute_force(inst);
  os << "knapsack optimum mask " << opt_mask << " objective " << fmt(opt_obj)
     << "\n";
  Eigen::VectorXd frac(6);
  frac << 1.0 / 30.0, 1, 1, 1, 0, 1;
  const auto rep = point_checks(
      inst, [&](const Eigen::VectorXd& x) { return ask_continuous(data, x); },
      frac, {cut});
  os << "fractional point objective " << fmt(rep.objective) << ", violates "
     << rep.violated_cuts.size() << " cut(s)\n";
  return cut.certificate.valid ? 0 : kExitViolation;
}

int run_demo_cuflp(const std::string& out) {
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  const SetFunction h = cuflp_table(build_cuflp(1.0));
  CuflpInstance base = build_cuflp(1.0);
  base.u.setZero();
  const SetFunction f0 = cuflp_table(base);
  const BoundSuite suite = bound_suite(h, 4, 4);
  os << "greedy value " << fmt(suite.greedy_value) << ", optimum "
     << fmt(suite.opt_value) << "\n";
  for (const BoundReport& b : suite.bounds) {
    os << b.name << " ";
    if (b.applicable) os << fmt(b.value);
    else os << "n/a";
    os << "\n";
  }
  os << "min eps vs plain facility location: "
     << fmt(min_eps_for_pair(h, f0)) << "\n";
  return 0;
}

void write_bounds_csv(std::ostream& os, const std::vector<double>& t_list,
                      int k_max) {
  os << "t,K,L,greedy_value,opt_value,nemhauser,delta,local_delta,indicator,"
        "ratio,index,horel\n";
  for (double t : t_list) {
    const SetFunction h = cuflp_table(build_cuflp(t));
    CuflpInstance base = build_cuflp(t);
    base.u.setZero();
    const SetFunction f0 = cuflp_table(base);
    const double eps = min_eps_for_pair(h, f0);
    for (int k = 1; k <= k_max; ++k) {
      const SetFunction* g = (eps > 0.0 && eps < 1.0) ? &f0 : nullptr;
      std::optional<double> eps_opt;
      if (g != nullptr) eps_opt = eps;
      const BoundSuite suite = bound_suite(h, k, k, g, eps_opt);
      os << fmt(t) << "," << k << "," << k << ","
         << fmt(suite.greedy_value) << "," << fmt(suite.opt_value);
      for (const char* name : {"nemhauser", "delta", "local_delta",
                               "indicator", "ratio", "index", "horel"}) {
        os << ",";
        for (const BoundReport& b : suite.bounds) {
          if (b.name == name && b.applicable) {
            os << fmt(b.value);
            break;
          }
        }
      }
      os << "\n";
    }
  }
}

int run_experiment_bounds(const std::string& out) {
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  write_bounds_csv(os, {0.25, 0.5, 1.0, 2.0}, 7);
  return 0;
}

int run_experiment_multilinear(const std::string& out, int grid) {
  const std::vector<double> bonuses = {0.0, 100.0, 800.0};
  for (double bonus : bonuses) {
    CuflpInstance inst = build_cuflp(1.0);
    inst.u(5, 6) = bonus;
    const SetFunction h = cuflp_table(inst);
    const std::string tag = fmt(bonus);
    const std::string base = out.empty() ? std::string("multilinear") : out;
    {
      std::ofstream gf(base + "_grid_" + tag + ".csv");
      gf << "x6,x7,value\n";
      for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
          HypercubePoint x = HypercubePoint::Zero(7);
          x(0) = 1.0;
          x(1) = 1.0;
          x(5) = static_cast<double>(i) / (grid - 1);
          x(6) = static_cast<double>(j) / (grid - 1);
          gf << fmt(x(5)) << "," << fmt(x(6)) << ","
             << fmt(multilinear_eval(h, x)) << "\n";
        }
      }
    }
    {
      std::ofstream sf(base + "_slice_" + tag + ".csv");
      sf << "lambda,value\n";
      for (int i = 0; i < grid; ++i) {
        const double lam = static_cast<double>(i) / (grid - 1);
        HypercubePoint x = HypercubePoint::Zero(7);
        x(0) = 1.0;
        x(1) = 1.0;
        x(5) = lam;
        x(6) = lam;
        sf << fmt(lam) << "," << fmt(multilinear_eval(h, x)) << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for approximately submodular set functions"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
  app.add_option("--seed", seed, "PRNG seed");
  app.add_option("--threads", threads, "worker threads (1 = serial)");
  app.add_option("--out", out, "output path (default stdout)");

  std::string fn_path, check = "sandwich";
  std::vector<std::string> which_metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "submodularity metrics");
  metrics_cmd->add_option("fn", fn_path, "set-function json")->required();
  metrics_cmd->add_option("--metric", which_metrics, "metric names");

  auto* ext_cmd = app.add_subcommand("extensions", "extension checks");
  std::string ext_path;
  ext_cmd->add_option("fn", ext_path, "set-function json")->required();
  ext_cmd->add_option("--check", check, "sandwich|upconcave|hessian")
      ->check(CLI::IsMember({"sandwich", "upconcave", "hessian"}));

  auto* greedy_cmd = app.add_subcommand("greedy", "greedy with bounds");
  std::string greedy_path, bounds_mode = "all";
  int K = 1, L = 1;
  greedy_cmd->add_option("fn", greedy_path, "set-function json")->required();
  greedy_cmd->add_option("-K", K, "cardinality bound")->required();
  greedy_cmd->add_option("-L", L, "iterations")->required();
  greedy_cmd->add_option("--bounds", bounds_mode, "all");

  auto* cuts_cmd = app.add_subcommand("cuts", "valid inequalities");
  cuts_cmd->require_subcommand(1);
  auto* cover_cmd = cuts_cmd->add_subcommand("cover", "extended cover cut");
  std::string cover_path;
  unsigned long cover_mask = 0;
  double cover_b = 0.0, cover_dbound = 0.0;
  cover_cmd->add_option("fn", cover_path, "set-function json")->required();
  cover_cmd->add_option("--set", cover_mask, "cover bitmask")->required();
  cover_cmd->add_option("--budget", cover_b, "knapsack budget")->required();
  cover_cmd->add_option("--dbound", cover_dbound, "bound on D[f]")
      ->required();
  auto* epi_cmd = cuts_cmd->add_subcommand("epigraph", "epigraph cut");
  double epi_p = 2.0, epi_sigma = 0.0;
  std::vector<double> epi_c;
  epi_cmd->add_option("--p", epi_p, "power exponent");
  epi_cmd->add_option("--c", epi_c, "linear coefficients")->required();
  epi_cmd->add_option("--sigma", epi_sigma, "offset");

  auto* demo_cmd = app.add_subcommand("demo", "built-in instances");
  std::string demo_which;
  demo_cmd->add_option("which", demo_which, "ask|cuflp")
      ->required()
      ->check(CLI::IsMember({"ask", "cuflp"}));

  auto* exp_cmd = app.add_subcommand("experiment", "reproduction runs");
  std::string exp_which;
  int grid = 21;
  exp_cmd->add_option("which", exp_which, "bounds|multilinear")
      ->required()
      ->check(CLI::IsMember({"bounds", "multilinear"}));
  exp_cmd->add_option("--grid", grid, "grid resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (metrics_cmd->parsed()) return run_metrics(fn_path, which_metrics, out);
    if (ext_cmd->parsed()) return run_extensions(ext_path, check, seed);
    if (greedy_cmd->parsed()) {
      return run_greedy(greedy_path, K, L, bounds_mode == "all", out);
    }
    if (cuts_cmd->parsed()) {
      if (cover_cmd->parsed()) {
        return run_cuts_cover(cover_path, cover_mask, cover_b, cover_dbound,
                              out);
      }
      return run_cuts_epigraph(epi_p, epi_c, epi_sigma, out);
    }
    if (demo_cmd->parsed()) {
      return demo_which == "ask" ? run_demo_ask(out) : run_demo_cuflp(out);
    }
    if (exp_cmd->parsed()) {
      return exp_which == "bounds" ? run_experiment_bounds(out)
                                   : run_experiment_multilinear(out, grid);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::SandwichViolation:
      case ErrorCode::BoundViolation:
      case ErrorCode::NotCertified:
        return kExitViolation;
      default:
        return kExitInvalidInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return 0;
}
