// Copyright 2026 The hmap authors
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

// Command-line front end: every library operation behind a subcommand,
// emitting JSON (full round-trip precision) or CSV/text (15 significant
// digits).  Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hmap/serialize.hpp"
#include "hmap/verify.hpp"
#include "json.hpp"

namespace {

using hmap::BoundarySpec;
using hmap::CircleGrid;
using hmap::CoeffTable;
using hmap::Complex;
using hmap::RadiusReport;
using json = nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return kInf;
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw UsageError("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw UsageError("exponent must be a real number or 'inf', got '" + text +
                     "'");
  }
}

json exponent_json(double p) {
  return std::isinf(p) ? json("inf") : json(p);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::vector<double> parse_r_grid(const std::string& text) {
  double start = 0, stop = 0, step = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
      step <= 0) {
    throw UsageError("--r-grid wants start:stop:step with step > 0");
  }
  std::vector<double> values;
  // Endpoints are included within half a step, so row counts reproduce.
  for (double r = start; r <= stop + 0.5 * step; r += step) {
    values.push_back(r);
  }
  return values;
}

Complex parse_point(const std::string& text) {
  double re = 0, im = 0;
  const int got = std::sscanf(text.c_str(), "%lf,%lf", &re, &im);
  if (got < 1) throw UsageError("--z wants re[,im]");
  return {re, got == 2 ? im : 0.0};
}

std::string fmt15(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", v);
  return buffer;
}

// Shared output state.
struct Emitter {
  std::string format = "json";
  std::string out_path;

  void write(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream file(out_path);
    if (!file) throw UsageError("cannot write '" + out_path + "'");
    file << text;
  }
};

std::string render_reports(const std::vector<RadiusReport>& reports,
                           const std::string& format) {
  if (format == "csv") {
    std::string out = "name,value,method,residual\n";
    for (const auto& r : reports) {
      const char* method = r.method == hmap::RadiusMethod::kClosedForm
                               ? "closed_form"
                               : r.method == hmap::RadiusMethod::kBisection
                                     ? "bisection"
                                     : "sampled";
      out += r.name + "," + fmt15(r.value) + "," + method + "," +
             fmt15(r.residual) + "\n";
    }
    return out;
  }
  if (format == "text") {
    std::string out;
    for (const auto& r : reports) {
      out += r.name + " = " + fmt15(r.value) +
             "  (residual " + fmt15(r.residual);
      for (const auto& flag : r.flags) out += ", " + flag;
      out += ")\n";
    }
    return out;
  }
  if (reports.size() == 1) return hmap::to_json(reports[0]) + "\n";
  std::string out = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += ",";
    out += hmap::to_json(reports[i]);
  }
  return out + "]\n";
}

// Boundary handling shared by coeffs / majorant / poisson / empirical-bohr.
struct BoundaryArgs {
  std::string boundary_path;
  std::string table_path;
  int N = 0;  // 0 = auto
  std::size_t grid_nodes = CircleGrid::kDefaultNodes;
  std::string p_text;
  bool force_quadrature = false;

  bool has_boundary() const { return !boundary_path.empty(); }
  bool has_table() const { return !table_path.empty(); }

  std::optional<double> exponent() const {
    if (p_text.empty()) return std::nullopt;
    return parse_exponent(p_text);
  }

  // The closed-form route serves the extremal family unless quadrature is
  // forced; jumps make the grid DFT a poor source for sharp constants.
  CoeffTable load_table() const {
    if (has_table() == has_boundary()) {
      throw UsageError("need exactly one of --boundary and --table");
    }
    if (has_table()) return hmap::table_from_json(read_input(table_path));
    const BoundarySpec spec =
        hmap::boundary_from_json(read_input(boundary_path));
    if (const auto* e = spec.get_if<hmap::ExtremalBoundary>();
        e && !force_quadrature) {
      const int n = N > 0 ? N : 401;
      return hmap::extremal_coeffs(e->n, e->M, e->alpha, e->beta,
                                   std::max(n, e->n));
    }
    const CircleGrid grid(grid_nodes);
    return hmap::coeff_table(spec, N > 0 ? N : 256, grid, exponent());
  }
};

void register_boundary_flags(CLI::App* cmd, BoundaryArgs& args,
                             bool with_table) {
  cmd->add_option("--boundary", args.boundary_path,
                  "boundary spec JSON (path or '-' for stdin)");
  if (with_table) {
    cmd->add_option("--table", args.table_path,
                    "coefficient table JSON (path or '-')");
  }
  cmd->add_option("--N", args.N, "series truncation (0 = default)");
  cmd->add_option("--grid", args.grid_nodes,
                  "quadrature nodes (power of two >= 16)");
  cmd->add_option("--p", args.p_text,
                  "boundary exponent for tail bounds ('inf' allowed)");
  cmd->add_flag("--quadrature", args.force_quadrature,
                "force the grid DFT even for the extremal family");
}

int run(int argc, char** argv) {
  CLI::App app{
      "Bohr radii and Landau-type constants for harmonic mappings on the "
      "unit disk"};
  app.require_subcommand(1);

  Emitter emitter;
  app.add_option("--format", emitter.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", emitter.out_path, "write output to a file");

  // cq ----------------------------------------------------------------
  auto* cq_cmd = app.add_subcommand("cq", "coefficient-bound constant C_q");
  std::string cq_q, cq_p;
  int cq_n = 1;
  std::size_t cq_grid = CircleGrid::kDefaultNodes;
  cq_cmd->add_option("--q", cq_q, "exponent q >= 1 or 'inf'");
  cq_cmd->add_option("--p", cq_p, "alternatively p; q is its conjugate");
  cq_cmd->add_option("--n", cq_n, "frequency used in the n-independence check");
  cq_cmd->add_option("--grid", cq_grid, "quadrature nodes");

  // radius subcommands --------------------------------------------------
  auto* bohr_bounded_cmd =
      app.add_subcommand("bohr-bounded", "Bohr radius of the bounded class");
  double bb_a = 0.0;
  bohr_bounded_cmd->add_option("--a", bb_a, "|a_0| = a M, a in [0,1]")
      ->capture_default_str();

  auto* bohr_lp_cmd =
      app.add_subcommand("bohr-lp", "Bohr radius of the L^p boundary class");
  std::string bl_p;
  bohr_lp_cmd->add_option("--p", bl_p, "exponent p >= 1 or 'inf'")
      ->required();

  auto* landau_lp_cmd =
      app.add_subcommand("landau-lp", "univalence and schlicht radii (L^p)");
  std::string ll_p;
  double ll_norm = 1.0;
  landau_lp_cmd->add_option("--p", ll_p, "exponent")->required();
  landau_lp_cmd->add_option("--norm", ll_norm, "||F||_p")->required();

  auto* landau_classical_cmd =
      app.add_subcommand("landau-classical", "classical Landau constants");
  double lc_M = 1.0;
  landau_classical_cmd->add_option("--M", lc_M, "sup bound M >= 1")
      ->required();

  auto* landau_c_cmd = app.add_subcommand(
      "landau-c", "Landau constants for bounded harmonic maps, J_f(0) = 1");
  double lb_M = 1.0;
  landau_c_cmd->add_option("--M", lb_M, "sup bound M > 0")->required();

  auto* landau_d_cmd = app.add_subcommand(
      "landau-d", "Landau constants under a Lipschitz bound on Lambda_f");
  double ld_lambda = 1.0;
  landau_d_cmd->add_option("--lambda", ld_lambda, "Lambda bound >= 1")
      ->required();

  // table-driven subcommands -------------------------------------------
  auto* coeffs_cmd =
      app.add_subcommand("coeffs", "coefficient table of a boundary function");
  BoundaryArgs coeffs_args;
  register_boundary_flags(coeffs_cmd, coeffs_args, /*with_table=*/false);

  auto* majorant_cmd =
      app.add_subcommand("majorant", "majorant curve M_f(r) with tail bounds");
  BoundaryArgs majorant_args;
  register_boundary_flags(majorant_cmd, majorant_args, /*with_table=*/true);
  std::string mj_r_grid = "0:0.9:0.01";
  majorant_cmd->add_option("--r-grid", mj_r_grid, "start:stop:step")
      ->capture_default_str();

  auto* poisson_cmd =
      app.add_subcommand("poisson", "harmonic extension at one interior point");
  BoundaryArgs poisson_args;
  register_boundary_flags(poisson_cmd, poisson_args, /*with_table=*/false);
  std::string po_z;
  poisson_cmd->add_option("--z", po_z, "evaluation point re[,im]")->required();

  auto* empirical_cmd = app.add_subcommand(
      "empirical-bohr", "largest r with majorant + tail <= bound, bisected");
  BoundaryArgs empirical_args;
  register_boundary_flags(empirical_cmd, empirical_args, /*with_table=*/true);
  double eb_bound = 1.0;
  double eb_tol = 1e-12;
  empirical_cmd->add_option("--M", eb_bound, "majorant bound")
      ->capture_default_str();
  empirical_cmd->add_option("--tol", eb_tol, "bisection tolerance")
      ->capture_default_str();

  // verify ---------------------------------------------------------------
  auto* verify_cmd =
      app.add_subcommand("verify", "randomized property suite, JSON lines");
  hmap::VerifyConfig verify_cfg;
  std::vector<std::string> verify_p;
  verify_cmd->add_option("--seed", verify_cfg.seed, "RNG seed")
      ->capture_default_str();
  verify_cmd->add_option("--trials", verify_cfg.trials, "trial count")
      ->capture_default_str();
  verify_cmd->add_option("--N", verify_cfg.N, "coefficient truncation")
      ->capture_default_str();
  verify_cmd
      ->add_option("--grid", verify_cfg.grid_nodes, "quadrature nodes")
      ->capture_default_str();
  verify_cmd->add_option("--tol", verify_cfg.tolerance, "check tolerance")
      ->capture_default_str();
  verify_cmd
      ->add_option("--p", verify_p,
                   "exponent grid, comma separated ('inf' allowed)")
      ->delimiter(',');

  // Global --format/--out may appear after the subcommand name.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help is fine; anything else is usage
  }

  if (cq_cmd->parsed()) {
    if (cq_q.empty() == cq_p.empty()) {
      throw UsageError("cq wants exactly one of --q and --p");
    }
    const double q = cq_q.empty()
                         ? hmap::conjugate_exponent(parse_exponent(cq_p))
                         : parse_exponent(cq_q);
    const double value = hmap::cq_constant(cq_n, q, CircleGrid(cq_grid));
    if (emitter.format == "text") {
      emitter.write("C_q = " + fmt15(value) + "\n");
    } else if (emitter.format == "csv") {
      emitter.write("name,n,q,value\nC_q," + std::to_string(cq_n) + "," +
                    (std::isinf(q) ? "inf" : fmt15(q)) + "," + fmt15(value) +
                    "\n");
    } else {
      json j;
      j["name"] = "C_q";
      j["n"] = cq_n;
      j["q"] = exponent_json(q);
      j["value"] = value;
      emitter.write(j.dump() + "\n");
    }
    return 0;
  }

  if (bohr_bounded_cmd->parsed()) {
    emitter.write(render_reports({hmap::bohr_bounded(bb_a)}, emitter.format));
    return 0;
  }
  if (bohr_lp_cmd->parsed()) {
    emitter.write(render_reports({hmap::bohr_lp(parse_exponent(bl_p))},
                                 emitter.format));
    return 0;
  }
  if (landau_lp_cmd->parsed()) {
    const auto result = hmap::landau_lp(parse_exponent(ll_p), ll_norm);
    emitter.write(render_reports({result.r0, result.R0}, emitter.format));
    return 0;
  }
  if (landau_classical_cmd->parsed()) {
    const auto result = hmap::landau_classical(lc_M);
    emitter.write(render_reports({result.r0, result.sigma0}, emitter.format));
    return 0;
  }
  if (landau_c_cmd->parsed()) {
    const auto result = hmap::landau_grigoryan_bounded(lb_M);
    emitter.write(render_reports({result.rho1, result.R1}, emitter.format));
    return 0;
  }
  if (landau_d_cmd->parsed()) {
    const auto result = hmap::landau_grigoryan_lipschitz(ld_lambda);
    emitter.write(render_reports({result.rho2, result.R2}, emitter.format));
    return 0;
  }

  if (coeffs_cmd->parsed()) {
    if (!coeffs_args.has_boundary()) {
      throw UsageError("coeffs wants --boundary");
    }
    const CoeffTable table = coeffs_args.load_table();
    if (emitter.format == "csv") {
      std::string out = "n,a_re,a_im,b_re,b_im\n";
      for (int k = 0; k <= table.truncation(); ++k) {
        out += std::to_string(k) + "," + fmt15(table.a[k].real()) + "," +
               fmt15(table.a[k].imag()) + "," + fmt15(table.b[k].real()) +
               "," + fmt15(table.b[k].imag()) + "\n";
      }
      emitter.write(out);
    } else {
      emitter.write(hmap::to_json(table) + "\n");
    }
    return 0;
  }

  if (majorant_cmd->parsed()) {
    const CoeffTable table = majorant_args.load_table();
    const std::vector<double> r_values = parse_r_grid(mj_r_grid);
    if (emitter.format == "json") {
      json rows = json::array();
      for (double r : r_values) {
        const hmap::MajorantValue m = hmap::majorant(table, r);
        rows.push_back({{"r", r}, {"value", m.value}, {"tail", m.tail}});
      }
      emitter.write(rows.dump() + "\n");
    } else {
      emitter.write(hmap::majorant_csv(table, r_values));
    }
    return 0;
  }

  if (poisson_cmd->parsed()) {
    if (!poisson_args.has_boundary()) {
      throw UsageError("poisson wants --boundary");
    }
    const BoundarySpec spec =
        hmap::boundary_from_json(read_input(poisson_args.boundary_path));
    const Complex z = parse_point(po_z);
    const Complex value =
        hmap::poisson_extend(spec, z, CircleGrid(poisson_args.grid_nodes));
    if (emitter.format == "text") {
      emitter.write("f(z) = " + fmt15(value.real()) + " + " +
                    fmt15(value.imag()) + "i\n");
    } else if (emitter.format == "csv") {
      emitter.write("z_re,z_im,re,im\n" + fmt15(z.real()) + "," +
                    fmt15(z.imag()) + "," + fmt15(value.real()) + "," +
                    fmt15(value.imag()) + "\n");
    } else {
      json j;
      j["z"] = {z.real(), z.imag()};
      j["value"] = {value.real(), value.imag()};
      emitter.write(j.dump() + "\n");
    }
    return 0;
  }

  if (empirical_cmd->parsed()) {
    const CoeffTable table = empirical_args.load_table();
    emitter.write(render_reports(
        {hmap::empirical_bohr(table, eb_bound, eb_tol)}, emitter.format));
    return 0;
  }

  if (verify_cmd->parsed()) {
    if (!verify_p.empty()) {
      verify_cfg.p_grid.clear();
      for (const auto& text : verify_p) {
        verify_cfg.p_grid.push_back(parse_exponent(text));
      }
    }
    const auto verdicts = hmap::run_default_suite(verify_cfg);
    std::string out;
    bool all_pass = true;
    if (emitter.format == "csv") {
      out = "property_name,pass_count,fail_count,worst_margin\n";
    }
    for (const auto& verdict : verdicts) {
      all_pass = all_pass && verdict.fail_count == 0;
      if (emitter.format == "csv") {
        out += verdict.property_name + "," +
               std::to_string(verdict.pass_count) + "," +
               std::to_string(verdict.fail_count) + "," +
               fmt15(verdict.worst_margin) + "\n";
      } else if (emitter.format == "text") {
        out += verdict.property_name + ": " +
               std::to_string(verdict.pass_count) + " pass, " +
               std::to_string(verdict.fail_count) + " fail, worst margin " +
               fmt15(verdict.worst_margin) + "\n";
      } else {
        out += hmap::to_json(verdict) + "\n";
      }
    }
    emitter.write(out);
    return all_pass ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hmap::Error& e) {
    if (e.name() == "MalformedJson") {
      std::cerr << "usage error: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
