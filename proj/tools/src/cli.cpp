// Copyright 2026 The Staircase Spectra Authors
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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "staircase/charpoly.hpp"
#include "staircase/core_matrix.hpp"
#include "staircase/errors.hpp"
#include "staircase/family.hpp"
#include "staircase/graph.hpp"
#include "staircase/json_io.hpp"
#include "staircase/layers.hpp"
#include "staircase/plot.hpp"
#include "staircase/sequences.hpp"
#include "staircase/spectra.hpp"
#include "verify.hpp"

namespace staircase::cli {
namespace {

struct Grid {
  int n = 0;
  int r = 0;
};

void add_grid(CLI::App* cmd, Grid& g) {
  cmd->add_option("n", g.n, "polygon size (n >= 3)")->required();
  cmd->add_option("r", g.r, "number of glued cycles (r >= 1)")->required();
}

void write_output(const std::string& text, const std::string& dir, const std::string& file, std::ostream& out) {
  if (dir.empty()) {
    out << text;
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = std::filesystem::path(dir) / file;
  std::ofstream f(path);
  if (!f || !(f << text)) throw ParameterError("cannot write " + path.string());
  out << path.string() << "\n";
}

Json charpoly_route(const std::string& route, int n, int r, CharpolyMethod method) {
  if (route == "det") return polynomial_to_json(phi_via_determinant(n, r, method));
  if (route == "recursion") return polynomial_to_json(phi_via_recursion(n, r));
  return polynomial_to_json(phi_via_binomial(n, r));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of n-gonal staircase digraphs"};
  app.name("staircase");
  app.require_subcommand(1);
  app.set_version_flag("--version", "1.0.0");

  std::function<int()> action;
  CliConfig cfg;

  // build
  Grid build_grid;
  std::string build_format = "dot";
  auto* build = app.add_subcommand("build", "print the digraph as DOT or JSON");
  add_grid(build, build_grid);
  build->add_option("--format", build_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  build->callback([&] {
    action = [&] {
      const Digraph g = build_staircase({build_grid.n, build_grid.r});
      out << export_digraph(g, parse_digraph_format(build_format));
      if (build_format == "json") out << "\n";
      return kExitOk;
    };
  });

  // charpoly
  Grid cp_grid;
  std::string cp_route = "recursion";
  std::string cp_method = "flv";
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of A_{n,r} as ascending coefficients");
  add_grid(charpoly, cp_grid);
  charpoly->add_option("--route", cp_route, "det, recursion, binomial or all")
      ->check(CLI::IsMember({"det", "recursion", "binomial", "all"}));
  charpoly->add_option("--method", cp_method, "det route algorithm: flv or modular")
      ->check(CLI::IsMember({"flv", "modular"}));
  charpoly->callback([&] {
    action = [&] {
      validate({cp_grid.n, cp_grid.r});
      const auto method = cp_method == "flv" ? CharpolyMethod::kFaddeevLeVerrier : CharpolyMethod::kModularHessenberg;
      if (cp_route != "all") {
        out << charpoly_route(cp_route, cp_grid.n, cp_grid.r, method).dump() << "\n";
        return kExitOk;
      }
      Json j;
      for (const char* route : {"det", "recursion", "binomial"}) j[route] = charpoly_route(route, cp_grid.n, cp_grid.r, method);
      const bool agree = j["det"] == j["recursion"] && j["recursion"] == j["binomial"];
      j["agree"] = agree;
      out << j.dump() << "\n";
      if (!agree) {
        err << "error: charpoly routes disagree for (n, r) = (" << cp_grid.n << ", " << cp_grid.r << ")\n";
        return kExitInternal;
      }
      return kExitOk;
    };
  });

  // spectrum
  Grid sp_grid;
  std::string sp_out = "json";
  std::string sp_dir;
  std::optional<double> sp_tol;
  auto* spectrum = app.add_subcommand("spectrum", "full spectrum report as JSON, CSV or SVG");
  add_grid(spectrum, sp_grid);
  spectrum->add_option("--out", sp_out, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  spectrum->add_option("--output-dir", sp_dir, "write spectrum_n<n>_r<r>.<ext> here instead of stdout");
  spectrum->add_option("--tol", sp_tol, "root refinement tolerance")->check(CLI::PositiveNumber);
  spectrum->callback([&] {
    action = [&] {
      const double tol = sp_tol.value_or(cfg.root_tolerance.value_or(kDefaultRootTolerance));
      const std::string dir = sp_dir.empty() ? cfg.output_dir.value_or("") : sp_dir;
      const SpectrumReport rep = full_spectrum(sp_grid.n, sp_grid.r, tol);
      std::string text;
      if (sp_out == "json") text = spectrum_to_json(rep).dump(2) + "\n";
      else if (sp_out == "csv") text = spectrum_csv(rep);
      else text = spectrum_svg(rep);
      write_output(text, dir, "spectrum_n" + std::to_string(sp_grid.n) + "_r" + std::to_string(sp_grid.r) + "." + sp_out,
                   out);
      return kExitOk;
    };
  });

  // verify
  std::string v_n, v_r;
  std::optional<int> v_jobs, v_tn;
  auto* verify = app.add_subcommand("verify", "run the invariant suite over a parameter grid");
  verify->add_option("--n-range", v_n, "n range a..b (default 3..6)");
  verify->add_option("--r-range", v_r, "r range c..d (default 1..20)");
  verify->add_option("--jobs", v_jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--tn-max-dim", v_tn, "largest core dimension for the minor check")->check(CLI::PositiveNumber);
  verify->callback([&] {
    action = [&] {
      VerifyOptions opt;
      if (!v_n.empty()) opt.n = parse_range(v_n);
      else if (cfg.n_range) opt.n = parse_range(*cfg.n_range);
      if (!v_r.empty()) opt.r = parse_range(v_r);
      else if (cfg.r_range) opt.r = parse_range(*cfg.r_range);
      opt.jobs = v_jobs.value_or(cfg.jobs.value_or(1));
      opt.tn_max_dim = v_tn.value_or(cfg.tn_max_dim.value_or(kDefaultTnMaxDim));
      opt.root_tolerance = cfg.root_tolerance.value_or(kDefaultRootTolerance);
      const VerifyResult result = run_verify(opt);
      out << "grid n=" << opt.n.lo << ".." << opt.n.hi << " r=" << opt.r.lo << ".." << opt.r.hi
          << " jobs=" << opt.jobs << "\n";
      out << format_verify_table(result);
      if (const auto fail = result.first_failure()) {
        err << "verification failed at (n=" << fail->n << ", r=" << fail->r << ", " << fail->check
            << "): " << fail->detail << "\n";
        return kExitVerifyFailed;
      }
      return kExitOk;
    };
  });

  // classify
  Grid cl_grid;
  auto* classify = app.add_subcommand("classify", "rational nonzero eigenvalues of A_{n,r}");
  add_grid(classify, cl_grid);
  classify->callback([&] {
    action = [&] {
      const auto values = classify_rational_eigenvalues(cl_grid.n, cl_grid.r);
      out << Json{{"n", cl_grid.n}, {"r", cl_grid.r}, {"rational_eigenvalues", values}}.dump() << "\n";
      return kExitOk;
    };
  });

  // reconstruct
  std::string rc_file;
  auto* reconstruct = app.add_subcommand("reconstruct", "recover (n, r) from a characteristic polynomial");
  reconstruct->add_option("--coeffs", rc_file, "JSON file with ascending coefficients")->required();
  reconstruct->callback([&] {
    action = [&] {
      std::ifstream in(rc_file);
      if (!in) throw ParameterError("cannot open " + rc_file);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw FormatError(rc_file + ": " + e.what());
      }
      const StaircaseFingerprint fp = reconstruct_params(polynomial_from_json(j));
      out << Json{{"n", fp.n}, {"r", fp.r}}.dump() << "\n";
      return kExitOk;
    };
  });

  // sweep
  Grid sw_grid;
  auto* sweep = app.add_subcommand("sweep", "spectral radius of A_{n,r} for r = 1..r_max");
  sweep->add_option("n", sw_grid.n, "polygon size (n >= 3)")->required();
  sweep->add_option("r_max", sw_grid.r, "largest r")->required();
  sweep->callback([&] {
    action = [&] {
      const auto radii = radius_sweep(sw_grid.n, sw_grid.r);
      const double limit = confinement_radius(sw_grid.n);
      out << "r\trho\n" << std::setprecision(10);
      for (std::size_t i = 0; i < radii.size(); ++i) out << i + 1 << "\t" << radii[i] << "\n";
      out << "limit\t" << limit << "\n";
      out << "gap\t" << limit - radii.back() << "\n";
      return kExitOk;
    };
  });

  // sequences
  auto* sequences = app.add_subcommand("sequences", "Padovan numbers and k-Narayana polynomials");
  sequences->require_subcommand(1);
  long long pad_m = 0;
  auto* pad = sequences->add_subcommand("padovan", "P_m for any integer m");
  pad->add_option("m", pad_m, "index (may be negative)")->required();
  pad->callback([&] {
    action = [&] {
      out << Json{{"m", pad_m}, {"value", to_string(padovan(pad_m))}}.dump() << "\n";
      return kExitOk;
    };
  });
  int nar_m = 0;
  auto* nar = sequences->add_subcommand("narayana", "N_m(k) with its root data");
  nar->add_option("m", nar_m, "index m >= 1")->required()->check(CLI::PositiveNumber);
  nar->callback([&] {
    action = [&] {
      const NarayanaPoly p = narayana_poly(nar_m);
      const NarayanaRootPackage pkg = narayana_root_package(nar_m);
      out << Json{{"m", nar_m},
                  {"coefficients", polynomial_to_json(p.poly)},
                  {"poly", to_string(p.poly, "k")},
                  {"ord_k", pkg.ord_k},
                  {"rational_nonzero_roots", pkg.rational_nonzero_roots}}
                 .dump()
          << "\n";
      return kExitOk;
    };
  });

  // layers
  Grid ly_grid;
  auto* layers = app.add_subcommand("layers", "layer partition, permutation and blocks as JSON");
  add_grid(layers, ly_grid);
  layers->callback([&] {
    action = [&] {
      const Digraph g = build_staircase({ly_grid.n, ly_grid.r});
      const LayerPartition lp = layer_partition(g);
      out << layers_to_json(lp, block_cyclic_form(g, lp)).dump() << "\n";
      return kExitOk;
    };
  });

  // core
  Grid co_grid;
  std::optional<int> co_tn;
  auto* core = app.add_subcommand("core", "cyclic core with minor and irreducibility checks as JSON");
  add_grid(core, co_grid);
  core->add_option("--tn-max-dim", co_tn, "largest dimension for the minor check")->check(CLI::PositiveNumber);
  core->callback([&] {
    action = [&] {
      const Digraph g = build_staircase({co_grid.n, co_grid.r});
      const IntMatrix k = cyclic_core(block_cyclic_form(g, layer_partition(g)), 0);
      const int cap = co_tn.value_or(cfg.tn_max_dim.value_or(kDefaultTnMaxDim));
      Json j{{"n", co_grid.n},
             {"r", co_grid.r},
             {"core", matrix_to_json(k)},
             {"charpoly", polynomial_to_json(charpoly_exact(k))},
             {"zero_multiplicity", core_zero_multiplicity(k)},
             {"irreducible", is_irreducible(k)}};
      if (static_cast<int>(k.rows()) <= cap) {
        j["tn"] = tn_report_to_json(check_total_nonnegativity(k, cap));
      } else {
        j["tn"] = nullptr;
        j["tn_skipped"] = "dimension " + std::to_string(k.rows()) + " exceeds cap " + std::to_string(cap);
      }
      out << j.dump() << "\n";
      return kExitOk;
    };
  });

  std::vector<std::string> argv_storage{"staircase"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    cfg = config_from_environment();
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadParameters;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadParameters;
  }

  try {
    return action ? action() : kExitBadParameters;
  } catch (const ReconstructionError& e) {
    err << "rejected: " << e.what() << "\n";
    return kExitReconstructionRejected;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadParameters;
  } catch (const DimensionCapError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadParameters;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadParameters;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace staircase::cli
