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

#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "staircase/charpoly.hpp"
#include "staircase/errors.hpp"
#include "staircase/family.hpp"
#include "staircase/graph.hpp"
#include "staircase/layers.hpp"
#include "staircase/sequences.hpp"
#include "staircase/spectra.hpp"

namespace staircase::cli {
namespace {

constexpr double kLiftResidualLimit = 1e-6;
constexpr int kHMax = 60;
constexpr int kNarayanaMax = 25;
constexpr long long kPadovanWindow = 60;

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParameterError("not an integer: \"" + std::string(text) + "\"");
  return value;
}

// Operation log for one check; merged into the result afterwards.
class Ops {
 public:
  void use(const char* module, const char* op) { used_.insert(std::string(module) + "." + op); }
  const std::set<std::string>& used() const { return used_; }

 private:
  std::set<std::string> used_;
};

// Thrown inside a check to report a failed expectation with a message.
struct CheckFailed {
  std::string detail;
};

void expect(bool condition, const std::string& detail) {
  if (!condition) throw CheckFailed{detail};
}

struct Cell {
  int n;
  int r;
  int tn_max_dim;
  double tol;
  Digraph g;
  LayerPartition lp;
  BlockCyclicForm bf;
  IntMatrix core{{1}};
  IntPolynomial phi;
};

using CellCheck = std::function<void(Cell&, Ops&)>;

void check_graph(Cell& c, Ops& ops) {
  ops.use("graph_builder", "build_staircase");
  c.g = build_staircase({c.n, c.r});
  expect(c.g.num_vertices == vertex_count({c.n, c.r}), "vertex count");
  expect(static_cast<int>(c.g.edges.size()) == edge_count({c.n, c.r}), "edge count");
  ops.use("graph_builder", "is_strongly_connected");
  expect(is_strongly_connected(c.g), "not strongly connected");
  ops.use("graph_builder", "export_digraph");
  ops.use("graph_builder", "parse_digraph_json");
  expect(parse_digraph_json(export_digraph(c.g, DigraphFormat::kJson)) == c.g, "JSON round trip");
  const std::string dot = export_digraph(c.g, DigraphFormat::kDot);
  expect(std::count(dot.begin(), dot.end(), '\n') == static_cast<long>(c.g.edges.size()) + 2, "DOT line count");
}

void check_layers(Cell& c, Ops& ops) {
  ops.use("layer_blocks", "layer_partition");
  c.lp = layer_partition(c.g);
  ops.use("layer_blocks", "verify_layer_increment");
  expect(verify_layer_increment(c.g, c.lp), "layer increment");
  ops.use("layer_blocks", "block_cyclic_form");
  c.bf = block_cyclic_form(c.g, c.lp);
  ops.use("graph_builder", "adjacency_matrix");
  ops.use("layer_blocks", "reassemble_adjacency");
  expect(reassemble_adjacency(c.bf) == adjacency_matrix(c.g), "block form does not reassemble to A");
}

void check_bidiagonal(Cell& c, Ops& ops) {
  ops.use("layer_blocks", "verify_bidiagonal");
  expect(verify_bidiagonal(c.bf), "a block is not bidiagonal");
}

void check_routes(Cell& c, Ops& ops) {
  ops.use("charpoly_family", "phi_via_recursion");
  c.phi = phi_via_recursion(c.n, c.r);
  ops.use("charpoly_family", "phi_via_binomial");
  expect(phi_via_binomial(c.n, c.r) == c.phi, "binomial route differs from recursion");
  ops.use("exact_poly", "charpoly_exact");
  const IntMatrix a = adjacency_matrix(c.g);
  expect(charpoly_exact(a, CharpolyMethod::kFaddeevLeVerrier) == c.phi, "det(xI - A) differs from recursion");
  expect(charpoly_exact(a, CharpolyMethod::kModularHessenberg) == c.phi, "modular charpoly differs from recursion");
}

void check_counts(Cell& c, Ops& ops) {
  ops.use("exact_poly", "ord_at_zero");
  const long long ord = ord_at_zero(c.phi);
  ops.use("charpoly_family", "zero_multiplicity_formula");
  expect(ord == zero_multiplicity_formula(c.n, c.r), "ord_x Phi differs from the zero multiplicity formula");
  ops.use("charpoly_family", "nonzero_count");
  expect(c.phi.degree() - ord == nonzero_count(c.n, c.r), "nonzero count");
  expect(lowest_coefficient(c.n, c.r) != 0, "lowest coefficient vanishes");
}

void check_core(Cell& c, Ops& ops) {
  ops.use("core_matrix", "cyclic_core");
  c.core = cyclic_core(c.bf, 0);
  expect(c.core.all_nonnegative(), "core has a negative entry");
  ops.use("core_matrix", "is_irreducible");
  expect(is_irreducible(c.core), "core is reducible");
  if (static_cast<int>(c.core.rows()) <= c.tn_max_dim) {
    ops.use("core_matrix", "check_total_nonnegativity");
    const TNReport tn = check_total_nonnegativity(c.core, c.tn_max_dim);
    expect(tn.all_nonnegative, "negative minor of order " + std::to_string(tn.witness ? tn.witness->rows.size() : 0));
  }
}

void check_reduction(Cell& c, Ops& ops) {
  ops.use("charpoly_family", "reduction_exponent");
  const long long nu = reduction_exponent(c.phi, c.core, c.n);
  ops.use("core_matrix", "core_zero_multiplicity");
  const long long mult = core_zero_multiplicity(c.core);
  expect(ord_at_zero(c.phi) == nu + c.n * mult, "ord_x Phi != nu + n mult_0(K)");
}

void check_phi_h(Cell& c, Ops& ops) {
  ops.use("charpoly_family", "h_polynomial");
  ops.use("charpoly_family", "verify_phi_h_identity");
  expect(verify_phi_h_identity(c.n, c.r), "Phi is not the H_{r+2} expansion");
}

void check_spectrum(Cell& c, Ops& ops) {
  ops.use("spectra", "full_spectrum");
  ops.use("spectra", "core_eigenvalues");
  ops.use("spectra", "lift_ngons");
  ops.use("exact_poly", "isolate_positive_roots");
  ops.use("exact_poly", "refine_root");
  const SpectrumReport rep = full_spectrum(c.n, c.r, c.tol);
  std::vector<RationalInterval> intervals;
  for (const auto& e : rep.core_eigenvalues) intervals.push_back(e.interval);
  expect(pairwise_disjoint(intervals), "isolating intervals overlap");
  const IntPolynomial char_k = charpoly_exact(c.core);
  ops.use("exact_poly", "sturm_count");
  expect(sturm_count(char_k, 0, tran_bound()) == static_cast<long long>(intervals.size()),
         "Sturm count on (0, 27/4] differs from the isolated root count");
  for (const auto& p : rep.packets) {
    expect(static_cast<int>(p.vertices.size()) == c.n, "packet size");
    expect(p.vertices[0].real() > 0 && std::abs(p.vertices[0].imag()) < 1e-9, "no vertex on the positive axis");
    const bool has_negative_axis = std::any_of(p.vertices.begin(), p.vertices.end(), [](const auto& v) {
      return v.real() < 0 && std::abs(v.imag()) < 1e-9;
    });
    expect(has_negative_axis == (c.n % 2 == 0), "parity of the negative-axis vertex");
  }
  expect(lifted_root_residual(c.phi, rep.packets) < kLiftResidualLimit, "lifted points are not roots of Phi");
  ops.use("spectra", "tran_certificate");
  expect(tran_certificate(c.core) && rep.tran_certified(), "Tran certificate failed");
}

void check_padovan(Cell& c, Ops& ops) {
  ops.use("sequences", "phi_at_one");
  phi_at_one(c.n, c.r);
  ops.use("sequences", "classify_rational_eigenvalues");
  const auto rational = classify_rational_eigenvalues(c.n, c.r);
  expect(rational.empty() == (c.r != 1 && c.r != 10), "rational eigenvalues outside r in {1, 10}");
}

void check_reconstruct(Cell& c, Ops& ops) {
  ops.use("charpoly_family", "reconstruct_params");
  const StaircaseFingerprint fp = reconstruct_params(c.phi);
  expect(fp.n == c.n && fp.r == c.r, "reconstruction returned the wrong (n, r)");
}

const std::vector<std::pair<std::string, CellCheck>>& cell_checks() {
  static const std::vector<std::pair<std::string, CellCheck>> checks{
      {"graph", check_graph},         {"layers", check_layers},       {"bidiagonal", check_bidiagonal},
      {"routes", check_routes},       {"counts", check_counts},       {"core", check_core},
      {"reduction", check_reduction}, {"phi_h", check_phi_h},         {"spectrum", check_spectrum},
      {"padovan", check_padovan},     {"reconstruct", check_reconstruct},
  };
  return checks;
}

using GlobalCheck = std::function<void(const VerifyOptions&, Ops&)>;

const std::vector<std::pair<std::string, GlobalCheck>>& global_checks() {
  static const std::vector<std::pair<std::string, GlobalCheck>> checks{
      {"h_at_4_27",
       [](const VerifyOptions&, Ops& ops) {
         ops.use("charpoly_family", "h_at_4_27");
         for (int m = 0; m <= kHMax; ++m) expect(h_at_4_27(m) == h_at_4_27_closed_form(m), "m = " + std::to_string(m));
       }},
      {"padovan_zeros",
       [](const VerifyOptions&, Ops& ops) {
         ops.use("sequences", "padovan");
         ops.use("sequences", "padovan_zero_indices");
         expect(padovan_zeros_in_window(-kPadovanWindow, kPadovanWindow) == padovan_zero_indices(),
                "zero set in the window differs from {-17, -8, -4, -3, -1}");
       }},
      {"narayana",
       [](const VerifyOptions&, Ops& ops) {
         ops.use("sequences", "narayana_poly");
         ops.use("sequences", "verify_narayana_dictionary");
         ops.use("sequences", "narayana_root_package");
         for (int m = 4; m <= kNarayanaMax; ++m)
           expect(verify_narayana_dictionary(m), "dictionary fails at m = " + std::to_string(m));
         for (int m = 1; m <= kNarayanaMax; ++m) narayana_root_package(m);
       }},
      {"radius_sweep",
       [](const VerifyOptions& opt, Ops& ops) {
         ops.use("spectra", "radius_sweep");
         for (int n = opt.n.lo; n <= opt.n.hi; ++n) {
           const auto radii = radius_sweep(n, opt.r.hi);
           expect(radii.size() == static_cast<std::size_t>(opt.r.hi), "sweep length");
         }
       }},
      {"reconstruct_reject",
       [](const VerifyOptions&, Ops& ops) {
         ops.use("charpoly_family", "reconstruct_params");
         bool rejected = false;
         try {
           reconstruct_params(IntPolynomial{1, 0, 0, 0, 0, 1});
         } catch (const ReconstructionError&) {
           rejected = true;
         }
         expect(rejected, "x^5 + 1 was accepted");
       }},
  };
  return checks;
}

// Runs one check, converting every failure mode into an outcome.
template <typename Fn>
CheckOutcome run_one(int n, int r, const std::string& name, Fn&& fn) {
  CheckOutcome out{n, r, name, false, ""};
  try {
    fn();
    out.passed = true;
  } catch (const CheckFailed& f) {
    out.detail = f.detail;
  } catch (const std::exception& e) {
    out.detail = e.what();
  }
  return out;
}

struct CellResult {
  std::vector<CheckOutcome> outcomes;
  std::set<std::string> ops;
};

CellResult run_cell(int n, int r, const VerifyOptions& opt) {
  CellResult result;
  Cell cell{n, r, opt.tn_max_dim, opt.root_tolerance, {}, {}, {}, IntMatrix{{1}}, {}};
  Ops ops;
  bool blocked = false;
  for (const auto& [name, fn] : cell_checks()) {
    if (blocked) {
      result.outcomes.push_back({n, r, name, false, "skipped after an earlier failure in this cell"});
      continue;
    }
    result.outcomes.push_back(run_one(n, r, name, [&] { fn(cell, ops); }));
    // Later checks reuse the graph, blocks, Phi and core built by earlier ones.
    blocked = !result.outcomes.back().passed;
  }
  result.ops = ops.used();
  return result;
}

}  // namespace

GridRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  GridRange range;
  if (dots == std::string_view::npos) {
    range.lo = range.hi = parse_int(text);
  } else {
    range.lo = parse_int(text.substr(0, dots));
    range.hi = parse_int(text.substr(dots + 2));
  }
  if (range.lo > range.hi) throw ParameterError("empty range \"" + std::string(text) + "\"");
  return range;
}

bool VerifyResult::all_passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return o.passed; });
}

std::optional<CheckOutcome> VerifyResult::first_failure() const {
  for (const auto& o : outcomes)
    if (!o.passed) return o;
  return std::nullopt;
}

const std::map<std::string, std::vector<std::string>>& public_operations() {
  static const std::map<std::string, std::vector<std::string>> ops{
      {"graph_builder",
       {"build_staircase", "adjacency_matrix", "is_strongly_connected", "export_digraph", "parse_digraph_json"}},
      {"layer_blocks",
       {"layer_partition", "verify_layer_increment", "block_cyclic_form", "verify_bidiagonal", "reassemble_adjacency"}},
      {"core_matrix", {"cyclic_core", "check_total_nonnegativity", "is_irreducible", "core_zero_multiplicity"}},
      {"exact_poly",
       {"poly_ops", "charpoly_exact", "ord_at_zero", "sturm_count", "isolate_positive_roots", "refine_root"}},
      {"charpoly_family",
       {"phi_via_recursion", "phi_via_binomial", "zero_multiplicity_formula", "nonzero_count", "reduction_exponent",
        "h_polynomial", "verify_phi_h_identity", "h_at_4_27", "reconstruct_params"}},
      {"sequences",
       {"padovan", "padovan_zero_indices", "phi_at_one", "classify_rational_eigenvalues", "narayana_poly",
        "verify_narayana_dictionary", "narayana_root_package"}},
      {"spectra", {"core_eigenvalues", "lift_ngons", "full_spectrum", "tran_certificate", "radius_sweep"}},
  };
  return ops;
}

const std::vector<std::string>& cell_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : cell_checks()) out.push_back(name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& global_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : global_checks()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyResult run_verify(const VerifyOptions& options) {
  validate({options.n.lo, options.r.lo});
  if (options.jobs < 1) throw ParameterError("--jobs must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::pair<int, int>> cells;
  for (int n = options.n.lo; n <= options.n.hi; ++n)
    for (int r = options.r.lo; r <= options.r.hi; ++r) cells.emplace_back(n, r);

  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = run_cell(cells[i].first, cells[i].second, options);
  };
  const int threads = std::min<int>(options.jobs, static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  VerifyResult out;
  for (auto& cell : results) {
    out.outcomes.insert(out.outcomes.end(), cell.outcomes.begin(), cell.outcomes.end());
    out.operations_exercised.insert(cell.ops.begin(), cell.ops.end());
  }
  // Polynomial arithmetic backs every route; counted once any route ran.
  if (out.operations_exercised.contains("charpoly_family.phi_via_recursion"))
    out.operations_exercised.insert("exact_poly.poly_ops");
  for (const auto& [name, fn] : global_checks()) {
    Ops ops;
    out.outcomes.push_back(run_one(0, 0, name, [&] { fn(options, ops); }));
    out.operations_exercised.insert(ops.used().begin(), ops.used().end());
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string format_verify_table(const VerifyResult& result) {
  std::vector<std::string> order = cell_check_names();
  order.insert(order.end(), global_check_names().begin(), global_check_names().end());
  std::map<std::string, std::pair<int, int>> tally;  // passed, total
  for (const auto& o : result.outcomes) {
    auto& [passed, total] = tally[o.check];
    passed += o.passed ? 1 : 0;
    ++total;
  }
  std::ostringstream out;
  out << "check                 passed/total  status\n";
  for (const auto& name : order) {
    const auto it = tally.find(name);
    if (it == tally.end()) continue;
    const auto [passed, total] = it->second;
    std::string label = name;
    label.resize(std::max<std::size_t>(label.size(), 22), ' ');
    std::string counts = std::to_string(passed) + "/" + std::to_string(total);
    counts.resize(std::max<std::size_t>(counts.size(), 14), ' ');
    out << label << counts << (passed == total ? "PASS" : "FAIL") << "\n";
  }
  if (const auto fail = result.first_failure()) {
    out << "first failure: (n=" << fail->n << ", r=" << fail->r << ", " << fail->check << "): " << fail->detail
        << "\n";
  }
  out << "operations exercised: " << result.operations_exercised.size() << "\n";
  out << "wall time: " << result.wall_seconds << " s\n";
  return out.str();
}

}  // namespace staircase::cli
