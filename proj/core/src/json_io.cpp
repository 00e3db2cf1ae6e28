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

#include "staircase/json_io.hpp"

#include <limits>
#include <string>

#include "staircase/errors.hpp"

namespace staircase {
namespace {

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return to_string(v);
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw FormatError("expected an integer or an integer string, got " + j.dump());
}

}  // namespace

Json polynomial_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("coefficients")) throw FormatError("polynomial object needs a \"coefficients\" array");
    arr = &j.at("coefficients");
  }
  if (!arr->is_array()) throw FormatError("polynomial must be a JSON array of coefficients");
  std::vector<BigInt> coeffs;
  coeffs.reserve(arr->size());
  for (const auto& c : *arr) coeffs.push_back(bigint_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Json interval_to_json(const RationalInterval& iv) {
  return Json{{"lo", rational_to_json(iv.lo)}, {"hi", rational_to_json(iv.hi)}};
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(bigint_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json layers_to_json(const LayerPartition& lp, const BlockCyclicForm& bf) {
  Json blocks = Json::array();
  for (const auto& b : bf.blocks) blocks.push_back(matrix_to_json(b));
  return Json{{"n", lp.n},
              {"layers", lp.layers},
              {"layer_sizes", bf.layer_sizes},
              {"permutation", bf.permutation},
              {"blocks", std::move(blocks)}};
}

Json tn_report_to_json(const TNReport& report) {
  Json out{{"checked_up_to_order", report.checked_up_to_order},
           {"minors_checked", report.minors_checked},
           {"all_nonnegative", report.all_nonnegative}};
  if (report.witness) {
    out["witness"] = Json{{"rows", report.witness->rows},
                          {"cols", report.witness->cols},
                          {"value", to_string(report.witness->value)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json spectrum_to_json(const SpectrumReport& report) {
  Json eigenvalues = Json::array();
  for (const auto& e : report.core_eigenvalues)
    eigenvalues.push_back(Json{{"interval", interval_to_json(e.interval)}, {"value", e.value}});
  Json packets = Json::array();
  for (std::size_t i = 0; i < report.packets.size(); ++i) {
    const auto& p = report.packets[i];
    Json vertices = Json::array();
    for (const auto& v : p.vertices) vertices.push_back(Json::array({v.real(), v.imag()}));
    packets.push_back(Json{{"index", i}, {"mu", p.mu}, {"radius", p.radius}, {"vertices", std::move(vertices)}});
  }
  return Json{{"n", report.n},
              {"r", report.r},
              {"zero_multiplicity", report.zero_multiplicity},
              {"core_charpoly", polynomial_to_json(report.core_charpoly)},
              {"core_eigenvalues", std::move(eigenvalues)},
              {"packets", std::move(packets)},
              {"tran",
               Json{{"nonzero_eigenvalues", report.tran.nonzero_eigenvalues},
                    {"roots_in_range", report.tran.roots_in_range},
                    {"roots_above", report.tran.roots_above},
                    {"boundary_is_root", report.tran.boundary_is_root}}},
              {"tran_certified", report.tran_certified()},
              {"spectral_radius", report.spectral_radius}};
}

}  // namespace staircase
