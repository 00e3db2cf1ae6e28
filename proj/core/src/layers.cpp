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

#include "staircase/layers.hpp"

#include <algorithm>
#include <string>

#include "staircase/errors.hpp"

namespace staircase {

std::vector<int> LayerPartition::layer_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(layers.size());
  for (const auto& l : layers) sizes.push_back(static_cast<int>(l.size()));
  return sizes;
}

LayerPartition layer_partition(const Digraph& g) {
  const int n = g.params.n;
  LayerPartition lp;
  lp.n = n;
  lp.layer_of.assign(static_cast<std::size_t>(g.num_vertices), -1);
  lp.layer_of[0] = 0;
  for (const auto& e : g.edges) {
    const int tail_layer = lp.layer_of[e.tail - 1];
    if (tail_layer < 0)
      throw ConsistencyError("layer_partition: edge (" + std::to_string(e.tail) + "," +
                             std::to_string(e.head) + ") leaves an unassigned vertex");
    const int expected = (tail_layer + 1) % n;
    int& head_layer = lp.layer_of[e.head - 1];
    if (head_layer < 0) {
      head_layer = expected;
    } else if (head_layer != expected) {
      throw ConsistencyError("layer_partition: edge (" + std::to_string(e.tail) + "," +
                             std::to_string(e.head) + ") violates the layer increment");
    }
  }
  lp.layers.assign(static_cast<std::size_t>(n), {});
  for (int v = 1; v <= g.num_vertices; ++v) {
    const int c = lp.layer_of[v - 1];
    if (c < 0) throw ConsistencyError("layer_partition: vertex " + std::to_string(v) + " never reached");
    lp.layers[c].push_back(v);
  }
  return lp;
}

bool verify_layer_increment(const Digraph& g, const LayerPartition& lp) {
  if (lp.n != g.params.n || static_cast<int>(lp.layer_of.size()) != g.num_vertices) return false;
  for (const auto& e : g.edges) {
    if ((lp.layer(e.tail) + 1) % lp.n != lp.layer(e.head)) return false;
  }
  return true;
}

BlockCyclicForm block_cyclic_form(const Digraph& g, const LayerPartition& lp) {
  if (!verify_layer_increment(g, lp))
    throw ConsistencyError("block_cyclic_form: layer partition does not match the digraph");
  const int n = lp.n;
  BlockCyclicForm bf;
  bf.layer_sizes = lp.layer_sizes();
  // Position of each vertex inside its own layer.
  std::vector<std::size_t> index_in_layer(static_cast<std::size_t>(g.num_vertices));
  for (const auto& layer : lp.layers) {
    for (std::size_t i = 0; i < layer.size(); ++i) index_in_layer[layer[i] - 1] = i;
    bf.permutation.insert(bf.permutation.end(), layer.begin(), layer.end());
  }
  bf.blocks.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    bf.blocks.emplace_back(static_cast<std::size_t>(bf.layer_sizes[c]),
                           static_cast<std::size_t>(bf.layer_sizes[(c + 1) % n]));
  for (const auto& e : g.edges)
    bf.blocks[lp.layer(e.tail)](index_in_layer[e.tail - 1], index_in_layer[e.head - 1]) = 1;
  return bf;
}

bool is_bidiagonal(const IntMatrix& block) {
  bool any = false;
  long long lowest = 0;
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) {
      if (block(i, j) == 0) continue;
      const long long offset = static_cast<long long>(j) - static_cast<long long>(i);
      lowest = any ? std::min(lowest, offset) : offset;
      any = true;
    }
  }
  if (!any) return true;
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) {
      if (block(i, j) == 0) continue;
      const long long offset = static_cast<long long>(j) - static_cast<long long>(i);
      if (offset != lowest && offset != lowest + 1) return false;
    }
  }
  return true;
}

bool verify_bidiagonal(const BlockCyclicForm& bf) {
  return std::all_of(bf.blocks.begin(), bf.blocks.end(), [](const IntMatrix& b) { return is_bidiagonal(b); });
}

IntMatrix assemble_block_cyclic(const BlockCyclicForm& bf) {
  const int n = bf.period();
  std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int c = 0; c < n; ++c) offset[c + 1] = offset[c] + static_cast<std::size_t>(bf.layer_sizes[c]);
  IntMatrix full(offset[n], offset[n]);
  for (int c = 0; c < n; ++c) {
    const IntMatrix& b = bf.blocks[c];
    const std::size_t row0 = offset[c];
    const std::size_t col0 = offset[(c + 1) % n];
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) full(row0 + i, col0 + j) = b(i, j);
  }
  return full;
}

IntMatrix reassemble_adjacency(const BlockCyclicForm& bf) {
  const IntMatrix permuted = assemble_block_cyclic(bf);
  const std::size_t size = permuted.rows();
  IntMatrix a(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      a(bf.permutation[i] - 1, bf.permutation[j] - 1) = permuted(i, j);
  return a;
}

}  // namespace staircase
