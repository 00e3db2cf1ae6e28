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

#pragma once

#include <vector>

#include "staircase/graph.hpp"
#include "staircase/int_matrix.hpp"

namespace staircase {

// Assignment of every vertex to a residue class mod n such that each edge
// advances the class by one.
struct LayerPartition {
  int n = 0;
  // layer_of[v - 1] is the layer of vertex v.
  std::vector<int> layer_of;
  // layers[c] lists the vertices of layer c in increasing order.
  std::vector<std::vector<int>> layers;

  int layer(int vertex) const { return layer_of.at(static_cast<std::size_t>(vertex - 1)); }
  std::vector<int> layer_sizes() const;

  friend bool operator==(const LayerPartition&, const LayerPartition&) = default;
};

// Vertex 1 gets layer 0; scanning the edges in construction order, a vertex
// seen for the first time as a head gets layer(tail) + 1 mod n. Every later
// edge is checked against the increment rule; a violation is a
// ConsistencyError.
LayerPartition layer_partition(const Digraph& g);

// True iff every edge goes from layer c to layer c + 1 (mod n).
bool verify_layer_increment(const Digraph& g, const LayerPartition& lp);

struct BlockCyclicForm {
  // Vertices listed layer by layer, increasing within each layer.
  std::vector<int> permutation;
  // blocks[c] is |layer c| x |layer c+1|; entry (i, j) = 1 iff the i-th vertex
  // of layer c has an edge to the j-th vertex of layer c+1.
  std::vector<IntMatrix> blocks;
  std::vector<int> layer_sizes;

  int period() const { return static_cast<int>(blocks.size()); }
};

// Precondition: verify_layer_increment(g, lp). Throws ConsistencyError otherwise.
BlockCyclicForm block_cyclic_form(const Digraph& g, const LayerPartition& lp);

// Support of every block lies on two adjacent diagonals j - i in {d, d + 1}.
bool verify_bidiagonal(const BlockCyclicForm& bf);
bool is_bidiagonal(const IntMatrix& block);

// Verification path only: the full |V| x |V| block-cyclic matrix, in
// layer-by-layer order.
IntMatrix assemble_block_cyclic(const BlockCyclicForm& bf);

// Undo the layer permutation: the result should equal the adjacency matrix.
IntMatrix reassemble_adjacency(const BlockCyclicForm& bf);

}  // namespace staircase
