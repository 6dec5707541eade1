#pragma once

#include <cstddef>
#include <vector>

#include "rbd/rational.hpp"

namespace rbd::canon {

// Vertex-coloured graph with integer edge weights (0 means no edge). Weights are symmetric.
struct ColoredGraph {
  int n = 0;
  std::vector<int> color;
  std::vector<int> weight;

  explicit ColoredGraph(int size = 0)
      : n(size), color(static_cast<std::size_t>(size), 0),
        weight(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {}
  int w(int i, int j) const { return weight[static_cast<std::size_t>(i) * n + j]; }
  void set_weight(int i, int j, int value) {
    weight[static_cast<std::size_t>(i) * n + j] = value;
    weight[static_cast<std::size_t>(j) * n + i] = value;
  }
};

using Permutation = std::vector<int>;

struct CanonResult {
  // leaf[p] is the vertex placed at canonical position p; labeling is its inverse.
  std::vector<int> leaf;
  std::vector<int> labeling;
  // Colours then upper-triangle weights of the canonically relabelled graph.
  // Two graphs are isomorphic iff their certificates are equal.
  std::vector<int> certificate;
  std::vector<Permutation> generators;
  Integer group_order;
  std::size_t nodes = 0;
};

// Individualization-refinement search over equitable partitions with invariant and
// automorphism pruning. The certificate is the smallest one among leaves whose
// refinement trace is largest.
CanonResult canonicalize(const ColoredGraph& g);

// Maps each vertex of a to a vertex of b when the graphs are isomorphic.
std::vector<int> isomorphism(const CanonResult& a, const CanonResult& b);

bool is_automorphism(const ColoredGraph& g, const Permutation& p);

}  // namespace rbd::canon
