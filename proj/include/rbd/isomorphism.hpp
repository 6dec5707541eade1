#pragma once

#include <string>
#include <vector>

#include "rbd/canon.hpp"
#include "rbd/design.hpp"
#include "rbd/sylvester.hpp"

namespace rbd {

// Varieties 0..v-1 (colour 0) and one vertex per distinct block (colour 1 + multiplicity),
// joined by incidence.
canon::ColoredGraph incidence_graph(const BlockDesign& design);

struct CanonicalForm {
  int v = 0;
  // Block multiset after relabelling varieties canonically; blocks sorted, list sorted.
  std::vector<Block> blocks;
  // variety -> canonical label.
  std::vector<int> labeling;

  // Equal iff the designs are isomorphic.
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.v == b.v && a.blocks == b.blocks;
  }
};

CanonicalForm canonical_form(const BlockDesign& design);
CanonicalForm canonical_form(const ResolvableDesign& design);

struct IsomorphismResult {
  bool isomorphic = false;
  std::string reason;
  // When isomorphic: variety i of the first design corresponds to variety_map[i] of the second.
  std::vector<int> variety_map;
};

// Shape, concurrence-row multisets and characteristic polynomials reject cheaply before
// the canonical forms are compared. Replicate structure is ignored.
IsomorphismResult are_isomorphic(const ResolvableDesign& a, const ResolvableDesign& b);
IsomorphismResult are_isomorphic(const BlockDesign& a, const BlockDesign& b);

// Order of the group of variety permutations mapping the block multiset to itself.
Integer automorphism_order(const BlockDesign& design);
Integer automorphism_order(const ResolvableDesign& design);
Integer automorphism_order(const SimpleGraph& graph);

// Exact equality of the characteristic polynomials of the two scaled information
// matrices. Throws DisconnectedError when either design is disconnected.
bool same_spectrum(const ResolvableDesign& a, const ResolvableDesign& b);

// Is there a variety permutation taking one concurrence matrix to the other?
IsomorphismResult concurrence_equivalent(const ConcurrenceMatrix& a, const ConcurrenceMatrix& b);

struct SylvesterDesignCheck {
  bool is_sylvester = false;
  std::string reason;
  // variety i -> vertex witness[i] of the Sylvester graph; Lambda = 7I + J + Adj under it.
  std::vector<int> witness;
};

// Throws ShapeError unless v = 36, k = 6, r = 8.
SylvesterDesignCheck is_sylvester_design(const ResolvableDesign& design);
// The matrix-level test: diagonal 8, off-diagonal in {1, 2}, and the graph of
// concurrence-2 pairs isomorphic to the Sylvester graph.
SylvesterDesignCheck match_sylvester_concurrence(const ConcurrenceMatrix& lambda);

}  // namespace rbd
