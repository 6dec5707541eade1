#include "rbd/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "rbd/efficiency.hpp"
#include "rbd/errors.hpp"

namespace rbd {

namespace {

// Sorted rows of the concurrence matrix, themselves sorted: a relabelling invariant.
std::vector<std::vector<int>> concurrence_profile(const BlockDesign& design) {
  const auto lambda = concurrence_matrix(design);
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < lambda.v(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < lambda.v(); ++j)
      if (i != j) row.push_back(lambda(i, j));
    std::sort(row.begin(), row.end());
    row.push_back(lambda(i, i));
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

canon::ColoredGraph graph_of(const SimpleGraph& g) {
  canon::ColoredGraph cg(g.order());
  for (const auto& [u, v] : g.edges()) cg.set_weight(u, v, 1);
  return cg;
}

canon::ColoredGraph graph_of(const ConcurrenceMatrix& lambda) {
  canon::ColoredGraph cg(lambda.v());
  for (int i = 0; i < lambda.v(); ++i) {
    cg.color[static_cast<std::size_t>(i)] = lambda(i, i);
    for (int j = i + 1; j < lambda.v(); ++j) cg.set_weight(i, j, lambda(i, j));
  }
  return cg;
}

const canon::CanonResult& sylvester_canon() {
  static const canon::CanonResult result = canonicalize(graph_of(build_sylvester()));
  return result;
}

}  // namespace

canon::ColoredGraph incidence_graph(const BlockDesign& design) {
  std::map<Block, int> multiplicity;
  for (const auto& b : design.blocks()) ++multiplicity[b];
  const int v = design.v();
  canon::ColoredGraph g(v + static_cast<int>(multiplicity.size()));
  int index = v;
  for (const auto& [block, mult] : multiplicity) {
    g.color[static_cast<std::size_t>(index)] = 1 + mult;
    for (int x : block) g.set_weight(x, index, 1);
    ++index;
  }
  return g;
}

CanonicalForm canonical_form(const BlockDesign& design) {
  const auto result = canonicalize(incidence_graph(design));
  CanonicalForm form;
  form.v = design.v();
  form.labeling.assign(result.labeling.begin(), result.labeling.begin() + design.v());
  for (const auto& b : design.blocks()) {
    Block mapped;
    for (int x : b) mapped.push_back(form.labeling[static_cast<std::size_t>(x)]);
    std::sort(mapped.begin(), mapped.end());
    form.blocks.push_back(std::move(mapped));
  }
  std::sort(form.blocks.begin(), form.blocks.end());
  return form;
}

CanonicalForm canonical_form(const ResolvableDesign& design) {
  require_valid(design);
  return canonical_form(design.as_block_design());
}

IsomorphismResult are_isomorphic(const BlockDesign& a, const BlockDesign& b) {
  if (a.v() != b.v() || a.block_count() != b.block_count() ||
      a.equal_block_size() != b.equal_block_size())
    return {false, "different shape (v, b, k)", {}};
  if (concurrence_profile(a) != concurrence_profile(b))
    return {false, "concurrence multisets differ", {}};
  if (a.equal_replication() && b.equal_replication() && a.equal_block_size()) {
    const auto pa = characteristic_polynomial(information_matrix(a));
    const auto pb = characteristic_polynomial(information_matrix(b));
    if (pa != pb) return {false, "canonical efficiency factors differ", {}};
  }
  const auto ca = canonicalize(incidence_graph(a));
  const auto cb = canonicalize(incidence_graph(b));
  if (ca.certificate != cb.certificate) return {false, "canonical forms differ", {}};
  const auto map = canon::isomorphism(ca, cb);
  return {true, "canonical forms equal", std::vector<int>(map.begin(), map.begin() + a.v())};
}

IsomorphismResult are_isomorphic(const ResolvableDesign& a, const ResolvableDesign& b) {
  require_valid(a);
  require_valid(b);
  if (a.r() != b.r() || a.k() != b.k() || a.v() != b.v())
    return {false, "different shape (v, k, r)", {}};
  return are_isomorphic(a.as_block_design(), b.as_block_design());
}

Integer automorphism_order(const BlockDesign& design) {
  return canonicalize(incidence_graph(design)).group_order;
}

Integer automorphism_order(const ResolvableDesign& design) {
  require_valid(design);
  return automorphism_order(design.as_block_design());
}

Integer automorphism_order(const SimpleGraph& graph) {
  return canonicalize(graph_of(graph)).group_order;
}

bool same_spectrum(const ResolvableDesign& a, const ResolvableDesign& b) {
  if (a.v() != b.v()) return false;
  const auto sa = efficiency_spectrum(a);
  const auto sb = efficiency_spectrum(b);
  if (!sa.connected || !sb.connected)
    throw DisconnectedError("spectrum comparison needs connected designs");
  return sa.characteristic == sb.characteristic;
}

IsomorphismResult concurrence_equivalent(const ConcurrenceMatrix& a, const ConcurrenceMatrix& b) {
  if (a.v() != b.v()) return {false, "different v", {}};
  const auto ca = canonicalize(graph_of(a));
  const auto cb = canonicalize(graph_of(b));
  if (ca.certificate != cb.certificate)
    return {false, "no variety permutation maps one concurrence matrix to the other", {}};
  return {true, "concurrence matrices are permutation-equivalent", canon::isomorphism(ca, cb)};
}

SylvesterDesignCheck match_sylvester_concurrence(const ConcurrenceMatrix& lambda) {
  if (lambda.v() != 36) return {false, "needs 36 varieties", {}};
  for (int i = 0; i < 36; ++i)
    if (lambda(i, i) != 8)
      return {false, "diagonal entry " + std::to_string(lambda(i, i)) + " at variety " +
                         std::to_string(i + 1) + ", expected 8", {}};
  SimpleGraph twos(36);
  for (int i = 0; i < 36; ++i)
    for (int j = i + 1; j < 36; ++j) {
      const int c = lambda(i, j);
      if (c != 1 && c != 2)
        return {false, "concurrence " + std::to_string(c) + " between varieties " +
                           std::to_string(i + 1) + " and " + std::to_string(j + 1), {}};
      if (c == 2) twos.add_edge(i, j);
    }
  for (int i = 0; i < 36; ++i)
    if (twos.degree(i) != 5)
      return {false, "variety " + std::to_string(i + 1) + " has " + std::to_string(twos.degree(i)) +
                         " concurrence-2 partners, expected 5", {}};
  const auto ct = canonicalize(graph_of(twos));
  const auto& cs = sylvester_canon();
  if (ct.certificate != cs.certificate)
    return {false, "concurrence-2 graph is not the Sylvester graph", {}};
  return {true, "concurrence matrix is 7I + J + Adj(Sylvester graph) up to relabelling",
          canon::isomorphism(ct, cs)};
}

SylvesterDesignCheck is_sylvester_design(const ResolvableDesign& design) {
  if (design.v() != 36 || design.k() != 6 || design.r() != 8)
    throw ShapeError("Sylvester designs have v=36, k=6, r=8");
  return match_sylvester_concurrence(concurrence_matrix(design));
}

}  // namespace rbd
