#include "rbd/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rbd::canon {

namespace {

using Cells = std::vector<std::vector<int>>;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 29;
  return h;
}

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

class Searcher {
public:
  explicit Searcher(const ColoredGraph& g) : g_(g), cell_of_(static_cast<std::size_t>(g.n)) {}

  CanonResult run() {
    Cells cells;
    {
      std::vector<int> verts(static_cast<std::size_t>(g_.n));
      std::iota(verts.begin(), verts.end(), 0);
      std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
        return g_.color[static_cast<std::size_t>(a)] < g_.color[static_cast<std::size_t>(b)];
      });
      for (std::size_t i = 0; i < verts.size();) {
        std::size_t j = i;
        std::vector<int> cell;
        while (j < verts.size() && g_.color[static_cast<std::size_t>(verts[j])] ==
                                       g_.color[static_cast<std::size_t>(verts[i])])
          cell.push_back(verts[j++]);
        cells.push_back(std::move(cell));
        i = j;
      }
    }
    const std::uint64_t root = refine(cells);
    std::vector<int> path;
    std::vector<std::uint64_t> inv{root};
    search(0, cells, path, inv);

    CanonResult out;
    out.leaf = best_leaf_;
    out.labeling.assign(static_cast<std::size_t>(g_.n), 0);
    for (int p = 0; p < g_.n; ++p)
      out.labeling[static_cast<std::size_t>(best_leaf_[static_cast<std::size_t>(p)])] = p;
    out.certificate = best_cert_;
    out.generators = generators_;
    out.group_order = 1;
    for (auto s : first_orbit_size_) out.group_order *= s;
    out.nodes = nodes_;
    return out;
  }

private:
  // Splits cells by neighbour signatures until equitable. Returns a trace hash that
  // depends only on the isomorphism type of (graph, partition).
  std::uint64_t refine(Cells& cells) {
    std::uint64_t trace = 0x51ed270b27a3c1f5ULL;
    std::vector<std::pair<int, int>> sig_buf;
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of_[static_cast<std::size_t>(v)] = static_cast<int>(c);
      bool changed = false;
      Cells next;
      next.reserve(cells.size());
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& cell = cells[c];
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::pair<int, int>>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          sig_buf.clear();
          const int* row = &g_.weight[static_cast<std::size_t>(v) * g_.n];
          for (int u = 0; u < g_.n; ++u)
            if (row[u] != 0) sig_buf.emplace_back(cell_of_[static_cast<std::size_t>(u)], row[u]);
          std::sort(sig_buf.begin(), sig_buf.end());
          keyed.emplace_back(sig_buf, v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t groups = 0;
        for (std::size_t i = 0; i < keyed.size();) {
          std::size_t j = i;
          std::vector<int> sub;
          while (j < keyed.size() && keyed[j].first == keyed[i].first) sub.push_back(keyed[j++].second);
          if (groups > 0 || j < keyed.size()) {
            trace = mix(trace, c);
            trace = mix(trace, sub.size());
            for (const auto& [cc, w] : keyed[i].first) trace = mix(trace, (std::uint64_t(cc) << 32) ^ std::uint32_t(w));
          }
          next.push_back(std::move(sub));
          ++groups;
          i = j;
        }
        if (groups > 1) changed = true;
      }
      cells.swap(next);
      if (!changed) break;
      trace = mix(trace, cells.size());
    }
    return mix(trace, cells.size());
  }

  std::vector<int> certificate(const std::vector<int>& leaf) const {
    const int n = g_.n;
    std::vector<int> cert;
    cert.reserve(static_cast<std::size_t>(n) + static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int p = 0; p < n; ++p) cert.push_back(g_.color[static_cast<std::size_t>(leaf[static_cast<std::size_t>(p)])]);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        cert.push_back(g_.w(leaf[static_cast<std::size_t>(p)], leaf[static_cast<std::size_t>(q)]));
    return cert;
  }

  void add_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    Permutation gamma(static_cast<std::size_t>(g_.n));
    bool identity = true;
    for (std::size_t p = 0; p < from.size(); ++p) {
      gamma[static_cast<std::size_t>(from[p])] = to[p];
      if (from[p] != to[p]) identity = false;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  UnionFind orbits_fixing(const std::vector<int>& path) const {
    UnionFind uf(g_.n);
    for (const auto& gen : generators_) {
      const bool fixes = std::all_of(path.begin(), path.end(), [&](int x) {
        return gen[static_cast<std::size_t>(x)] == x;
      });
      if (!fixes) continue;
      for (int v = 0; v < g_.n; ++v) uf.unite(v, gen[static_cast<std::size_t>(v)]);
    }
    return uf;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  // Lexicographic comparison of the node's invariant sequence with a stored leaf's.
  // Internal nodes only know a prefix, so "equal so far" is 0.
  static int compare_inv(const std::vector<std::uint64_t>& inv, const std::vector<std::uint64_t>& ref,
                         bool leaf) {
    const std::size_t m = std::min(inv.size(), ref.size());
    for (std::size_t i = 0; i < m; ++i)
      if (inv[i] != ref[i]) return inv[i] > ref[i] ? 1 : -1;
    if (inv.size() > ref.size()) return 1;
    if (leaf && inv.size() < ref.size()) return -1;
    return 0;
  }

  // Returns the level whose child loop should continue.
  int search(int level, const Cells& cells, std::vector<int>& path,
             std::vector<std::uint64_t>& inv) {
    ++nodes_;
    bool first_eq = true;
    int best_cmp = 0;
    const bool leaf = std::all_of(cells.begin(), cells.end(),
                                  [](const std::vector<int>& c) { return c.size() == 1; });
    if (have_first_) {
      first_eq = compare_inv(inv, first_inv_, leaf) == 0;
      best_cmp = compare_inv(inv, best_inv_, leaf);
      if (!first_eq && best_cmp < 0) return level - 1;
    }

    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
        target = c;

    if (target == cells.size()) return at_leaf(level, cells, path, inv, first_eq, best_cmp);

    const bool on_first = !have_first_ || (static_cast<std::size_t>(level) <= first_path_.size() &&
                                           std::equal(path.begin(), path.end(), first_path_.begin()));
    std::vector<int> tried;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    UnionFind orbits(g_.n);
    for (int w : cells[target]) {
      if (!tried.empty()) {
        if (gens_seen != generators_.size()) {
          orbits = orbits_fixing(path);
          gens_seen = generators_.size();
        }
        const int rep = orbits.find(w);
        if (std::any_of(tried.begin(), tried.end(), [&](int t) { return orbits.find(t) == rep; }))
          continue;
      }
      tried.push_back(w);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({w});
        std::vector<int> rest;
        for (int x : cells[c])
          if (x != w) rest.push_back(x);
        child.push_back(std::move(rest));
      }
      const auto h = refine(child);
      path.push_back(w);
      inv.push_back(h);
      const int t = search(level + 1, child, path, inv);
      path.pop_back();
      inv.pop_back();
      if (t < level) return t;
    }

    if (on_first) {
      auto uf = orbits_fixing(path);
      const int base = first_path_[static_cast<std::size_t>(level)];
      const int rep = uf.find(base);
      long size = 0;
      for (int x : cells[target]) size += uf.find(x) == rep ? 1 : 0;
      if (first_orbit_size_.size() <= static_cast<std::size_t>(level))
        first_orbit_size_.resize(static_cast<std::size_t>(level) + 1, 1);
      first_orbit_size_[static_cast<std::size_t>(level)] = size;
    }
    return level - 1;
  }

  int at_leaf(int level, const Cells& cells, const std::vector<int>& path,
              const std::vector<std::uint64_t>& inv, bool first_eq, int best_cmp) {
    std::vector<int> leaf;
    leaf.reserve(static_cast<std::size_t>(g_.n));
    for (const auto& c : cells) leaf.push_back(c.front());
    auto cert = certificate(leaf);

    if (!have_first_) {
      have_first_ = true;
      first_inv_ = best_inv_ = inv;
      first_path_ = best_path_ = path;
      first_leaf_ = best_leaf_ = leaf;
      first_cert_ = best_cert_ = cert;
      return level - 1;
    }
    if (first_eq && cert == first_cert_) {
      add_automorphism(first_leaf_, leaf);
      return common_prefix(path, first_path_);
    }
    if (best_cmp > 0 || (best_cmp == 0 && cert < best_cert_)) {
      best_inv_ = inv;
      best_path_ = path;
      best_leaf_ = std::move(leaf);
      best_cert_ = std::move(cert);
      return level - 1;
    }
    if (best_cmp == 0 && cert == best_cert_) {
      add_automorphism(best_leaf_, leaf);
      return common_prefix(path, best_path_);
    }
    return level - 1;
  }

  const ColoredGraph& g_;
  std::vector<int> cell_of_;
  bool have_first_ = false;
  std::vector<std::uint64_t> first_inv_, best_inv_;
  std::vector<int> first_path_, best_path_;
  std::vector<int> first_leaf_, best_leaf_;
  std::vector<int> first_cert_, best_cert_;
  std::vector<Permutation> generators_;
  std::vector<long> first_orbit_size_;
  std::size_t nodes_ = 0;
};

}  // namespace

CanonResult canonicalize(const ColoredGraph& g) {
  if (g.color.size() != static_cast<std::size_t>(g.n) ||
      g.weight.size() != static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n))
    throw std::invalid_argument("malformed coloured graph");
  if (g.n == 0) {
    CanonResult out;
    out.group_order = 1;
    return out;
  }
  return Searcher(g).run();
}

std::vector<int> isomorphism(const CanonResult& a, const CanonResult& b) {
  if (a.certificate != b.certificate) return {};
  std::vector<int> map(a.labeling.size());
  for (std::size_t v = 0; v < a.labeling.size(); ++v)
    map[v] = b.leaf[static_cast<std::size_t>(a.labeling[v])];
  return map;
}

bool is_automorphism(const ColoredGraph& g, const Permutation& p) {
  if (p.size() != static_cast<std::size_t>(g.n)) return false;
  for (int i = 0; i < g.n; ++i) {
    if (g.color[static_cast<std::size_t>(i)] != g.color[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])]) return false;
    for (int j = 0; j < g.n; ++j)
      if (g.w(i, j) != g.w(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)])) return false;
  }
  return true;
}

}  // namespace rbd::canon
