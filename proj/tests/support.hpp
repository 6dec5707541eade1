#pragma once

// Test-only helpers: independent reference computations and random generators.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbd/design.hpp"
#include "rbd/rational.hpp"
#include "rbd/sylvester.hpp"

namespace rbd::testing {

// Concurrence by checking every block for every pair.
inline std::vector<int> concurrence_by_pairs(const ResolvableDesign& d) {
  const int v = d.v();
  std::vector<int> out(static_cast<std::size_t>(v) * v, 0);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      for (const auto& rep : d.replicates())
        for (const auto& b : rep) {
          const bool has_i = std::find(b.begin(), b.end(), i) != b.end();
          const bool has_j = std::find(b.begin(), b.end(), j) != b.end();
          if (has_i && has_j) ++out[static_cast<std::size_t>(i) * v + j];
        }
  return out;
}

// A = (v-1) / trace(M^+), with trace(M^+) = trace((M + J/v)^{-1}) - 1, by exact
// Gauss-Jordan inversion over the rationals. Throws when M + J/v is singular.
inline Rational a_by_inversion(const ResolvableDesign& d) {
  const int v = d.v();
  const auto lambda = concurrence_by_pairs(d);
  const Rational rk(d.r() * d.k());
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(v),
                                       std::vector<Rational>(static_cast<std::size_t>(2 * v)));
  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < v; ++j) {
      Rational x = Rational(i == j ? 1 : 0) - Rational(lambda[static_cast<std::size_t>(i) * v + j]) / rk +
                   Rational(1, v);
      x.canonicalize();
      a[i][j] = x;
    }
    a[i][v + i] = 1;
  }
  for (int c = 0; c < v; ++c) {
    int p = c;
    while (p < v && a[p][c] == 0) ++p;
    if (p == v) throw std::domain_error("singular");
    std::swap(a[c], a[p]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int i = 0; i < v; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (int j = 0; j < 2 * v; ++j) a[i][j] -= f * a[c][j];
    }
  }
  Rational trace = 0;
  for (int i = 0; i < v; ++i) trace += a[i][v + i];
  Rational out = Rational(v - 1) / (trace - 1);
  out.canonicalize();
  return out;
}

// Harmonic mean of (value, multiplicity) pairs.
inline Rational harmonic_mean(const std::vector<std::pair<Rational, int>>& factors) {
  Rational inverse_sum = 0;
  int count = 0;
  for (const auto& [f, m] : factors) {
    inverse_sum += Rational(m) / f;
    count += m;
  }
  Rational out = Rational(count) / inverse_sum;
  out.canonicalize();
  return out;
}

// Same design with varieties renamed by a random permutation, blocks shuffled within each
// replicate and replicates shuffled.
inline ResolvableDesign relabel(const ResolvableDesign& d, std::mt19937_64& rng,
                                std::vector<int>* perm_out = nullptr) {
  std::vector<int> perm(static_cast<std::size_t>(d.v()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Replicate> reps;
  for (const auto& rep : d.replicates()) {
    Replicate out;
    for (const auto& b : rep) {
      Block nb;
      for (int x : b) nb.push_back(perm[static_cast<std::size_t>(x)]);
      out.push_back(nb);
    }
    std::shuffle(out.begin(), out.end(), rng);
    reps.push_back(out);
  }
  std::shuffle(reps.begin(), reps.end(), rng);
  if (perm_out) *perm_out = perm;
  return ResolvableDesign(d.v(), d.k(), reps);
}

inline ResolvableDesign random_design(int v, int k, int r, std::mt19937_64& rng) {
  std::vector<Replicate> reps;
  std::vector<int> perm(static_cast<std::size_t>(v));
  for (int i = 0; i < r; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Replicate rep;
    for (int b = 0; b < v / k; ++b) rep.emplace_back(perm.begin() + b * k, perm.begin() + (b + 1) * k);
    reps.push_back(rep);
  }
  return ResolvableDesign(v, k, reps);
}

// Breadth-first distances from one vertex; -1 when unreachable.
inline std::vector<int> distances_from(const SimpleGraph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w = 0; w < g.order(); ++w)
      if (g.adjacent(u, w) && dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

// Shortest cycle length by BFS from every vertex; 0 for a forest.
inline int girth(const SimpleGraph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1), parent(dist);
    std::vector<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

inline bool rounds_to(const Rational& q, const std::string& expected) {
  const auto dot = expected.find('.');
  const int digits = dot == std::string::npos ? 0 : static_cast<int>(expected.size() - dot - 1);
  return format_decimal(q, digits) == expected;
}

}  // namespace rbd::testing
