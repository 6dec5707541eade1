#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rbd/design.hpp"

namespace rbd {

// An edge {a, b} of K6, 1 <= a < b <= 6.
struct Duad {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Duad&, const Duad&) = default;
};

// Three disjoint duads covering {1..6}, sorted.
struct OneFactor {
  std::array<Duad, 3> duads;
  std::string to_string() const;  // e.g. "12|36|45"
  friend auto operator<=>(const OneFactor&, const OneFactor&) = default;
};

// Five one-factors covering each of the 15 duads once.
struct OneFactorization {
  std::array<OneFactor, 5> factors;
  std::string label;
  std::string to_string() const;  // "||12|36|45||13|24|56||...||"
  bool contains(const OneFactor& f) const;
};

std::vector<Duad> all_duads();             // 15
std::vector<OneFactor> all_one_factors();  // 15, sorted

// Exhaustive backtracking over the one-factors. Returns the six one-factorizations,
// labelled d1..d6 in the order of the classical table (d1 and d2 share 12|36|45,
// d3 and d4 share 12|34|56, d5 and d6 share 12|35|46).
std::vector<OneFactorization> enumerate_one_factorizations();
// The classical table of d1..d6, parsed from its printed form.
std::vector<OneFactorization> reference_one_factorizations();
// Every 5-subset of the one-factors that covers all duads; used to prove there are only six.
std::size_t count_one_factorizations_brute_force();

// Throws std::invalid_argument when the two are equal or share no one-factor.
OneFactor common_factor(const OneFactorization& di, const OneFactorization& dj);

// A cell of the 6x6 array: row in 1..6 (vertex of K6), column in 1..6 (d1..d6).
// Variety/vertex index is 6*(row-1) + (column-1), 0-based.
struct Cell {
  int row = 0;
  int column = 0;
  int index() const { return 6 * (row - 1) + (column - 1); }
  static Cell of(int index) { return {index / 6 + 1, index % 6 + 1}; }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Undirected simple graph on vertices 0..n-1.
class SimpleGraph {
public:
  explicit SimpleGraph(int n = 0);

  int order() const noexcept { return n_; }
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  std::vector<int> neighbors(int u) const;
  int degree(int u) const;
  std::size_t edge_count() const;
  // Pairs (u, v) with u < v, 0-based.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
  int n_;
  std::vector<char> adj_;
};

SimpleGraph build_sylvester(const std::vector<OneFactorization>& factorizations);
SimpleGraph build_sylvester();

struct StructureCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // witness on failure
};

struct SylvesterReport {
  std::vector<StructureCheck> checks;
  bool passed() const;
  std::string summary() const;
};

// 5-regularity, girth >= 5, neighbours spread over the other rows and columns,
// distance <= 2 coverage, and closure of the row/column/edge/other relations
// under multiplication.
SylvesterReport verify_sylvester(const SimpleGraph& g);

// Center plus its neighbours, sorted 0-based indices.
std::vector<int> starfish(const SimpleGraph& g, Cell center);

struct Galaxy {
  int column = 0;                      // 1..6
  std::vector<Block> starfish;         // starfish[i] is centred at (row i+1, column)
  std::array<std::array<int, 6>, 6> letters{};  // letters[row][col] = starfish index
};

// The six starfish centred on one column. Throws std::logic_error unless they partition
// the 36 cells.
Galaxy galaxy(const SimpleGraph& g, int column);

// "u v" per line, 1-based, u < v.
std::string write_edge_list(const SimpleGraph& g);

}  // namespace rbd
