#include "rbd/sylvester.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace rbd {

namespace {

constexpr int kSide = 6;
constexpr int kCells = kSide * kSide;

constexpr const char* kClassicalTable[] = {
    "||12|36|45||13|24|56||14|35|26||15|23|46||16|25|34||",
    "||12|36|45||13|25|46||14|23|56||15|26|34||16|24|35||",
    "||12|34|56||13|25|46||14|35|26||15|24|36||16|23|45||",
    "||12|34|56||13|26|45||14|25|36||15|23|46||16|24|35||",
    "||12|46|35||13|26|45||14|23|56||15|24|36||16|25|34||",
    "||12|46|35||13|24|56||14|25|36||15|26|34||16|23|45||",
};

Duad make_duad(int x, int y) { return x < y ? Duad{x, y} : Duad{y, x}; }

OneFactor make_factor(Duad p, Duad q, Duad s) {
  OneFactor f{{p, q, s}};
  std::sort(f.duads.begin(), f.duads.end());
  return f;
}

// Factors ordered by the partner of vertex 1 (12, 13, ..., 16).
void canonicalize(OneFactorization& d) { std::sort(d.factors.begin(), d.factors.end()); }

OneFactorization parse_factorization(const std::string& text, std::string label) {
  std::vector<int> digits;
  for (char c : text)
    if (c >= '1' && c <= '6') digits.push_back(c - '0');
  if (digits.size() != 30) throw std::logic_error("bad one-factorization text: " + text);
  OneFactorization d;
  d.label = std::move(label);
  for (std::size_t f = 0; f < 5; ++f) {
    const auto* p = &digits[f * 6];
    d.factors[f] = make_factor(make_duad(p[0], p[1]), make_duad(p[2], p[3]), make_duad(p[4], p[5]));
  }
  canonicalize(d);
  return d;
}

bool covers_all_duads(const std::vector<OneFactor>& factors) {
  std::vector<Duad> seen;
  for (const auto& f : factors)
    for (const auto& d : f.duads) seen.push_back(d);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end() && seen.size() == 15;
}

bool disjoint(const OneFactor& a, const OneFactor& b) {
  for (const auto& x : a.duads)
    for (const auto& y : b.duads)
      if (x == y) return false;
  return true;
}

int row_of(int v) { return v / kSide; }
int col_of(int v) { return v % kSide; }

}  // namespace

std::string OneFactor::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < duads.size(); ++i) {
    if (i) s += '|';
    s += static_cast<char>('0' + duads[i].a);
    s += static_cast<char>('0' + duads[i].b);
  }
  return s;
}

std::string OneFactorization::to_string() const {
  std::string s = "||";
  for (const auto& f : factors) s += f.to_string() + "||";
  return s;
}

bool OneFactorization::contains(const OneFactor& f) const {
  return std::find(factors.begin(), factors.end(), f) != factors.end();
}

std::vector<Duad> all_duads() {
  std::vector<Duad> out;
  for (int a = 1; a <= kSide; ++a)
    for (int b = a + 1; b <= kSide; ++b) out.push_back({a, b});
  return out;
}

std::vector<OneFactor> all_one_factors() {
  std::vector<OneFactor> out;
  // Pair 1 with b, then the smallest remaining vertex with c; the last two pair up.
  for (int b = 2; b <= kSide; ++b) {
    std::vector<int> rest;
    for (int x = 2; x <= kSide; ++x)
      if (x != b) rest.push_back(x);
    for (std::size_t j = 1; j < rest.size(); ++j) {
      std::vector<int> last;
      for (std::size_t t = 1; t < rest.size(); ++t)
        if (t != j) last.push_back(rest[t]);
      out.push_back(make_factor(make_duad(1, b), make_duad(rest[0], rest[j]),
                                make_duad(last[0], last[1])));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OneFactorization> reference_one_factorizations() {
  std::vector<OneFactorization> out;
  for (std::size_t i = 0; i < std::size(kClassicalTable); ++i)
    out.push_back(parse_factorization(kClassicalTable[i], "d" + std::to_string(i + 1)));
  return out;
}

std::vector<OneFactorization> enumerate_one_factorizations() {
  const auto factors = all_one_factors();
  std::vector<OneFactorization> found;
  std::vector<int> chosen;

  // Each factorization has exactly one factor containing {1, b} for each b, so branch
  // on the factor that covers the next duad 1b; this visits each factorization once.
  auto extend = [&](auto&& self) -> void {
    if (chosen.size() == 5) {
      std::vector<OneFactor> set;
      for (int i : chosen) set.push_back(factors[static_cast<std::size_t>(i)]);
      if (!covers_all_duads(set)) return;
      OneFactorization d;
      std::copy(set.begin(), set.end(), d.factors.begin());
      canonicalize(d);
      found.push_back(d);
      return;
    }
    const Duad next{1, static_cast<int>(chosen.size()) + 2};
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].duads[0] != next) continue;
      const bool ok = std::all_of(chosen.begin(), chosen.end(), [&](int c) {
        return disjoint(factors[static_cast<std::size_t>(c)], factors[i]);
      });
      if (!ok) continue;
      chosen.push_back(static_cast<int>(i));
      self(self);
      chosen.pop_back();
    }
  };
  extend(extend);

  // Label and order to match the classical table.
  const auto reference = reference_one_factorizations();
  std::vector<OneFactorization> ordered;
  for (const auto& ref : reference) {
    auto it = std::find_if(found.begin(), found.end(),
                           [&](const OneFactorization& d) { return d.factors == ref.factors; });
    if (it == found.end()) throw std::logic_error("enumeration missed " + ref.label);
    OneFactorization d = *it;
    d.label = ref.label;
    ordered.push_back(d);
  }
  if (found.size() != ordered.size())
    throw std::logic_error("enumeration found factorizations outside the classical table");
  return ordered;
}

std::size_t count_one_factorizations_brute_force() {
  const auto factors = all_one_factors();
  const std::size_t n = factors.size();
  std::size_t count = 0;
  std::vector<char> pick(n, 0);
  std::fill(pick.end() - 5, pick.end(), 1);
  do {
    std::vector<OneFactor> set;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) set.push_back(factors[i]);
    if (covers_all_duads(set)) ++count;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

OneFactor common_factor(const OneFactorization& di, const OneFactorization& dj) {
  if (di.factors == dj.factors)
    throw std::invalid_argument("common_factor needs two distinct one-factorizations");
  std::vector<OneFactor> shared;
  for (const auto& f : di.factors)
    if (dj.contains(f)) shared.push_back(f);
  if (shared.size() != 1)
    throw std::invalid_argument(di.label + " and " + dj.label + " share " +
                                std::to_string(shared.size()) + " one-factors");
  return shared.front();
}

SimpleGraph::SimpleGraph(int n)
    : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
}

void SimpleGraph::remove_edge(int u, int v) {
  adj_[static_cast<std::size_t>(u) * n_ + v] = 0;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 0;
}

std::vector<int> SimpleGraph::neighbors(int u) const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (adjacent(u, v)) out.push_back(v);
  return out;
}

int SimpleGraph::degree(int u) const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d += adjacent(u, v) ? 1 : 0;
  return d;
}

std::size_t SimpleGraph::edge_count() const { return edges().size(); }

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

SimpleGraph build_sylvester(const std::vector<OneFactorization>& factorizations) {
  if (factorizations.size() != kSide)
    throw std::invalid_argument("the Sylvester graph needs six one-factorizations");
  SimpleGraph g(kCells);
  for (int i = 0; i < kSide; ++i)
    for (int j = i + 1; j < kSide; ++j) {
      const auto f = common_factor(factorizations[static_cast<std::size_t>(i)],
                                   factorizations[static_cast<std::size_t>(j)]);
      for (const auto& [a, b] : f.duads) {
        g.add_edge(Cell{a, i + 1}.index(), Cell{b, j + 1}.index());
        g.add_edge(Cell{b, i + 1}.index(), Cell{a, j + 1}.index());
      }
    }
  return g;
}

SimpleGraph build_sylvester() { return build_sylvester(enumerate_one_factorizations()); }

bool SylvesterReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const StructureCheck& c) { return c.passed; });
}

std::string SylvesterReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

namespace {

std::string cell_name(int v) {
  const auto c = Cell::of(v);
  return "(" + std::to_string(c.row) + ",d" + std::to_string(c.column) + ")";
}

StructureCheck check_regular(const SimpleGraph& g) {
  StructureCheck c{"5-regular", true, {}};
  std::vector<std::string> bad;
  for (int u = 0; u < g.order(); ++u)
    if (g.degree(u) != 5) bad.push_back(cell_name(u) + " has degree " + std::to_string(g.degree(u)));
  if (!bad.empty()) {
    c.passed = false;
    for (std::size_t i = 0; i < bad.size(); ++i) c.detail += (i ? "; " : "") + bad[i];
  }
  return c;
}

StructureCheck check_girth(const SimpleGraph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      int common = 0;
      for (int w = 0; w < g.order(); ++w) common += (g.adjacent(u, w) && g.adjacent(v, w)) ? 1 : 0;
      if (g.adjacent(u, v) && common > 0)
        return {"girth >= 5", false, "triangle on " + cell_name(u) + " " + cell_name(v)};
      if (common > 1)
        return {"girth >= 5", false, "quadrilateral through " + cell_name(u) + " " + cell_name(v)};
    }
  return {"girth >= 5", true, {}};
}

StructureCheck check_spread(const SimpleGraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    std::vector<int> rows, cols;
    for (int w : g.neighbors(u)) {
      rows.push_back(row_of(w));
      cols.push_back(col_of(w));
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    const bool rows_ok = std::adjacent_find(rows.begin(), rows.end()) == rows.end() &&
                         !std::binary_search(rows.begin(), rows.end(), row_of(u)) &&
                         rows.size() == 5;
    const bool cols_ok = std::adjacent_find(cols.begin(), cols.end()) == cols.end() &&
                         !std::binary_search(cols.begin(), cols.end(), col_of(u)) &&
                         cols.size() == 5;
    if (!rows_ok || !cols_ok)
      return {"neighbours in each other row and column", false, "at " + cell_name(u)};
  }
  return {"neighbours in each other row and column", true, {}};
}

std::vector<int> distances_from(const SimpleGraph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
  }
  return dist;
}

StructureCheck check_distance_two(const SimpleGraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    const auto dist = distances_from(g, u);
    for (int w = 0; w < g.order(); ++w) {
      if (w == u) continue;
      const bool near = dist[static_cast<std::size_t>(w)] >= 1 && dist[static_cast<std::size_t>(w)] <= 2;
      const bool off_line = row_of(w) != row_of(u) && col_of(w) != col_of(u);
      if (near != off_line)
        return {"distance <= 2 covers exactly the off-row off-column cells", false,
                cell_name(u) + " to " + cell_name(w)};
    }
  }
  return {"distance <= 2 covers exactly the off-row off-column cells", true, {}};
}

// Relations: 0 identity, 1 same row, 2 same column, 3 adjacent, 4 other.
int relation(const SimpleGraph& g, int u, int w) {
  if (u == w) return 0;
  if (row_of(u) == row_of(w)) return 1;
  if (col_of(u) == col_of(w)) return 2;
  if (g.adjacent(u, w)) return 3;
  return 4;
}

StructureCheck check_association_scheme(const SimpleGraph& g) {
  const int n = g.order();
  const char* name = "row/column/edge/other relations form an association scheme";
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (u != w && g.adjacent(u, w) && (row_of(u) == row_of(w) || col_of(u) == col_of(w)))
        return {name, false, "edge inside a row or column at " + cell_name(u)};

  std::vector<int> rel(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) rel[static_cast<std::size_t>(u) * n + w] = relation(g, u, w);

  constexpr int kClasses = 5;
  for (int a = 0; a < kClasses; ++a)
    for (int b = 0; b < kClasses; ++b) {
      // (R_a R_b)[u][w] must depend only on the relation between u and w.
      std::array<int, kClasses> value;
      value.fill(-1);
      for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
          int count = 0;
          for (int x = 0; x < n; ++x)
            count += (rel[static_cast<std::size_t>(u) * n + x] == a &&
                      rel[static_cast<std::size_t>(x) * n + w] == b)
                         ? 1
                         : 0;
          auto& slot = value[static_cast<std::size_t>(rel[static_cast<std::size_t>(u) * n + w])];
          if (slot < 0) {
            slot = count;
          } else if (slot != count) {
            return {name, false,
                    "R" + std::to_string(a) + "*R" + std::to_string(b) + " not constant at " +
                        cell_name(u) + " " + cell_name(w)};
          }
        }
    }
  return {name, true, {}};
}

}  // namespace

SylvesterReport verify_sylvester(const SimpleGraph& g) {
  SylvesterReport report;
  if (g.order() != kCells) {
    report.checks.push_back({"36 vertices", false, std::to_string(g.order()) + " vertices"});
    return report;
  }
  report.checks.push_back({"90 edges", g.edge_count() == 90, std::to_string(g.edge_count()) + " edges"});
  if (report.checks.back().passed) report.checks.back().detail.clear();
  report.checks.push_back(check_regular(g));
  report.checks.push_back(check_girth(g));
  report.checks.push_back(check_spread(g));
  report.checks.push_back(check_distance_two(g));
  report.checks.push_back(check_association_scheme(g));
  return report;
}

std::vector<int> starfish(const SimpleGraph& g, Cell center) {
  auto out = g.neighbors(center.index());
  out.push_back(center.index());
  std::sort(out.begin(), out.end());
  return out;
}

Galaxy galaxy(const SimpleGraph& g, int column) {
  if (column < 1 || column > kSide) throw std::invalid_argument("column must be in 1..6");
  Galaxy out;
  out.column = column;
  std::vector<int> owner(kCells, -1);
  for (int row = 1; row <= kSide; ++row) {
    auto s = starfish(g, Cell{row, column});
    for (int v : s) {
      if (owner[static_cast<std::size_t>(v)] >= 0)
        throw std::logic_error("starfish overlap at " + cell_name(v));
      owner[static_cast<std::size_t>(v)] = row - 1;
    }
    out.starfish.push_back(std::move(s));
  }
  for (int v = 0; v < kCells; ++v) {
    if (owner[static_cast<std::size_t>(v)] < 0)
      throw std::logic_error("galaxy misses " + cell_name(v));
    out.letters[static_cast<std::size_t>(row_of(v))][static_cast<std::size_t>(col_of(v))] =
        owner[static_cast<std::size_t>(v)];
  }
  return out;
}

std::string write_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace rbd
