#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbd/design.hpp"
#include "rbd/rational.hpp"
#include "rbd/sylvester.hpp"

namespace rbd {

// Which of the row and column replicates accompany the Latin-square replicates.
//   Plain: r squares.           R: rows + (r-1) squares.
//   C: columns + (r-1) squares. RC: columns, rows + (r-2) squares.
enum class Variant { Plain, R, C, RC };

std::string to_string(Variant v);
// Accepts "plain", "R", "C", "RC" in any case. Throws std::invalid_argument.
Variant parse_variant(const std::string& text);
// Valid r for a family variant: Plain 0..6, R/C 1..7, RC 2..8.
std::pair<int, int> variant_range(Variant v);

// Blocks {1..6}, {7..12}, ...: the rows of the 6x6 array.
Replicate rows_replicate();
// Blocks {1,7,...,31}, {2,8,...}: the columns of the 6x6 array.
Replicate columns_replicate();

// Symbols 0..5, each once per row and once per column.
struct LatinSquare6 {
  std::array<std::array<int, 6>, 6> grid{};

  bool is_latin() const;
  // Block s holds the cells showing symbol s.
  Replicate replicate() const;
  static LatinSquare6 from_replicate(const Replicate& rep);
};

// Galaxy replicates of the Sylvester graph for columns d1..d6; blocks ordered by centre row.
const std::vector<Replicate>& galaxy_replicates();

// The six Latin squares L1..L6 whose superposition is the efficient (6x6)/6
// semi-Latin square; read off the published eight-replicate design.
const std::vector<LatinSquare6>& semi_latin_squares();

// Galaxy family. Galaxies are taken from columns d1, d2, ... in order.
// Throws ShapeError when r is outside variant_range.
ResolvableDesign gamma(int r, Variant variant);

// Latin-square family built from L1, ..., L_r.
ResolvableDesign delta(int r, Variant variant);

// Family design from an explicit list of square replicates (used for subset checks).
ResolvableDesign with_rows_columns(const std::vector<Replicate>& squares, Variant variant,
                                   std::string label = {});

// Catalog name of a family member, e.g. gamma-rc-8, delta-5, gamma-c-7.
std::string family_name(const std::string& family, int r, Variant variant);

struct SemiLatinSquare {
  int r = 0;
  // cells[row][col] lists the r symbols (0-based dual varieties) in that cell.
  std::array<std::array<std::vector<int>, 6>, 6> cells;
};

// Arranges the 36 dual blocks in the 6x6 array of original varieties and checks that
// every symbol occurs once per row and once per column. Throws ShapeError unless the
// dual has 36 blocks of equal size.
std::optional<SemiLatinSquare> is_semi_latin(const BlockDesign& dual_design);

struct RoyCheck {
  Rational a;            // A of the design
  Rational a_dual;       // A of its dual
  Rational lhs;          // (v-1)/A
  Rational rhs;          // (v-b) + (b-1)/A'
  Rational residual;     // lhs - rhs
};

// Compares both sides of the design/dual efficiency identity in exact arithmetic;
// for v = 36 it reads 35/A = 6(6-r) + (6r-1)/A'. Throws DisconnectedError when either
// side is disconnected.
RoyCheck roy_check(const ResolvableDesign& design);

}  // namespace rbd
