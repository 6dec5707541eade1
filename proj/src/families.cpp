#include "rbd/families.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "catalog_data.hpp"
#include "rbd/design_io.hpp"
#include "rbd/efficiency.hpp"
#include "rbd/errors.hpp"

namespace rbd {

namespace {

constexpr int kSide = 6;
constexpr int kV = 36;

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Plain: return "plain";
    case Variant::R: return "R";
    case Variant::C: return "C";
    case Variant::RC: return "RC";
  }
  return "?";
}

Variant parse_variant(const std::string& text) {
  std::string s;
  for (char c : text) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "PLAIN" || s.empty()) return Variant::Plain;
  if (s == "R") return Variant::R;
  if (s == "C") return Variant::C;
  if (s == "RC") return Variant::RC;
  throw std::invalid_argument("unknown variant '" + text + "' (plain, R, C, RC)");
}

std::pair<int, int> variant_range(Variant v) {
  switch (v) {
    case Variant::Plain: return {0, 6};
    case Variant::R:
    case Variant::C: return {1, 7};
    case Variant::RC: return {2, 8};
  }
  return {0, 0};
}

Replicate rows_replicate() {
  Replicate rep;
  for (int row = 0; row < kSide; ++row) {
    Block b;
    for (int col = 0; col < kSide; ++col) b.push_back(kSide * row + col);
    rep.push_back(std::move(b));
  }
  return rep;
}

Replicate columns_replicate() {
  Replicate rep;
  for (int col = 0; col < kSide; ++col) {
    Block b;
    for (int row = 0; row < kSide; ++row) b.push_back(kSide * row + col);
    rep.push_back(std::move(b));
  }
  return rep;
}

bool LatinSquare6::is_latin() const {
  for (int i = 0; i < kSide; ++i) {
    std::array<int, kSide> in_row{}, in_col{};
    for (int j = 0; j < kSide; ++j) {
      const int a = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const int b = grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (a < 0 || a >= kSide || b < 0 || b >= kSide) return false;
      if (in_row[static_cast<std::size_t>(a)]++ || in_col[static_cast<std::size_t>(b)]++) return false;
    }
  }
  return true;
}

Replicate LatinSquare6::replicate() const {
  Replicate rep(kSide);
  for (int i = 0; i < kSide; ++i)
    for (int j = 0; j < kSide; ++j)
      rep[static_cast<std::size_t>(grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])]
          .push_back(kSide * i + j);
  return rep;
}

LatinSquare6 LatinSquare6::from_replicate(const Replicate& rep) {
  if (rep.size() != kSide) throw ShapeError("a Latin-square replicate has six blocks");
  LatinSquare6 sq;
  for (auto& row : sq.grid) row.fill(-1);
  for (std::size_t s = 0; s < rep.size(); ++s)
    for (int x : rep[s]) {
      if (x < 0 || x >= kV) throw ShapeError("variety out of range");
      sq.grid[static_cast<std::size_t>(x / kSide)][static_cast<std::size_t>(x % kSide)] =
          static_cast<int>(s);
    }
  if (!sq.is_latin()) throw ShapeError("replicate is not a Latin square on the 6x6 array");
  return sq;
}

const std::vector<Replicate>& galaxy_replicates() {
  static const std::vector<Replicate> replicates = [] {
    const auto sigma = build_sylvester();
    std::vector<Replicate> out;
    for (int col = 1; col <= kSide; ++col) out.push_back(galaxy(sigma, col).starfish);
    return out;
  }();
  return replicates;
}

const std::vector<LatinSquare6>& semi_latin_squares() {
  static const std::vector<LatinSquare6> squares = [] {
    const auto published = read_design(data::kDeltaRC8);
    std::vector<LatinSquare6> out;
    for (int i = 2; i < published.r(); ++i)
      out.push_back(LatinSquare6::from_replicate(published.replicate(static_cast<std::size_t>(i))));
    return out;
  }();
  return squares;
}

std::string family_name(const std::string& family, int r, Variant variant) {
  std::string name = family;
  switch (variant) {
    case Variant::Plain: break;
    case Variant::R: name += "-r"; break;
    case Variant::C: name += "-c"; break;
    case Variant::RC: name += "-rc"; break;
  }
  return name + "-" + std::to_string(r);
}

ResolvableDesign with_rows_columns(const std::vector<Replicate>& squares, Variant variant,
                                   std::string label) {
  std::vector<Replicate> reps;
  if (variant == Variant::C || variant == Variant::RC) reps.push_back(columns_replicate());
  if (variant == Variant::R || variant == Variant::RC) reps.push_back(rows_replicate());
  reps.insert(reps.end(), squares.begin(), squares.end());
  return ResolvableDesign(kV, kSide, std::move(reps), std::move(label));
}

namespace {

int squares_needed(int r, Variant variant) {
  const auto [lo, hi] = variant_range(variant);
  if (r < lo || r > hi)
    throw ShapeError("r=" + std::to_string(r) + " outside " + std::to_string(lo) + ".." +
                     std::to_string(hi) + " for variant " + to_string(variant));
  switch (variant) {
    case Variant::Plain: return r;
    case Variant::R:
    case Variant::C: return r - 1;
    case Variant::RC: return r - 2;
  }
  return r;
}

}  // namespace

ResolvableDesign gamma(int r, Variant variant) {
  const int m = squares_needed(r, variant);
  const auto& all = galaxy_replicates();
  std::vector<Replicate> squares(all.begin(), all.begin() + m);
  return with_rows_columns(squares, variant, family_name("gamma", r, variant));
}

ResolvableDesign delta(int r, Variant variant) {
  const int m = squares_needed(r, variant);
  const auto& all = semi_latin_squares();
  std::vector<Replicate> squares;
  for (int i = 0; i < m; ++i) squares.push_back(all[static_cast<std::size_t>(i)].replicate());
  return with_rows_columns(squares, variant, family_name("delta", r, variant));
}

std::optional<SemiLatinSquare> is_semi_latin(const BlockDesign& dual_design) {
  const auto size = dual_design.equal_block_size();
  if (dual_design.block_count() != static_cast<std::size_t>(kV) || !size)
    throw ShapeError("semi-Latin check needs 36 dual blocks of equal size");
  SemiLatinSquare sq;
  sq.r = *size;
  const int symbols = dual_design.v();
  // Dual block x sits at the cell of original variety x.
  std::vector<std::array<int, kSide>> in_row(static_cast<std::size_t>(symbols)),
      in_col(static_cast<std::size_t>(symbols));
  for (auto& a : in_row) a.fill(0);
  for (auto& a : in_col) a.fill(0);
  for (int x = 0; x < kV; ++x) {
    const auto& block = dual_design.block(static_cast<std::size_t>(x));
    sq.cells[static_cast<std::size_t>(x / kSide)][static_cast<std::size_t>(x % kSide)] = block;
    for (int s : block) {
      ++in_row[static_cast<std::size_t>(s)][static_cast<std::size_t>(x / kSide)];
      ++in_col[static_cast<std::size_t>(s)][static_cast<std::size_t>(x % kSide)];
    }
  }
  for (int s = 0; s < symbols; ++s)
    for (int i = 0; i < kSide; ++i)
      if (in_row[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] != 1 ||
          in_col[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] != 1)
        return std::nullopt;
  return sq;
}

RoyCheck roy_check(const ResolvableDesign& design) {
  const auto d = dual(design);
  RoyCheck out;
  out.a = a_value(design);
  out.a_dual = a_value(d.design);
  const int v = design.v();
  const int b = static_cast<int>(d.design.v());
  out.lhs = Rational(v - 1) / out.a;
  out.rhs = Rational(v - b) + Rational(b - 1) / out.a_dual;
  out.residual = out.lhs - out.rhs;
  out.lhs.canonicalize();
  out.rhs.canonicalize();
  out.residual.canonicalize();
  return out;
}

}  // namespace rbd
