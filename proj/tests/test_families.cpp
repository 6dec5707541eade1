#include <doctest.h>

#include <set>

#include "rbd/catalog.hpp"
#include "rbd/efficiency.hpp"
#include "rbd/errors.hpp"
#include "rbd/families.hpp"
#include "rbd/sylvester.hpp"
#include "support.hpp"

using namespace rbd;
using testing::rounds_to;

namespace {

Replicate sorted(Replicate rep) {
  for (auto& b : rep) std::sort(b.begin(), b.end());
  std::sort(rep.begin(), rep.end());
  return rep;
}

std::multiset<Replicate> replicate_multiset(const ResolvableDesign& d) {
  std::multiset<Replicate> out;
  for (const auto& rep : d.replicates()) out.insert(sorted(rep));
  return out;
}

}  // namespace

TEST_CASE("rows and columns replicates") {
  const auto rows = rows_replicate();
  CHECK(rows.front() == Block{0, 1, 2, 3, 4, 5});
  CHECK(rows.back() == Block{30, 31, 32, 33, 34, 35});
  const auto cols = columns_replicate();
  CHECK(cols.front() == Block{0, 6, 12, 18, 24, 30});
  const auto fig = published_gamma_rc8();
  CHECK(fig.replicate(0) == cols);
  CHECK(fig.replicate(1) == rows);
  CHECK(a_value(ResolvableDesign(36, 6, {rows, cols})) == Rational(7, 9));
}

TEST_CASE("constructed eight-replicate designs equal the published ones") {
  CHECK(gamma(8, Variant::RC) == published_gamma_rc8());
  CHECK(delta(8, Variant::RC) == published_delta_rc8());
  CHECK(find_catalog("gamma-rc-8")->design == gamma(8, Variant::RC));
}

TEST_CASE("galaxy replicates are the galaxies of the Sylvester graph") {
  const auto g = build_sylvester();
  const auto& reps = galaxy_replicates();
  REQUIRE(reps.size() == 6);
  for (int col = 1; col <= 6; ++col)
    CHECK(sorted(reps[static_cast<std::size_t>(col - 1)]) == sorted(galaxy(g, col).starfish));
}

TEST_CASE("the six source Latin squares") {
  const auto& squares = semi_latin_squares();
  REQUIRE(squares.size() == 6);
  std::set<Replicate> distinct;
  for (const auto& sq : squares) {
    CHECK(sq.is_latin());
    CHECK(LatinSquare6::from_replicate(sq.replicate()).grid == sq.grid);
    distinct.insert(sorted(sq.replicate()));
  }
  CHECK(distinct.size() == 6);
  CHECK_THROWS_AS(LatinSquare6::from_replicate(rows_replicate()), ShapeError);
}

TEST_CASE("named family values") {
  CHECK(rounds_to(a_value(gamma(2, Variant::RC)), "0.7778"));
  CHECK(gamma(2, Variant::RC).r() == 2);
  CHECK(rounds_to(a_value(gamma(6, Variant::Plain)), "0.8442"));
  CHECK(rounds_to(a_value(delta(4, Variant::RC)), "0.8393"));
  CHECK(rounds_to(a_value(delta(6, Variant::Plain)), "0.8442"));
}

TEST_CASE("variant ranges are enforced") {
  CHECK_THROWS_AS(gamma(9, Variant::RC), ShapeError);
  CHECK_THROWS_AS(gamma(1, Variant::RC), ShapeError);
  CHECK_THROWS_AS(delta(8, Variant::R), ShapeError);
  CHECK_THROWS_AS(delta(7, Variant::Plain), ShapeError);
  CHECK(gamma(0, Variant::Plain).r() == 0);
  CHECK(gamma(1, Variant::Plain).r() == 1);
  CHECK_THROWS_AS(parse_variant("XY"), std::invalid_argument);
  CHECK(parse_variant("rc") == Variant::RC);
  CHECK(family_name("gamma", 8, Variant::RC) == "gamma-rc-8");
  CHECK(family_name("delta", 5, Variant::Plain) == "delta-5");
}

TEST_CASE("rows-and-columns designs extend one another") {
  for (int r = 3; r <= 8; ++r) {
    for (auto* family : {"gamma", "delta"}) {
      const bool is_gamma = std::string(family) == "gamma";
      const auto big = is_gamma ? gamma(r, Variant::RC) : delta(r, Variant::RC);
      const auto smaller = is_gamma ? gamma(r - 1, Variant::RC) : delta(r - 1, Variant::RC);
      CHECK(big.prefix(r - 1) == smaller);
      if (r - 1 <= 7) {
        const auto rows_only = is_gamma ? gamma(r - 1, Variant::R) : delta(r - 1, Variant::R);
        CHECK(big.without_replicate(0) == rows_only);
        const auto cols_only = is_gamma ? gamma(r - 1, Variant::C) : delta(r - 1, Variant::C);
        CHECK(replicate_multiset(big.without_replicate(1)) == replicate_multiset(cols_only));
      }
    }
  }
}

TEST_CASE("the first r Latin squares give the best r-subset") {
  const auto& squares = semi_latin_squares();
  for (int r = 2; r <= 6; ++r) {
    const auto first = a_value(delta(r, Variant::Plain));
    for (int mask = 0; mask < 64; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != r) continue;
      std::vector<Replicate> reps;
      for (int i = 0; i < 6; ++i)
        if (mask & (1 << i)) reps.push_back(squares[static_cast<std::size_t>(i)].replicate());
      CHECK(a_value(ResolvableDesign(36, 6, reps)) <= first);
    }
  }
}

TEST_CASE("rows-only and columns-only galaxy designs share their spectrum") {
  for (int r = 3; r <= 6; ++r) {
    const auto a = efficiency_spectrum(gamma(r, Variant::R));
    const auto b = efficiency_spectrum(gamma(r, Variant::C));
    CHECK(a.characteristic == b.characteristic);
  }
}

TEST_CASE("adding rows and columns never hurts") {
  for (int r = 3; r <= 6; ++r) {
    CHECK(a_value(gamma(r, Variant::RC)) >= a_value(gamma(r, Variant::C)));
    CHECK(a_value(gamma(r, Variant::C)) >= a_value(gamma(r, Variant::Plain)));
    CHECK(a_value(delta(r, Variant::RC)) >= a_value(delta(r, Variant::C)));
    CHECK(a_value(delta(r, Variant::C)) >= a_value(delta(r, Variant::Plain)));
  }
  CHECK(a_value(gamma(7, Variant::RC)) >= a_value(gamma(7, Variant::C)));
  CHECK(a_value(delta(7, Variant::RC)) >= a_value(delta(7, Variant::C)));
}

TEST_CASE("duals of the Latin-square designs are semi-Latin squares") {
  for (int r = 1; r <= 6; ++r) {
    const auto du = dual(delta(r, Variant::Plain));
    const auto sq = is_semi_latin(du.design);
    REQUIRE(sq.has_value());
    CHECK(sq->r == r);
  }
}

TEST_CASE("dual of the rows and columns lattice is checked, not assumed") {
  const auto du = dual(gamma(2, Variant::RC));
  // The symbol of row block i fills all of row i of the array.
  CHECK_FALSE(is_semi_latin(du.design).has_value());
}

TEST_CASE("a repeated block within an array row is not semi-Latin") {
  const auto dual_design = dual(delta(2, Variant::Plain)).design;
  auto blocks = dual_design.blocks();
  blocks[1] = blocks[0];
  CHECK_FALSE(is_semi_latin(BlockDesign(dual_design.v(), blocks)).has_value());
  CHECK_THROWS_AS(is_semi_latin(BlockDesign(4, {{0, 1}, {2, 3}})), ShapeError);
}

TEST_CASE("design and dual A-values satisfy the duality identity") {
  for (int r = 2; r <= 6; ++r) {
    for (const auto& d : {delta(r, Variant::Plain), gamma(r, Variant::Plain)}) {
      const auto roy = roy_check(d);
      CHECK(roy.residual == 0);
      CHECK(roy.lhs == Rational(35) / roy.a);
      CHECK(roy.rhs == Rational(6 * (6 - r)) + Rational(6 * r - 1) / roy.a_dual);
    }
  }
  const auto six = roy_check(delta(6, Variant::Plain));
  CHECK(six.a == six.a_dual);
  const auto two = roy_check(delta(2, Variant::Plain));
  CHECK(Rational(35) / two.a == Rational(24) + Rational(11) / two.a_dual);
  CHECK_THROWS_AS(roy_check(gamma(1, Variant::Plain)), DisconnectedError);
}

TEST_CASE("catalog contents") {
  const auto theta = find_catalog("theta-8")->design;
  CHECK(theta.replicate(0).front() == Block{1, 5, 16, 17, 28, 32});
  for (const auto& e : catalog()) CHECK_MESSAGE(validate(e.design).empty(), e.name);
  CHECK(catalog().size() == 49);
  CHECK_FALSE(find_catalog("gamma-rc-9").has_value());
}
