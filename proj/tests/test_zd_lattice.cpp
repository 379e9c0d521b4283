#include <map>
#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "latword/ideal_graph.hpp"
#include "latword/lattice_words.hpp"
#include "latword/zd_lattice.hpp"

using namespace latword;

namespace {

MultiDiagram column(int height) {
  std::vector<GridPoint> cells;
  for (int i = 0; i < height; ++i) cells.push_back({i});
  return MultiDiagram::of(1, cells);
}

IrreducibleIdeal line2(int axis, int width) { return IrreducibleIdeal::of(axis, column(width)); }

// Membership-table comparison over the box [0,M)^d; inclusion there decides
// global inclusion because clamping any coordinate above the base extents to
// the box edge preserves membership in both ideals.
Relation brute_relation(const OneDimMinimalIdeal& a, const OneDimMinimalIdeal& b, int M) {
  const int d = a.dimension();
  REQUIRE(b.dimension() == d);
  bool a_in_b = true, b_in_a = true;
  GridPoint p(static_cast<std::size_t>(d), 0);
  while (true) {
    const bool ma = a.member(p), mb = b.member(p);
    if (ma && !mb) a_in_b = false;
    if (mb && !ma) b_in_a = false;
    int k = d - 1;
    while (k >= 0 && p[static_cast<std::size_t>(k)] == M - 1) p[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++p[static_cast<std::size_t>(k)];
  }
  if (a_in_b && b_in_a) return Relation::equal;
  if (b_in_a) return Relation::greater;
  if (a_in_b) return Relation::less;
  return Relation::incomparable;
}

}  // namespace

TEST_SUITE("zd_lattice") {
  TEST_CASE("diagram validation") {
    const auto m = MultiDiagram::of(2, {{1, 0}, {0, 0}, {0, 1}});
    CHECK(m.cells == std::vector<GridPoint>{{0, 0}, {0, 1}, {1, 0}});  // canonical sort
    CHECK(m.contains({0, 1}));
    CHECK_FALSE(m.contains({1, 1}));
    CHECK_THROWS_AS(MultiDiagram::of(2, {{1, 0}}), Error);             // not closed
    CHECK_THROWS_AS(MultiDiagram::of(2, {{0, 0}, {0, 0}}), Error);     // duplicate
    CHECK_THROWS_AS(MultiDiagram::of(2, {{-1, 0}}), Error);            // negative
    CHECK_THROWS_AS(MultiDiagram::of(2, {{0}}), Error);                // wrong dimension
    CHECK(MultiDiagram::of(3, {}).size() == 0);
  }

  TEST_CASE("grid provider growth queries") {
    CHECK_THROWS_AS(GridProvider(0), Error);
    CHECK_THROWS_AS(GridProvider(7), Error);
    try {
      GridProvider(7);
    } catch (const Error& e) {
      CHECK(e.code() == errc::dimension_cap);
    }

    const GridProvider grid(2);
    CHECK(grid.addable({}) == std::vector<GridPoint>{{0, 0}});
    CHECK(grid.addable({{0, 0}}) == std::vector<GridPoint>{{0, 1}, {1, 0}});
    CHECK(grid.removable({{0, 0}, {0, 1}, {1, 0}}) == std::vector<GridPoint>{{0, 1}, {1, 0}});
    CHECK(grid.removable({{0, 0}}) == std::vector<GridPoint>{{0, 0}});
    CHECK(grid.is_ideal({{0, 0}, {1, 0}}));
    CHECK_FALSE(grid.is_ideal({{1, 0}}));
    CHECK(grid.label({{1, 0}, {0, 0}}) == "{(0,0),(1,0)}");
    CHECK(grid.order({0, 1}, {0, 2}) == Relation::less);
    CHECK(grid.order({2, 1}, {0, 1}) == Relation::greater);
    CHECK(grid.order({1, 0}, {0, 1}) == Relation::incomparable);
    CHECK(grid.order({1, 1}, {1, 1}) == Relation::equal);
  }

  TEST_CASE("grid level sizes count partitions") {
    const std::vector<std::size_t> planar = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    CHECK(build_levels(GridProvider(2), 10).level_sizes() == planar);
    const std::vector<std::size_t> solid = {1, 1, 3, 6, 13, 24, 48};
    CHECK(build_levels(GridProvider(3), 6).level_sizes() == solid);
  }

  TEST_CASE("irreducible membership") {
    const auto ideal = IrreducibleIdeal::of(0, column(2));  // x free, y in {0,1}
    CHECK(ideal.dimension() == 2);
    CHECK(irreducible_membership(ideal, {5, 0}));
    CHECK(irreducible_membership(ideal, {5, 1}));
    CHECK_FALSE(irreducible_membership(ideal, {0, 2}));
    CHECK_THROWS_AS(irreducible_membership(ideal, {0, 0, 0}), Error);
    CHECK_THROWS_AS(IrreducibleIdeal::of(2, column(1)), Error);   // axis out of range
    CHECK_THROWS_AS(IrreducibleIdeal::of(0, MultiDiagram::of(1, {})), Error);  // empty base

    const auto middle = IrreducibleIdeal::of(1, MultiDiagram::of(2, {{0, 0}, {1, 0}}));
    CHECK(middle.dimension() == 3);
    CHECK(middle.member({1, 9, 0}));   // (base x=1, free y=9, base z=0)
    CHECK_FALSE(middle.member({0, 0, 1}));
  }

  TEST_CASE("chain posets reverse the base order") {
    const auto linear = IrreducibleIdeal::of(1, column(2));
    const Poset chain = chains_of(linear);
    REQUIRE(chain.size() == 2);
    CHECK(chain.name(0) == "u0");
    CHECK(chain.name(1) == "u1");
    CHECK(chain.order(chain.index_of("u0"), chain.index_of("u1")) == Relation::greater);

    const auto vbase = IrreducibleIdeal::of(2, MultiDiagram::of(2, {{0, 0}, {1, 0}, {0, 1}}));
    const Poset vposet = chains_of(vbase);
    REQUIRE(vposet.size() == 3);
    CHECK(vposet.names() == std::vector<std::string>{"u0_0", "u0_1", "u1_0"});
    // origin chain is the unique maximal element
    const std::vector<std::pair<int, int>> expected = {
        {vposet.index_of("u0_0"), vposet.index_of("u0_1")},
        {vposet.index_of("u0_0"), vposet.index_of("u1_0")},
    };
    CHECK(vposet.covers() == expected);

    const auto cell = IrreducibleIdeal::of(0, MultiDiagram::of(1, {{0}}));
    CHECK(chains_of(cell).size() == 1);
    CHECK(chains_of(cell).covers().empty());
  }

  TEST_CASE("union validation") {
    CHECK_THROWS_AS(OneDimMinimalIdeal::of({}), Error);
    try {
      OneDimMinimalIdeal::of({line2(0, 1), line2(0, 2)});
      FAIL("repeated axis accepted");
    } catch (const Error& e) {
      CHECK(e.code() == errc::infinite_intersection);
    }
    const auto cell3 = IrreducibleIdeal::of(0, MultiDiagram::of(2, {{0, 0}}));
    CHECK_THROWS_AS(OneDimMinimalIdeal::of({line2(0, 1), cell3}), Error);  // mixed dims

    const auto u = OneDimMinimalIdeal::of({line2(0, 1), line2(1, 2)});
    CHECK(u.dimension() == 2);
    CHECK(u.member({9, 0}));   // first component
    CHECK(u.member({1, 9}));   // second component (base width 2)
    CHECK(u.member({1, 1}));   // still the second component
    CHECK_FALSE(u.member({2, 1}));  // outside both
  }

  TEST_CASE("pairwise intersections are explicit finite diagrams") {
    // two horizontal lines (y in {0,1}) meet three vertical lines (x in {0,1,2})
    const auto rows = IrreducibleIdeal::of(0, column(2));
    const auto cols = IrreducibleIdeal::of(1, column(3));
    const auto dec = decompose(OneDimMinimalIdeal::of({rows, cols}));
    CHECK(dec.all_finite);
    REQUIRE(dec.pairs.size() == 1);
    CHECK(dec.pairs[0] == std::pair<int, int>{0, 1});
    const MultiDiagram expected =
        MultiDiagram::of(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
    CHECK(dec.pairwise_intersections[0] == expected);

    // three coordinate axes in the 3-grid meet pairwise in the origin cell
    std::vector<IrreducibleIdeal> axes;
    for (int k = 0; k < 3; ++k)
      axes.push_back(IrreducibleIdeal::of(k, MultiDiagram::of(2, {{0, 0}})));
    const auto triple = decompose(OneDimMinimalIdeal::of(axes));
    CHECK(triple.all_finite);
    REQUIRE(triple.pairs.size() == 3);
    for (const auto& m : triple.pairwise_intersections)
      CHECK(m == MultiDiagram::of(3, {{0, 0, 0}}));

    // single component: nothing to intersect
    const auto solo = decompose(OneDimMinimalIdeal::of({rows}));
    CHECK(solo.pairs.empty());
    CHECK(solo.all_finite);
  }

  TEST_CASE("inclusion comparison agrees with the membership tables") {
    std::vector<OneDimMinimalIdeal> ideals;
    for (int axis = 0; axis < 2; ++axis)
      for (int width = 1; width <= 3; ++width)
        ideals.push_back(OneDimMinimalIdeal::of({line2(axis, width)}));
    ideals.push_back(OneDimMinimalIdeal::of({line2(0, 1), line2(1, 1)}));
    ideals.push_back(OneDimMinimalIdeal::of({line2(0, 2), line2(1, 1)}));
    ideals.push_back(OneDimMinimalIdeal::of({line2(0, 3), line2(1, 3)}));
    for (const auto& a : ideals)
      for (const auto& b : ideals) CHECK(min1_compare(a, b) == brute_relation(a, b, 5));

    CHECK(min1_compare(ideals[0], ideals[0]) == Relation::equal);
    CHECK(min1_compare(ideals[0], ideals[1]) == Relation::less);
    CHECK(min1_compare(ideals[1], ideals[0]) == Relation::greater);
    CHECK(min1_compare(ideals[0], ideals[3]) == Relation::incomparable);

    const auto cell3 = OneDimMinimalIdeal::of({IrreducibleIdeal::of(0, MultiDiagram::of(2, {{0, 0}}))});
    CHECK_THROWS_AS(min1_compare(ideals[0], cell3), Error);
  }

  TEST_CASE("frequency reduction splits and renormalizes per component") {
    const auto ideal = OneDimMinimalIdeal::of({line2(0, 2), line2(1, 3)});
    const std::vector<std::map<std::string, double>> freqs = {
        {{"u0", 0.25}, {"u1", 0.15}},
        {{"u0", 0.3}, {"u1", 0.2}, {"u2", 0.1}},
    };
    const auto parts = reduce_to_chain_poset(ideal, freqs);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].weight == doctest::Approx(0.4));
    CHECK(parts[1].weight == doctest::Approx(0.6));
    CHECK(parts[0].raw == freqs[0]);
    CHECK(parts[1].raw == freqs[1]);
    CHECK(parts[0].spectrum.freq(0) == doctest::Approx(0.625));
    CHECK(parts[0].spectrum.freq(1) == doctest::Approx(0.375));
    CHECK(parts[1].spectrum.freq(0) == doctest::Approx(0.5));
    CHECK(parts[1].spectrum.freq(2) == doctest::Approx(1.0 / 6));
    CHECK(parts[0].poset->name(0) == "u0");

    auto bad = freqs;
    bad[1]["u0"] = 0.4;  // component stays valid, global sum 1.1
    try {
      reduce_to_chain_poset(ideal, bad);
      FAIL("sum mismatch accepted");
    } catch (const Error& e) {
      CHECK(e.code() == errc::sum_mismatch);
    }
    bad = freqs;
    bad[1].erase("u2");
    bad[1]["u9"] = 0.1;
    try {
      reduce_to_chain_poset(ideal, bad);
      FAIL("unknown chain accepted");
    } catch (const Error& e) {
      CHECK(e.code() == errc::unknown_element);
    }
    bad = freqs;
    bad[0] = {{"u0", 0.15}, {"u1", 0.25}};  // increasing along the chain
    CHECK_THROWS_AS(reduce_to_chain_poset(ideal, bad), Error);
    bad = freqs;
    bad[0] = {{"u0", 0.4}, {"u1", 0.0}};
    try {
      reduce_to_chain_poset(ideal, bad);
      FAIL("zero frequency accepted");
    } catch (const Error& e) {
      CHECK(e.code() == errc::nonpositive_frequency);
    }
    CHECK_THROWS_AS(reduce_to_chain_poset(ideal, {freqs[0]}), Error);  // one map missing
  }

  TEST_CASE("embedding a word grows a diagram path") {
    const auto component = IrreducibleIdeal::of(1, column(2));
    const auto chain = std::make_shared<const Poset>(chains_of(component));
    const auto word = LatticeWord::of(chain, {0, 0, 1, 0, 1});
    const auto path = tableau_embed(component, word);
    REQUIRE(path.size() == 5);
    CHECK(path[0] == MultiDiagram::of(2, {{0, 0}}));
    CHECK(path[2] == MultiDiagram::of(2, {{0, 0}, {0, 1}, {1, 0}}));
    CHECK(path[4] == MultiDiagram::of(2, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}}));
    const GridProvider grid(2);
    for (const auto& diag : path) CHECK(grid.is_ideal(diag.cells));
    CHECK(embed_pullback(component, path) == word.letters);
  }

  TEST_CASE("embedding round-trips exhaustively") {
    const std::vector<IrreducibleIdeal> components = {
        IrreducibleIdeal::of(0, column(2)),
        IrreducibleIdeal::of(1, column(3)),
        IrreducibleIdeal::of(2, MultiDiagram::of(2, {{0, 0}, {1, 0}, {0, 1}})),
    };
    for (const auto& component : components) {
      const auto chain = std::make_shared<const Poset>(chains_of(component));
      const GridProvider grid(component.dimension());
      for (int n = 0; n <= 5; ++n) {
        for (const auto& letters : enumerate_lattice_words(*chain, n).words) {
          const auto word = LatticeWord::of(chain, letters);
          const auto path = tableau_embed(component, word);
          for (const auto& diag : path) {
            CHECK(grid.is_ideal(diag.cells));
            for (const auto& cell : diag.cells) CHECK(component.member(cell));
          }
          CHECK(embed_pullback(component, path) == letters);
        }
      }
    }
  }

  TEST_CASE("embedding rejects mismatched inputs") {
    const auto component = IrreducibleIdeal::of(1, column(2));
    const auto wrong = std::make_shared<const Poset>(Poset::chain(2));  // names c1,c2
    CHECK_THROWS_AS(tableau_embed(component, LatticeWord::of(wrong, {0, 1})), Error);

    const auto chain = std::make_shared<const Poset>(chains_of(component));
    const LatticeWord strict{chain, {0, 0, 1}, Convention::strict2};
    try {
      tableau_embed(component, strict);
      FAIL("strict words accepted");
    } catch (const Error& e) {
      CHECK(e.code() == errc::convention_unsupported);
    }

    // pullback rejects paths that skip, jump, or leave the component
    const auto good = tableau_embed(component, LatticeWord::of(chain, {0, 0}));
    CHECK_THROWS_AS(embed_pullback(component, {good[1]}), Error);  // starts with 2 cells
    const auto outside =
        std::vector<MultiDiagram>{MultiDiagram::of(2, {{0, 0}}),
                                  MultiDiagram::of(2, {{0, 0}, {1, 0}}),
                                  MultiDiagram::of(2, {{0, 0}, {1, 0}, {2, 0}})};
    try {
      embed_pullback(component, outside);  // base coordinate 2 is not in the base
      FAIL("cell outside the component accepted");
    } catch (const Error& e) {
      CHECK(e.code() == errc::invalid_argument);
    }
    CHECK_THROWS_AS(embed_pullback(component, {MultiDiagram::of(3, {{0, 0, 0}})}), Error);
  }
}
