#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "stairgrid/core_graphs.hpp"

using namespace stairgrid;

namespace {

std::set<std::pair<Cell, Cell>> norm_edges(std::vector<std::pair<Cell, Cell>> es) {
    std::set<std::pair<Cell, Cell>> out;
    for (auto [a, b] : es) out.insert(a < b ? std::pair(a, b) : std::pair(b, a));
    return out;
}

} // namespace

TEST_CASE("core kind parse and str round trips") {
    for (const char* name : {"U", "D", "R", "C", "UD", "UDC", "UDRC", "DmUR", "UmDR"})
        CHECK(CoreKind::parse(name).str() == name);
    CHECK(CoreKind::parse("UDRC") == CoreKind::UDRC());
    CHECK(CoreKind::DmUR().merged());
    CHECK(CoreKind::DmUR().is_dmur());
    CHECK(CoreKind::UmDR().is_umdr());
    CHECK_FALSE(CoreKind::U().merged());
    CHECK_THROWS_AS(CoreKind::parse("X"), invalid_input);
    CHECK_THROWS_AS(CoreKind::parse(""), invalid_input);
}

TEST_CASE("vertices are the staircase cells in row-major order") {
    const CoreGraph g = CoreGraph::build(CoreKind::U(), 3);
    CHECK(g.vertices() == std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}});
    CHECK(CoreGraph::build(CoreKind::U(), 1).vertices() == std::vector<Cell>{{1, 1}});
    CHECK(CoreGraph::build(CoreKind::U(), 0).vertices().empty());
}

TEST_CASE("pinned edge sets for the atomic cores") {
    CHECK(CoreGraph::build(CoreKind::U(), 2).edges().empty());
    CHECK(CoreGraph::build(CoreKind::D(), 2).edges().empty());

    const CoreGraph u4 = CoreGraph::build(CoreKind::U(), 4);
    CHECK(u4.edges() == norm_edges({{{2, 2}, {1, 3}},
                                    {{2, 2}, {1, 4}},
                                    {{2, 3}, {1, 4}},
                                    {{3, 3}, {1, 4}},
                                    {{3, 3}, {2, 4}}}));

    const CoreGraph d4 = CoreGraph::build(CoreKind::D(), 4);
    CHECK(d4.edges() == norm_edges({{{1, 2}, {2, 3}},
                                    {{1, 2}, {2, 4}},
                                    {{1, 3}, {2, 4}},
                                    {{1, 3}, {3, 4}},
                                    {{2, 3}, {3, 4}}}));

    // Row edges join same-row cells; column edges join same-column cells.
    CHECK(CoreGraph::build(CoreKind::R(), 3).edges().size() == 4);
    CHECK(CoreGraph::build(CoreKind::C(), 3).edges().size() == 4);
    CHECK(CoreGraph::build(CoreKind::R(), 3).adjacent(Cell{1, 1}, Cell{1, 3}));
    CHECK_FALSE(CoreGraph::build(CoreKind::R(), 3).adjacent(Cell{1, 1}, Cell{2, 2}));
}

TEST_CASE("pinned dump of the up-core on B_3") {
    CHECK(CoreGraph::build(CoreKind::U(), 3).dump() == "U 3; edges: (2,2)-(1,3)");
}

TEST_CASE("merged cores overlay the inner graph on off-diagonal cells") {
    // DmUR(B_3) = D(B_3) plus U(B_2), R(B_2) pulled back via (i,j) -> (i,j-1):
    // the single inner row edge (1,1)-(1,2) lands on (1,2)-(1,3).
    const CoreGraph dm = CoreGraph::build(CoreKind::DmUR(), 3);
    CHECK(dm.edges() == norm_edges({{{1, 2}, {2, 3}}, {{1, 2}, {1, 3}}}));
    const CoreGraph um = CoreGraph::build(CoreKind::UmDR(), 3);
    CHECK(um.edges() == norm_edges({{{2, 2}, {1, 3}}, {{1, 2}, {1, 3}}}));
    // On B_2 both merged kinds are edgeless (inner grid B_1 has no pairs).
    CHECK(CoreGraph::build(CoreKind::DmUR(), 2).edges().empty());
    CHECK(CoreGraph::build(CoreKind::UmDR(), 2).edges().empty());
}

TEST_CASE("independence checks and enumeration") {
    const CoreGraph g = CoreGraph::build(CoreKind::UDRC(), 2);
    CHECK(g.independent({}));
    CHECK(g.independent({Cell{1, 1}, Cell{2, 2}}));
    CHECK_FALSE(g.independent({Cell{1, 1}, Cell{1, 2}}));
    const auto sets = g.independent_sets();
    CHECK(sets.size() == 5);
    for (const auto& s : sets) CHECK(g.independent(s));
    const auto counts = g.independent_set_counts();
    REQUIRE(counts.size() >= 3);
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 3);
    CHECK(counts[2] == 1);
}

TEST_CASE("bounded enumeration prunes by size") {
    const CoreGraph g = CoreGraph::build(CoreKind::U(), 3);
    long long small = 0, all = 0;
    g.for_each_independent_set(1, [&](const std::vector<Cell>& s) {
        CHECK(s.size() <= 1);
        ++small;
    });
    g.for_each_independent_set([&](const std::vector<Cell>&) { ++all; });
    CHECK(small == 7);  // empty set plus six singletons
    CHECK(all == 48);
}

TEST_CASE("up and down cores have identical independence counts") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(CoreGraph::build(CoreKind::U(), n).independent_set_counts() ==
              CoreGraph::build(CoreKind::D(), n).independent_set_counts());
    }
    // Pinned totals per grid size for the up-core.
    const std::vector<long long> totals{2, 8, 48, 352, 2880};
    for (int n = 1; n <= 5; ++n) {
        long long sum = 0;
        for (long long c : CoreGraph::build(CoreKind::U(), n).independent_set_counts())
            sum += c;
        CHECK(sum == totals[static_cast<size_t>(n - 1)]);
    }
}

TEST_CASE("right-left labelling") {
    const CoreGraph g = CoreGraph::build(CoreKind::U(), 3);
    const auto solo = label({Cell{1, 2}, Cell{2, 2}}, LabelScheme::rl, g);
    CHECK(solo.at(Cell{1, 2}) == CellLabel::z); // nothing to its right in row 1
    CHECK(solo.at(Cell{2, 2}) == CellLabel::z);
    const auto row = label({Cell{1, 2}, Cell{1, 3}}, LabelScheme::rl, g);
    CHECK(row.at(Cell{1, 2}) == CellLabel::y);
    CHECK(row.at(Cell{1, 3}) == CellLabel::z);
}

TEST_CASE("four-letter and three-letter labellings") {
    const CoreGraph dm = CoreGraph::build(CoreKind::DmUR(), 3);
    // Off-diagonal cells are always y.
    const auto offd = label({Cell{1, 2}}, LabelScheme::phi, dm);
    CHECK(offd.at(Cell{1, 2}) == CellLabel::y);
    // A diagonal cell below an off-diagonal cell in its column is z.
    const auto zcase = label({Cell{1, 3}, Cell{3, 3}}, LabelScheme::phi, dm);
    CHECK(zcase.at(Cell{1, 3}) == CellLabel::y);
    CHECK(zcase.at(Cell{3, 3}) == CellLabel::z);
    // North-east domination gives s; an undominated diagonal cell gets t.
    const auto st = label({Cell{2, 2}, Cell{1, 3}}, LabelScheme::phi, dm);
    CHECK(st.at(Cell{2, 2}) == CellLabel::s); // (1,3) is north-east of (2,2)
    CHECK(st.at(Cell{1, 3}) == CellLabel::y);
    const auto tt = label({Cell{1, 1}, Cell{2, 2}}, LabelScheme::phi, dm);
    CHECK(tt.at(Cell{1, 1}) == CellLabel::t);
    CHECK(tt.at(Cell{2, 2}) == CellLabel::t);

    const CoreGraph um = CoreGraph::build(CoreKind::UmDR(), 3);
    const auto psi = label({Cell{1, 1}, Cell{1, 3}, Cell{3, 3}}, LabelScheme::psi, um);
    CHECK(psi.at(Cell{1, 3}) == CellLabel::y); // off-diagonal
    CHECK(psi.at(Cell{3, 3}) == CellLabel::z); // shares column 3 with (1,3)
    CHECK(psi.at(Cell{1, 1}) == CellLabel::s); // neither: the residual letter
}
