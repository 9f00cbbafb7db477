#include "recgraph/constructions.hpp"
#include "recgraph/graphs.hpp"
#include "recgraph/machine.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace recgraph;
using codes::Seq;
using constructions::TreeSpec;
using graphs::TriEdge;
using graphs::VertexId;

namespace {
const Nat kB = kDefaultBudget;
}

TEST_CASE("injection table") {
    const auto& doubling = constructions::injection_get("doubling");
    CHECK(doubling.eval(5) == 10);
    CHECK(doubling.in_range(6));
    CHECK_FALSE(doubling.in_range(3));

    const auto& identity = constructions::injection_get("identity");
    CHECK(identity.eval(4) == 4);
    CHECK(identity.in_range(0));

    const auto& succ = constructions::injection_get("succ");
    CHECK(succ.eval(0) == 1);
    CHECK_FALSE(succ.in_range(0));
    CHECK(succ.in_range(1));

    CHECK_THROWS_AS(constructions::injection_get("nosuch"), InvalidArgumentError);
    CHECK(constructions::injection_list().size() == 3);
}

TEST_CASE("TreeSpec membership on the binary tree") {
    TreeSpec binary(machine::registry_get("tree:binary"));
    CHECK(binary.member(Seq{}));
    CHECK(binary.member(Seq{0, 1}));
    CHECK_FALSE(binary.member(Seq{2}));
    CHECK(binary.member_code(5));
    CHECK_FALSE(binary.member_code(6));
    CHECK(binary.member_codes_upto(12) ==
          std::vector<Nat>{0, 1, 2, 3, 4, 5, 7, 8, 11, 12});
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(binary.member_code_at(i) == binary.member_codes_upto(12)[i]);
    }
}

TEST_CASE("TreeSpec rejects programs whose ground truth is not a tree") {
    CHECK_THROWS_AS(TreeSpec(machine::registry_get("never")), InvalidArgumentError);
    CHECK_THROWS_AS(TreeSpec(machine::registry_get("notree:gap")), InvalidArgumentError);
    CHECK_THROWS_AS(TreeSpec(machine::registry_get("rm:add2")), InvalidArgumentError);
}

TEST_CASE("TreeSpec fails loudly when the budget cannot decide membership") {
    TreeSpec starved(machine::registry_get("tree:binary"), 0);
    CHECK_THROWS_AS(starved.member(Seq{}), BudgetExhaustedError);
}

TEST_CASE("TreeSpec member scan stops at its limit") {
    TreeSpec ray(machine::registry_get("tree:ray0"), kB, 100);
    CHECK(ray.member_code_at(5) == 67);
    CHECK_THROWS_AS(ray.member_code_at(6), InvalidArgumentError);
}

TEST_CASE("TreeSpec path introspection") {
    TreeSpec binary(machine::registry_get("tree:binary"));
    CHECK(binary.tree_class() == machine::TreeClass::HasInfinitePath);
    CHECK(binary.path_prefix(3) == Seq{0, 0, 0});
    CHECK(binary.on_infinite_path(Seq{0, 0}));
    CHECK_FALSE(binary.on_infinite_path(Seq{1}));

    TreeSpec finite2(machine::registry_get("tree:finite(2)"));
    CHECK(finite2.tree_class() == machine::TreeClass::WellFounded);
    CHECK_THROWS_AS(finite2.path_prefix(1), InvalidArgumentError);
}

TEST_CASE("self-halting graph edges depend only on the smaller stage") {
    auto g = constructions::thm1_graph(machine::registry_get("self5"));
    CHECK(g.edge_at(VertexId::nat(7), VertexId::nat(9), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::nat(3), VertexId::nat(9), kB) == TriEdge::NoEdge);
    CHECK(g.edge_at(VertexId::nat(5), VertexId::nat(6), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::nat(4), VertexId::nat(5), kB) == TriEdge::NoEdge);

    auto none = constructions::thm1_graph(machine::registry_get("never"));
    CHECK(none.edge_at(VertexId::nat(0), VertexId::nat(5), kB) == TriEdge::NoEdge);
}

TEST_CASE("grid graph rungs, rows and cliques") {
    auto g = constructions::thm2_graph(machine::registry_get("evens"));
    // rung appears once the stage column reaches the halting stage of the row
    CHECK(g.edge_at(VertexId::row(0, 7), VertexId::row(1, 7), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::row(0, 2), VertexId::row(1, 2), kB) == TriEdge::NoEdge);
    for (Nat j = 0; j <= 20; ++j) {
        CHECK(g.edge_at(VertexId::row(1, j), VertexId::row(2, j), kB) == TriEdge::NoEdge);
    }
    // row chains and the unconditional clique mates
    CHECK(g.edge_at(VertexId::row(0, 3), VertexId::row(0, 4), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::row(0, 3), VertexId::row(0, 5), kB) == TriEdge::NoEdge);
    CHECK(g.edge_at(VertexId::row(2, 0), VertexId::clique_extra(2, 1), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::row(5, 0), VertexId::clique_extra(5, 3), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::clique_extra(5, 1), VertexId::clique_extra(5, 2), kB) ==
          TriEdge::Edge);
    CHECK(g.edge_at(VertexId::row(5, 1), VertexId::clique_extra(5, 1), kB) == TriEdge::NoEdge);
    CHECK(g.vertex(0) == VertexId::row(0, 0));
}

TEST_CASE("eta graph edge cases") {
    auto binary = constructions::thm4_graph(machine::registry_get("tree:binary"));
    auto seq = [](std::initializer_list<Nat> entries) {
        return VertexId::seq(codes::encode(Seq(entries)));
    };
    CHECK(binary.edge_at(seq({0}), seq({1}), kB) == TriEdge::Edge);
    CHECK(binary.edge_at(seq({0}), seq({0, 1}), kB) == TriEdge::NoEdge);
    CHECK(binary.edge_at(seq({2}), seq({0}), kB) == TriEdge::Edge);

    auto gap = constructions::thm4_graph(machine::registry_get("notree:gap"));
    CHECK(gap.edge_at(seq({}), seq({0}), 10000) == TriEdge::Pending);
}

TEST_CASE("witness coloring paints the infinite path zero") {
    auto coloring =
        constructions::thm4_witness_coloring(machine::registry_get("tree:ray0"), 10);
    for (Nat c = 0; c < 10; ++c) {
        Seq s = codes::decode(c);
        bool all_zero = true;
        for (Nat x : s.entries()) all_zero = all_zero && x == 0;
        if (all_zero) {
            CHECK(coloring.at(c) == Nat{0});
        } else {
            CHECK(coloring.at(c) == c + 1);
        }
    }
    CHECK_THROWS_AS(
        constructions::thm4_witness_coloring(machine::registry_get("tree:finite(2)"), 5),
        InvalidArgumentError);
}

TEST_CASE("path-with-chords graph") {
    const auto& doubling = constructions::injection_get("doubling");
    auto g3 = constructions::thm5_graph(doubling, 3);
    CHECK(g3.edge_at(VertexId::nat(4), VertexId::nat(5), kB) == TriEdge::Edge);
    // 3 is odd, so no chord ever appears
    auto f3 = graphs::prefix(g3, 20, kB);
    for (auto [i, j] : f3.edges()) CHECK(j == i + 1);

    auto g2 = constructions::thm5_graph(doubling, 2);
    auto f2 = graphs::prefix(g2, 9, kB);
    for (std::size_t i = 1; i < 9; ++i) {
        for (std::size_t j = i + 1; j < 9; ++j) {
            CHECK(f2.adjacent(i, j));
        }
    }
    CHECK_FALSE(f2.adjacent(0, 2));
}

TEST_CASE("incomparability graph skips non-members and joins incomparables") {
    TreeSpec binary(machine::registry_get("tree:binary"));
    auto g = constructions::thm6_graph(binary);
    CHECK(g.vertex(6) == VertexId::seq(7));  // code 6 is off the tree
    auto seq = [](std::initializer_list<Nat> entries) {
        return VertexId::seq(codes::encode(Seq(entries)));
    };
    CHECK(g.edge_at(seq({0}), seq({1}), kB) == TriEdge::Edge);
    CHECK(g.edge_at(seq({}), seq({0, 1}), kB) == TriEdge::NoEdge);
    CHECK_THROWS_AS(g.edge_at(seq({2}), seq({0}), kB), InvalidArgumentError);

    TreeSpec ray(machine::registry_get("tree:ray0"));
    auto chain = graphs::prefix(constructions::thm6_graph(ray), 6, kB);
    CHECK(chain.edges().empty());
}

TEST_CASE("triangle-plus-ray pattern graph") {
    auto f = graphs::prefix(constructions::ray_triangle_H(), 8, kB);
    std::vector<std::pair<std::size_t, std::size_t>> expected = {{0, 1}, {0, 2}};
    for (std::size_t i = 1; i < 7; ++i) expected.push_back({i, i + 1});
    std::sort(expected.begin(), expected.end());
    CHECK(f.edges() == expected);
}

TEST_CASE("connectedness gadget wires specials to the root only") {
    auto g = constructions::thm7_G(machine::registry_get("tree:binary"));
    CHECK(g.vertex(0) == VertexId::special(0));
    CHECK(g.vertex(3) == VertexId::seq(0));
    auto seq = [](std::initializer_list<Nat> entries) {
        return VertexId::seq(codes::encode(Seq(entries)));
    };
    CHECK(g.edge_at(VertexId::special(0), VertexId::special(1), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::special(1), VertexId::special(2), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::special(0), seq({}), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::special(1), seq({}), kB) == TriEdge::NoEdge);
    CHECK(g.edge_at(seq({}), seq({0}), kB) == TriEdge::Edge);
    CHECK(g.edge_at(seq({}), seq({0, 0}), kB) == TriEdge::NoEdge);
    CHECK(g.edge_at(seq({2}), seq({2, 0}), kB) == TriEdge::NoEdge);

    auto gap = graphs::prefix(constructions::thm7_G(machine::registry_get("notree:gap")), 5, kB);
    CHECK(gap.undecided() ==
          std::vector<std::pair<std::size_t, std::size_t>>{{3, 4}});
}

TEST_CASE("cycle-chain pattern graph at e = 0 uses squares") {
    auto g = constructions::cycle_ray_H(0);
    auto f = graphs::prefix(g, 11, kB);
    REQUIRE(f.size() == 11);
    CHECK(f.decided());
    // triangle
    CHECK(f.adjacent(0, 1));
    CHECK(f.adjacent(0, 2));
    CHECK(f.adjacent(1, 2));
    // base joins position 0 of the first square only
    CHECK(f.adjacent(0, 3));
    CHECK_FALSE(f.adjacent(0, 4));
    CHECK_FALSE(f.adjacent(0, 7));
    // first square ring: positions 3,4,5,6
    CHECK(f.adjacent(3, 4));
    CHECK(f.adjacent(4, 5));
    CHECK(f.adjacent(5, 6));
    CHECK(f.adjacent(3, 6));
    CHECK_FALSE(f.adjacent(3, 5));
    // exit corner (position 2, the opposite corner) joins the next square's entry
    CHECK(f.adjacent(5, 7));
    CHECK_FALSE(f.adjacent(4, 7));
    CHECK_FALSE(f.adjacent(6, 7));
}

TEST_CASE("exactness scan on cycle stages") {
    const auto& binary = machine::registry_get("tree:binary");
    CHECK_FALSE(constructions::thm9_exact(binary, Seq{0}, 1));
    CHECK(constructions::thm9_exact(binary, Seq{0}, 2));
    CHECK_FALSE(constructions::thm9_exact(binary, Seq{0}, 3));
    CHECK(constructions::thm9_exact(binary, Seq{1}, 3));
    CHECK(constructions::thm9_exact(binary, Seq{0, 0}, 3));
    CHECK(constructions::thm9_exact(binary, Seq{0, 0, 0}, 4));
    CHECK_THROWS_AS(constructions::thm9_exact(binary, Seq{}, 2), InvalidArgumentError);

    const auto& gap = machine::registry_get("notree:gap");
    for (Nat k = 0; k <= 50; ++k) {
        CHECK_FALSE(constructions::thm9_exact(gap, Seq{0}, k));
    }
}

TEST_CASE("cycle-chain union keeps components apart and connects exact cycles") {
    const auto& binary = machine::registry_get("tree:binary");
    auto g = constructions::thm9_G({&binary, &binary});
    CHECK(g.edge_at(VertexId::tree_base(0), VertexId::tree_base(1), kB) == TriEdge::NoEdge);
    CHECK(g.edge_at(VertexId::triangle_aux(0, 1), VertexId::tree_base(1), kB) == TriEdge::NoEdge);
    // component 0: exact length-one cycle (code 1 at stage 2) hangs off the base
    CHECK(g.edge_at(VertexId::tree_base(0), VertexId::cycle(0, 1, 2, 0), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::tree_base(0), VertexId::cycle(0, 1, 0, 0), kB) == TriEdge::NoEdge);
    CHECK(g.edge_at(VertexId::tree_base(0), VertexId::cycle(0, 1, 2, 1), kB) == TriEdge::NoEdge);
}

TEST_CASE("tree-shape graph hangs a triangle on the root") {
    TreeSpec finite2(machine::registry_get("tree:finite(2)"), kB, 20000);
    auto g = constructions::thm10_G3(finite2);
    CHECK(g.vertex(0) == VertexId::special(1));
    CHECK(g.vertex(1) == VertexId::special(2));
    CHECK(g.vertex(2) == VertexId::seq(0));
    auto seq = [](std::initializer_list<Nat> entries) {
        return VertexId::seq(codes::encode(Seq(entries)));
    };
    CHECK(g.edge_at(VertexId::special(1), VertexId::special(2), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::special(1), seq({}), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::special(2), seq({}), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::special(1), seq({0}), kB) == TriEdge::NoEdge);
    CHECK(g.edge_at(seq({}), seq({0}), kB) == TriEdge::Edge);
    CHECK(g.edge_at(seq({0}), seq({0, 1}), kB) == TriEdge::Edge);
    CHECK(g.edge_at(seq({}), seq({0, 1}), kB) == TriEdge::NoEdge);
    CHECK(g.edge_at(seq({0}), seq({1}), kB) == TriEdge::NoEdge);

    // the full graph is the member count plus the two specials
    auto f = graphs::prefix(g, 9, kB);
    CHECK(f.decided());
    CHECK_THROWS_AS(graphs::prefix(g, 10, kB), InvalidArgumentError);
}

TEST_CASE("cycle-union over trees separates components") {
    std::vector<TreeSpec> trees = {TreeSpec(machine::registry_get("tree:ray0")),
                                   TreeSpec(machine::registry_get("tree:finite(2)"))};
    auto g = constructions::thm10_G4(trees);
    CHECK(g.edge_at(VertexId::tree_base(0), VertexId::tree_base(1), kB) == TriEdge::NoEdge);
    // component 0 squares: root child cycle sits on the base
    CHECK(g.edge_at(VertexId::tree_base(0), VertexId::cycle(0, 1, 0, 0), kB) == TriEdge::Edge);
    // component 1 hexagons: cycle size 2(1+1)+2 = 6
    CHECK(g.edge_at(VertexId::tree_base(1), VertexId::cycle(1, 1, 0, 0), kB) == TriEdge::Edge);
    CHECK(g.edge_at(VertexId::cycle(1, 1, 0, 0), VertexId::cycle(1, 1, 0, 5), kB) ==
          TriEdge::Edge);
}
