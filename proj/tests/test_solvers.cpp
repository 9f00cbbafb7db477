#include "recgraph/solvers.hpp"
#include "recgraph/constructions.hpp"
#include "recgraph/graphs.hpp"
#include "recgraph/machine.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace recgraph;
using constructions::TreeSpec;
using graphs::Coloring;
using graphs::FinitePrefix;
using graphs::VertexId;
using solvers::Embedding;

namespace {

FinitePrefix nats(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    std::vector<VertexId> verts;
    for (std::size_t i = 0; i < n; ++i) verts.push_back(VertexId::nat(i));
    return FinitePrefix(std::move(verts), std::move(edges), {});
}

FinitePrefix complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
    return nats(n, std::move(edges));
}

FinitePrefix cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return nats(n, std::move(edges));
}

FinitePrefix undecided_pair() {
    return FinitePrefix({VertexId::nat(0), VertexId::nat(1)}, {}, {{0, 1}});
}

std::vector<Nat> colors_of(const FinitePrefix& f, const Coloring& c) {
    std::vector<Nat> out;
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(*c.at(i));
    return out;
}

}  // namespace

TEST_CASE("k_colorable on the standard small graphs") {
    CHECK_FALSE(solvers::k_colorable(complete(4), 3).has_value());

    auto t = solvers::k_colorable(complete(3), 3);
    REQUIRE(t.has_value());
    CHECK(graphs::is_valid_coloring(complete(3), *t));
    CHECK(colors_of(complete(3), *t) == std::vector<Nat>{0, 1, 2});

    CHECK_FALSE(solvers::k_colorable(cycle(5), 2).has_value());
    auto c5 = solvers::k_colorable(cycle(5), 3);
    REQUIRE(c5.has_value());
    CHECK(colors_of(cycle(5), *c5) == std::vector<Nat>{0, 1, 0, 1, 2});

    CHECK(solvers::k_colorable(nats(3, {}), 1).has_value());
    CHECK_FALSE(solvers::k_colorable(nats(1, {}), 0).has_value());
    CHECK(solvers::k_colorable(nats(0, {}), 0).has_value());
}

TEST_CASE("k_colorable is deterministic") {
    auto first = solvers::k_colorable(cycle(7), 3);
    auto second = solvers::k_colorable(cycle(7), 3);
    REQUIRE(first.has_value());
    REQUIRE(second.has_value());
    CHECK(colors_of(cycle(7), *first) == colors_of(cycle(7), *second));
}

TEST_CASE("chromatic numbers of fixtures") {
    CHECK(solvers::chromatic_number(nats(0, {})) == 0);
    CHECK(solvers::chromatic_number(nats(5, {})) == 1);
    CHECK(solvers::chromatic_number(complete(6)) == 6);
    CHECK(solvers::chromatic_number(cycle(5)) == 3);
    CHECK(solvers::chromatic_number(cycle(6)) == 2);
}

TEST_CASE("clique search is lexicographic") {
    auto empty = solvers::has_clique(cycle(5), 0);
    REQUIRE(empty.has_value());
    CHECK(empty->empty());

    CHECK_FALSE(solvers::has_clique(cycle(5), 3).has_value());

    auto k4_plus = nats(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto found = solvers::has_clique(k4_plus, 3);
    REQUIRE(found.has_value());
    CHECK(*found == std::vector<std::size_t>{0, 1, 2});

    const auto& self5 = machine::registry_get("self5");
    auto f = graphs::prefix(constructions::thm1_graph(self5), 12, kDefaultBudget);
    auto clique = solvers::has_clique(f, 7);
    REQUIRE(clique.has_value());
    CHECK(*clique == std::vector<std::size_t>{5, 6, 7, 8, 9, 10, 11});
}

TEST_CASE("independent set search") {
    auto all = solvers::independent_set(nats(4, {}), 4);
    REQUIRE(all.has_value());
    CHECK(*all == std::vector<std::size_t>{0, 1, 2, 3});

    CHECK_FALSE(solvers::independent_set(complete(4), 2).has_value());
    auto pair = solvers::independent_set(cycle(5), 2);
    REQUIRE(pair.has_value());
    CHECK(*pair == std::vector<std::size_t>{0, 2});
}

TEST_CASE("subgraph embedding on fixed patterns") {
    auto edge = nats(2, {{0, 1}});
    auto tri = complete(3);
    CHECK(solvers::subgraph_embedding(edge, tri).has_value());
    CHECK_FALSE(solvers::subgraph_embedding(tri, cycle(4)).has_value());

    auto identity = solvers::subgraph_embedding(tri, tri);
    REQUIRE(identity.has_value());
    CHECK(identity->image == std::vector<std::size_t>{0, 1, 2});

    auto empty_pattern = solvers::subgraph_embedding(nats(0, {}), cycle(4));
    REQUIRE(empty_pattern.has_value());
    CHECK(empty_pattern->image.empty());

    // pattern larger than the host can never fit
    CHECK_FALSE(solvers::subgraph_embedding(complete(4), tri).has_value());
}

TEST_CASE("components") {
    auto f = nats(4, {{0, 1}, {1, 2}});
    CHECK(solvers::component_of(f, std::size_t{0}) == std::vector<std::size_t>{0, 1, 2});
    CHECK(solvers::component_of(f, std::size_t{3}) == std::vector<std::size_t>{3});
    CHECK(solvers::component_of(f, VertexId::nat(2)) == std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(solvers::component_of(f, std::size_t{9}), InvalidArgumentError);
    CHECK_THROWS_AS(solvers::component_of(f, VertexId::nat(9)), InvalidArgumentError);
}

TEST_CASE("grid graph component facts") {
    const auto& evens = machine::registry_get("evens");
    auto f = graphs::prefix(constructions::thm2_graph(evens), 170, kDefaultBudget);
    auto idx = f.index_of(VertexId::row(0, 0));
    REQUIRE(idx.has_value());
    auto comp = solvers::component_of(f, *idx);
    bool has_row1 = false;
    for (auto i : comp) {
        const auto& v = f.vertex(i);
        if (v.kind() == VertexId::Kind::Row && v.a() == 1) has_row1 = true;
        if (v.kind() == VertexId::Kind::Row || v.kind() == VertexId::Kind::CliqueExtra) {
            CHECK(v.a() <= 1);
        }
    }
    CHECK(has_row1);
    CHECK(solvers::chromatic_number(f.induced(comp)) == 2);
}

TEST_CASE("exhaustive oracles") {
    CHECK(solvers::exhaustive_colorings(complete(3), 3) == 6);
    CHECK(solvers::exhaustive_colorings(complete(4), 3) == 0);
    CHECK(solvers::exhaustive_colorings(nats(3, {}), 2) == 8);
    CHECK(solvers::exhaustive_colorings(nats(0, {}), 0) == 1);
    CHECK(solvers::exhaustive_colorings(nats(1, {}), 0) == 0);
    CHECK_THROWS_AS(solvers::exhaustive_colorings(nats(9, {}), 2), InvalidArgumentError);

    CHECK(solvers::exhaustive_embedding(nats(0, {}), complete(3)).has_value());
    CHECK(solvers::exhaustive_embedding(complete(3), complete(3)).has_value());
    CHECK_FALSE(solvers::exhaustive_embedding(complete(3), cycle(4)).has_value());
    CHECK_THROWS_AS(solvers::exhaustive_embedding(complete(6), complete(7)),
                    InvalidArgumentError);
    CHECK_THROWS_AS(solvers::exhaustive_embedding(complete(3), complete(8)),
                    InvalidArgumentError);
}

TEST_CASE("exhaustive and backtracking solvers agree on small fixtures") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (Nat k = 0; k <= 3; ++k) {
            CHECK(solvers::k_colorable(cycle(std::max<std::size_t>(n, 3)), k).has_value() ==
                  (solvers::exhaustive_colorings(cycle(std::max<std::size_t>(n, 3)), k) > 0));
        }
    }
    CHECK(solvers::subgraph_embedding(nats(2, {{0, 1}}), cycle(5)).has_value() ==
          solvers::exhaustive_embedding(nats(2, {{0, 1}}), cycle(5)).has_value());
}

TEST_CASE("coloring enumeration visits lexicographically and can stop early") {
    std::vector<std::vector<Nat>> seen;
    Nat count = solvers::enumerate_colorings(complete(3), 3, [&](const Coloring& c) {
        seen.push_back(colors_of(complete(3), c));
        return true;
    });
    CHECK(count == 6);
    REQUIRE(seen.size() == 6);
    CHECK(seen.front() == std::vector<Nat>{0, 1, 2});
    CHECK(std::is_sorted(seen.begin(), seen.end()));

    Nat stopped = solvers::enumerate_colorings(complete(3), 3, [](const Coloring&) {
        return false;
    });
    CHECK(stopped == 1);

    Nat trivial = solvers::enumerate_colorings(nats(0, {}), 0, [](const Coloring&) {
        return true;
    });
    CHECK(trivial == 1);
}

TEST_CASE("solvers refuse undecided prefixes") {
    auto u = undecided_pair();
    CHECK_THROWS_AS(solvers::k_colorable(u, 2), BudgetExhaustedError);
    CHECK_THROWS_AS(solvers::chromatic_number(u), BudgetExhaustedError);
    CHECK_THROWS_AS(solvers::has_clique(u, 1), BudgetExhaustedError);
    CHECK_THROWS_AS(solvers::independent_set(u, 1), BudgetExhaustedError);
    CHECK_THROWS_AS(solvers::subgraph_embedding(u, complete(3)), BudgetExhaustedError);
    CHECK_THROWS_AS(solvers::subgraph_embedding(complete(3), u), BudgetExhaustedError);
    CHECK_THROWS_AS(solvers::component_of(u, std::size_t{0}), BudgetExhaustedError);
    CHECK_THROWS_AS(solvers::exhaustive_colorings(u, 2), BudgetExhaustedError);
    CHECK_THROWS_AS(solvers::exhaustive_embedding(u, complete(3)), BudgetExhaustedError);
    CHECK_THROWS_AS(solvers::enumerate_colorings(u, 2, [](const Coloring&) { return true; }),
                    BudgetExhaustedError);
}

TEST_CASE("longest descending member chains") {
    CHECK(solvers::tree_path_length(TreeSpec(machine::registry_get("tree:finite(2)")), 10) == 2);
    CHECK(solvers::tree_path_length(TreeSpec(machine::registry_get("tree:binary")), 6) == 6);
    CHECK(solvers::tree_path_length(TreeSpec(machine::registry_get("tree:desc")), 4) == 4);
    CHECK_THROWS_AS(
        solvers::tree_path_length(TreeSpec(machine::registry_get("tree:binary"), 0), 3),
        BudgetExhaustedError);
}
