#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recgraph/codes.hpp"
#include "recgraph/common.hpp"

namespace recgraph::graphs {

// Vertex identity for the graph families built in constructions.hpp, plus a
// free-form Named kind for graphs read back from JSON. Label strings (one per
// kind, documented at the factory) are what DOT and JSON exports show.
class VertexId {
public:
    enum class Kind {
        Nat,          // plain natural:              "7"
        Row,          // grid row m, column j:       "v3,2"
        CliqueExtra,  // i-th clique mate of row m:  "u3,1"
        Special,      // distinguished vertex i:     "v1"
        Seq,          // sequence with this code:    "<0.1>"  (empty: "<>")
        TreeBase,     // component e's base vertex:  "t0:1"
        TriangleAux,  // component e's i-th base triangle mate: "1:v2"
        Cycle,        // cycle vertex: component e, sequence code, copy k, position: "C1:0:2:0"
        Named,        // imported label, verbatim
    };

    static VertexId nat(Nat n);
    static VertexId row(Nat m, Nat j);
    static VertexId clique_extra(Nat m, Nat i);
    static VertexId special(Nat i);
    static VertexId seq(Nat code);
    static VertexId tree_base(Nat e);
    static VertexId triangle_aux(Nat e, Nat i);
    static VertexId cycle(Nat e, Nat seq_code, Nat k, Nat pos);
    static VertexId named(std::string label);

    Kind kind() const { return kind_; }
    Nat a() const { return a_; }
    Nat b() const { return b_; }
    Nat c() const { return c_; }
    Nat d() const { return d_; }

    std::string label() const;

    bool operator==(const VertexId&) const = default;
    std::strong_ordering operator<=>(const VertexId&) const = default;

private:
    Kind kind_ = Kind::Nat;
    Nat a_ = 0;
    Nat b_ = 0;
    Nat c_ = 0;
    Nat d_ = 0;
    std::string name_;  // Named only
};

// Three-valued edge answer at a budget. Pending must be monotone: it can only
// turn into Edge or NoEdge as the budget grows, and a decided answer never
// changes.
enum class TriEdge { Edge, NoEdge, Pending };

std::string to_string(TriEdge e);

// A countable graph given by an injective vertex enumeration and a tri-valued
// edge oracle. Instances are immutable and safe to query from several threads.
class ComputableGraph {
public:
    using Enumerate = std::function<VertexId(Nat index)>;
    using Contains = std::function<bool(const VertexId&)>;
    // invoked with distinct in-universe vertices, smaller VertexId first
    using EdgeRule = std::function<TriEdge(const VertexId&, const VertexId&, Nat budget)>;

    ComputableGraph(std::string name, Enumerate enumerate, Contains contains, EdgeRule rule);

    const std::string& name() const { return name_; }
    VertexId vertex(Nat index) const { return enumerate_(index); }
    bool contains(const VertexId& v) const { return contains_(v); }

    // Never Edge for equal endpoints; symmetric by construction. Throws
    // InvalidArgumentError when either vertex is outside the universe.
    TriEdge edge_at(const VertexId& u, const VertexId& v, Nat budget) const;

private:
    std::string name_;
    Enumerate enumerate_;
    Contains contains_;
    EdgeRule rule_;
};

TriEdge edge_at(const ComputableGraph& g, const VertexId& u, const VertexId& v, Nat budget);

// Finite view of a graph: the first `count` vertices in enumeration order,
// with a symmetric irreflexive adjacency matrix over the decided pairs and an
// explicit list of the pairs still pending at the budget used.
class FinitePrefix {
public:
    FinitePrefix() = default;
    FinitePrefix(std::vector<VertexId> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges,
                 std::vector<std::pair<std::size_t, std::size_t>> undecided);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const VertexId& vertex(std::size_t i) const { return vertices_.at(i); }
    bool adjacent(std::size_t i, std::size_t j) const;
    // pairs (i, j) with i < j, sorted
    const std::vector<std::pair<std::size_t, std::size_t>>& undecided() const { return undecided_; }
    bool decided() const { return undecided_.empty(); }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    std::optional<std::size_t> index_of(const VertexId& v) const;
    std::vector<std::size_t> neighbors(std::size_t i) const;
    std::size_t degree(std::size_t i) const;

    // Subgraph induced on the given vertex indices, kept in the given order.
    FinitePrefix induced(const std::vector<std::size_t>& indices) const;

    // Undirected DOT: one quoted label line per vertex, then one edge line per
    // decided adjacency (smaller index first, sorted), then the undecided
    // pairs as dashed edges.
    std::string to_dot() const;

    // {"vertices": [labels...], "edges": [[i,j]...], "undecided": [[i,j]...]}
    std::string to_json() const;
    // Inverse of to_json; vertices come back as Named labels. Throws Error on
    // malformed documents.
    static FinitePrefix from_json(const std::string& text);

private:
    std::size_t matrix_index(std::size_t i, std::size_t j) const;
    std::vector<VertexId> vertices_;
    std::vector<bool> adjacency_;  // n*n, symmetric, false diagonal
    std::vector<std::pair<std::size_t, std::size_t>> undecided_;
};

// Queries all pairs among the first `count` vertices at the given budget.
FinitePrefix prefix(const ComputableGraph& g, Nat count, Nat budget);

// Color assignment for a FinitePrefix, keyed by vertex index.
struct Coloring {
    std::vector<std::optional<Nat>> by_index;

    void assign(std::size_t index, Nat color);
    std::optional<Nat> at(std::size_t index) const;
};

// True iff every decided edge has differently colored endpoints. Throws
// BudgetExhaustedError when the prefix has undecided pairs and
// InvalidArgumentError when the coloring misses a vertex.
bool is_valid_coloring(const FinitePrefix& f, const Coloring& coloring);

}  // namespace recgraph::graphs
