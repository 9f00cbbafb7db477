#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "recgraph/common.hpp"
#include "recgraph/constructions.hpp"
#include "recgraph/graphs.hpp"

namespace recgraph::solvers {

// Injective map from pattern vertices to host vertices, by prefix index.
// Non-induced: every pattern edge maps to a host edge, non-edges are free.
struct Embedding {
    std::vector<std::size_t> image;  // image[h] = vertex of G that h maps to

    bool operator==(const Embedding&) const = default;
};

// All solvers require a fully decided prefix and throw BudgetExhaustedError
// otherwise. Search explores vertices in prefix order with colors and images
// ascending, so the first witness found is canonical and runs are repeatable.

// Least-color-first proper coloring search; absent when no coloring with at
// most k colors exists.
std::optional<graphs::Coloring> k_colorable(const graphs::FinitePrefix& f, Nat k);

// Least k such that k_colorable succeeds; 0 for the empty graph.
Nat chromatic_number(const graphs::FinitePrefix& f);

// Lexicographically first pairwise-adjacent vertex set of the given size.
std::optional<std::vector<std::size_t>> has_clique(const graphs::FinitePrefix& f,
                                                   std::size_t size);

// Lexicographically first pairwise-nonadjacent vertex set of the given size.
std::optional<std::vector<std::size_t>> independent_set(const graphs::FinitePrefix& f,
                                                        std::size_t size);

// First embedding of h into g in lexicographic image order, with degree
// pruning; absent when none exists.
std::optional<Embedding> subgraph_embedding(const graphs::FinitePrefix& h,
                                            const graphs::FinitePrefix& g);

// Connected component of a vertex as a sorted index set; the vertex must be
// present (InvalidArgumentError otherwise).
std::vector<std::size_t> component_of(const graphs::FinitePrefix& f, std::size_t index);
std::vector<std::size_t> component_of(const graphs::FinitePrefix& f,
                                      const graphs::VertexId& v);

// Brute-force oracle: counts proper colorings over all k^n assignments.
// Guard rail: at most 8 vertices (InvalidArgumentError beyond).
Nat exhaustive_colorings(const graphs::FinitePrefix& f, Nat k);

// Brute-force oracle: first embedding over all injections in lexicographic
// order. Guard rails: |h| <= 5 and |g| <= 7.
std::optional<Embedding> exhaustive_embedding(const graphs::FinitePrefix& h,
                                              const graphs::FinitePrefix& g);

// Visits every proper total coloring with colors < k in lexicographic order
// (backtracking, so still exhaustive over valid colorings); returns how many
// were visited. The visitor may return false to stop early. No size guard;
// meant for property checks on structured prefixes.
Nat enumerate_colorings(const graphs::FinitePrefix& f, Nat k,
                        const std::function<bool(const graphs::Coloring&)>& visit);

// Length (in edges) of the longest root-descending member chain, capped at
// depth_bound; child entries are searched in 0..depth_bound+1. Membership
// that is still pending at the tree's budget throws BudgetExhaustedError.
Nat tree_path_length(const constructions::TreeSpec& t, Nat depth_bound);

}  // namespace recgraph::solvers
