#include "recgraph/solvers.hpp"

#include <algorithm>
#include <queue>

namespace recgraph::solvers {

using graphs::Coloring;
using graphs::FinitePrefix;

namespace {

void require_decided(const FinitePrefix& f, const char* op) {
    if (!f.decided()) {
        throw BudgetExhaustedError(std::string(op) + ": prefix has undecided pairs");
    }
}

void clique_extend(const FinitePrefix& f, std::vector<std::size_t>& current,
                   std::vector<std::size_t>& candidates, std::size_t& best) {
    best = std::max(best, current.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (current.size() + (candidates.size() - i) <= best) return;
        std::size_t v = candidates[i];
        std::vector<std::size_t> narrowed;
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (f.adjacent(v, candidates[j])) narrowed.push_back(candidates[j]);
        }
        current.push_back(v);
        clique_extend(f, current, narrowed, best);
        current.pop_back();
    }
}

std::size_t max_clique_size(const FinitePrefix& f) {
    std::vector<std::size_t> all(f.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> current;
    std::size_t best = 0;
    clique_extend(f, current, all, best);
    return best;
}

// least-color-first backtracking; colors are capped at one past the maximum
// already in use, which lex-first assignments satisfy anyway
std::optional<Coloring> color_search(const FinitePrefix& f, Nat k) {
    const std::size_t n = f.size();
    if (n == 0) return Coloring{};
    if (k == 0) return std::nullopt;
    std::vector<Nat> colors(n, 0);
    std::vector<std::vector<std::size_t>> back(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u) {
            if (f.adjacent(u, v)) back[v].push_back(u);
        }
    }
    auto conflicts = [&](std::size_t v, Nat c) {
        for (std::size_t u : back[v]) {
            if (colors[u] == c) return true;
        }
        return false;
    };
    std::function<bool(std::size_t, Nat)> place = [&](std::size_t v, Nat used) {
        if (v == n) return true;
        Nat cap = std::min<Nat>(k - 1, used);
        for (Nat c = 0; c <= cap; ++c) {
            if (conflicts(v, c)) continue;
            colors[v] = c;
            if (place(v + 1, std::max(used, c + 1))) return true;
        }
        return false;
    };
    if (!place(0, 0)) return std::nullopt;
    Coloring out;
    for (std::size_t v = 0; v < n; ++v) out.assign(v, colors[v]);
    return out;
}

}  // namespace

std::optional<Coloring> k_colorable(const FinitePrefix& f, Nat k) {
    require_decided(f, "k_colorable");
    if (max_clique_size(f) > k) return std::nullopt;
    return color_search(f, k);
}

Nat chromatic_number(const FinitePrefix& f) {
    require_decided(f, "chromatic_number");
    if (f.size() == 0) return 0;
    Nat k = max_clique_size(f);
    for (;; ++k) {
        if (color_search(f, k)) return k;
    }
}

std::optional<std::vector<std::size_t>> has_clique(const FinitePrefix& f, std::size_t size) {
    require_decided(f, "has_clique");
    std::vector<std::size_t> current;
    std::function<bool(std::size_t)> search = [&](std::size_t start) {
        if (current.size() == size) return true;
        for (std::size_t v = start; v < f.size(); ++v) {
            if (current.size() + (f.size() - v) < size) return false;
            bool ok = true;
            for (std::size_t u : current) {
                if (!f.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            current.push_back(v);
            if (search(v + 1)) return true;
            current.pop_back();
        }
        return false;
    };
    if (!search(0)) return std::nullopt;
    return current;
}

std::optional<std::vector<std::size_t>> independent_set(const FinitePrefix& f,
                                                        std::size_t size) {
    require_decided(f, "independent_set");
    std::vector<std::size_t> current;
    std::function<bool(std::size_t)> search = [&](std::size_t start) {
        if (current.size() == size) return true;
        for (std::size_t v = start; v < f.size(); ++v) {
            if (current.size() + (f.size() - v) < size) return false;
            bool ok = true;
            for (std::size_t u : current) {
                if (f.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            current.push_back(v);
            if (search(v + 1)) return true;
            current.pop_back();
        }
        return false;
    };
    if (!search(0)) return std::nullopt;
    return current;
}

std::optional<Embedding> subgraph_embedding(const FinitePrefix& h, const FinitePrefix& g) {
    require_decided(h, "subgraph_embedding");
    require_decided(g, "subgraph_embedding");
    const std::size_t nh = h.size();
    const std::size_t ng = g.size();
    std::vector<std::size_t> image(nh, 0);
    std::vector<bool> used(ng, false);
    std::function<bool(std::size_t)> assign = [&](std::size_t v) {
        if (v == nh) return true;
        for (std::size_t w = 0; w < ng; ++w) {
            if (used[w] || g.degree(w) < h.degree(v)) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v; ++u) {
                if (h.adjacent(u, v) && !g.adjacent(image[u], w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            if (assign(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return Embedding{image};
}

std::vector<std::size_t> component_of(const FinitePrefix& f, std::size_t index) {
    if (index >= f.size()) {
        throw InvalidArgumentError("component_of: vertex index out of range");
    }
    require_decided(f, "component_of");
    std::vector<bool> seen(f.size(), false);
    std::queue<std::size_t> frontier;
    seen[index] = true;
    frontier.push(index);
    std::vector<std::size_t> out;
    while (!frontier.empty()) {
        std::size_t v = frontier.front();
        frontier.pop();
        out.push_back(v);
        for (std::size_t w : f.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                frontier.push(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> component_of(const FinitePrefix& f, const graphs::VertexId& v) {
    auto index = f.index_of(v);
    if (!index) {
        throw InvalidArgumentError("component_of: vertex " + v.label() + " is not in the prefix");
    }
    return component_of(f, *index);
}

Nat exhaustive_colorings(const FinitePrefix& f, Nat k) {
    require_decided(f, "exhaustive_colorings");
    if (f.size() > 8) {
        throw InvalidArgumentError("exhaustive_colorings: guard rail is 8 vertices");
    }
    const std::size_t n = f.size();
    if (n == 0) return 1;
    if (k == 0) return 0;
    auto edges = f.edges();
    std::vector<Nat> assignment(n, 0);
    Nat count = 0;
    for (;;) {
        bool valid = true;
        for (auto [i, j] : edges) {
            if (assignment[i] == assignment[j]) {
                valid = false;
                break;
            }
        }
        if (valid) ++count;
        std::size_t pos = 0;
        while (pos < n && ++assignment[pos] == k) {
            assignment[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return count;
}

std::optional<Embedding> exhaustive_embedding(const FinitePrefix& h, const FinitePrefix& g) {
    require_decided(h, "exhaustive_embedding");
    require_decided(g, "exhaustive_embedding");
    if (h.size() > 5 || g.size() > 7) {
        throw InvalidArgumentError("exhaustive_embedding: guard rails are |H| <= 5, |G| <= 7");
    }
    const std::size_t nh = h.size();
    const std::size_t ng = g.size();
    std::vector<std::size_t> image(nh, 0);
    std::vector<bool> used(ng, false);
    auto valid = [&]() {
        for (std::size_t v = 0; v < nh; ++v) {
            for (std::size_t u = 0; u < v; ++u) {
                if (h.adjacent(u, v) && !g.adjacent(image[u], image[v])) return false;
            }
        }
        return true;
    };
    std::function<bool(std::size_t)> pick = [&](std::size_t v) {
        if (v == nh) return valid();
        for (std::size_t w = 0; w < ng; ++w) {
            if (used[w]) continue;
            image[v] = w;
            used[w] = true;
            if (pick(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    if (!pick(0)) return std::nullopt;
    return Embedding{image};
}

Nat enumerate_colorings(const FinitePrefix& f, Nat k,
                        const std::function<bool(const Coloring&)>& visit) {
    require_decided(f, "enumerate_colorings");
    const std::size_t n = f.size();
    Nat count = 0;
    std::vector<Nat> colors(n, 0);
    bool stopped = false;
    std::function<void(std::size_t)> place = [&](std::size_t v) {
        if (stopped) return;
        if (v == n) {
            Coloring c;
            for (std::size_t i = 0; i < n; ++i) c.assign(i, colors[i]);
            ++count;
            if (!visit(c)) stopped = true;
            return;
        }
        for (Nat color = 0; color < k && !stopped; ++color) {
            bool ok = true;
            for (std::size_t u = 0; u < v; ++u) {
                if (f.adjacent(u, v) && colors[u] == color) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            colors[v] = color;
            place(v + 1);
        }
    };
    if (n == 0) {
        Coloring empty;
        ++count;
        visit(empty);
        return count;
    }
    place(0);
    return count;
}

Nat tree_path_length(const constructions::TreeSpec& t, Nat depth_bound) {
    if (!t.member(codes::Seq{})) return 0;
    const Nat entry_cap = depth_bound + 1;
    Nat best = 0;
    std::function<void(const codes::Seq&)> descend = [&](const codes::Seq& s) {
        best = std::max(best, s.length());
        if (s.length() >= depth_bound || best >= depth_bound) return;
        for (Nat x = 0; x <= entry_cap && best < depth_bound; ++x) {
            codes::Seq child = s.extended(x);
            if (t.member(child)) descend(child);
        }
    };
    descend(codes::Seq{});
    return best;
}

}  // namespace recgraph::solvers
