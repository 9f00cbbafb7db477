#include "recgraph/checks.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "recgraph/codes.hpp"
#include "recgraph/constructions.hpp"
#include "recgraph/graphs.hpp"
#include "recgraph/machine.hpp"
#include "recgraph/solvers.hpp"

namespace recgraph::checks {

using codes::Seq;
using codes::TriValue;
using constructions::TreeSpec;
using graphs::FinitePrefix;
using graphs::TriEdge;
using graphs::VertexId;

namespace {

constexpr Nat kBudget = kDefaultBudget;

struct CheckFailure {
    std::string detail;
};

void ensure(bool condition, const std::string& detail) {
    if (!condition) throw CheckFailure{detail};
}

class SuiteBuilder {
public:
    explicit SuiteBuilder(std::string name) { report_.suite = std::move(name); }

    void property(const std::string& id, const std::function<std::string()>& body) {
        PropertyResult r;
        r.id = id;
        try {
            r.detail = body();
            r.passed = true;
        } catch (const CheckFailure& f) {
            r.passed = false;
            r.detail = f.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        report_.properties.push_back(std::move(r));
    }

    CheckReport take() { return std::move(report_); }

private:
    CheckReport report_;
};

bool local_prefix_of(const Seq& a, const Seq& b) {
    if (a.length() > b.length()) return false;
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (a.at(i) != b.at(i)) return false;
    }
    return true;
}

bool local_comparable(const Seq& a, const Seq& b) {
    return local_prefix_of(a, b) || local_prefix_of(b, a);
}

std::string join_nats(const std::vector<Nat>& xs) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out << ',';
        out << xs[i];
    }
    out << ']';
    return out.str();
}

void verify_clique(const FinitePrefix& f, const std::vector<std::size_t>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            ensure(f.adjacent(set[i], set[j]), "clique witness has a non-adjacent pair");
        }
    }
}

void verify_independent(const FinitePrefix& f, const std::vector<std::size_t>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            ensure(!f.adjacent(set[i], set[j]), "independent-set witness has an adjacent pair");
        }
    }
}

void verify_embedding(const FinitePrefix& h, const FinitePrefix& g,
                      const solvers::Embedding& emb) {
    ensure(emb.image.size() == h.size(), "embedding image size mismatch");
    for (std::size_t v = 0; v < h.size(); ++v) {
        ensure(emb.image[v] < g.size(), "embedding image out of range");
        for (std::size_t u = 0; u < v; ++u) {
            ensure(emb.image[u] != emb.image[v], "embedding is not injective");
            if (h.adjacent(u, v)) {
                ensure(g.adjacent(emb.image[u], emb.image[v]),
                       "embedding drops an edge of the pattern");
            }
        }
    }
}

// --- thm1 -------------------------------------------------------------------

CheckReport suite_thm1() {
    SuiteBuilder suite("thm1");
    const auto& never = machine::registry_get("never");
    const auto& self5 = machine::registry_get("self5");

    suite.property("never-edgeless-1col", [&] {
        auto g = constructions::thm1_graph(never);
        for (Nat count = 1; count <= 20; ++count) {
            auto f = graphs::prefix(g, count, kBudget);
            ensure(f.edges().empty(), "count " + std::to_string(count) + " has an edge");
            ensure(solvers::chromatic_number(f) == 1,
                   "count " + std::to_string(count) + " is not 1-chromatic");
        }
        return std::string("counts 1..20 edgeless and 1-chromatic");
    });

    suite.property("self5-clique7", [&] {
        auto f = graphs::prefix(constructions::thm1_graph(self5), 12, kBudget);
        auto clique = solvers::has_clique(f, 7);
        ensure(clique.has_value(), "no 7-clique in the 12-vertex prefix");
        verify_clique(f, *clique);
        std::vector<std::size_t> expected = {5, 6, 7, 8, 9, 10, 11};
        ensure(*clique == expected, "7-clique is not {5..11}");
        return std::string("7-clique {5..11} found and verified");
    });

    suite.property("self5-not-3col", [&] {
        auto g = constructions::thm1_graph(self5);
        for (Nat count = 9; count <= 20; ++count) {
            auto f = graphs::prefix(g, count, kBudget);
            ensure(!solvers::k_colorable(f, 3),
                   "count " + std::to_string(count) + " is 3-colorable");
        }
        return std::string("counts 9..20 refute 3 colors");
    });

    return suite.take();
}

// --- thm2 -------------------------------------------------------------------

CheckReport suite_thm2() {
    SuiteBuilder suite("thm2");
    // diagonals m+j <= 16, i.e. sum of 2d+1 = 17^2 vertices
    constexpr Nat kCount = 289;

    suite.property("cof-chromatic-floor", [&] {
        const auto& cof = machine::registry_get("cof-minus-1");
        auto f = graphs::prefix(constructions::thm2_graph(cof), kCount, kBudget);
        std::vector<Nat> chis;
        for (Nat m = 3; m <= 6; ++m) {
            auto comp = solvers::component_of(f, VertexId::row(m, 0));
            Nat chi = solvers::chromatic_number(f.induced(comp));
            ensure(chi >= m + 1, "component of row " + std::to_string(m) +
                                     " has chi " + std::to_string(chi));
            chis.push_back(chi);
        }
        for (std::size_t i = 1; i < chis.size(); ++i) {
            ensure(chis[i - 1] <= chis[i], "chromatic numbers decrease with m");
        }
        return "chi over m=3..6 is " + join_nats(chis);
    });

    suite.property("evens-component", [&] {
        const auto& evens = machine::registry_get("evens");
        auto f = graphs::prefix(constructions::thm2_graph(evens), kCount, kBudget);
        auto comp = solvers::component_of(f, VertexId::row(0, 0));
        bool has_row1 = false;
        for (std::size_t i : comp) {
            const auto& v = f.vertex(i);
            if (v.kind() == VertexId::Kind::Row && v.a() == 1) has_row1 = true;
            bool deep = (v.kind() == VertexId::Kind::Row ||
                         v.kind() == VertexId::Kind::CliqueExtra) &&
                        v.a() >= 2;
            ensure(!deep, "component leaks into row " + std::to_string(v.a()));
        }
        ensure(has_row1, "component misses row 1");
        Nat chi = solvers::chromatic_number(f.induced(comp));
        ensure(chi == 2, "expected chi 2, got " + std::to_string(chi));
        return std::string("rows 0..1 only, chi=2");
    });

    return suite.take();
}

// --- eta --------------------------------------------------------------------

CheckReport suite_eta() {
    SuiteBuilder suite("eta");

    suite.property("totality-codes-200", [&] {
        for (const char* name : {"tree:binary", "tree:desc"}) {
            const auto& p = machine::registry_get(name);
            for (Nat c = 0; c <= 200; ++c) {
                ensure(codes::eta_eval(p, codes::decode(c), kBudget) != TriValue::Pending,
                       std::string(name) + " pending at code " + std::to_string(c));
            }
        }
        return std::string("tree:binary and tree:desc decided on codes 0..200");
    });

    suite.property("gap-pending-forever", [&] {
        const auto& gap = machine::registry_get("notree:gap");
        Seq witness{0};
        for (Nat b = 0; b <= 10000; ++b) {
            ensure(codes::eta_eval(gap, witness, b) == TriValue::Pending,
                   "decided at budget " + std::to_string(b));
        }
        return std::string("sigma=<0> stays pending through budget 10^4");
    });

    suite.property("stability-monotone", [&] {
        for (const char* name : {"tree:binary", "tree:finite(3)", "tree:desc", "notree:gap"}) {
            const auto& p = machine::registry_get(name);
            for (Nat c = 0; c <= 60; ++c) {
                Seq s = codes::decode(c);
                TriValue prev = codes::eta_eval(p, s, 0);
                for (Nat b = 1; b <= 20; ++b) {
                    TriValue cur = codes::eta_eval(p, s, b);
                    if (prev != TriValue::Pending) {
                        ensure(cur == prev, std::string(name) + " code " + std::to_string(c) +
                                                " flips at budget " + std::to_string(b));
                    }
                    prev = cur;
                }
                if (prev != TriValue::Pending) {
                    ensure(codes::eta_eval(p, s, 1000) == prev,
                           std::string(name) + " code " + std::to_string(c) +
                               " unstable at budget 1000");
                }
            }
        }
        return std::string("decided values never change on 4 programs, codes 0..60");
    });

    return suite.take();
}

// --- thm4 -------------------------------------------------------------------

CheckReport suite_thm4() {
    SuiteBuilder suite("thm4");

    suite.property("witness-coloring", [&] {
        const auto& binary = machine::registry_get("tree:binary");
        auto coloring = constructions::thm4_witness_coloring(binary, 30);
        auto f = graphs::prefix(constructions::thm4_graph(binary), 30, kBudget);
        ensure(f.decided(), "prefix has undecided pairs");
        ensure(graphs::is_valid_coloring(f, coloring), "witness coloring is invalid");
        Nat zeros = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (coloring.at(i) == Nat{0}) ++zeros;
        }
        ensure(zeros >= 4, "color 0 used only " + std::to_string(zeros) + " times");
        return "valid, color 0 used " + std::to_string(zeros) + " times";
    });

    suite.property("zero-set-chains", [&] {
        const auto& finite3 = machine::registry_get("tree:finite(3)");
        TreeSpec tree(finite3);
        auto f = graphs::prefix(constructions::thm4_graph(finite3), 12, kBudget);
        ensure(f.decided(), "prefix has undecided pairs");
        auto members = tree.member_codes_upto(11);
        ensure(members.size() == 8, "expected 8 tree nodes among codes 0..11");

        auto zero_set_is_chain = [&](const graphs::Coloring& c,
                                     const std::vector<Nat>& codes_by_index) {
            std::vector<Seq> zero;
            for (std::size_t i = 0; i < codes_by_index.size(); ++i) {
                bool is_member = std::find(members.begin(), members.end(),
                                           codes_by_index[i]) != members.end();
                if (is_member && c.at(i) == Nat{0}) {
                    zero.push_back(codes::decode(codes_by_index[i]));
                }
            }
            if (zero.size() > 4) return false;
            for (std::size_t i = 0; i < zero.size(); ++i) {
                for (std::size_t j = i + 1; j < zero.size(); ++j) {
                    if (!local_comparable(zero[i], zero[j])) return false;
                }
            }
            return true;
        };

        std::vector<Nat> full_codes;
        for (Nat c = 0; c < 12; ++c) full_codes.push_back(c);
        bool all_ok = true;
        solvers::enumerate_colorings(f, 4, [&](const graphs::Coloring& c) {
            if (!zero_set_is_chain(c, full_codes)) all_ok = false;
            return all_ok;
        });
        ensure(all_ok, "a 12-vertex coloring breaks the zero-chain property");

        std::vector<std::size_t> member_indices(members.begin(), members.end());
        auto fm = f.induced(member_indices);
        bool member_ok = true;
        Nat count = solvers::enumerate_colorings(fm, 4, [&](const graphs::Coloring& c) {
            if (!zero_set_is_chain(c, members)) member_ok = false;
            return member_ok;
        });
        ensure(member_ok, "a tree-node coloring breaks the zero-chain property");
        ensure(count >= 1, "no valid 4-coloring of the tree nodes at all");
        ensure(count == solvers::exhaustive_colorings(fm, 4),
               "backtracking and brute-force coloring counts disagree");
        return "tree-node colorings: " + std::to_string(count) + ", zero-sets all chains <= 4";
    });

    return suite.take();
}

// --- thm5 -------------------------------------------------------------------

CheckReport suite_thm5() {
    SuiteBuilder suite("thm5");
    const auto& doubling = constructions::injection_get("doubling");

    suite.property("n2-clique8", [&] {
        auto f = graphs::prefix(constructions::thm5_graph(doubling, 2), 9, kBudget);
        auto clique = solvers::has_clique(f, 8);
        ensure(clique.has_value(), "no 8-clique in the 9-vertex prefix");
        verify_clique(f, *clique);
        ensure(!solvers::k_colorable(f, 3), "prefix is 3-colorable");
        return std::string("8-clique present, 3 colors refuted");
    });

    suite.property("n3-2colorable", [&] {
        auto g = constructions::thm5_graph(doubling, 3);
        for (Nat count = 1; count <= 20; ++count) {
            auto f = graphs::prefix(g, count, kBudget);
            auto coloring = solvers::k_colorable(f, 2);
            ensure(coloring.has_value(), "count " + std::to_string(count) + " not 2-colorable");
            ensure(graphs::is_valid_coloring(f, *coloring), "invalid coloring witness");
        }
        return std::string("counts 1..20 all 2-colorable");
    });

    suite.property("separator-matches-range", [&] {
        std::vector<Nat> s;
        for (Nat n = 0; n <= 10; ++n) {
            auto f = graphs::prefix(constructions::thm5_graph(doubling, n), 16, kBudget);
            Nat sep = solvers::k_colorable(f, 3) ? 1 : 0;
            Nat truth = doubling.in_range(n) ? 0 : 1;
            ensure(sep == truth, "separator disagrees at n=" + std::to_string(n));
            s.push_back(sep);
        }
        return "s over n=0..10 is " + join_nats(s);
    });

    return suite.take();
}

// --- thm6 -------------------------------------------------------------------

CheckReport suite_thm6() {
    SuiteBuilder suite("thm6");

    suite.property("edge-oracle-agrees", [&] {
        const auto& binary = machine::registry_get("tree:binary");
        TreeSpec tree(binary);
        auto g = constructions::thm6_graph(tree);
        auto members = tree.member_codes_upto(100);
        Nat pairs = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                Seq a = codes::decode(members[i]);
                Seq b = codes::decode(members[j]);
                TriEdge expected =
                    local_comparable(a, b) ? TriEdge::NoEdge : TriEdge::Edge;
                TriEdge got = g.edge_at(VertexId::seq(members[i]), VertexId::seq(members[j]),
                                        kBudget);
                ensure(got == expected, "oracle disagrees on codes " +
                                            std::to_string(members[i]) + "," +
                                            std::to_string(members[j]));
                ++pairs;
            }
        }
        return std::to_string(pairs) + " member pairs agree with incomparability";
    });

    suite.property("binary-depth4-indep5", [&] {
        const auto& binary = machine::registry_get("tree:binary");
        TreeSpec tree(binary);
        auto g = constructions::thm6_graph(tree);
        // depth <= 4 members all have codes <= code(<1,1,1,1>) = 4467
        std::vector<Nat> depth4;
        for (Nat c : tree.member_codes_upto(4467)) {
            if (codes::decode(c).length() <= 4) depth4.push_back(c);
        }
        ensure(depth4.size() == 31, "expected 31 members at depth <= 4, got " +
                                        std::to_string(depth4.size()));
        std::vector<VertexId> vertices;
        for (Nat c : depth4) vertices.push_back(VertexId::seq(c));
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < vertices.size(); ++j) {
                if (g.edge_at(vertices[i], vertices[j], kBudget) == TriEdge::Edge) {
                    edges.emplace_back(i, j);
                }
            }
        }
        FinitePrefix f(vertices, edges, {});
        auto ind = solvers::independent_set(f, 5);
        ensure(ind.has_value(), "no independent set of size 5");
        verify_independent(f, *ind);
        std::vector<Seq> chain;
        for (std::size_t i : *ind) chain.push_back(codes::decode(depth4[i]));
        for (std::size_t i = 0; i < chain.size(); ++i) {
            for (std::size_t j = i + 1; j < chain.size(); ++j) {
                ensure(local_comparable(chain[i], chain[j]),
                       "independent set is not a comparability chain");
            }
        }
        return std::string("31-vertex depth-4 truncation has a 5-chain independent set");
    });

    suite.property("finite2-no-indep4", [&] {
        const auto& finite2 = machine::registry_get("tree:finite(2)");
        TreeSpec tree(finite2);
        auto f = graphs::prefix(constructions::thm6_graph(tree), 7, kBudget);
        ensure(solvers::independent_set(f, 3).has_value(), "size-3 chain should exist");
        ensure(!solvers::independent_set(f, 4), "size-4 independent set should not exist");
        return std::string("7 tree nodes: max independent set is 3");
    });

    return suite.take();
}

// --- thm7 -------------------------------------------------------------------

CheckReport suite_thm7() {
    SuiteBuilder suite("thm7");

    suite.property("embed-into-ray0", [&] {
        auto h = graphs::prefix(constructions::ray_triangle_H(), 8, kBudget);
        const auto& ray0 = machine::registry_get("tree:ray0");
        auto g = graphs::prefix(constructions::thm7_G(ray0), 20, kBudget);
        ensure(g.decided(), "host prefix has undecided pairs");
        auto emb = solvers::subgraph_embedding(h, g);
        ensure(emb.has_value(), "no embedding found");
        verify_embedding(h, g, *emb);
        std::set<std::size_t> triangle = {emb->image[0], emb->image[1], emb->image[2]};
        std::set<std::size_t> specials = {0, 1, 2};
        ensure(triangle == specials, "triangle does not land on the three special vertices");
        return std::string("triangle+5-ray embeds, triangle onto the special three");
    });

    suite.property("no-embed-into-finite2", [&] {
        auto h = graphs::prefix(constructions::ray_triangle_H(), 8, kBudget);
        const auto& finite2 = machine::registry_get("tree:finite(2)");
        auto g = graphs::prefix(constructions::thm7_G(finite2), 16, kBudget);
        ensure(g.decided(), "host prefix has undecided pairs");
        ensure(!solvers::subgraph_embedding(h, g), "embedding should not exist");
        return std::string("5-ray cannot fit a depth-2 tree");
    });

    suite.property("gap-undecided", [&] {
        const auto& gap = machine::registry_get("notree:gap");
        auto g = constructions::thm7_G(gap);
        for (Nat count = 5; count <= 10; ++count) {
            auto f = graphs::prefix(g, count, kBudget);
            ensure(!f.undecided().empty(),
                   "count " + std::to_string(count) + " reports no undecided pairs");
        }
        return std::string("counts 5..10 all report undecided pairs");
    });

    return suite.take();
}

// --- thm9 -------------------------------------------------------------------

CheckReport suite_thm9() {
    SuiteBuilder suite("thm9");

    suite.property("cycle-sizes", [&] {
        std::vector<Nat> sizes;
        for (Nat e = 0; e <= 2; ++e) {
            const Nat s = 2 * (e + 1) + 2;
            auto h = constructions::cycle_ray_H(e);
            for (Nat pos = 0; pos < s; ++pos) {
                ensure(h.contains(VertexId::cycle(e, 1, 0, pos)),
                       "missing position " + std::to_string(pos));
            }
            ensure(!h.contains(VertexId::cycle(e, 1, 0, s)), "cycle too large at e=" +
                                                                 std::to_string(e));
            for (Nat i = 0; i < s; ++i) {
                for (Nat j = i + 1; j < s; ++j) {
                    bool ring = (j == i + 1) || (i == 0 && j == s - 1);
                    TriEdge got = h.edge_at(VertexId::cycle(e, 1, 0, i),
                                            VertexId::cycle(e, 1, 0, j), kBudget);
                    ensure(got == (ring ? TriEdge::Edge : TriEdge::NoEdge),
                           "ring edge mismatch at e=" + std::to_string(e));
                }
            }
            sizes.push_back(s);
        }
        ensure(sizes[1] == 6, "e=1 must be the hexagon");
        return "sizes " + join_nats(sizes) + ", hexagon at e=1";
    });

    suite.property("exactness-unique", [&] {
        const auto& binary = machine::registry_get("tree:binary");
        for (Nat c = 1; c <= 30; ++c) {
            Seq s = codes::decode(c);
            std::vector<Nat> witnesses;
            for (Nat k = 0; k <= 60; ++k) {
                if (constructions::thm9_exact(binary, s, k)) witnesses.push_back(k);
            }
            ensure(witnesses.size() <= 1,
                   "code " + std::to_string(c) + " has several exact stages");
            bool is_member = codes::eta_eval(binary, s, kBudget) == TriValue::One;
            ensure(witnesses.size() == (is_member ? 1u : 0u),
                   "code " + std::to_string(c) + " has the wrong exactness count");
        }
        ensure(constructions::thm9_exact(binary, Seq{0}, 2), "exact stage of <0> is 2");
        ensure(constructions::thm9_exact(binary, Seq{1}, 3), "exact stage of <1> is 3");
        ensure(constructions::thm9_exact(binary, Seq{0, 0}, 3), "exact stage of <0.0> is 3");
        ensure(constructions::thm9_exact(binary, Seq{0, 0, 0}, 4),
               "exact stage of <0.0.0> is 4");
        return std::string("codes 1..30: at most one exact stage, members exactly one");
    });

    try {
        const auto& never = machine::registry_get("never");
        const auto& binary = machine::registry_get("tree:binary");
        auto g = constructions::thm9_G({&never, &binary, &binary});
        // diagonals e+l <= 33 cover the exact cycle for <0.0.0> at stage 4 in
        // the e=1 component: 135 + 195 + 251 vertices
        auto p = graphs::prefix(g, 581, kBudget);
        auto h21 = graphs::prefix(constructions::cycle_ray_H(1), 21, kBudget);

        suite.property("hex-chain-embeds-e1", [&] {
            ensure(p.decided(), "prefix has undecided pairs");
            auto comp = solvers::component_of(p, VertexId::tree_base(1));
            ensure(comp.size() == 27, "expected 27 vertices in the e=1 component, got " +
                                          std::to_string(comp.size()));
            auto host = p.induced(comp);
            auto emb = solvers::subgraph_embedding(h21, host);
            ensure(emb.has_value(), "3-hexagon chain does not embed");
            verify_embedding(h21, host, *emb);
            return std::string("triangle+3 hexagons embed into the e=1 component");
        });

        suite.property("hex-chain-rejected-e2", [&] {
            auto comp = solvers::component_of(p, VertexId::tree_base(2));
            auto host = p.induced(comp);
            ensure(!solvers::subgraph_embedding(h21, host),
                   "hexagons embedded into the 8-cycle component");
            return std::string("hexagon chain rejected by the e=2 component");
        });

        suite.property("spurious-no-connections", [&] {
            Nat never_cycles = 0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                const auto& v = p.vertex(i);
                if (v.kind() != VertexId::Kind::Cycle) continue;
                std::size_t deg = p.degree(i);
                ensure(deg == 2 || deg == 3,
                       "cycle vertex with degree " + std::to_string(deg));
                if (v.a() == 0) {
                    ++never_cycles;
                    ensure(deg == 2, "connection edge in the never component");
                }
                if (deg == 3) {
                    const auto& prog = v.a() == 0 ? never : binary;
                    ensure(constructions::thm9_exact(prog, codes::decode(v.b()), v.c()),
                           "connection edge on a spurious cycle");
                    ensure(v.d() == 0 || v.d() == v.a() + 2,
                           "connection at an interior cycle position");
                }
            }
            ensure(never_cycles > 0, "no cycles sampled in the never component");
            return std::string("all connection edges sit on exact cycles only");
        });
    } catch (const std::exception& e) {
        std::string what = e.what();
        suite.property("thm9-G-prefix", [&]() -> std::string {
            throw CheckFailure{"setup failed: " + what};
        });
    }

    return suite.take();
}

// --- thm10 ------------------------------------------------------------------

CheckReport suite_thm10_3() {
    SuiteBuilder suite("thm10-3");

    suite.property("mutual-embedding", [&] {
        // ray member codes grow double-exponentially with depth, so 9 vertices
        // (two auxiliaries plus members down to depth 6) is the largest matched
        // truncation whose enumeration stays within the code scan limit
        const auto& ray0 = machine::registry_get("tree:ray0");
        auto a = graphs::prefix(constructions::thm10_G3(TreeSpec(ray0)), 9, kBudget);
        auto b = graphs::prefix(constructions::ray_triangle_H(), 9, kBudget);
        auto ab = solvers::subgraph_embedding(a, b);
        auto ba = solvers::subgraph_embedding(b, a);
        ensure(ab.has_value(), "tree side does not embed into the ray side");
        ensure(ba.has_value(), "ray side does not embed into the tree side");
        verify_embedding(a, b, *ab);
        verify_embedding(b, a, *ba);
        return std::string("9-vertex truncations embed in both directions");
    });

    suite.property("finite2-vertex-count", [&] {
        const auto& finite2 = machine::registry_get("tree:finite(2)");
        TreeSpec tree(finite2, kBudget, 20000);
        auto g = constructions::thm10_G3(tree);
        auto f = graphs::prefix(g, 9, kBudget);
        ensure(f.size() == 9, "prefix of 9 failed");
        bool exhausted = false;
        try {
            graphs::prefix(g, 10, kBudget);
        } catch (const InvalidArgumentError&) {
            exhausted = true;
        }
        ensure(exhausted, "a 10th vertex appeared in a 7-member tree graph");
        return std::string("vertex count is members + 2 = 9");
    });

    return suite.take();
}

CheckReport suite_thm10_4() {
    SuiteBuilder suite("thm10-4");

    try {
        std::vector<const char*> names = {"tree:ray0", "tree:finite(2)", "tree:binary"};
        std::vector<TreeSpec> specs;
        for (const char* n : names) specs.emplace_back(machine::registry_get(n));
        auto g = constructions::thm10_G4(specs);
        // diagonals <= 6: the e=0 blocks stop at <0^6> and the e=2 blocks
        // reach the cycle of <0.0.0>, enough for a 3-cycle chain in
        // components 0 and 2
        auto p = graphs::prefix(g, 95, kBudget);

        suite.property("separator-101", [&] {
            ensure(p.decided(), "prefix has undecided pairs");
            std::vector<Nat> separator;
            std::vector<Nat> truth;
            for (Nat n = 0; n <= 2; ++n) {
                auto comp = solvers::component_of(p, VertexId::tree_base(n));
                auto host = p.induced(comp);
                auto h = graphs::prefix(constructions::cycle_ray_H(n),
                                        3 + 3 * (2 * n + 4), kBudget);
                separator.push_back(solvers::subgraph_embedding(h, host) ? 1 : 0);
                truth.push_back(
                    specs[n].tree_class() == machine::TreeClass::HasInfinitePath ? 1 : 0);
            }
            ensure(separator == truth,
                   "separator " + join_nats(separator) + " disagrees with ground truth " +
                       join_nats(truth));
            ensure(separator == std::vector<Nat>({1, 0, 1}), "expected separator [1,0,1]");
            return "separator " + join_nats(separator) + " matches ill-foundedness";
        });

        suite.property("component-cycle-sizes", [&] {
            for (Nat n = 0; n <= 2; ++n) {
                const Nat s = 2 * (n + 1) + 2;
                ensure(g.contains(VertexId::cycle(n, 1, 0, s - 1)), "cycle too small");
                ensure(!g.contains(VertexId::cycle(n, 1, 0, s)), "cycle too large");
            }
            return std::string("component n uses cycles of size 2(n+1)+2");
        });
    } catch (const std::exception& e) {
        std::string what = e.what();
        suite.property("thm10-G4-prefix", [&]() -> std::string {
            throw CheckFailure{"setup failed: " + what};
        });
    }

    return suite.take();
}

// --- solvers ----------------------------------------------------------------

FinitePrefix random_graph(std::mt19937_64& rng, std::size_t n) {
    std::vector<VertexId> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back(VertexId::nat(i));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng() & 1) edges.emplace_back(i, j);
        }
    }
    return FinitePrefix(vertices, edges, {});
}

CheckReport suite_solvers(Nat seed) {
    SuiteBuilder suite("solvers");

    suite.property("coloring-oracle-agreement", [&] {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < 200; ++t) {
            std::size_t n = 1 + rng() % 6;
            Nat k = rng() % 5;
            auto f = random_graph(rng, n);
            auto fast = solvers::k_colorable(f, k);
            Nat slow = solvers::exhaustive_colorings(f, k);
            ensure(fast.has_value() == (slow > 0),
                   "disagreement at case " + std::to_string(t));
            if (fast) {
                ensure(graphs::is_valid_coloring(f, *fast), "invalid coloring witness");
                for (std::size_t i = 0; i < f.size(); ++i) {
                    ensure(*fast->at(i) < k, "coloring witness uses too many colors");
                }
                auto again = solvers::k_colorable(f, k);
                ensure(again && again->by_index == fast->by_index,
                       "coloring witness is not deterministic");
            }
        }
        return std::string("200 seeded cases agree with the brute-force count");
    });

    suite.property("embedding-oracle-agreement", [&] {
        std::mt19937_64 rng(seed + 1);
        for (int t = 0; t < 100; ++t) {
            std::size_t nh = 1 + rng() % 4;
            std::size_t ng = 1 + rng() % 6;
            auto h = random_graph(rng, nh);
            auto g = random_graph(rng, ng);
            auto fast = solvers::subgraph_embedding(h, g);
            auto slow = solvers::exhaustive_embedding(h, g);
            ensure(fast.has_value() == slow.has_value(),
                   "disagreement at case " + std::to_string(t));
            if (fast) {
                verify_embedding(h, g, *fast);
                auto again = solvers::subgraph_embedding(h, g);
                ensure(again && again->image == fast->image,
                       "embedding witness is not deterministic");
            }
        }
        return std::string("100 seeded cases agree with the brute-force search");
    });

    suite.property("chromatic-bounds", [&] {
        std::mt19937_64 rng(seed + 2);
        for (int t = 0; t < 50; ++t) {
            std::size_t n = 1 + rng() % 6;
            auto f = random_graph(rng, n);
            Nat chi = solvers::chromatic_number(f);
            std::size_t maxdeg = 0;
            for (std::size_t i = 0; i < f.size(); ++i) maxdeg = std::max(maxdeg, f.degree(i));
            ensure(chi <= maxdeg + 1, "chromatic number above greedy bound");
            std::size_t clique = 0;
            while (solvers::has_clique(f, clique + 1)) ++clique;
            ensure(chi >= clique, "chromatic number below clique size");
        }
        return std::string("greedy and clique bounds hold on 50 seeded cases");
    });

    return suite.take();
}

}  // namespace

bool CheckReport::passed() const {
    for (const auto& p : properties) {
        if (!p.passed) return false;
    }
    return true;
}

std::vector<std::string> suite_names() {
    return {"thm1", "thm2", "eta",  "thm4",    "thm5",    "thm6",
            "thm7", "thm9", "thm10-3", "thm10-4", "solvers"};
}

CheckReport run_suite(const std::string& name, Nat seed) {
    if (name == "thm1") return suite_thm1();
    if (name == "thm2") return suite_thm2();
    if (name == "eta") return suite_eta();
    if (name == "thm4") return suite_thm4();
    if (name == "thm5") return suite_thm5();
    if (name == "thm6") return suite_thm6();
    if (name == "thm7") return suite_thm7();
    if (name == "thm9") return suite_thm9();
    if (name == "thm10-3") return suite_thm10_3();
    if (name == "thm10-4") return suite_thm10_4();
    if (name == "solvers") return suite_solvers(seed);
    throw InvalidArgumentError("unknown check suite: " + name);
}

std::vector<CheckReport> run_all(Nat seed) {
    std::vector<CheckReport> reports;
    for (const auto& name : suite_names()) reports.push_back(run_suite(name, seed));
    return reports;
}

std::string render(const CheckReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& p : report.properties) {
        out << "  [" << (p.passed ? "PASS" : "FAIL") << "] " << p.id << ": " << p.detail
            << "\n";
    }
    return out.str();
}

}  // namespace recgraph::checks
