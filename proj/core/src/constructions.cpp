#include "recgraph/constructions.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace recgraph::constructions {

using codes::Seq;
using graphs::ComputableGraph;
using graphs::TriEdge;
using graphs::VertexId;
using machine::Program;

namespace {

const std::vector<InjectionSpec>& injections() {
    static const std::vector<InjectionSpec> table = {
        {"doubling", [](Nat t) { return 2 * t; }, "all even numbers",
         [](Nat n) { return n % 2 == 0; }},
        {"identity", [](Nat t) { return t; }, "all naturals", [](Nat) { return true; }},
        {"succ", [](Nat t) { return t + 1; }, "all naturals except 0",
         [](Nat n) { return n >= 1; }},
    };
    return table;
}

}  // namespace

const InjectionSpec& injection_get(const std::string& name) {
    for (const auto& spec : injections()) {
        if (spec.name == name) return spec;
    }
    throw InvalidArgumentError("unknown injection: " + name);
}

std::vector<const InjectionSpec*> injection_list() {
    std::vector<const InjectionSpec*> out;
    for (const auto& spec : injections()) out.push_back(&spec);
    return out;
}

struct TreeSpec::Cache {
    std::mutex mutex;
    std::vector<Nat> member_codes;
    Nat next_code = 0;
};

TreeSpec::TreeSpec(const Program& p, Nat budget, Nat scan_limit)
    : program_(&p), budget_(budget), scan_limit_(scan_limit), cache_(std::make_shared<Cache>()) {
    if (!p.ground_truth().is_tree()) {
        throw InvalidArgumentError("TreeSpec: program " + p.name() +
                                   " is not classified as a tree");
    }
}

bool TreeSpec::member(const Seq& s) const {
    return member_code(codes::encode(s));
}

bool TreeSpec::member_code(Nat code) const {
    auto r = machine::eval_by(*program_, code, budget_);
    if (r.is_pending()) {
        throw BudgetExhaustedError("TreeSpec: membership pending for code " +
                                   std::to_string(code) + " at budget " + std::to_string(budget_));
    }
    return r.value() == 1;
}

Nat TreeSpec::member_code_at(std::size_t index) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    while (cache_->member_codes.size() <= index) {
        if (cache_->next_code > scan_limit_) {
            throw InvalidArgumentError("TreeSpec: member enumeration for " + program_->name() +
                                       " exhausted the scan limit");
        }
        if (member_code(cache_->next_code)) {
            cache_->member_codes.push_back(cache_->next_code);
        }
        ++cache_->next_code;
    }
    return cache_->member_codes[index];
}

std::vector<Nat> TreeSpec::member_codes_upto(Nat max_code) const {
    std::vector<Nat> out;
    for (Nat c = 0; c <= max_code; ++c) {
        if (member_code(c)) out.push_back(c);
    }
    return out;
}

machine::TreeClass TreeSpec::tree_class() const {
    return *program_->ground_truth().tree_class;
}

Seq TreeSpec::path_prefix(Nat depth) const {
    const auto& truth = program_->ground_truth();
    if (truth.tree_class != machine::TreeClass::HasInfinitePath || !truth.path_prefix) {
        throw InvalidArgumentError("TreeSpec: " + program_->name() +
                                   " has no ground-truth infinite path");
    }
    return truth.path_prefix(depth);
}

bool TreeSpec::on_infinite_path(const Seq& s) const {
    return s == path_prefix(s.length());
}

// --- thm1 -------------------------------------------------------------------

ComputableGraph thm1_graph(const Program& p) {
    const Program* prog = &p;
    return ComputableGraph(
        "thm1(" + p.name() + ")",
        [](Nat i) { return VertexId::nat(i); },
        [](const VertexId& v) { return v.kind() == VertexId::Kind::Nat; },
        [prog](const VertexId& u, const VertexId&, Nat) {
            // u holds the smaller index; the rule only looks at it
            return machine::halts_by(*prog, prog->self_input(), u.a()) ? TriEdge::Edge
                                                                       : TriEdge::NoEdge;
        });
}

// --- thm2 -------------------------------------------------------------------

ComputableGraph thm2_graph(const Program& p) {
    const Program* prog = &p;
    return ComputableGraph(
        "thm2(" + p.name() + ")",
        [](Nat i) {
            // diagonal d holds Row(0,d)..Row(d,0) followed by the d clique
            // mates of Row(d,0); 2d+1 vertices in total
            for (Nat d = 0;; ++d) {
                Nat block = 2 * d + 1;
                if (i >= block) {
                    i -= block;
                    continue;
                }
                if (i <= d) return VertexId::row(i, d - i);
                return VertexId::clique_extra(d, i - d);
            }
        },
        [](const VertexId& v) {
            if (v.kind() == VertexId::Kind::Row) return true;
            return v.kind() == VertexId::Kind::CliqueExtra && v.b() >= 1 && v.b() <= v.a();
        },
        [prog](const VertexId& u, const VertexId& v, Nat) {
            using K = VertexId::Kind;
            if (u.kind() == K::Row && v.kind() == K::Row) {
                if (u.a() == v.a() && v.b() == u.b() + 1) return TriEdge::Edge;  // chain
                if (u.b() == v.b() && v.a() == u.a() + 1) {                      // ladder rung
                    return machine::halts_by(*prog, u.a(), u.b()) ? TriEdge::Edge
                                                                  : TriEdge::NoEdge;
                }
                return TriEdge::NoEdge;
            }
            if (u.kind() == K::Row && v.kind() == K::CliqueExtra) {
                return u.b() == 0 && u.a() == v.a() ? TriEdge::Edge : TriEdge::NoEdge;
            }
            if (u.kind() == K::CliqueExtra && v.kind() == K::CliqueExtra) {
                return u.a() == v.a() ? TriEdge::Edge : TriEdge::NoEdge;
            }
            return TriEdge::NoEdge;
        });
}

// --- thm4 -------------------------------------------------------------------

ComputableGraph thm4_graph(const Program& p) {
    const Program* prog = &p;
    return ComputableGraph(
        "thm4(" + p.name() + ")",
        [](Nat i) { return VertexId::seq(i); },
        [](const VertexId& v) { return v.kind() == VertexId::Kind::Seq; },
        [prog](const VertexId& u, const VertexId& v, Nat budget) {
            Seq s = codes::decode(u.a());
            Seq t = codes::decode(v.a());
            auto es = codes::eta_eval(*prog, s, budget);
            auto et = codes::eta_eval(*prog, t, budget);
            if (es == codes::TriValue::Pending || et == codes::TriValue::Pending) {
                return TriEdge::Pending;
            }
            if (es == codes::TriValue::One && et == codes::TriValue::One) {
                return codes::comparable(s, t) ? TriEdge::NoEdge : TriEdge::Edge;
            }
            // both decided, at least one Zero
            return TriEdge::Edge;
        });
}

graphs::Coloring thm4_witness_coloring(const Program& p, Nat prefix_count) {
    const auto& truth = p.ground_truth();
    if (truth.tree_class != machine::TreeClass::HasInfinitePath || !truth.path_prefix) {
        throw InvalidArgumentError("thm4_witness_coloring: ground truth of " + p.name() +
                                   " is not IsTree{HasInfinitePath}");
    }
    graphs::Coloring coloring;
    for (Nat c = 0; c < prefix_count; ++c) {
        Seq s = codes::decode(c);
        bool on_path = s == truth.path_prefix(s.length());
        coloring.assign(c, on_path ? 0 : c + 1);
    }
    return coloring;
}

// --- thm5 -------------------------------------------------------------------

ComputableGraph thm5_graph(const InjectionSpec& g, Nat n) {
    auto eval = g.eval;
    return ComputableGraph(
        "thm5(" + g.name + "," + std::to_string(n) + ")",
        [](Nat i) { return VertexId::nat(i); },
        [](const VertexId& v) { return v.kind() == VertexId::Kind::Nat; },
        [eval, n](const VertexId& u, const VertexId& v, Nat) {
            Nat j = u.a();
            if (v.a() == j + 1) return TriEdge::Edge;
            for (Nat t = 0; t <= j; ++t) {
                if (eval(t) == n) return TriEdge::Edge;
            }
            return TriEdge::NoEdge;
        });
}

// --- thm6 -------------------------------------------------------------------

ComputableGraph thm6_graph(const TreeSpec& t) {
    TreeSpec tree = t;
    return ComputableGraph(
        "thm6(" + t.program().name() + ")",
        [tree](Nat i) { return VertexId::seq(tree.member_code_at(i)); },
        [tree](const VertexId& v) {
            return v.kind() == VertexId::Kind::Seq && tree.member_code(v.a());
        },
        [](const VertexId& u, const VertexId& v, Nat) {
            return codes::comparable(codes::decode(u.a()), codes::decode(v.a()))
                       ? TriEdge::NoEdge
                       : TriEdge::Edge;
        });
}

// --- thm7 -------------------------------------------------------------------

ComputableGraph ray_triangle_H() {
    return ComputableGraph(
        "ray_triangle_H",
        [](Nat i) { return VertexId::nat(i); },
        [](const VertexId& v) { return v.kind() == VertexId::Kind::Nat; },
        [](const VertexId& u, const VertexId& v, Nat) {
            if (v.a() == u.a() + 1) return TriEdge::Edge;
            if (u.a() == 0 && v.a() == 2) return TriEdge::Edge;
            return TriEdge::NoEdge;
        });
}

ComputableGraph thm7_G(const Program& p) {
    const Program* prog = &p;
    return ComputableGraph(
        "thm7_G(" + p.name() + ")",
        [](Nat i) { return i < 3 ? VertexId::special(i) : VertexId::seq(i - 3); },
        [](const VertexId& v) {
            if (v.kind() == VertexId::Kind::Special) return v.a() <= 2;
            return v.kind() == VertexId::Kind::Seq;
        },
        [prog](const VertexId& u, const VertexId& v, Nat budget) {
            using K = VertexId::Kind;
            if (u.kind() == K::Special && v.kind() == K::Special) return TriEdge::Edge;
            if (u.kind() == K::Special && v.kind() == K::Seq) {
                return u.a() == 0 && v.a() == 0 ? TriEdge::Edge : TriEdge::NoEdge;
            }
            // two sequences; the prefix (if any) is u, since prefixes have
            // smaller codes
            Seq s = codes::decode(u.a());
            Seq t = codes::decode(v.a());
            if (!codes::immediate_extension(s, t)) return TriEdge::NoEdge;
            auto es = codes::eta_eval(*prog, s, budget);
            auto et = codes::eta_eval(*prog, t, budget);
            // the evaluation needs both values before the pair can settle
            if (es == codes::TriValue::Pending || et == codes::TriValue::Pending) {
                return TriEdge::Pending;
            }
            return es == codes::TriValue::One && et == codes::TriValue::One ? TriEdge::Edge
                                                                            : TriEdge::NoEdge;
        });
}

// --- thm9 -------------------------------------------------------------------

namespace {

Nat cycle_size_for(Nat e) {
    return 2 * (e + 1) + 2;
}

// cycle copies are laid out along diagonals of (code-1, k)
std::pair<Nat, Nat> cycle_pair_at(Nat q) {
    Nat t = 0;
    while ((t + 1) * (t + 2) / 2 <= q) ++t;
    Nat offset = q - t * (t + 1) / 2;
    return {offset + 1, t - offset};  // (sequence code, copy index)
}

bool same_cycle(const VertexId& u, const VertexId& v) {
    return u.b() == v.b() && u.c() == v.c();
}

bool cycle_neighbors(const VertexId& u, const VertexId& v, Nat size) {
    // u.d() < v.d() by the canonical vertex order
    return v.d() == u.d() + 1 || (u.d() == 0 && v.d() == size - 1);
}

}  // namespace

ComputableGraph cycle_ray_H(Nat e) {
    const Nat size = cycle_size_for(e);
    const Nat ray_code = codes::encode(Seq{0});
    return ComputableGraph(
        "cycle_ray_H(" + std::to_string(e) + ")",
        [e, size, ray_code](Nat i) {
            if (i == 0) return VertexId::tree_base(e);
            if (i <= 2) return VertexId::triangle_aux(e, i);
            Nat rest = i - 3;
            return VertexId::cycle(e, ray_code, rest / size, rest % size);
        },
        [e, size, ray_code](const VertexId& v) {
            switch (v.kind()) {
                case VertexId::Kind::TreeBase:
                    return v.a() == e;
                case VertexId::Kind::TriangleAux:
                    return v.a() == e && (v.b() == 1 || v.b() == 2);
                case VertexId::Kind::Cycle:
                    return v.a() == e && v.b() == ray_code && v.d() < size;
                default:
                    return false;
            }
        },
        [e, size](const VertexId& u, const VertexId& v, Nat) {
            using K = VertexId::Kind;
            if (u.kind() == K::TreeBase && v.kind() == K::TriangleAux) return TriEdge::Edge;
            if (u.kind() == K::TriangleAux && v.kind() == K::TriangleAux) return TriEdge::Edge;
            if (u.kind() == K::TreeBase && v.kind() == K::Cycle) {
                return v.c() == 0 && v.d() == 0 ? TriEdge::Edge : TriEdge::NoEdge;
            }
            if (u.kind() == K::Cycle && v.kind() == K::Cycle) {
                if (u.c() == v.c()) {
                    return cycle_neighbors(u, v, size) ? TriEdge::Edge : TriEdge::NoEdge;
                }
                if (v.c() == u.c() + 1 && u.d() == e + 2 && v.d() == 0) return TriEdge::Edge;
                return TriEdge::NoEdge;
            }
            return TriEdge::NoEdge;
        });
}

bool thm9_exact(const Program& p, const Seq& sigma, Nat k) {
    if (sigma.empty()) {
        throw InvalidArgumentError("thm9_exact: sigma must be non-empty");
    }
    const Nat code = codes::encode(sigma);
    auto condition = [&](Nat j) {
        for (Nat c = 0; c < code; ++c) {
            if (!codes::eta_converged_by(p, codes::decode(c), j)) return false;
        }
        return codes::eta_eval(p, sigma, j) == codes::TriValue::One;
    };
    if (!condition(k)) return false;
    return k == 0 || !condition(k - 1);
}

ComputableGraph thm9_G(const std::vector<const Program*>& programs) {
    for (const Program* p : programs) {
        if (p == nullptr) throw InvalidArgumentError("thm9_G: null program");
    }
    const std::vector<const Program*> progs = programs;
    const Nat ncomp = progs.size();

    struct ExactCache {
        std::mutex mutex;
        std::map<std::tuple<Nat, Nat, Nat>, bool> results;
    };
    auto cache = std::make_shared<ExactCache>();
    auto exact = [progs, cache](Nat e, Nat code, Nat k) {
        auto key = std::make_tuple(e, code, k);
        {
            std::lock_guard<std::mutex> lock(cache->mutex);
            auto it = cache->results.find(key);
            if (it != cache->results.end()) return it->second;
        }
        bool value = thm9_exact(*progs[e], codes::decode(code), k);
        std::lock_guard<std::mutex> lock(cache->mutex);
        cache->results.emplace(key, value);
        return value;
    };

    std::string name = "thm9_G(";
    for (std::size_t i = 0; i < progs.size(); ++i) {
        if (i > 0) name += ',';
        name += progs[i]->name();
    }
    name += ')';

    return ComputableGraph(
        std::move(name),
        [ncomp](Nat i) {
            if (ncomp == 0) {
                throw InvalidArgumentError("thm9_G: empty program list has no vertices");
            }
            // global diagonals over (component e, local block l): block 0 is
            // the base triangle, block l >= 1 the (l-1)-th cycle copy
            for (Nat d = 0;; ++d) {
                for (Nat e = 0; e < ncomp && e <= d; ++e) {
                    Nat l = d - e;
                    Nat block = l == 0 ? 3 : cycle_size_for(e);
                    if (i >= block) {
                        i -= block;
                        continue;
                    }
                    if (l == 0) {
                        return i == 0 ? VertexId::tree_base(e)
                                      : VertexId::triangle_aux(e, i);
                    }
                    auto [code, k] = cycle_pair_at(l - 1);
                    return VertexId::cycle(e, code, k, i);
                }
            }
        },
        [ncomp](const VertexId& v) {
            switch (v.kind()) {
                case VertexId::Kind::TreeBase:
                    return v.a() < ncomp;
                case VertexId::Kind::TriangleAux:
                    return v.a() < ncomp && (v.b() == 1 || v.b() == 2);
                case VertexId::Kind::Cycle:
                    return v.a() < ncomp && v.b() >= 1 && v.d() < cycle_size_for(v.a());
                default:
                    return false;
            }
        },
        [exact](const VertexId& u, const VertexId& v, Nat) {
            using K = VertexId::Kind;
            if (u.a() != v.a()) return TriEdge::NoEdge;  // components stay disjoint
            const Nat e = u.a();
            if (u.kind() == K::TreeBase && v.kind() == K::TriangleAux) return TriEdge::Edge;
            if (u.kind() == K::TriangleAux && v.kind() == K::TriangleAux) return TriEdge::Edge;
            if (u.kind() == K::TreeBase && v.kind() == K::Cycle) {
                bool joined = v.d() == 0 && codes::decode(v.b()).length() == 1 &&
                              exact(e, v.b(), v.c());
                return joined ? TriEdge::Edge : TriEdge::NoEdge;
            }
            if (u.kind() == K::Cycle && v.kind() == K::Cycle) {
                if (same_cycle(u, v)) {
                    return cycle_neighbors(u, v, cycle_size_for(e)) ? TriEdge::Edge
                                                                    : TriEdge::NoEdge;
                }
                // u's code is the smaller one, so u is the only prefix candidate
                if (codes::immediate_extension(codes::decode(u.b()), codes::decode(v.b())) &&
                    u.d() == e + 2 && v.d() == 0 && exact(e, u.b(), u.c()) &&
                    exact(e, v.b(), v.c())) {
                    return TriEdge::Edge;
                }
                return TriEdge::NoEdge;
            }
            return TriEdge::NoEdge;
        });
}

// --- thm10 ------------------------------------------------------------------

ComputableGraph thm10_G3(const TreeSpec& t) {
    TreeSpec tree = t;
    return ComputableGraph(
        "thm10_G3(" + t.program().name() + ")",
        [tree](Nat i) {
            if (i < 2) return VertexId::special(i + 1);
            return VertexId::seq(tree.member_code_at(i - 2));
        },
        [tree](const VertexId& v) {
            if (v.kind() == VertexId::Kind::Special) return v.a() == 1 || v.a() == 2;
            return v.kind() == VertexId::Kind::Seq && tree.member_code(v.a());
        },
        [](const VertexId& u, const VertexId& v, Nat) {
            using K = VertexId::Kind;
            if (u.kind() == K::Special && v.kind() == K::Special) return TriEdge::Edge;
            if (u.kind() == K::Special && v.kind() == K::Seq) {
                return v.a() == 0 ? TriEdge::Edge : TriEdge::NoEdge;  // both mates touch the root
            }
            return codes::immediate_extension(codes::decode(u.a()), codes::decode(v.a()))
                       ? TriEdge::Edge
                       : TriEdge::NoEdge;
        });
}

ComputableGraph thm10_G4(const std::vector<TreeSpec>& trees) {
    const std::vector<TreeSpec> specs = trees;
    const Nat ncomp = specs.size();

    std::string name = "thm10_G4(";
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (i > 0) name += ',';
        name += specs[i].program().name();
    }
    name += ')';

    return ComputableGraph(
        std::move(name),
        [specs, ncomp](Nat i) {
            if (ncomp == 0) {
                throw InvalidArgumentError("thm10_G4: empty tree list has no vertices");
            }
            for (Nat d = 0;; ++d) {
                for (Nat e = 0; e < ncomp && e <= d; ++e) {
                    Nat l = d - e;
                    Nat block = l == 0 ? 3 : cycle_size_for(e);
                    if (i >= block) {
                        i -= block;
                        continue;
                    }
                    if (l == 0) {
                        return i == 0 ? VertexId::tree_base(e)
                                      : VertexId::triangle_aux(e, i);
                    }
                    // member index l: index 0 is the root, which has no cycle
                    return VertexId::cycle(e, specs[e].member_code_at(l), 0, i);
                }
            }
        },
        [specs, ncomp](const VertexId& v) {
            switch (v.kind()) {
                case VertexId::Kind::TreeBase:
                    return v.a() < ncomp;
                case VertexId::Kind::TriangleAux:
                    return v.a() < ncomp && (v.b() == 1 || v.b() == 2);
                case VertexId::Kind::Cycle:
                    return v.a() < ncomp && v.b() >= 1 && v.c() == 0 &&
                           v.d() < cycle_size_for(v.a()) && specs[v.a()].member_code(v.b());
                default:
                    return false;
            }
        },
        [](const VertexId& u, const VertexId& v, Nat) {
            using K = VertexId::Kind;
            if (u.a() != v.a()) return TriEdge::NoEdge;
            const Nat e = u.a();
            if (u.kind() == K::TreeBase && v.kind() == K::TriangleAux) return TriEdge::Edge;
            if (u.kind() == K::TriangleAux && v.kind() == K::TriangleAux) return TriEdge::Edge;
            if (u.kind() == K::TreeBase && v.kind() == K::Cycle) {
                bool joined = v.d() == 0 && codes::decode(v.b()).length() == 1;
                return joined ? TriEdge::Edge : TriEdge::NoEdge;
            }
            if (u.kind() == K::Cycle && v.kind() == K::Cycle) {
                if (u.b() == v.b()) {
                    return cycle_neighbors(u, v, cycle_size_for(e)) ? TriEdge::Edge
                                                                    : TriEdge::NoEdge;
                }
                if (codes::immediate_extension(codes::decode(u.b()), codes::decode(v.b())) &&
                    u.d() == e + 2 && v.d() == 0) {
                    return TriEdge::Edge;
                }
                return TriEdge::NoEdge;
            }
            return TriEdge::NoEdge;
        });
}

}  // namespace recgraph::constructions
