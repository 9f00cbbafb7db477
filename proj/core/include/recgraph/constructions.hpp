#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "recgraph/codes.hpp"
#include "recgraph/common.hpp"
#include "recgraph/graphs.hpp"
#include "recgraph/machine.hpp"

namespace recgraph::constructions {

// A total injective function on the naturals with a ground-truth range note,
// used by the path-with-chords family (thm5).
struct InjectionSpec {
    std::string name;
    std::function<Nat(Nat)> eval;
    std::string range_summary;
    std::function<bool(Nat)> in_range;  // ground truth for separator checks
};

// Named injections: doubling (t -> 2t), identity, succ (t -> t+1).
const InjectionSpec& injection_get(const std::string& name);
std::vector<const InjectionSpec*> injection_list();

// View of a registry program whose ground truth classifies it as a tree
// characteristic. Membership queries run the program at the given budget and
// fail loudly when the answer is still pending. Member enumeration scans codes
// upward and caches; the scan limit guards against running off the end of a
// finite tree.
class TreeSpec {
public:
    explicit TreeSpec(const machine::Program& p, Nat budget = kDefaultBudget,
                      Nat scan_limit = 200000);

    const machine::Program& program() const { return *program_; }
    Nat budget() const { return budget_; }

    bool member(const codes::Seq& s) const;  // throws BudgetExhaustedError on Pending
    bool member_code(Nat code) const;
    // code of the index-th member in ascending code order; throws
    // InvalidArgumentError once the scan limit is passed
    Nat member_code_at(std::size_t index) const;
    std::vector<Nat> member_codes_upto(Nat max_code) const;

    machine::TreeClass tree_class() const;
    // prefix of the ground-truth infinite path; requires HasInfinitePath
    codes::Seq path_prefix(Nat depth) const;
    bool on_infinite_path(const codes::Seq& s) const;

private:
    const machine::Program* program_;
    Nat budget_;
    Nat scan_limit_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

// --- graph families -------------------------------------------------------
//
// Each family returns an immutable ComputableGraph. Vertex enumeration orders
// are fixed and documented here; everything downstream (prefix extraction,
// solver witnesses, exports) inherits its determinism from them.

// Vertices 0,1,2,...; m < n joined iff the program has answered on its
// self-input within m stages. Decided at every budget.
graphs::ComputableGraph thm1_graph(const machine::Program& p);

// Grid rows Row(m,j) with a clique of size m+1 hung on Row(m,0) (mates
// CliqueExtra(m,1..m)), chain edges along each row, and a ladder rung between
// Row(m,j) and Row(m+1,j) iff the program halts on input m within j stages.
// Enumeration: diagonals d = m+j ascending, m ascending inside a diagonal,
// with the clique mates right after Row(m,0).
graphs::ComputableGraph thm2_graph(const machine::Program& p);

// Vertices are all sequence codes ascending. For distinct sequences, at a
// budget: Edge when both eta-values are One and the sequences are
// incomparable, or both are decided with at least one Zero; NoEdge when both
// One and comparable; Pending while either eta is pending.
graphs::ComputableGraph thm4_graph(const machine::Program& p);

// Witness coloring for thm4_graph over the first prefix_count codes: color 0
// on the ground-truth infinite path, code+1 elsewhere. Requires the program's
// ground truth to be IsTree{HasInfinitePath}.
graphs::Coloring thm4_witness_coloring(const machine::Program& p, Nat prefix_count);

// Path 0-1-2-... plus chords: j < k joined iff k = j+1 or g(t) = n for some
// t <= j. Decided at every budget.
graphs::ComputableGraph thm5_graph(const InjectionSpec& g, Nat n);

// Incomparability graph on the members of a tree: enumeration skips
// non-members; distinct members joined iff prefix-incomparable.
graphs::ComputableGraph thm6_graph(const TreeSpec& t);

// Ray 0-1-2-... with the extra edge (0,2): a triangle whose vertex 2 starts
// an infinite ray.
graphs::ComputableGraph ray_triangle_H();

// Specials v0,v1,v2 as a triangle, v0 joined to the empty sequence, then all
// sequence codes ascending. Distinct sequences are joined iff one is an
// immediate extension of the other and both eta-values are One; both values
// must be decided before the pair decides, so pending eta keeps the pair
// Pending even when the other side is already Zero.
graphs::ComputableGraph thm7_G(const machine::Program& p);

// Base triangle (t0:e plus two mates) and an infinite chain of cycles of
// size 2(e+1)+2: t0 joined to position 0 of copy 0, and position e+2 of copy
// k joined to position 0 of copy k+1. Enumeration: triangle, then copies
// k = 0,1,... position-major.
graphs::ComputableGraph cycle_ray_H(Nat e);

// Exactness of a cycle copy: k is the least budget at which every sequence
// with a smaller code has a decided eta-value and sigma's eta-value is One.
// sigma must be non-empty. Decidable with work bounded by k.
bool thm9_exact(const machine::Program& p, const codes::Seq& sigma, Nat k);

// Disjoint union over the program list: component e holds a base triangle and
// one cycle of size 2(e+1)+2 per (non-empty sigma, k). Connection edges touch
// exact cycles only: t0 to position 0 of an exact single-entry cycle, and
// position e+2 of an exact cycle for sigma to position 0 of an exact cycle
// for an immediate extension of sigma. Enumeration: global diagonal over
// (component, local block), where local block 0 is the triangle and block
// l >= 1 is the (sigma, k) pair at diagonal position l-1 (pairs ordered by
// (code-1)+k, code ascending inside a diagonal).
graphs::ComputableGraph thm9_G(const std::vector<const machine::Program*>& programs);

// Tree members as vertices with parent/immediate-child edges, plus a triangle
// hung on the root via two special mates v1, v2. Enumeration: v1, v2, then
// member codes ascending.
graphs::ComputableGraph thm10_G3(const TreeSpec& t);

// Disjoint union over the tree list: component n has a base triangle and one
// cycle of size 2(n+1)+2 per non-root member; the base joins position 0 of
// each root-child cycle, and position n+2 of a member's cycle joins position
// 0 of each immediate-extension member's cycle. Enumeration mirrors thm9_G
// with members (ascending code, root skipped) in place of (sigma, k) pairs.
graphs::ComputableGraph thm10_G4(const std::vector<TreeSpec>& trees);

}  // namespace recgraph::constructions
