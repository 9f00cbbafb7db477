#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "recgraph/codes.hpp"
#include "recgraph/common.hpp"

namespace recgraph::machine {

// Result of running a program for a bounded number of stages: either it has
// produced a value by then, or it is still pending. "Diverges" is represented
// by pending at every stage.
class ConvergenceResult {
public:
    static ConvergenceResult converged(Nat value) { return ConvergenceResult(true, value); }
    static ConvergenceResult pending() { return ConvergenceResult(false, 0); }

    bool is_converged() const { return converged_; }
    bool is_pending() const { return !converged_; }
    // value of a converged result; error when pending
    Nat value() const;

    bool operator==(const ConvergenceResult&) const = default;

private:
    ConvergenceResult(bool c, Nat v) : converged_(c), value_(v) {}
    bool converged_;
    Nat value_;
};

// Counter machine with three instruction forms. Input arrives in register 0,
// output is read from register 0 at the halt instruction. Executing any
// instruction (halt included) costs one step.
struct Instruction {
    enum class Op { Inc, JzDec, Halt };

    Op op = Op::Halt;
    Nat reg = 0;
    Nat next = 0;       // Inc: next pc. JzDec: pc when the register was positive.
    Nat next_zero = 0;  // JzDec: pc when the register was zero.

    static Instruction inc(Nat reg, Nat next);
    static Instruction jzdec(Nat reg, Nat next_zero, Nat next_pos);
    static Instruction halt();
};

struct RegisterProgram {
    std::vector<Instruction> code;
};

// Simulates at most `budget` steps. Throws InvalidProgramError when any
// instruction names a pc outside the instruction list.
ConvergenceResult rm_run(const RegisterProgram& prog, Nat input, Nat budget);

// Small shipped register programs, used in tests and as cross-checks for the
// registry rules.
namespace rm_samples {
RegisterProgram halt_now();      // halts on step 1, output = input
RegisterProgram loop_forever();  // never halts
RegisterProgram add_two();       // output = input + 2, halts on step 3
RegisterProgram self5();         // halts on step 5 for every input, output = input
RegisterProgram evens();         // halts exactly on even inputs (step x+3), output 0
}  // namespace rm_samples

// How a program's sequence-characteristic behaves, per the registry's
// ground-truth notes.
enum class TreeClass {
    WellFounded,         // total 0/1 characteristic, prefix-closed, no infinite path
    HasInfinitePath,     // total 0/1 characteristic, prefix-closed, with a path generator
    NotATree,            // total but not a tree characteristic
    PartialOnSomeInput,  // diverges somewhere
};

std::string to_string(TreeClass c);

struct GroundTruth {
    std::string summary;  // one-line human-readable description for list-programs
    // membership of the halting set, when the program is best described by one
    std::optional<std::function<bool(Nat)>> halting_set;
    std::optional<TreeClass> tree_class;
    // for HasInfinitePath: prefix of the infinite path with the given length
    std::function<codes::Seq(Nat)> path_prefix;

    bool is_tree() const {
        return tree_class == TreeClass::WellFounded || tree_class == TreeClass::HasInfinitePath;
    }
};

// A named program: either a documented stage rule or a compiled register
// program ("stage s" = within s interpreter steps). Immutable once built.
class Program {
public:
    using Rule = std::function<ConvergenceResult(Nat input, Nat stage)>;

    static Program from_rule(std::string name, Rule rule, Nat self_input, GroundTruth truth);
    static Program from_register(std::string name, RegisterProgram prog, Nat self_input,
                                 GroundTruth truth);

    const std::string& name() const { return name_; }
    // "rule" or "register"
    const std::string& kind() const { return kind_; }
    ConvergenceResult eval(Nat input, Nat stage) const;
    // the input this program feeds itself in the self-halting constructions
    Nat self_input() const { return self_input_; }
    const GroundTruth& ground_truth() const { return truth_; }
    // rule-backed programs may additionally ship a register realization that
    // must agree with the rule
    const std::optional<RegisterProgram>& register_realization() const { return realization_; }
    Program& with_realization(RegisterProgram prog);

private:
    Program() = default;
    std::string name_;
    std::string kind_;
    Rule rule_;
    Nat self_input_ = 0;
    GroundTruth truth_;
    std::optional<RegisterProgram> realization_;
};

// True iff the program has converged on `input` within `stage` stages.
// Monotone in the stage by construction.
bool halts_by(const Program& p, Nat input, Nat stage);
ConvergenceResult eval_by(const Program& p, Nat input, Nat stage);

// Registry of canned programs. Fixed names: never, self5, evens, cof-minus-1,
// tree:binary, tree:ray0, tree:desc, notree:gap, partial:slow, rm:add2.
// Parametric names are instantiated on demand: halt@<t>, tree:finite(<d>).
// Throws InvalidProgramError for unknown names. References stay valid for the
// life of the process; lookups are safe from concurrent threads.
const Program& registry_get(const std::string& name);

// The canned programs (with one representative instance per parametric
// family), in a fixed listing order.
std::vector<const Program*> registry_list();

}  // namespace recgraph::machine
