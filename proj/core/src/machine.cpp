#include "recgraph/machine.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace recgraph::machine {

Nat ConvergenceResult::value() const {
    if (!converged_) {
        throw InvalidArgumentError("ConvergenceResult::value: result is pending");
    }
    return value_;
}

Instruction Instruction::inc(Nat reg, Nat next) {
    return Instruction{Op::Inc, reg, next, 0};
}

Instruction Instruction::jzdec(Nat reg, Nat next_zero, Nat next_pos) {
    return Instruction{Op::JzDec, reg, next_pos, next_zero};
}

Instruction Instruction::halt() {
    return Instruction{Op::Halt, 0, 0, 0};
}

namespace {

void validate(const RegisterProgram& prog) {
    const Nat size = prog.code.size();
    if (size == 0) {
        throw InvalidProgramError("register program: empty instruction list");
    }
    for (std::size_t pc = 0; pc < prog.code.size(); ++pc) {
        const Instruction& ins = prog.code[pc];
        if (ins.op == Instruction::Op::Halt) continue;
        bool ok = ins.next < size &&
                  (ins.op != Instruction::Op::JzDec || ins.next_zero < size);
        if (!ok) {
            std::ostringstream msg;
            msg << "register program: branch target out of range at pc " << pc;
            throw InvalidProgramError(msg.str());
        }
    }
}

Nat max_register(const RegisterProgram& prog) {
    Nat m = 0;
    for (const auto& ins : prog.code) m = std::max(m, ins.reg);
    return m;
}

}  // namespace

ConvergenceResult rm_run(const RegisterProgram& prog, Nat input, Nat budget) {
    validate(prog);
    std::vector<Nat> regs(max_register(prog) + 1, 0);
    regs[0] = input;
    Nat pc = 0;
    for (Nat step = 0; step < budget; ++step) {
        const Instruction& ins = prog.code[pc];
        switch (ins.op) {
            case Instruction::Op::Halt:
                return ConvergenceResult::converged(regs[0]);
            case Instruction::Op::Inc:
                ++regs[ins.reg];
                pc = ins.next;
                break;
            case Instruction::Op::JzDec:
                if (regs[ins.reg] == 0) {
                    pc = ins.next_zero;
                } else {
                    --regs[ins.reg];
                    pc = ins.next;
                }
                break;
        }
    }
    return ConvergenceResult::pending();
}

namespace rm_samples {

RegisterProgram halt_now() {
    return RegisterProgram{{Instruction::halt()}};
}

RegisterProgram loop_forever() {
    // register 1 stays zero, so this jumps to itself forever
    return RegisterProgram{{Instruction::jzdec(1, 0, 0)}};
}

RegisterProgram add_two() {
    return RegisterProgram{{
        Instruction::inc(0, 1),
        Instruction::inc(0, 2),
        Instruction::halt(),
    }};
}

RegisterProgram self5() {
    // four busywork increments, then halt: five steps on every input
    return RegisterProgram{{
        Instruction::inc(1, 1),
        Instruction::inc(1, 2),
        Instruction::inc(1, 3),
        Instruction::inc(1, 4),
        Instruction::halt(),
    }};
}

RegisterProgram evens() {
    // strip two from r0 per round; an odd input lands in the self-loop at 4.
    // the busywork increment stretches even runs to exactly x+3 steps
    return RegisterProgram{{
        Instruction::jzdec(0, 2, 1),
        Instruction::jzdec(0, 4, 0),
        Instruction::inc(1, 3),
        Instruction::halt(),
        Instruction::jzdec(1, 4, 4),
    }};
}

}  // namespace rm_samples

std::string to_string(TreeClass c) {
    switch (c) {
        case TreeClass::WellFounded: return "IsTree{WellFounded}";
        case TreeClass::HasInfinitePath: return "IsTree{HasInfinitePath}";
        case TreeClass::NotATree: return "NotATree";
        case TreeClass::PartialOnSomeInput: return "PartialOnSomeInput";
    }
    return "?";
}

Program Program::from_rule(std::string name, Rule rule, Nat self_input, GroundTruth truth) {
    Program p;
    p.name_ = std::move(name);
    p.kind_ = "rule";
    p.rule_ = std::move(rule);
    p.self_input_ = self_input;
    p.truth_ = std::move(truth);
    return p;
}

Program Program::from_register(std::string name, RegisterProgram prog, Nat self_input,
                               GroundTruth truth) {
    validate(prog);
    Program p;
    p.name_ = std::move(name);
    p.kind_ = "register";
    p.rule_ = [prog](Nat input, Nat stage) { return rm_run(prog, input, stage); };
    p.self_input_ = self_input;
    p.truth_ = std::move(truth);
    p.realization_ = std::move(prog);
    return p;
}

Program& Program::with_realization(RegisterProgram prog) {
    validate(prog);
    realization_ = std::move(prog);
    return *this;
}

ConvergenceResult Program::eval(Nat input, Nat stage) const {
    return rule_(input, stage);
}

bool halts_by(const Program& p, Nat input, Nat stage) {
    return p.eval(input, stage).is_converged();
}

ConvergenceResult eval_by(const Program& p, Nat input, Nat stage) {
    return p.eval(input, stage);
}

namespace {

// Tree-style rules answer on the code of a sequence once the stage passes the
// sequence's length.
Program::Rule seq_rule(std::function<Nat(const codes::Seq&)> value) {
    return [value = std::move(value)](Nat input, Nat stage) {
        codes::Seq s = codes::decode(input);
        if (stage >= s.length() + 1) {
            return ConvergenceResult::converged(value(s));
        }
        return ConvergenceResult::pending();
    };
}

bool all_entries_at_most(const codes::Seq& s, Nat cap) {
    for (Nat x : s.entries()) {
        if (x > cap) return false;
    }
    return true;
}

bool strictly_decreasing(const codes::Seq& s) {
    for (std::size_t i = 1; i < s.length(); ++i) {
        if (s.at(i) >= s.at(i - 1)) return false;
    }
    return true;
}

codes::Seq all_zeros(Nat depth) {
    return codes::Seq(std::vector<Nat>(depth, 0));
}

Program make_never() {
    GroundTruth t;
    t.summary = "halts nowhere";
    t.halting_set = [](Nat) { return false; };
    t.tree_class = TreeClass::PartialOnSomeInput;
    return Program::from_rule(
               "never", [](Nat, Nat) { return ConvergenceResult::pending(); }, 0, std::move(t))
        .with_realization(rm_samples::loop_forever());
}

Program make_self5() {
    GroundTruth t;
    t.summary = "halts on every input at exactly stage 5, output = input";
    t.halting_set = [](Nat) { return true; };
    t.tree_class = TreeClass::NotATree;
    return Program::from_rule(
               "self5",
               [](Nat input, Nat stage) {
                   return stage >= 5 ? ConvergenceResult::converged(input)
                                     : ConvergenceResult::pending();
               },
               0, std::move(t))
        .with_realization(rm_samples::self5());
}

Program make_halt_at(Nat stage_needed) {
    GroundTruth t;
    std::ostringstream s;
    s << "halts on every input at exactly stage " << stage_needed << ", output = input";
    t.summary = s.str();
    t.halting_set = [](Nat) { return true; };
    t.tree_class = TreeClass::NotATree;
    std::ostringstream name;
    name << "halt@" << stage_needed;
    return Program::from_rule(
        name.str(),
        [stage_needed](Nat input, Nat stage) {
            return stage >= stage_needed ? ConvergenceResult::converged(input)
                                         : ConvergenceResult::pending();
        },
        0, std::move(t));
}

Program make_evens() {
    GroundTruth t;
    t.summary = "halts exactly on even inputs, at stage x+3";
    t.halting_set = [](Nat x) { return x % 2 == 0; };
    t.tree_class = TreeClass::PartialOnSomeInput;
    return Program::from_rule(
               "evens",
               [](Nat input, Nat stage) {
                   if (input % 2 == 0 && stage >= input + 3) {
                       return ConvergenceResult::converged(0);
                   }
                   return ConvergenceResult::pending();
               },
               0, std::move(t))
        .with_realization(rm_samples::evens());
}

Program make_cof_minus_1() {
    GroundTruth t;
    t.summary = "halts on every input except 1, at stage x+2 (cofinite halting set)";
    t.halting_set = [](Nat x) { return x != 1; };
    t.tree_class = TreeClass::PartialOnSomeInput;
    return Program::from_rule(
        "cof-minus-1",
        [](Nat input, Nat stage) {
            if (input != 1 && stage >= input + 2) {
                return ConvergenceResult::converged(0);
            }
            return ConvergenceResult::pending();
        },
        0, std::move(t));
}

Program make_tree_binary() {
    GroundTruth t;
    t.summary = "characteristic of the full binary tree (entries 0/1); IsTree{HasInfinitePath}";
    t.halting_set = [](Nat) { return true; };
    t.tree_class = TreeClass::HasInfinitePath;
    t.path_prefix = all_zeros;
    return Program::from_rule(
        "tree:binary",
        seq_rule([](const codes::Seq& s) { return all_entries_at_most(s, 1) ? 1 : 0; }), 0,
        std::move(t));
}

Program make_tree_ray0() {
    GroundTruth t;
    t.summary = "characteristic of the single all-zero ray; IsTree{HasInfinitePath}";
    t.halting_set = [](Nat) { return true; };
    t.tree_class = TreeClass::HasInfinitePath;
    t.path_prefix = all_zeros;
    return Program::from_rule(
        "tree:ray0",
        seq_rule([](const codes::Seq& s) { return all_entries_at_most(s, 0) ? 1 : 0; }), 0,
        std::move(t));
}

Program make_tree_finite(Nat depth) {
    GroundTruth t;
    std::ostringstream s;
    s << "characteristic of the binary tree truncated at depth " << depth
      << "; IsTree{WellFounded}";
    t.summary = s.str();
    t.halting_set = [](Nat) { return true; };
    t.tree_class = TreeClass::WellFounded;
    std::ostringstream name;
    name << "tree:finite(" << depth << ")";
    return Program::from_rule(
        name.str(),
        seq_rule([depth](const codes::Seq& s) {
            return s.length() <= depth && all_entries_at_most(s, 1) ? 1 : 0;
        }),
        0, std::move(t));
}

Program make_tree_desc() {
    GroundTruth t;
    t.summary = "characteristic of strictly decreasing sequences; IsTree{WellFounded}, "
                "arbitrarily deep";
    t.halting_set = [](Nat) { return true; };
    t.tree_class = TreeClass::WellFounded;
    return Program::from_rule(
        "tree:desc", seq_rule([](const codes::Seq& s) { return strictly_decreasing(s) ? 1 : 0; }),
        0, std::move(t));
}

Program make_notree_gap() {
    GroundTruth t;
    t.summary = "total 0/1 values but not prefix-closed: 0 on the empty sequence, 1 on 0; NotATree";
    t.halting_set = [](Nat) { return true; };
    t.tree_class = TreeClass::NotATree;
    return Program::from_rule("notree:gap", seq_rule([](const codes::Seq& s) -> Nat {
                                  if (s == codes::Seq{0}) return 1;
                                  return 0;
                              }),
                              0, std::move(t));
}

Program make_partial_slow() {
    GroundTruth t;
    t.summary = "diverges on input 5 only; halts elsewhere at stage 2x+3, output 1";
    t.halting_set = [](Nat x) { return x != 5; };
    t.tree_class = TreeClass::PartialOnSomeInput;
    // self input 5 = the designated gap, so the self-halting constructions see
    // a program that never answers on itself
    return Program::from_rule(
        "partial:slow",
        [](Nat input, Nat stage) {
            if (input != 5 && stage >= 2 * input + 3) {
                return ConvergenceResult::converged(1);
            }
            return ConvergenceResult::pending();
        },
        5, std::move(t));
}

Program make_rm_add2() {
    GroundTruth t;
    t.summary = "compiled register program: output = input + 2, halts on step 3";
    t.halting_set = [](Nat) { return true; };
    t.tree_class = TreeClass::NotATree;
    return Program::from_register("rm:add2", rm_samples::add_two(), 0, std::move(t));
}

class Registry {
public:
    Registry() {
        add(make_never());
        add(make_self5());
        add(make_halt_at(7));
        add(make_evens());
        add(make_cof_minus_1());
        add(make_tree_binary());
        add(make_tree_ray0());
        add(make_tree_finite(2));
        add(make_tree_finite(3));
        add(make_tree_desc());
        add(make_notree_gap());
        add(make_partial_slow());
        add(make_rm_add2());
        for (const auto& name : order_) listing_.push_back(programs_.at(name).get());
    }

    const Program& get(const std::string& name) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = programs_.find(name);
        if (it != programs_.end()) return *it->second;
        // parametric families are instantiated once, on first request
        if (auto p = parse_parametric(name)) {
            auto [pos, inserted] =
                programs_.emplace(name, std::make_unique<Program>(std::move(*p)));
            (void)inserted;
            return *pos->second;
        }
        throw InvalidProgramError("unknown program: " + name);
    }

    std::vector<const Program*> list() {
        std::lock_guard<std::mutex> lock(mutex_);
        return listing_;
    }

private:
    void add(Program p) {
        std::string name = p.name();
        order_.push_back(name);
        programs_.emplace(std::move(name), std::make_unique<Program>(std::move(p)));
    }

    static std::optional<Program> parse_parametric(const std::string& name) {
        if (auto n = parse_param(name, "halt@", "")) return make_halt_at(*n);
        if (auto n = parse_param(name, "tree:finite(", ")")) return make_tree_finite(*n);
        return std::nullopt;
    }

    static std::optional<Nat> parse_param(const std::string& name, const std::string& prefix,
                                            const std::string& suffix) {
        if (name.size() <= prefix.size() + suffix.size()) return std::nullopt;
        if (name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
        if (!suffix.empty() &&
            name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) {
            return std::nullopt;
        }
        std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
        if (digits.empty()) return std::nullopt;
        Nat value = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') return std::nullopt;
            value = value * 10 + static_cast<Nat>(c - '0');
            if (value > 1000000) return std::nullopt;  // keep parameters sane
        }
        return value;
    }

    std::mutex mutex_;
    std::map<std::string, std::unique_ptr<Program>> programs_;
    std::vector<std::string> order_;
    std::vector<const Program*> listing_;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

const Program& registry_get(const std::string& name) {
    return registry().get(name);
}

std::vector<const Program*> registry_list() {
    return registry().list();
}

}  // namespace recgraph::machine
