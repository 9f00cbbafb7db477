#include "recgraph/machine.hpp"

#include <doctest.h>

#include <set>
#include <string>

using namespace recgraph;
using machine::ConvergenceResult;
using machine::Instruction;
using machine::RegisterProgram;

TEST_CASE("rm_run on the tiny samples") {
    auto halt_now = machine::rm_samples::halt_now();
    CHECK(machine::rm_run(halt_now, 0, 1) == ConvergenceResult::converged(0));
    CHECK(machine::rm_run(halt_now, 7, 1) == ConvergenceResult::converged(7));
    CHECK(machine::rm_run(halt_now, 7, 0).is_pending());

    auto loop = machine::rm_samples::loop_forever();
    CHECK(machine::rm_run(loop, 9, 100000).is_pending());

    auto add2 = machine::rm_samples::add_two();
    CHECK(machine::rm_run(add2, 3, kDefaultBudget) == ConvergenceResult::converged(5));
    CHECK(machine::rm_run(add2, 3, 2).is_pending());
    CHECK(machine::rm_run(add2, 3, 3).is_converged());
}

TEST_CASE("self5 sample halts at exactly five steps with its input intact") {
    auto prog = machine::rm_samples::self5();
    for (Nat x = 0; x <= 20; ++x) {
        CHECK(machine::rm_run(prog, x, 4).is_pending());
        CHECK(machine::rm_run(prog, x, 5) == ConvergenceResult::converged(x));
    }
}

TEST_CASE("evens sample halts on even inputs at exactly x+3 steps, output zero") {
    auto prog = machine::rm_samples::evens();
    for (Nat x = 0; x <= 20; x += 2) {
        CHECK(machine::rm_run(prog, x, x + 2).is_pending());
        CHECK(machine::rm_run(prog, x, x + 3) == ConvergenceResult::converged(0));
    }
    for (Nat x = 1; x <= 21; x += 2) {
        CHECK(machine::rm_run(prog, x, 10000).is_pending());
    }
}

TEST_CASE("rm_run rejects branch targets outside the instruction list") {
    RegisterProgram bad{{Instruction::inc(0, 5)}};
    CHECK_THROWS_AS(machine::rm_run(bad, 0, 10), InvalidProgramError);
    RegisterProgram bad_zero{{Instruction::jzdec(0, 9, 0)}};
    CHECK_THROWS_AS(machine::rm_run(bad_zero, 0, 10), InvalidProgramError);
}

TEST_CASE("pending convergence results refuse to hand out a value") {
    auto pending = ConvergenceResult::pending();
    CHECK(pending.is_pending());
    CHECK_THROWS_AS(pending.value(), Error);
}

TEST_CASE("registry lookups") {
    const auto& never = machine::registry_get("never");
    CHECK(never.ground_truth().summary == "halts nowhere");
    CHECK_FALSE(machine::halts_by(never, 3, 1000000));

    const auto& binary = machine::registry_get("tree:binary");
    CHECK(binary.ground_truth().tree_class == machine::TreeClass::HasInfinitePath);

    CHECK_THROWS_AS(machine::registry_get("nosuch"), InvalidProgramError);
}

TEST_CASE("parametric registry names instantiate on demand and stay stable") {
    const auto& h9 = machine::registry_get("halt@9");
    CHECK_FALSE(machine::halts_by(h9, 4, 8));
    CHECK(machine::halts_by(h9, 4, 9));
    CHECK(&machine::registry_get("halt@9") == &h9);

    const auto& f4 = machine::registry_get("tree:finite(4)");
    CHECK(f4.ground_truth().tree_class == machine::TreeClass::WellFounded);
    CHECK(&machine::registry_get("tree:finite(4)") == &f4);
}

TEST_CASE("registry listing carries every fixed name") {
    auto listing = machine::registry_list();
    std::set<std::string> names;
    for (const auto* p : listing) names.insert(p->name());
    for (const char* required : {"never", "self5", "evens", "cof-minus-1", "tree:binary",
                                 "tree:ray0", "tree:desc", "notree:gap", "partial:slow",
                                 "rm:add2"}) {
        CHECK(names.count(required) == 1);
    }
    CHECK(listing.size() >= 10);
}

TEST_CASE("halts_by is monotone in the stage for every listed program") {
    for (const auto* p : machine::registry_list()) {
        for (Nat x = 0; x <= 12; ++x) {
            bool before = false;
            for (Nat s = 0; s <= 60; ++s) {
                bool now = machine::halts_by(*p, x, s);
                CHECK((!before || now));
                before = now;
            }
        }
    }
}

TEST_CASE("converged values are stable under larger stages") {
    for (const auto* p : machine::registry_list()) {
        for (Nat x = 0; x <= 12; ++x) {
            auto r = machine::eval_by(*p, x, 60);
            if (r.is_converged()) {
                for (Nat extra = 1; extra <= 100; extra += 9) {
                    CHECK(machine::eval_by(*p, x, 60 + extra) == r);
                }
            }
        }
    }
}

TEST_CASE("halting-set ground truth matches bounded evaluation") {
    for (const auto* p : machine::registry_list()) {
        const auto& truth = p->ground_truth();
        if (!truth.halting_set) continue;
        for (Nat x = 0; x <= 50; ++x) {
            CHECK((*truth.halting_set)(x) == machine::halts_by(*p, x, kDefaultBudget));
        }
    }
}

TEST_CASE("register realizations agree with their rules step for step") {
    for (const auto* p : machine::registry_list()) {
        const auto& realization = p->register_realization();
        if (!realization) continue;
        for (Nat x = 0; x <= 20; ++x) {
            for (Nat s = 0; s <= 40; ++s) {
                CHECK(p->eval(x, s) == machine::rm_run(*realization, x, s));
            }
        }
    }
}

TEST_CASE("tree program evaluation answers membership as a 0/1 value") {
    const auto& binary = machine::registry_get("tree:binary");
    Nat member = codes::encode(codes::Seq{0, 1});
    Nat outside = codes::encode(codes::Seq{2});
    CHECK(machine::eval_by(binary, member, kDefaultBudget) == ConvergenceResult::converged(1));
    CHECK(machine::eval_by(binary, outside, kDefaultBudget) == ConvergenceResult::converged(0));
}

TEST_CASE("partial:slow diverges exactly at its designated gap") {
    const auto& slow = machine::registry_get("partial:slow");
    CHECK(machine::eval_by(slow, 5, 1000000).is_pending());
    CHECK(machine::eval_by(slow, 4, kDefaultBudget) == ConvergenceResult::converged(1));
    CHECK(machine::eval_by(slow, 6, kDefaultBudget) == ConvergenceResult::converged(1));
}

TEST_CASE("program kinds reflect their construction") {
    CHECK(machine::registry_get("evens").kind() == "rule");
    CHECK(machine::registry_get("rm:add2").kind() == "register");
}
