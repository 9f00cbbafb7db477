#pragma once

#include <string>
#include <vector>

#include "recgraph/common.hpp"

namespace recgraph::checks {

struct PropertyResult {
    std::string id;
    bool passed;
    std::string detail;  // witness summary on pass, counterexample on fail
};

struct CheckReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool passed() const;
};

// Individually runnable suites, in reporting order. "eta" carries the
// stage-semantics properties; the rest match the construction families plus
// the solver oracle-agreement suite.
std::vector<std::string> suite_names();

// Runs one suite; reports are deterministic for a fixed seed. Throws
// InvalidArgumentError for unknown suite names. Only the solvers suite
// consumes the seed.
CheckReport run_suite(const std::string& name, Nat seed = 0);

// Every suite from suite_names(), in order.
std::vector<CheckReport> run_all(Nat seed = 0);

// Fixed-layout text: a suite headline plus one line per property.
std::string render(const CheckReport& report);

}  // namespace recgraph::checks
