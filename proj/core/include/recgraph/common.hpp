#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recgraph {

using Nat = std::uint64_t;

// Budget used by the CLI and the check suites when no explicit budget is given.
inline constexpr Nat kDefaultBudget = 10000;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unknown registry name, or a register program with a branch target outside
// its instruction list.
class InvalidProgramError : public Error {
public:
    using Error::Error;
};

// Raised when an operation needs a decided value but the computation is still
// pending at the given budget. Callers that can tolerate pending values query
// the tri-valued interfaces instead.
class BudgetExhaustedError : public Error {
public:
    using Error::Error;
};

// Structural misuse: vertex outside a graph's universe, coloring missing a
// vertex, size guard exceeded, incompatible ground truth, and the like.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

}  // namespace recgraph
