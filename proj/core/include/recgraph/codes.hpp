#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "recgraph/common.hpp"

namespace recgraph::machine {
class Program;
}

namespace recgraph::codes {

// Finite sequence of naturals. Sequences are the inputs of the tree-style
// programs in the machine registry; they travel through the system as their
// numeric codes (see encode/decode below).
class Seq {
public:
    Seq() = default;
    explicit Seq(std::vector<Nat> entries) : entries_(std::move(entries)) {}
    Seq(std::initializer_list<Nat> entries) : entries_(entries) {}

    std::size_t length() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    Nat at(std::size_t i) const { return entries_.at(i); }
    const std::vector<Nat>& entries() const { return entries_; }

    // σ·⟨x⟩
    Seq extended(Nat x) const;
    // first n entries; n must not exceed length()
    Seq truncated(std::size_t n) const;
    // drop the last entry; error on the empty sequence
    Seq parent() const;

    // Dot-separated entries, e.g. "0.1.2". The empty sequence renders as "".
    std::string to_string() const;

    bool operator==(const Seq&) const = default;

private:
    std::vector<Nat> entries_;
};

// Cantor pairing (a+b)(a+b+1)/2 + b and its inverse. Throws on Nat overflow;
// sequence codes grow fast, so the guard is load-bearing for long sequences.
Nat pair(Nat a, Nat b);
std::pair<Nat, Nat> unpair(Nat z);

// code(⟨⟩) = 0, code(σ·⟨x⟩) = pair(code(σ), x) + 1. Proper prefixes always
// receive strictly smaller codes.
Nat encode(const Seq& s);
Seq decode(Nat code);

bool is_prefix(const Seq& s, const Seq& t);         // s ⊆ t (reflexive)
bool is_proper_prefix(const Seq& s, const Seq& t);  // s ⊊ t
bool comparable(const Seq& s, const Seq& t);        // s ⊆ t or t ⊆ s
// t == s·⟨x⟩ for some x
bool immediate_extension(const Seq& s, const Seq& t);
bool pairwise_comparable(const std::vector<Seq>& set);

// Stage approximation of a tree characteristic function: One and Zero are
// committed answers, Pending means "not yet decided at this budget" (and a
// sequence can stay Pending at every budget).
enum class TriValue { Zero, One, Pending };

std::string to_string(TriValue v);

// Evaluates the program on tau and every prefix of tau, all at the one shared
// budget, and classifies:
//   One   - every prefix converges to 1;
//   Zero  - tau converges to 0, every prefix converges to 0 or 1, and a 0 on
//           a prefix forces 0 on every extension of it within tau;
//   Pending - anything else (including value patterns that can never settle).
TriValue eta_eval(const machine::Program& p, const Seq& tau, Nat budget);

// True once eta_eval is decided at budget k.
bool eta_converged_by(const machine::Program& p, const Seq& tau, Nat k);

}  // namespace recgraph::codes
