#include "recgraph/codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "recgraph/machine.hpp"

namespace recgraph::codes {

Seq Seq::extended(Nat x) const {
    std::vector<Nat> e = entries_;
    e.push_back(x);
    return Seq(std::move(e));
}

Seq Seq::truncated(std::size_t n) const {
    if (n > entries_.size()) {
        throw InvalidArgumentError("Seq::truncated: length exceeds sequence");
    }
    return Seq(std::vector<Nat>(entries_.begin(), entries_.begin() + static_cast<long>(n)));
}

Seq Seq::parent() const {
    if (entries_.empty()) {
        throw InvalidArgumentError("Seq::parent: empty sequence has no parent");
    }
    return truncated(entries_.size() - 1);
}

std::string Seq::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) out << '.';
        out << entries_[i];
    }
    return out.str();
}

namespace {

using U128 = unsigned __int128;

constexpr Nat kNatMax = std::numeric_limits<Nat>::max();

// floor(sqrt(z)) for 128-bit z, exact.
U128 isqrt128(U128 z) {
    if (z == 0) return 0;
    U128 r = static_cast<U128>(std::min<long double>(
        static_cast<long double>(kNatMax),
        sqrtl(static_cast<long double>(z))));
    while (r > 0 && r * r > z) --r;
    while ((r + 1) * (r + 1) <= z) ++r;
    return r;
}

}  // namespace

Nat pair(Nat a, Nat b) {
    U128 s = static_cast<U128>(a) + b;
    U128 z = s * (s + 1) / 2 + b;
    if (z > kNatMax) {
        throw InvalidArgumentError("pair: sequence code overflows 64 bits");
    }
    return static_cast<Nat>(z);
}

std::pair<Nat, Nat> unpair(Nat z) {
    U128 w = (isqrt128(static_cast<U128>(z) * 8 + 1) - 1) / 2;
    U128 t = w * (w + 1) / 2;
    Nat b = static_cast<Nat>(z - t);
    Nat a = static_cast<Nat>(w - b);
    return {a, b};
}

Nat encode(const Seq& s) {
    Nat code = 0;
    for (Nat x : s.entries()) {
        code = pair(code, x) + 1;  // pair() guards; +1 cannot wrap since pair < Nat max
        if (code == 0) {
            throw InvalidArgumentError("encode: sequence code overflows 64 bits");
        }
    }
    return code;
}

Seq decode(Nat code) {
    std::vector<Nat> reversed;
    while (code > 0) {
        auto [parent, x] = unpair(code - 1);
        reversed.push_back(x);
        code = parent;  // strictly smaller, so this terminates
    }
    std::reverse(reversed.begin(), reversed.end());
    return Seq(std::move(reversed));
}

bool is_prefix(const Seq& s, const Seq& t) {
    if (s.length() > t.length()) return false;
    return std::equal(s.entries().begin(), s.entries().end(), t.entries().begin());
}

bool is_proper_prefix(const Seq& s, const Seq& t) {
    return s.length() < t.length() && is_prefix(s, t);
}

bool comparable(const Seq& s, const Seq& t) {
    return is_prefix(s, t) || is_prefix(t, s);
}

bool immediate_extension(const Seq& s, const Seq& t) {
    return t.length() == s.length() + 1 && is_prefix(s, t);
}

bool pairwise_comparable(const std::vector<Seq>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (!comparable(set[i], set[j])) return false;
        }
    }
    return true;
}

std::string to_string(TriValue v) {
    switch (v) {
        case TriValue::Zero: return "Zero";
        case TriValue::One: return "One";
        case TriValue::Pending: return "Pending";
    }
    return "?";
}

TriValue eta_eval(const machine::Program& p, const Seq& tau, Nat budget) {
    const std::size_t n = tau.length();
    // values of the program on every prefix of tau (index i = prefix of length i),
    // all at the one shared budget
    std::vector<machine::ConvergenceResult> results;
    results.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        results.push_back(machine::eval_by(p, encode(tau.truncated(i)), budget));
    }

    bool all_one = true;
    bool all_binary = true;
    for (const auto& r : results) {
        if (!r.is_converged()) {
            all_one = false;
            all_binary = false;
            break;
        }
        if (r.value() != 1) all_one = false;
        if (r.value() > 1) all_binary = false;
    }
    if (all_one) return TriValue::One;

    if (all_binary && results[n].value() == 0) {
        // a 0 anywhere must force 0 on every longer prefix
        bool zero_closed = true;
        for (std::size_t i = 0; i <= n && zero_closed; ++i) {
            if (results[i].value() != 0) continue;
            for (std::size_t j = i; j <= n; ++j) {
                if (results[j].value() != 0) {
                    zero_closed = false;
                    break;
                }
            }
        }
        if (zero_closed) return TriValue::Zero;
    }
    return TriValue::Pending;
}

bool eta_converged_by(const machine::Program& p, const Seq& tau, Nat k) {
    return eta_eval(p, tau, k) != TriValue::Pending;
}

}  // namespace recgraph::codes
