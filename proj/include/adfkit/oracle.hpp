#pragma once

// Brute-force reference implementations of every semantics. Nothing here reuses the
// operator, the enumerator or the reduct construction; Gamma_D is evaluated in its
// global form, as a consensus over every two-valued extension of the whole ADF.

#include "adfkit/adf.hpp"
#include "adfkit/semantics.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace adfkit::oracle {

inline constexpr std::size_t default_cap = 10;

namespace detail {

using Acceptance = std::function<bool(StatementId)>;

/// C_s evaluated on the accepted parents, one subset lookup at a time.
inline Truth condition_under(const Adf& adf, StatementId s, const Acceptance& accepted) {
    std::vector<StatementId> in;
    for (StatementId p : adf.parents(s)) {
        if (accepted(p)) in.push_back(p);
    }
    return eval_condition(adf.condition(s), in);
}

/// Calls `fn` for each of the 3^n interpretations over `n` statements.
template <class Fn>
void for_each_three_valued(std::size_t n, Fn&& fn) {
    std::vector<Truth> digits(n, Truth::T);
    for (;;) {
        fn(Interpretation(digits));
        std::size_t i = 0;
        while (i < n && digits[i] == Truth::U) digits[i++] = Truth::T;
        if (i == n) return;
        digits[i] = digits[i] == Truth::T ? Truth::F : Truth::U;
    }
}

/// Two-valued interpretations w with v <=_i w.
inline std::vector<Interpretation> completions(const Interpretation& v) {
    std::vector<Interpretation> out{v};
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.values()[i] != Truth::U) continue;
        std::vector<Interpretation> next;
        for (const auto& w : out) {
            for (Truth t : {Truth::T, Truth::F}) {
                Interpretation x = w;
                x[StatementId{static_cast<std::uint32_t>(i)}] = t;
                next.push_back(std::move(x));
            }
        }
        out = std::move(next);
    }
    return out;
}

/// Gamma on a sub-ADF: only statements with `member` are interpreted; v ranges over
/// them (indexed by position in `members`); every other statement is fixed as not accepted.
inline Interpretation global_gamma(const Adf& adf, const std::vector<StatementId>& members, const Interpretation& v) {
    std::vector<std::int64_t> slot(adf.size(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) slot[members[i].index] = static_cast<std::int64_t>(i);
    Interpretation out(members.size());
    std::vector<bool> seen(members.size(), false);
    for (const Interpretation& w : completions(v)) {
        Acceptance accepted = [&](StatementId p) {
            return slot[p.index] >= 0 && w.values()[static_cast<std::size_t>(slot[p.index])] == Truth::T;
        };
        for (std::size_t i = 0; i < members.size(); ++i) {
            const Truth value = condition_under(adf, members[i], accepted);
            const StatementId at{static_cast<std::uint32_t>(i)};
            out[at] = seen[i] ? consensus(out[at], value) : value;
            seen[i] = true;
        }
    }
    return out;
}

inline std::vector<StatementId> everything(const Adf& adf) {
    std::vector<StatementId> all;
    for (StatementId s : adf.statements()) all.push_back(s);
    return all;
}

inline std::vector<Interpretation> complete_over(const Adf& adf, const std::vector<StatementId>& members) {
    std::vector<Interpretation> out;
    for_each_three_valued(members.size(), [&](const Interpretation& v) {
        if (global_gamma(adf, members, v) == v) out.push_back(v);
    });
    return out;
}

/// The complete interpretation below all others in <=_i.
inline Interpretation least_of(const std::vector<Interpretation>& complete) {
    for (const auto& c : complete) {
        if (std::ranges::all_of(complete, [&](const Interpretation& o) { return leq_info(c, o); })) return c;
    }
    throw InternalError("complete interpretations have no least element");
}

} // namespace detail

/// Evaluates the defining predicate of `kind` on every candidate interpretation.
/// Throws DomainError when the ADF has more than `cap` statements.
inline ResultSet brute_force(const Adf& adf, Semantics kind, std::size_t cap = default_cap) {
    if (adf.size() > cap) {
        throw DomainError("brute-force oracle limited to " + std::to_string(cap) + " statements, got "
                          + std::to_string(adf.size()));
    }
    using namespace detail;
    const auto all = everything(adf);
    const std::size_t n = adf.size();
    std::vector<Interpretation> found;

    switch (kind) {
        case Semantics::Admissible:
            for_each_three_valued(n, [&](const Interpretation& v) {
                if (leq_info(v, global_gamma(adf, all, v))) found.push_back(v);
            });
            break;
        case Semantics::Complete:
            found = complete_over(adf, all);
            break;
        case Semantics::Grounded:
            found.push_back(least_of(complete_over(adf, all)));
            break;
        case Semantics::ConflictFree:
        case Semantics::Model:
        case Semantics::Stable:
            for (const Interpretation& w : completions(Interpretation(n))) {
                Acceptance accepted = [&](StatementId p) { return w[p] == Truth::T; };
                if (kind == Semantics::ConflictFree) {
                    bool ok = std::ranges::all_of(all, [&](StatementId s) {
                        return w[s] != Truth::T || condition_under(adf, s, accepted) == Truth::T;
                    });
                    if (!ok) continue;
                    std::vector<Truth> set(n, Truth::U);
                    for (StatementId s : all) if (w[s] == Truth::T) set[s.index] = Truth::T;
                    found.emplace_back(std::move(set));
                    continue;
                }
                if (global_gamma(adf, all, w) != w) continue;
                if (kind == Semantics::Stable) {
                    // Grounded interpretation of the reduct: statements of E_v only,
                    // false statements substituted by f.
                    const auto extension = associated_extension(w);
                    const auto g = least_of(complete_over(adf, extension));
                    if (!std::ranges::all_of(g.values(), [](Truth t) { return t == Truth::T; })) continue;
                }
                found.push_back(w);
            }
            break;
    }
    return make_result(kind, std::move(found));
}

} // namespace adfkit::oracle
