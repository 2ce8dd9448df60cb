#pragma once

#include "adfkit/adf.hpp"

#include <cstdint>
#include <vector>

namespace adfkit {

/// Gamma_D(v)(s): consensus of C_s over all two-valued completions of v on par(s).
///
/// Only the undecided parents are enumerated; the scan stops once both truth values
/// have been seen.
inline Truth gamma_statement(const Adf& adf, const Interpretation& v, StatementId s) {
    const auto& table = adf.condition(s);
    const auto parents = table.parents();
    std::uint32_t accepted = 0;
    std::uint32_t open = 0;
    for (std::size_t b = 0; b < parents.size(); ++b) {
        switch (v[parents[b]]) {
            case Truth::T: accepted |= std::uint32_t{1} << b; break;
            case Truth::U: open |= std::uint32_t{1} << b; break;
            case Truth::F: break;
        }
    }
    const Truth first = table.at(accepted);
    if (open == 0) return first;
    // Walk the non-empty submasks of `open`.
    for (std::uint32_t sub = open; sub != 0; sub = (sub - 1) & open) {
        if (table.at(accepted | sub) != first) return Truth::U;
    }
    return first;
}

inline Interpretation gamma(const Adf& adf, const Interpretation& v) {
    if (v.size() != adf.size()) throw DomainError("interpretation does not match the ADF");
    Interpretation out(adf.size());
    for (StatementId s : adf.statements()) out[s] = gamma_statement(adf, v, s);
    return out;
}

struct FixpointRun {
    Interpretation result;
    /// trace[0] is all-U; trace[i] is the interpretation after i productive steps.
    std::vector<Interpretation> trace;

    std::size_t iterations() const noexcept { return trace.empty() ? 0 : trace.size() - 1; }
};

/// Iterates Gamma_D from all-U until nothing changes. Each productive step decides at
/// least one more statement, so at most |S| steps are taken.
inline FixpointRun least_fixpoint_run(const Adf& adf) {
    FixpointRun run;
    Interpretation v = Interpretation::all_unknown(adf);
    run.trace.push_back(v);
    for (;;) {
        Interpretation next = gamma(adf, v);
        if (next == v) break;
        if (!leq_info(v, next)) throw InternalError("Gamma_D step lost information");
        v = std::move(next);
        run.trace.push_back(v);
        if (run.iterations() > adf.size()) throw InternalError("no fixpoint within |S| operator applications");
    }
    run.result = std::move(v);
    return run;
}

/// The grounded interpretation.
inline Interpretation least_fixpoint(const Adf& adf) {
    return least_fixpoint_run(adf).result;
}

} // namespace adfkit
