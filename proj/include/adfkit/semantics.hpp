#pragma once

#include "adfkit/adf.hpp"
#include "adfkit/gamma.hpp"
#include "adfkit/transform.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace adfkit {

enum class Semantics { ConflictFree, Admissible, Complete, Grounded, Model, Stable };

inline constexpr std::array all_semantics = {
    Semantics::ConflictFree, Semantics::Admissible, Semantics::Complete,
    Semantics::Grounded,     Semantics::Model,      Semantics::Stable,
};

inline constexpr std::string_view to_string(Semantics k) {
    switch (k) {
        case Semantics::ConflictFree: return "conflict-free";
        case Semantics::Admissible:   return "admissible";
        case Semantics::Complete:     return "complete";
        case Semantics::Grounded:     return "grounded";
        case Semantics::Model:        return "model";
        case Semantics::Stable:       return "stable";
    }
    return "?";
}

/// Interpretations selected by one semantics, sorted lexicographically (T < F < U) and
/// duplicate-free. Conflict-free sets M are stored as interpretations with exactly the
/// members of M mapped to t and everything else to u.
struct ResultSet {
    Semantics semantics = Semantics::Admissible;
    std::vector<Interpretation> interpretations;

    std::size_t size() const noexcept { return interpretations.size(); }

    friend bool operator==(const ResultSet&, const ResultSet&) = default;
};

inline ResultSet make_result(Semantics k, std::vector<Interpretation> found) {
    std::ranges::sort(found);
    auto dup = std::ranges::unique(found);
    found.erase(dup.begin(), dup.end());
    return {k, std::move(found)};
}

namespace detail {

/// Depth-first walk over assignments in statement order. After statement k is fixed,
/// every already-assigned statement among k and its children is re-checked against the
/// partial interpretation (unassigned statements read as u). A check is exact once the
/// statement and all its parents are assigned.
class Enumerator {
public:
    Enumerator(const Adf& adf, Semantics kind) : adf_(adf), kind_(kind), v_(adf.size()), ready_at_(adf.size()) {
        for (StatementId s : adf.statements()) {
            std::uint32_t r = s.index;
            for (StatementId p : adf.parents(s)) r = std::max(r, p.index);
            ready_at_[s.index] = r;
        }
        switch (kind) {
            case Semantics::Admissible:
            case Semantics::Complete:     domain_ = {Truth::T, Truth::F, Truth::U}; break;
            case Semantics::ConflictFree: domain_ = {Truth::T, Truth::U}; break;
            default:                      domain_ = {Truth::T, Truth::F}; break;
        }
    }

    std::vector<Interpretation> run() {
        found_.clear();
        descend(0);
        return std::move(found_);
    }

private:
    void descend(std::uint32_t k) {
        if (k == adf_.size()) {
            found_.push_back(v_);
            return;
        }
        const StatementId sk{k};
        for (Truth t : domain_) {
            v_[sk] = t;
            if (consistent(sk)) descend(k + 1);
        }
        v_[sk] = Truth::U;
    }

    bool consistent(StatementId k) const {
        if (!check(k, k)) return false;
        for (StatementId c : adf_.children(k)) {
            if (c.index < k.index && !check(c, k)) return false;
        }
        return true;
    }

    bool check(StatementId s, StatementId depth) const {
        const Truth val = v_[s];
        const bool ready = ready_at_[s.index] <= depth.index;
        if (kind_ == Semantics::ConflictFree) {
            if (val != Truth::T || !ready) return true;
            const auto& table = adf_.condition(s);
            std::uint32_t mask = 0;
            for (std::size_t b = 0; b < table.arity(); ++b) {
                if (v_[table.parents()[b]] == Truth::T) mask |= std::uint32_t{1} << b;
            }
            return table.at(mask) == Truth::T;
        }
        if (kind_ == Semantics::Admissible && val == Truth::U) return true;
        const Truth g = gamma_statement(adf_, v_, s);
        if (ready) return g == val;
        // Assigning more statements can only refine g.
        return !is_classical(g) || g == val;
    }

    const Adf& adf_;
    Semantics kind_;
    Interpretation v_;
    std::vector<std::uint32_t> ready_at_;
    std::vector<Truth> domain_;
    std::vector<Interpretation> found_;
};

inline bool is_stable_model(const Adf& adf, const Interpretation& model) {
    const Adf reduced = reduct(adf, model);
    const Interpretation g = least_fixpoint(reduced);
    return std::ranges::all_of(g.values(), [](Truth t) { return t == Truth::T; });
}

} // namespace detail

inline ResultSet enumerate_admissible(const Adf& adf) {
    return make_result(Semantics::Admissible, detail::Enumerator(adf, Semantics::Admissible).run());
}

inline ResultSet enumerate_complete(const Adf& adf) {
    return make_result(Semantics::Complete, detail::Enumerator(adf, Semantics::Complete).run());
}

inline ResultSet grounded(const Adf& adf) {
    return make_result(Semantics::Grounded, {least_fixpoint(adf)});
}

inline ResultSet enumerate_models(const Adf& adf) {
    return make_result(Semantics::Model, detail::Enumerator(adf, Semantics::Model).run());
}

/// Models whose associated extension equals the grounded extension of their reduct.
inline ResultSet enumerate_stable(const Adf& adf) {
    auto models = detail::Enumerator(adf, Semantics::Model).run();
    std::erase_if(models, [&](const Interpretation& m) { return !detail::is_stable_model(adf, m); });
    return make_result(Semantics::Stable, std::move(models));
}

/// Sets M with C_s(M intersected with par(s)) = t for every member s.
inline ResultSet enumerate_conflict_free(const Adf& adf) {
    return make_result(Semantics::ConflictFree, detail::Enumerator(adf, Semantics::ConflictFree).run());
}

inline ResultSet enumerate(const Adf& adf, Semantics kind) {
    switch (kind) {
        case Semantics::ConflictFree: return enumerate_conflict_free(adf);
        case Semantics::Admissible:   return enumerate_admissible(adf);
        case Semantics::Complete:     return enumerate_complete(adf);
        case Semantics::Grounded:     return grounded(adf);
        case Semantics::Model:        return enumerate_models(adf);
        case Semantics::Stable:       return enumerate_stable(adf);
    }
    return {};
}

} // namespace adfkit
