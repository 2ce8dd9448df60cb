#pragma once

#include "adfkit/error.hpp"
#include "adfkit/truth.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace adfkit {

/// Dense index of a statement within its ADF. Names live only at the I/O boundary.
struct StatementId {
    std::uint32_t index = 0;

    friend auto operator<=>(const StatementId&, const StatementId&) = default;
};

/// Largest supported parent count; a table then holds 2^20 entries.
inline constexpr std::size_t max_parents = 20;

/// Identifier tokens: [a-z][A-Za-z0-9_]*
inline bool is_identifier(std::string_view s) noexcept {
    if (s.empty() || s.front() < 'a' || s.front() > 'z') return false;
    return std::ranges::all_of(s.substr(1), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

/// Acceptance condition as an explicit truth table.
///
/// Bit i of a subset mask stands for parents()[i]; entries()[mask] is the value of the
/// condition when exactly the parents in mask are accepted.
class AcceptanceTable {
public:
    AcceptanceTable() : entries_{Truth::T} {}
    AcceptanceTable(std::vector<StatementId> parents, std::vector<Truth> entries)
        : parents_(std::move(parents)), entries_(std::move(entries)) {}

    std::span<const StatementId> parents() const noexcept { return parents_; }
    std::span<const Truth> entries() const noexcept { return entries_; }
    std::size_t arity() const noexcept { return parents_.size(); }

    Truth at(std::uint32_t mask) const noexcept { return entries_[mask]; }

    std::optional<std::size_t> position_of(StatementId p) const noexcept {
        auto it = std::ranges::find(parents_, p);
        if (it == parents_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - parents_.begin());
    }

    /// Encodes a set of accepted parents. Throws DomainError for non-parents.
    std::uint32_t mask_of(std::span<const StatementId> accepted) const {
        std::uint32_t mask = 0;
        for (StatementId p : accepted) {
            auto pos = position_of(p);
            if (!pos) throw DomainError("statement #" + std::to_string(p.index) + " is not a parent");
            mask |= std::uint32_t{1} << *pos;
        }
        return mask;
    }

    std::vector<StatementId> subset_of(std::uint32_t mask) const {
        std::vector<StatementId> out;
        for (std::size_t i = 0; i < parents_.size(); ++i) {
            if (mask & (std::uint32_t{1} << i)) out.push_back(parents_[i]);
        }
        return out;
    }

    friend bool operator==(const AcceptanceTable&, const AcceptanceTable&) = default;

private:
    std::vector<StatementId> parents_;
    std::vector<Truth> entries_;
};

/// C_s(R) for R a subset of the parents.
inline Truth eval_condition(const AcceptanceTable& table, std::span<const StatementId> accepted) {
    return table.at(table.mask_of(accepted));
}

/// (from, to): `from` is a parent of `to`.
struct Link {
    StatementId from;
    StatementId to;

    friend auto operator<=>(const Link&, const Link&) = default;
};

/// Unchecked ADF components, as assembled by a parser or transformation.
struct AdfDraft {
    std::vector<std::string> names;
    std::vector<Link> links;
    std::vector<AcceptanceTable> conditions;
};

class Adf;
Adf validate_adf(AdfDraft draft);

/// An abstract dialectical framework (S, L, C). Immutable once validated.
class Adf {
public:
    Adf() = default;

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    auto statements() const {
        return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(names_.size()))
             | std::views::transform([](std::uint32_t i) { return StatementId{i}; });
    }

    const std::string& name(StatementId s) const { return names_[s.index]; }
    std::span<const std::string> names() const noexcept { return names_; }

    std::optional<StatementId> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return StatementId{it->second};
    }

    /// Sorted, duplicate-free.
    std::span<const Link> links() const noexcept { return links_; }

    const AcceptanceTable& condition(StatementId s) const { return conditions_[s.index]; }
    std::span<const StatementId> parents(StatementId s) const { return conditions_[s.index].parents(); }
    std::span<const StatementId> children(StatementId s) const { return children_[s.index]; }

    friend bool operator==(const Adf& a, const Adf& b) {
        return a.names_ == b.names_ && a.links_ == b.links_ && a.conditions_ == b.conditions_;
    }

private:
    friend Adf validate_adf(AdfDraft draft);

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<Link> links_;
    std::vector<AcceptanceTable> conditions_;
    std::vector<std::vector<StatementId>> children_;
};

/// Checks link/parent consistency and table totality, then freezes the ADF.
inline Adf validate_adf(AdfDraft draft) {
    const std::size_t n = draft.names.size();
    Adf adf;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& nm = draft.names[i];
        if (!is_identifier(nm)) throw ValidationError("invalid statement name '" + nm + "'");
        if (!adf.index_.emplace(nm, static_cast<std::uint32_t>(i)).second) {
            throw ValidationError("duplicate statement '" + nm + "'");
        }
    }
    if (draft.conditions.size() != n) {
        throw ValidationError("expected " + std::to_string(n) + " acceptance conditions, got "
                              + std::to_string(draft.conditions.size()));
    }
    auto label = [&](StatementId s) {
        return s.index < n ? "'" + draft.names[s.index] + "'" : "#" + std::to_string(s.index);
    };
    for (const Link& l : draft.links) {
        if (l.from.index >= n || l.to.index >= n) {
            throw ValidationError("link (" + label(l.from) + ", " + label(l.to) + ") references an undeclared statement");
        }
    }
    std::ranges::sort(draft.links);
    auto dup = std::ranges::unique(draft.links);
    draft.links.erase(dup.begin(), dup.end());

    std::vector<std::vector<StatementId>> incoming(n);
    for (const Link& l : draft.links) incoming[l.to.index].push_back(l.from);

    for (std::size_t i = 0; i < n; ++i) {
        const StatementId s{static_cast<std::uint32_t>(i)};
        const auto& table = draft.conditions[i];
        if (table.arity() > max_parents) {
            throw ValidationError("statement " + label(s) + " has " + std::to_string(table.arity())
                                  + " parents; at most " + std::to_string(max_parents) + " are supported");
        }
        std::vector<StatementId> declared(table.parents().begin(), table.parents().end());
        std::ranges::sort(declared);
        if (std::ranges::adjacent_find(declared) != declared.end()) {
            throw ValidationError("statement " + label(s) + " lists a parent twice");
        }
        if (declared != incoming[i]) {
            throw ValidationError("parents of statement " + label(s) + " disagree with its incoming links");
        }
        if (table.entries().size() != (std::size_t{1} << table.arity())) {
            throw ValidationError("acceptance condition of " + label(s) + " is not total: "
                                  + std::to_string(table.entries().size()) + " of "
                                  + std::to_string(std::size_t{1} << table.arity()) + " subsets defined");
        }
        if (std::ranges::find(table.entries(), Truth::U) != table.entries().end()) {
            throw ValidationError("acceptance condition of " + label(s) + " maps a subset to u");
        }
    }

    adf.children_.resize(n);
    for (const Link& l : draft.links) adf.children_[l.from.index].push_back(l.to);
    adf.names_ = std::move(draft.names);
    adf.links_ = std::move(draft.links);
    adf.conditions_ = std::move(draft.conditions);
    return adf;
}

/// Total three-valued assignment, indexed by statement.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::size_t n, Truth fill = Truth::U) : values_(n, fill) {}
    explicit Interpretation(std::vector<Truth> values) : values_(std::move(values)) {}

    static Interpretation all_unknown(const Adf& adf) { return Interpretation(adf.size()); }

    std::size_t size() const noexcept { return values_.size(); }
    Truth operator[](StatementId s) const { return values_[s.index]; }
    Truth& operator[](StatementId s) { return values_[s.index]; }
    std::span<const Truth> values() const noexcept { return values_; }

    bool is_two_valued() const noexcept { return std::ranges::all_of(values_, is_classical); }

    // Lexicographic over the value vector with T < F < U.
    friend auto operator<=>(const Interpretation&, const Interpretation&) = default;

private:
    std::vector<Truth> values_;
};

/// Pointwise information ordering. Throws DomainError on size mismatch.
inline bool leq_info(const Interpretation& a, const Interpretation& b) {
    if (a.size() != b.size()) throw DomainError("interpretations range over different statement sets");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!leq_info(a.values()[i], b.values()[i])) return false;
    }
    return true;
}

/// E_v: statements mapped to t.
inline std::vector<StatementId> associated_extension(const Interpretation& v) {
    std::vector<StatementId> out;
    for (std::uint32_t i = 0; i < v.size(); ++i) {
        if (v.values()[i] == Truth::T) out.push_back(StatementId{i});
    }
    return out;
}

} // namespace adfkit
