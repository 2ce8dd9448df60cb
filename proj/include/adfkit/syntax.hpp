#pragma once

#include "adfkit/adf.hpp"
#include "adfkit/facts.hpp"
#include "adfkit/formula.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace adfkit {

/// ADF whose acceptance conditions are propositional formulas.
struct FormulaAdf {
    std::vector<std::string> names;
    std::vector<Formula> conditions;  // parallel to names
};

/// Prioritised ADF: support links, attack links and a strict partial preference order.
class Padf {
public:
    enum class Polarity { Support, Attack };
    struct Edge {
        StatementId from;
        StatementId to;
        Polarity polarity;

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    std::span<const std::string> names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }

    /// All links in input order, duplicates removed.
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool supports(StatementId from, StatementId to) const { return has(from, to, Polarity::Support); }
    bool attacks(StatementId from, StatementId to) const { return has(from, to, Polarity::Attack); }

    /// a > b in the transitively closed order.
    bool preferred(StatementId a, StatementId b) const { return pref_[a.index * names_.size() + b.index]; }

    /// Builds the closure of `prefs` and rejects it unless it is irreflexive.
    static Padf make(std::vector<std::string> names, std::vector<Edge> edges,
                     const std::vector<std::pair<StatementId, StatementId>>& prefs) {
        Padf p;
        p.names_ = std::move(names);
        for (auto& e : edges) {
            if (std::ranges::find(p.edges_, e) == p.edges_.end()) p.edges_.push_back(e);
        }
        const std::size_t n = p.names_.size();
        p.pref_.assign(n * n, false);
        for (auto [a, b] : prefs) p.pref_[a.index * n + b.index] = true;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (p.pref_[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (p.pref_[k * n + j]) p.pref_[i * n + j] = true;
        return p;
    }

    /// First statement preferred to itself after closure, if any.
    std::optional<StatementId> cycle_witness() const {
        for (std::uint32_t i = 0; i < names_.size(); ++i) {
            if (preferred(StatementId{i}, StatementId{i})) return StatementId{i};
        }
        return std::nullopt;
    }

private:
    bool has(StatementId from, StatementId to, Polarity pol) const {
        return std::ranges::find(edges_, Edge{from, to, pol}) != edges_.end();
    }

    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<bool> pref_;
};

enum class Dialect { Functional, Formula, Prioritised };

inline const char* to_string(Dialect d) {
    switch (d) {
        case Dialect::Functional:  return "functional";
        case Dialect::Formula:     return "propositional formula";
        case Dialect::Prioritised: return "prioritised";
    }
    return "?";
}

/// ac/statement facts select the formula dialect, lp/lm/pref the prioritised one.
inline Dialect detect_dialect(const std::vector<Term>& facts) {
    bool formula = false, prio = false;
    for (const auto& f : facts) {
        const auto sig = signature(f);
        if (sig == "ac/2" || sig == "statement/1") formula = true;
        if (sig == "lp/2" || sig == "lm/2" || sig == "pref/2") prio = true;
    }
    if (formula) return Dialect::Formula;
    if (prio) return Dialect::Prioritised;
    return Dialect::Functional;
}

namespace detail {

[[noreturn]] inline void fail(const Term& at, const std::string& msg) {
    throw ParseError(at.line, at.column, msg);
}

inline const std::string& identifier_arg(const Term& fact, std::size_t i) {
    const Term& a = fact.args[i];
    if (!a.is_identifier()) fail(a, "argument " + std::to_string(i + 1) + " of " + signature(fact) + " must be a statement name");
    return a.functor;
}

/// Statement declarations in first-appearance order.
class Declarations {
public:
    void declare(const Term& fact, const std::string& name) {
        if (index_.emplace(name, static_cast<std::uint32_t>(names_.size())).second) {
            names_.push_back(name);
            where_.push_back(&fact);
        }
    }

    StatementId resolve(const Term& at) const {
        auto it = index_.find(at.functor);
        if (it == index_.end()) fail(at, "undeclared statement '" + at.functor + "'");
        return StatementId{it->second};
    }

    std::size_t size() const noexcept { return names_.size(); }
    const Term& declared_at(StatementId s) const { return *where_[s.index]; }
    std::vector<std::string>& names() noexcept { return names_; }

private:
    std::vector<std::string> names_;
    std::vector<const Term*> where_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

[[noreturn]] inline void unknown_predicate(const Term& fact, Dialect d) {
    fail(fact, "unknown predicate " + signature(fact) + " in " + to_string(d) + " instance");
}

} // namespace detail

/// Parses the functional dialect: s/1, l/2, ci/1, co/1, ci/3, co/3.
inline Adf parse_functional(std::string_view text) {
    using detail::fail;
    const auto facts = read_facts(text);
    detail::Declarations decl;
    std::vector<const Term*> link_facts, cond_facts;
    for (const auto& f : facts) {
        const auto sig = signature(f);
        if (sig == "s/1") {
            decl.declare(f, detail::identifier_arg(f, 0));
        } else if (sig == "l/2") {
            detail::identifier_arg(f, 0);
            detail::identifier_arg(f, 1);
            link_facts.push_back(&f);
        } else if (sig == "ci/1" || sig == "co/1" || sig == "ci/3" || sig == "co/3") {
            detail::identifier_arg(f, 0);
            if (f.args.size() == 3) detail::identifier_arg(f, 2);
            cond_facts.push_back(&f);
        } else {
            detail::unknown_predicate(f, Dialect::Functional);
        }
    }

    const std::size_t n = decl.size();
    AdfDraft draft;
    std::vector<std::vector<StatementId>> parents(n);
    for (const Term* f : link_facts) {
        StatementId from = decl.resolve(f->args[0]);
        StatementId to = decl.resolve(f->args[1]);
        if (std::ranges::find(parents[to.index], from) == parents[to.index].end()) {
            parents[to.index].push_back(from);
            draft.links.push_back({from, to});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (parents[i].size() > max_parents) {
            fail(decl.declared_at(StatementId{static_cast<std::uint32_t>(i)}),
                 "statement '" + decl.names()[i] + "' has " + std::to_string(parents[i].size())
                     + " parents; at most " + std::to_string(max_parents) + " are supported");
        }
    }

    struct Group {
        const Term* first;
        Truth value;
        std::uint32_t mask = 0;
    };
    std::vector<std::optional<Truth>> unary_value(n);
    std::vector<const Term*> unary_at(n, nullptr);
    // Group scope is (predicate, statement, group term).
    std::vector<std::map<std::pair<Truth, std::string>, Group>> groups(n);
    for (const Term* f : cond_facts) {
        StatementId s = decl.resolve(f->args[0]);
        const Truth value = f->functor == "ci" ? Truth::T : Truth::F;
        if (f->args.size() == 1) {
            if (unary_value[s.index]) {
                if (*unary_value[s.index] == value) fail(*f, "duplicate " + to_string(*f));
                fail(*f, "both ci(" + f->args[0].functor + ") and co(" + f->args[0].functor + ") given");
            }
            unary_value[s.index] = value;
            unary_at[s.index] = f;
            continue;
        }
        StatementId p = decl.resolve(f->args[2]);
        const auto& ps = parents[s.index];
        auto pos = std::ranges::find(ps, p);
        if (pos == ps.end()) {
            fail(f->args[2], "'" + f->args[2].functor + "' is not a parent of '" + f->args[0].functor + "'");
        }
        auto [it, fresh] = groups[s.index].try_emplace({value, to_string(f->args[1])}, Group{f, value});
        it->second.mask |= std::uint32_t{1} << (pos - ps.begin());
    }

    for (std::uint32_t i = 0; i < n; ++i) {
        const StatementId s{i};
        const std::string& name = decl.names()[i];
        if (!unary_value[i]) {
            fail(decl.declared_at(s), "acceptance condition of '" + name + "' is not total: neither ci(" + name
                                          + ") nor co(" + name + ") given for the empty parent set");
        }
        std::vector<std::optional<Truth>> entries(std::size_t{1} << parents[i].size());
        entries[0] = *unary_value[i];
        for (const auto& [key, g] : groups[i]) {
            if (entries[g.mask]) {
                fail(*g.first, "ambiguous acceptance condition: parent subset of group '" + key.second
                                   + "' of '" + name + "' is already assigned");
            }
            entries[g.mask] = g.value;
        }
        std::vector<Truth> table;
        table.reserve(entries.size());
        for (std::size_t m = 0; m < entries.size(); ++m) {
            if (!entries[m]) {
                std::string subset;
                for (std::size_t b = 0; b < parents[i].size(); ++b) {
                    if (m & (std::size_t{1} << b)) {
                        subset += (subset.empty() ? "" : ",") + decl.names()[parents[i][b].index];
                    }
                }
                fail(decl.declared_at(s), "acceptance condition of '" + name + "' is not total: no ci/co group for {"
                                              + subset + "}");
            }
            table.push_back(*entries[m]);
        }
        draft.conditions.emplace_back(parents[i], std::move(table));
    }
    draft.names = std::move(decl.names());
    return validate_adf(std::move(draft));
}

namespace detail {

inline Formula to_formula(const Term& t, const Declarations& decl) {
    if (t.integer) fail(t, "integer '" + t.functor + "' is not a formula");
    const std::string& op = t.functor;
    const std::size_t arity = t.args.size();
    if (arity == 0) {
        decl.resolve(t);
        return Formula::make_atom(op);
    }
    auto expect_arity = [&](std::size_t k) {
        if (arity != k) {
            fail(t, "operator '" + op + "' expects " + std::to_string(k) + " argument" + (k == 1 ? "" : "s")
                        + ", got " + std::to_string(arity));
        }
    };
    if (op == "c") {
        expect_arity(1);
        const Term& c = t.args[0];
        if (c.is_identifier() && c.functor == "v") return Formula::verum();
        if (c.is_identifier() && c.functor == "f") return Formula::falsum();
        fail(c, "unknown truth constant c(" + to_string(c) + "); expected c(v) or c(f)");
    }
    if (op == "neg") {
        expect_arity(1);
        return Formula::neg(to_formula(t.args[0], decl));
    }
    Formula::Kind kind;
    if (op == "and") kind = Formula::Kind::And;
    else if (op == "or") kind = Formula::Kind::Or;
    else if (op == "imp") kind = Formula::Kind::Imp;
    else if (op == "iff") kind = Formula::Kind::Iff;
    else fail(t, "unknown operator '" + op + "'");
    expect_arity(2);
    return Formula::binary(kind, to_formula(t.args[0], decl), to_formula(t.args[1], decl));
}

} // namespace detail

/// Parses the propositional-formula dialect: statement/1, ac/2.
inline FormulaAdf parse_formula_adf(std::string_view text) {
    using detail::fail;
    const auto facts = read_facts(text);
    detail::Declarations decl;
    std::vector<const Term*> acs;
    for (const auto& f : facts) {
        const auto sig = signature(f);
        if (sig == "statement/1") {
            decl.declare(f, detail::identifier_arg(f, 0));
        } else if (sig == "ac/2") {
            detail::identifier_arg(f, 0);
            acs.push_back(&f);
        } else {
            detail::unknown_predicate(f, Dialect::Formula);
        }
    }
    std::vector<std::optional<Formula>> conds(decl.size());
    for (const Term* f : acs) {
        StatementId s = decl.resolve(f->args[0]);
        if (conds[s.index]) fail(*f, "duplicate ac fact for '" + f->args[0].functor + "'");
        conds[s.index] = detail::to_formula(f->args[1], decl);
    }
    FormulaAdf out;
    for (std::uint32_t i = 0; i < decl.size(); ++i) {
        if (!conds[i]) fail(decl.declared_at(StatementId{i}), "missing ac fact for '" + decl.names()[i] + "'");
        out.conditions.push_back(std::move(*conds[i]));
    }
    out.names = std::move(decl.names());
    return out;
}

/// Parses the prioritised dialect: s/1, lp/2, lm/2, pref/2.
inline Padf parse_padf(std::string_view text) {
    using detail::fail;
    const auto facts = read_facts(text);
    detail::Declarations decl;
    std::vector<const Term*> rel;
    for (const auto& f : facts) {
        const auto sig = signature(f);
        if (sig == "s/1") {
            decl.declare(f, detail::identifier_arg(f, 0));
        } else if (sig == "lp/2" || sig == "lm/2" || sig == "pref/2") {
            detail::identifier_arg(f, 0);
            detail::identifier_arg(f, 1);
            rel.push_back(&f);
        } else {
            detail::unknown_predicate(f, Dialect::Prioritised);
        }
    }
    std::vector<Padf::Edge> edges;
    std::vector<std::pair<StatementId, StatementId>> prefs;
    std::vector<const Term*> pref_facts;
    for (const Term* f : rel) {
        StatementId a = decl.resolve(f->args[0]);
        StatementId b = decl.resolve(f->args[1]);
        if (f->functor == "pref") {
            prefs.emplace_back(a, b);
            pref_facts.push_back(f);
        } else {
            edges.push_back({a, b, f->functor == "lp" ? Padf::Polarity::Support : Padf::Polarity::Attack});
        }
    }
    Padf p = Padf::make(std::move(decl.names()), std::move(edges), prefs);
    if (p.cycle_witness()) {
        // Report the first fact that lies on a cycle.
        for (std::size_t i = 0; i < prefs.size(); ++i) {
            auto [a, b] = prefs[i];
            if (p.preferred(b, a)) {
                fail(*pref_facts[i], "preference cycle: " + to_string(*pref_facts[i])
                                         + " contradicts a strict partial order");
            }
        }
    }
    return p;
}

/// Emits the functional dialect. Group terms count from 1 per statement in subset-mask order.
inline std::string serialize_functional(const Adf& adf) {
    if (adf.empty()) return {};
    std::ostringstream out;
    bool first = true;
    for (StatementId s : adf.statements()) {
        out << (first ? "" : " ") << "s(" << adf.name(s) << ").";
        first = false;
    }
    out << '\n';
    // l facts grouped by target in parent order, so re-parsing keeps bit positions.
    first = true;
    for (StatementId s : adf.statements()) {
        for (StatementId p : adf.parents(s)) {
            out << (first ? "" : " ") << "l(" << adf.name(p) << "," << adf.name(s) << ").";
            first = false;
        }
    }
    if (!first) out << '\n';
    for (StatementId s : adf.statements()) {
        const auto& table = adf.condition(s);
        const std::string& name = adf.name(s);
        out << (table.at(0) == Truth::T ? "ci(" : "co(") << name << ").";
        for (std::uint32_t m = 1; m < table.entries().size(); ++m) {
            const char* pred = table.at(m) == Truth::T ? "ci(" : "co(";
            for (StatementId p : table.subset_of(m)) {
                out << ' ' << pred << name << ',' << m << ',' << adf.name(p) << ").";
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace adfkit
