#pragma once

#include "adfkit/adf.hpp"
#include "adfkit/formula.hpp"
#include "adfkit/syntax.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace adfkit {

/// Tabulates each formula over the subsets of its atoms. Links follow atom occurrence.
inline Adf formula_to_table(const FormulaAdf& fa) {
    AdfDraft draft;
    draft.names = fa.names;
    std::unordered_map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < fa.names.size(); ++i) index.emplace(fa.names[i], i);

    for (std::uint32_t i = 0; i < fa.names.size(); ++i) {
        const Formula& phi = fa.conditions[i];
        const auto atoms = atoms_of(phi);
        if (atoms.size() > max_parents) {
            throw ValidationError("statement '" + fa.names[i] + "' has " + std::to_string(atoms.size())
                                  + " parents; at most " + std::to_string(max_parents) + " are supported");
        }
        std::vector<StatementId> parents;
        for (const auto& a : atoms) {
            auto it = index.find(a);
            if (it == index.end()) throw ValidationError("undeclared statement '" + a + "' in condition of '" + fa.names[i] + "'");
            parents.push_back(StatementId{it->second});
            draft.links.push_back({StatementId{it->second}, StatementId{i}});
        }
        std::vector<Truth> entries(std::size_t{1} << atoms.size());
        for (std::uint32_t m = 0; m < entries.size(); ++m) {
            entries[m] = from_bool(eval_formula(phi, [&](const std::string& name) {
                for (std::size_t b = 0; b < atoms.size(); ++b) {
                    if (atoms[b] == name) return (m >> b & 1u) != 0;
                }
                return false;
            }));
        }
        draft.conditions.emplace_back(std::move(parents), std::move(entries));
    }
    return validate_adf(std::move(draft));
}

/// Compiles a prioritised ADF: C_s(M) = t iff every attacker a in M with not s > a is
/// countered by some supporter b in M with b > a.
inline Adf padf_to_adf(const Padf& p) {
    const std::size_t n = p.size();
    AdfDraft draft;
    draft.names.assign(p.names().begin(), p.names().end());
    std::vector<std::vector<StatementId>> parents(n);
    for (const auto& e : p.edges()) {
        auto& ps = parents[e.to.index];
        if (std::ranges::find(ps, e.from) == ps.end()) {
            ps.push_back(e.from);
            draft.links.push_back({e.from, e.to});
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        const StatementId s{i};
        const auto& ps = parents[i];
        if (ps.size() > max_parents) {
            throw ValidationError("statement '" + draft.names[i] + "' has " + std::to_string(ps.size())
                                  + " parents; at most " + std::to_string(max_parents) + " are supported");
        }
        // Per parent position: effective attacker bit, and which positions may counter it.
        std::vector<bool> attacker(ps.size());
        std::vector<std::uint32_t> counters(ps.size(), 0);
        for (std::size_t x = 0; x < ps.size(); ++x) {
            attacker[x] = p.attacks(ps[x], s) && !p.preferred(s, ps[x]);
            for (std::size_t y = 0; y < ps.size(); ++y) {
                if (p.supports(ps[y], s) && p.preferred(ps[y], ps[x])) counters[x] |= std::uint32_t{1} << y;
            }
        }
        std::vector<Truth> entries(std::size_t{1} << ps.size());
        for (std::uint32_t m = 0; m < entries.size(); ++m) {
            bool ok = true;
            for (std::size_t x = 0; x < ps.size() && ok; ++x) {
                if ((m >> x & 1u) && attacker[x] && (m & counters[x]) == 0) ok = false;
            }
            entries[m] = from_bool(ok);
        }
        draft.conditions.emplace_back(ps, std::move(entries));
    }
    return validate_adf(std::move(draft));
}

/// The reduct D^v of a two-valued v: restricted to E_v, with false parents fixed as not accepted.
/// Statement order and names carry over; ids are renumbered densely.
inline Adf reduct(const Adf& adf, const Interpretation& v) {
    if (v.size() != adf.size()) throw DomainError("interpretation does not match the ADF");
    if (!v.is_two_valued()) throw DomainError("reduct requires a two-valued interpretation");

    std::vector<std::optional<StatementId>> renumber(adf.size());
    AdfDraft draft;
    for (StatementId s : adf.statements()) {
        if (v[s] == Truth::T) {
            renumber[s.index] = StatementId{static_cast<std::uint32_t>(draft.names.size())};
            draft.names.push_back(adf.name(s));
        }
    }
    for (StatementId s : adf.statements()) {
        if (!renumber[s.index]) continue;
        const auto& table = adf.condition(s);
        std::vector<StatementId> kept;
        std::vector<std::uint32_t> old_bit;
        for (std::size_t b = 0; b < table.arity(); ++b) {
            StatementId p = table.parents()[b];
            if (renumber[p.index]) {
                kept.push_back(*renumber[p.index]);
                old_bit.push_back(std::uint32_t{1} << b);
                draft.links.push_back({*renumber[p.index], *renumber[s.index]});
            }
        }
        std::vector<Truth> entries(std::size_t{1} << kept.size());
        for (std::uint32_t m = 0; m < entries.size(); ++m) {
            std::uint32_t original = 0;
            for (std::size_t b = 0; b < kept.size(); ++b) {
                if (m >> b & 1u) original |= old_bit[b];
            }
            entries[m] = table.at(original);
        }
        draft.conditions.emplace_back(std::move(kept), std::move(entries));
    }
    return validate_adf(std::move(draft));
}

} // namespace adfkit
