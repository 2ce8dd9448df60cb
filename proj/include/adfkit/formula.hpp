#pragma once

#include <algorithm>
#include <concepts>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adfkit {

/// Propositional formula over statement names.
struct Formula {
    enum class Kind { Atom, True, False, Neg, And, Or, Imp, Iff };

    Kind kind = Kind::True;
    std::string atom;               // Atom only
    std::vector<Formula> children;  // 1 for Neg, 2 for binary connectives

    static Formula make_atom(std::string name) { return {Kind::Atom, std::move(name), {}}; }
    static Formula verum() { return {Kind::True, {}, {}}; }
    static Formula falsum() { return {Kind::False, {}, {}}; }
    static Formula neg(Formula f) { return {Kind::Neg, {}, {std::move(f)}}; }
    static Formula binary(Kind k, Formula l, Formula r) { return {k, {}, {std::move(l), std::move(r)}}; }

    friend bool operator==(const Formula&, const Formula&) = default;
};

/// Classical evaluation; `accepted(name)` decides atoms.
template <std::predicate<const std::string&> Pred>
bool eval_formula(const Formula& f, Pred&& accepted) {
    switch (f.kind) {
        case Formula::Kind::Atom:  return accepted(f.atom);
        case Formula::Kind::True:  return true;
        case Formula::Kind::False: return false;
        case Formula::Kind::Neg:   return !eval_formula(f.children[0], accepted);
        case Formula::Kind::And:   return eval_formula(f.children[0], accepted) && eval_formula(f.children[1], accepted);
        case Formula::Kind::Or:    return eval_formula(f.children[0], accepted) || eval_formula(f.children[1], accepted);
        case Formula::Kind::Imp:   return !eval_formula(f.children[0], accepted) || eval_formula(f.children[1], accepted);
        case Formula::Kind::Iff:   return eval_formula(f.children[0], accepted) == eval_formula(f.children[1], accepted);
    }
    return false;
}

inline bool eval_formula(const Formula& f, const std::set<std::string>& accepted) {
    return eval_formula(f, [&](const std::string& a) { return accepted.contains(a); });
}

/// Distinct atom names in order of first occurrence (left to right).
inline std::vector<std::string> atoms_of(const Formula& f) {
    std::vector<std::string> out;
    auto walk = [&](auto&& self, const Formula& g) -> void {
        if (g.kind == Formula::Kind::Atom) {
            if (std::ranges::find(out, g.atom) == out.end()) out.push_back(g.atom);
            return;
        }
        for (const auto& c : g.children) self(self, c);
    };
    walk(walk, f);
    return out;
}

/// Term syntax of the formula dialect, e.g. "and(a,neg(b))".
inline std::string to_term(const Formula& f) {
    auto bin = [&](std::string_view op) {
        return std::string(op) + "(" + to_term(f.children[0]) + "," + to_term(f.children[1]) + ")";
    };
    switch (f.kind) {
        case Formula::Kind::Atom:  return f.atom;
        case Formula::Kind::True:  return "c(v)";
        case Formula::Kind::False: return "c(f)";
        case Formula::Kind::Neg:   return "neg(" + to_term(f.children[0]) + ")";
        case Formula::Kind::And:   return bin("and");
        case Formula::Kind::Or:    return bin("or");
        case Formula::Kind::Imp:   return bin("imp");
        case Formula::Kind::Iff:   return bin("iff");
    }
    return {};
}

} // namespace adfkit
