#pragma once

#include "adfkit/adf.hpp"
#include "adfkit/formula.hpp"
#include "adfkit/syntax.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace adfkit::test {

inline constexpr const char* example1 =
    "s(a). s(b). s(c). l(b,a). l(a,b). l(b,c).\n"
    "co(a). ci(a,1,b).  co(b). ci(b,1,a).  ci(c). co(c,1,b).\n";

inline constexpr const char* example3_formula =
    "statement(a). statement(b). statement(c). statement(d).\n"
    "ac(a,c(v)).\n"
    "ac(b, b).\n"
    "ac(c, and(a,b)).\n"
    "ac(d, neg(b)).\n";

inline constexpr const char* example3_functional =
    "s(a). s(b). s(c). s(d).\n"
    "l(a,c). l(b,b). l(b,c). l(b,d).\n"
    "ci(a).\n"
    "co(b). ci(b,1,b).\n"
    "co(c). co(c,1,a). co(c,2,b). ci(c,3,a). ci(c,3,b).\n"
    "ci(d). co(d,1,b).\n";

/// Interpretation from literal notation, e.g. "a b -c"; unmentioned statements are u.
inline Interpretation lits(const Adf& adf, const std::string& text) {
    Interpretation v(adf.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) break;
        std::size_t end = text.find(' ', pos);
        if (end == std::string::npos) end = text.size();
        std::string tok = text.substr(pos, end - pos);
        const bool neg = tok.front() == '-';
        auto s = adf.find(neg ? tok.substr(1) : tok);
        if (!s) throw std::invalid_argument("unknown statement " + tok);
        v[*s] = neg ? Truth::F : Truth::T;
        pos = end;
    }
    return v;
}

inline std::vector<Interpretation> lits_all(const Adf& adf, std::initializer_list<const char*> items) {
    std::vector<Interpretation> out;
    for (const char* s : items) out.push_back(lits(adf, s));
    std::ranges::sort(out);
    return out;
}

inline std::string name_of(std::size_t i) {
    std::string s(1, static_cast<char>('a' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    return s;
}

/// Random ADF: each possible link present with probability `density`, capped at
/// `max_parents_per` parents; table entries uniformly random; parent order shuffled.
inline Adf random_adf(std::mt19937& rng, std::size_t n, double density, std::size_t max_parents_per = 6) {
    AdfDraft d;
    std::bernoulli_distribution link(density), coin(0.5);
    for (std::size_t i = 0; i < n; ++i) d.names.push_back(name_of(i));
    for (std::uint32_t s = 0; s < n; ++s) {
        std::vector<StatementId> parents;
        for (std::uint32_t p = 0; p < n; ++p) {
            if (link(rng)) parents.push_back(StatementId{p});
        }
        std::ranges::shuffle(parents, rng);
        if (parents.size() > max_parents_per) parents.resize(max_parents_per);
        std::vector<Truth> entries(std::size_t{1} << parents.size());
        for (auto& e : entries) e = from_bool(coin(rng));
        for (StatementId p : parents) d.links.push_back({p, StatementId{s}});
        d.conditions.emplace_back(std::move(parents), std::move(entries));
    }
    return validate_adf(std::move(d));
}

inline Interpretation random_interpretation(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<Truth> v(n);
    for (auto& t : v) t = static_cast<Truth>(pick(rng));
    return Interpretation(std::move(v));
}

/// Random w with v <=_i w: each u position is kept or decided at random.
inline Interpretation random_refinement(std::mt19937& rng, const Interpretation& v) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<Truth> w(v.values().begin(), v.values().end());
    for (auto& t : w) {
        if (t == Truth::U) t = static_cast<Truth>(pick(rng));
    }
    return Interpretation(std::move(w));
}

inline Formula random_formula(std::mt19937& rng, const std::vector<std::string>& names, int depth) {
    std::uniform_int_distribution<int> leaf(0, static_cast<int>(names.size()) + 1);
    std::uniform_int_distribution<int> op(0, 5);
    if (depth == 0 || op(rng) == 0) {
        int k = leaf(rng);
        if (k == static_cast<int>(names.size())) return Formula::verum();
        if (k == static_cast<int>(names.size()) + 1) return Formula::falsum();
        return Formula::make_atom(names[static_cast<std::size_t>(k)]);
    }
    switch (op(rng)) {
        case 1: return Formula::neg(random_formula(rng, names, depth - 1));
        case 2: return Formula::binary(Formula::Kind::And, random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1));
        case 3: return Formula::binary(Formula::Kind::Or, random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1));
        case 4: return Formula::binary(Formula::Kind::Imp, random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1));
        default: return Formula::binary(Formula::Kind::Iff, random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1));
    }
}

inline FormulaAdf random_formula_adf(std::mt19937& rng, std::size_t n, int depth = 3) {
    FormulaAdf fa;
    for (std::size_t i = 0; i < n; ++i) fa.names.push_back(name_of(i));
    for (std::size_t i = 0; i < n; ++i) fa.conditions.push_back(random_formula(rng, fa.names, depth));
    return fa;
}

inline std::string formula_source(const FormulaAdf& fa) {
    std::string out;
    for (const auto& n : fa.names) out += "statement(" + n + ").\n";
    for (std::size_t i = 0; i < fa.names.size(); ++i) out += "ac(" + fa.names[i] + ", " + to_term(fa.conditions[i]) + ").\n";
    return out;
}

} // namespace adfkit::test
