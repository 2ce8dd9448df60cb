#pragma once

#include "adfkit/adf.hpp"
#include "adfkit/gamma.hpp"
#include "adfkit/semantics.hpp"
#include "adfkit/syntax.hpp"
#include "adfkit/transform.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace adfkit::cli {

inline constexpr const char* version = "adfkit 0.1.0";

enum class Transform { None, Pform, Prio };
enum class OutputMode { Text, Json };

enum ExitCode : int { ok = 0, usage_error = 1, input_error = 2, internal_error = 3 };

struct RunConfig {
    std::optional<std::string> instance;  // nullopt or "-" reads standard input
    std::vector<Semantics> semantics;     // in the order they are printed
    Transform transform = Transform::None;
    OutputMode output = OutputMode::Text;
    bool trace = false;                   // grounded iteration steps on the diagnostic stream
};

/// Literal-set notation: names sorted, t bare, f with '-', u omitted.
inline std::string format_interpretation(const Adf& adf, const Interpretation& v) {
    std::vector<StatementId> order(adf.statements().begin(), adf.statements().end());
    std::ranges::sort(order, {}, [&](StatementId s) -> const std::string& { return adf.name(s); });
    std::string line;
    for (StatementId s : order) {
        if (v[s] == Truth::U) continue;
        if (!line.empty()) line += ' ';
        if (v[s] == Truth::F) line += '-';
        line += adf.name(s);
    }
    return line;
}

/// Parses an instance in whatever dialect it is written in and compiles it to tables.
/// A transform other than None demands the matching dialect.
inline Adf load_instance(std::string_view text, Transform transform) {
    const Dialect found = detect_dialect(read_facts(text));
    const std::optional<Dialect> wanted = transform == Transform::Pform ? std::optional{Dialect::Formula}
                                        : transform == Transform::Prio  ? std::optional{Dialect::Prioritised}
                                                                        : std::nullopt;
    if (wanted && *wanted != found) {
        throw ValidationError(std::string("expected a ") + to_string(*wanted) + " instance, but the input is a "
                              + to_string(found) + " instance");
    }
    switch (found) {
        case Dialect::Formula:     return formula_to_table(parse_formula_adf(text));
        case Dialect::Prioritised: return padf_to_adf(parse_padf(text));
        default:                   return parse_functional(text);
    }
}

inline void print_result(std::ostream& out, const Adf& adf, const ResultSet& r) {
    out << '[' << to_string(r.semantics) << "] " << r.size() << '\n';
    for (const auto& v : r.interpretations) out << format_interpretation(adf, v) << '\n';
}

inline nlohmann::json result_json(const Adf& adf, const ResultSet& r) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& v : r.interpretations) {
        nlohmann::json lits = nlohmann::json::array();
        std::istringstream words(format_interpretation(adf, v));
        for (std::string w; words >> w;) lits.push_back(w);
        items.push_back(std::move(lits));
    }
    return {{"semantics", std::string(to_string(r.semantics))}, {"count", r.size()}, {"interpretations", items}};
}

inline int run(const RunConfig& cfg, std::istream& stdin_stream, std::ostream& out, std::ostream& err) {
    std::string text;
    if (!cfg.instance || *cfg.instance == "-") {
        text.assign(std::istreambuf_iterator<char>(stdin_stream), {});
    } else {
        std::ifstream file(*cfg.instance, std::ios::binary);
        if (!file) {
            err << "error: cannot read '" << *cfg.instance << "'\n";
            return input_error;
        }
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    const std::string source = cfg.instance && *cfg.instance != "-" ? *cfg.instance : "<stdin>";

    try {
        const Adf adf = load_instance(text, cfg.transform);
        if (cfg.semantics.empty()) {
            out << serialize_functional(adf);
            return ok;
        }
        nlohmann::json doc = nlohmann::json::array();
        for (Semantics k : cfg.semantics) {
            if (k == Semantics::Grounded && cfg.trace) {
                const auto fp = least_fixpoint_run(adf);
                for (std::size_t i = 0; i < fp.trace.size(); ++i) {
                    err << "% step " << i << ": " << format_interpretation(adf, fp.trace[i]) << '\n';
                }
            }
            const ResultSet r = enumerate(adf, k);
            if (cfg.output == OutputMode::Json) {
                doc.push_back(result_json(adf, r));
            } else {
                print_result(out, adf, r);
            }
        }
        if (cfg.output == OutputMode::Json) out << doc.dump(2) << '\n';
        return ok;
    } catch (const ParseError& e) {
        err << source << ':' << e.what() << '\n';
        return input_error;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    } catch (const Error& e) {
        err << source << ": " << e.what() << '\n';
        return input_error;
    }
}

} // namespace adfkit::cli
