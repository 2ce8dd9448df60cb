#pragma once

#include "adfkit/error.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace adfkit {

/// Ground term of the fact language: an identifier or integer, optionally applied to arguments.
struct Term {
    std::string functor;
    std::vector<Term> args;
    bool integer = false;
    std::size_t line = 0;
    std::size_t column = 0;

    bool is_atomic() const noexcept { return args.empty(); }
    bool is_identifier() const noexcept { return !integer && args.empty(); }
};

/// Canonical text of a term; used to compare group terms.
inline std::string to_string(const Term& t) {
    std::string out = t.functor;
    if (!t.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i) out += ',';
            out += to_string(t.args[i]);
        }
        out += ')';
    }
    return out;
}

/// "name/arity", for diagnostics.
inline std::string signature(const Term& t) {
    return t.functor + "/" + std::to_string(t.args.size());
}

namespace detail {

class FactReader {
public:
    explicit FactReader(std::string_view text) : text_(text) {}

    std::vector<Term> read_all() {
        std::vector<Term> facts;
        skip_blank();
        while (!at_end()) {
            Term fact = read_term();
            if (fact.integer) fail_at(fact.line, fact.column, "a fact cannot be an integer");
            expect('.', "'.' after fact");
            facts.push_back(std::move(fact));
            skip_blank();
        }
        return facts;
    }

private:
    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] static void fail_at(std::size_t line, std::size_t col, const std::string& msg) {
        throw ParseError(line, col, msg);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(line_, col_, msg); }

    void skip_blank() {
        while (!at_end()) {
            char c = peek();
            if (c == '%') {
                while (!at_end() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
                advance();
            } else {
                return;
            }
        }
    }

    void expect(char c, const char* what) {
        skip_blank();
        if (peek() != c) {
            fail(std::string("expected ") + what + (at_end() ? ", found end of input" : ", found '" + std::string(1, peek()) + "'"));
        }
        advance();
    }

    Term read_term() {
        skip_blank();
        if (at_end()) fail("unexpected end of input, expected a term");
        Term t;
        t.line = line_;
        t.column = col_;
        char c = peek();
        if (c >= 'a' && c <= 'z') {
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                t.functor += peek();
                advance();
            }
        } else if (c >= '0' && c <= '9') {
            t.integer = true;
            while (!at_end() && peek() >= '0' && peek() <= '9') {
                t.functor += peek();
                advance();
            }
            return t;
        } else if ((c >= 'A' && c <= 'Z') || c == '_') {
            fail("variables are not allowed in ground facts");
        } else if (static_cast<unsigned char>(c) > 126 || (static_cast<unsigned char>(c) < 32 && c != '\t')) {
            fail("non-printable or non-ASCII character");
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        // Arguments must follow the functor directly, as in "f(x)".
        if (peek() == '(') {
            advance();
            t.args.push_back(read_term());
            skip_blank();
            while (peek() == ',') {
                advance();
                t.args.push_back(read_term());
                skip_blank();
            }
            expect(')', "',' or ')'");
        }
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

} // namespace detail

/// Reads a sequence of ground facts "p(t1,...,tn)." with '%' line comments.
inline std::vector<Term> read_facts(std::string_view text) {
    return detail::FactReader(text).read_all();
}

} // namespace adfkit
