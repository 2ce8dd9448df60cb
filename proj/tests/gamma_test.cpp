#include "adfkit/gamma.hpp"
#include "adfkit/oracle.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace adfkit;
using adfkit::test::lits;

TEST_CASE("gamma_statement on the paper examples", "[gamma]") {
    const Adf ex1 = parse_functional(test::example1);
    const Adf ex3 = parse_functional(test::example3_functional);
    CHECK(gamma_statement(ex1, Interpretation::all_unknown(ex1), *ex1.find("c")) == Truth::U);
    CHECK(gamma_statement(ex3, Interpretation::all_unknown(ex3), *ex3.find("a")) == Truth::T);
    CHECK(gamma_statement(ex3, lits(ex3, "a"), *ex3.find("c")) == Truth::U);
    CHECK(gamma_statement(ex3, lits(ex3, "a -b"), *ex3.find("c")) == Truth::F);
    CHECK(gamma_statement(ex3, lits(ex3, "-b"), *ex3.find("d")) == Truth::T);
}

TEST_CASE("gamma on two-valued input reads the table", "[gamma][property]") {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Adf adf = test::random_adf(rng, 1 + rng() % 6, 0.4);
        std::vector<Truth> vals(adf.size());
        for (auto& t : vals) t = from_bool(rng() % 2);
        const Interpretation v(vals);
        for (StatementId s : adf.statements()) {
            std::vector<StatementId> accepted;
            for (StatementId p : adf.parents(s)) if (v[p] == Truth::T) accepted.push_back(p);
            CHECK(gamma_statement(adf, v, s) == eval_condition(adf.condition(s), accepted));
        }
    }
}

TEST_CASE("gamma on the paper examples", "[gamma]") {
    const Adf ex1 = parse_functional(test::example1);
    const Adf ex3 = parse_functional(test::example3_functional);
    const auto bottom1 = Interpretation::all_unknown(ex1);
    CHECK(gamma(ex1, bottom1) == bottom1);
    CHECK(gamma(ex3, Interpretation::all_unknown(ex3)) == lits(ex3, "a"));
    const auto v = lits(ex1, "a b -c");
    CHECK(gamma(ex1, v) == v);
    CHECK_THROWS_AS(gamma(ex1, Interpretation(2)), DomainError);
}

TEST_CASE("least fixpoint", "[gamma]") {
    const Adf ex1 = parse_functional(test::example1);
    const Adf ex3 = parse_functional(test::example3_functional);
    CHECK(least_fixpoint(ex1) == Interpretation::all_unknown(ex1));
    CHECK(least_fixpoint(ex3) == lits(ex3, "a"));
    const auto run = least_fixpoint_run(parse_functional("s(a). ci(a)."));
    CHECK(run.result == Interpretation(1, Truth::T));
    CHECK(run.iterations() == 1);
    CHECK(run.trace.front() == Interpretation(1));
    CHECK(least_fixpoint(parse_functional("")).size() == 0);

    // A chain needs one step per statement.
    const Adf chain = parse_functional("s(a). s(b). s(c). l(a,b). l(b,c). ci(a). co(b). ci(b,1,a). ci(c). co(c,1,b).");
    const auto steps = least_fixpoint_run(chain);
    CHECK(steps.iterations() == 3);
    CHECK(steps.result == lits(chain, "a b -c"));
}

TEST_CASE("gamma is monotone in the information ordering", "[gamma][property]") {
    std::mt19937 rng(42);
    int pairs = 0;
    while (pairs < 600) {
        const Adf adf = test::random_adf(rng, 1 + rng() % 7, 0.35);
        for (int k = 0; k < 6; ++k, ++pairs) {
            const auto v1 = test::random_interpretation(rng, adf.size());
            const auto v2 = test::random_refinement(rng, v1);
            REQUIRE(leq_info(v1, v2));
            CHECK(leq_info(gamma(adf, v1), gamma(adf, v2)));
        }
    }
}

TEST_CASE("local gamma equals consensus over global extensions", "[gamma][property]") {
    std::mt19937 rng(8);
    for (int i = 0; i < 100; ++i) {
        const Adf adf = test::random_adf(rng, 1 + rng() % 8, 0.3);
        std::vector<StatementId> all(adf.statements().begin(), adf.statements().end());
        for (int k = 0; k < 5; ++k) {
            const auto v = test::random_interpretation(rng, adf.size());
            CHECK(gamma(adf, v) == oracle::detail::global_gamma(adf, all, v));
        }
    }
}

TEST_CASE("least fixpoint is a fixpoint reached within |S| steps", "[gamma][property]") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        const Adf adf = test::random_adf(rng, rng() % 10, 0.3);
        const auto run = least_fixpoint_run(adf);
        CHECK(gamma(adf, run.result) == run.result);
        CHECK(run.iterations() <= adf.size());
        for (std::size_t k = 1; k < run.trace.size(); ++k) CHECK(leq_info(run.trace[k - 1], run.trace[k]));
    }
}
