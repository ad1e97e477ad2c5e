#include <catch2/catch_amalgamated.hpp>

#include "aspd/io.hpp"

using namespace aspd;

TEST_CASE("domain round trip") {
    Domain d = black_domain(4);
    REQUIRE(domain_from_string(domain_to_string(d)) == d);
    REQUIRE(domain_to_string(domain_of({"123", "213"})) == "n=3\n1 2 3\n2 1 3\n");
}

TEST_CASE("domain parse diagnostics") {
    auto fails_at = [](const std::string& text, int line) {
        try {
            domain_from_string(text);
        } catch (const io_error& e) {
            REQUIRE(e.line() == line);
            return;
        }
        FAIL("expected io_error for: " << text);
    };
    fails_at("", 1);
    fails_at("m=3\n1 2 3\n", 1);
    fails_at("n=x\n", 1);
    fails_at("n=3\n1 2 3\n1 2 2\n", 3);  // non-permutation
    fails_at("n=3\n1 2 3\n1 2 3\n", 3);  // duplicate
    fails_at("n=3\n1 2 3\n1 2\n", 3);    // wrong length
    fails_at("n=3\n1 2 z\n", 2);         // unparsable
    fails_at("n=3\n", 1);                // no orders
}

TEST_CASE("condition round trip") {
    ConditionAssignment ca = uniform_assignment(4, Sym::N23);
    std::string text = conditions_to_string(ca);
    REQUIRE(text ==
            "n=4\n"
            "1 2 3 : 2N3\n"
            "1 2 4 : 2N3\n"
            "1 3 4 : 2N3\n"
            "2 3 4 : 2N3\n");
    ConditionAssignment back = conditions_from_string(text);
    REQUIRE(back.n == 4);
    REQUIRE(back.symbols == ca.symbols);

    // empty symbols survive the trip
    ConditionAssignment partial = empty_assignment(4);
    partial.symbols[2] = Sym::N11;
    REQUIRE(conditions_from_string(conditions_to_string(partial)).symbols == partial.symbols);
}

TEST_CASE("condition parse diagnostics") {
    auto fails_at = [](const std::string& text, int line) {
        try {
            conditions_from_string(text);
        } catch (const io_error& e) {
            REQUIRE(e.line() == line);
            return;
        }
        FAIL("expected io_error for: " << text);
    };
    fails_at("n=3\n", 1);                     // missing triple
    fails_at("n=3\n1 2 4 : 2N3\n", 2);        // wrong triple
    fails_at("n=3\n1 2 3 : 9N9\n", 2);        // unknown symbol
    fails_at("n=3\n1 2 3 2N3\n", 2);          // missing colon
    fails_at("n=3\n1 2 3 : 2N3\n1 2 3 : 2N3\n", 3);  // too many lines
    fails_at("n=4\n1 2 3 : 2N3\n", 2);        // wrong count (4 expected)
}

TEST_CASE("domain json") {
    nlohmann::json j = to_json(domain_of({"123", "213"}));
    REQUIRE(j["n"] == 3);
    REQUIRE(j["size"] == 2);
    REQUIRE(j["orders"][0] == std::vector<Alt>{1, 2, 3});
}

TEST_CASE("richness report json") {
    Domain d = black_domain(4);
    nlohmann::json j = to_json(richness_report(d), d);
    REQUIRE(j["richness"] == 3);
    REQUIRE(j["terminals"] == std::vector<Alt>{1, 4});
    REQUIRE(j["skewed_pivot"].is_null());
    REQUIRE(j["ranges"]["2"] == std::vector<int>{1, 2, 3});
}

TEST_CASE("verdict json") {
    IIAVerdict ok;
    ok.max_voters = 5;
    REQUIRE(to_json(ok)["outcome"] == "holds-at-scale");

    IIAVerdict v = check_nash_iia(VoteRule::Plurality, black_domain(3), 7);
    nlohmann::json j = to_json(v);
    REQUIRE(j["outcome"] == "violated");
    REQUIRE(j["counterexample"].contains("profile"));
    REQUIRE(j["counterexample"].contains("deleted"));
}
