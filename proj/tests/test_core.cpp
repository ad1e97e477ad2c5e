#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "aspd/canonical.hpp"
#include "aspd/core.hpp"

using namespace aspd;

TEST_CASE("make_domain sorts, deduplicates, validates") {
    Domain d = domain_of({"231", "123", "231"});
    REQUIRE(d.orders == std::vector<Order>{{1, 2, 3}, {2, 3, 1}});
    REQUIRE(d.n() == 3);
    REQUIRE(d.size() == 2);

    REQUIRE_THROWS_AS(make_domain({{1, 2}, {1, 2, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_domain({{1, 2, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_domain(std::vector<Alt>{1, 1, 2}, {{1, 1, 2}}), std::invalid_argument);
}

TEST_CASE("rank_of") {
    Order o = order_of("2314");
    REQUIRE(rank_of(o, 2) == 1);
    REQUIRE(rank_of(o, 3) == 2);
    REQUIRE(rank_of(o, 4) == 4);
    REQUIRE_THROWS_AS(rank_of(o, 9), std::invalid_argument);
}

TEST_CASE("restrict_order keeps relative order and labels") {
    REQUIRE(restrict_order(order_of("35142"), {1, 4, 5}) == order_of("514"));
    REQUIRE(restrict_order(order_of("123"), {2}) == Order{2});
    REQUIRE_THROWS_AS(restrict_order(order_of("123"), {7}), std::invalid_argument);
    REQUIRE_THROWS_AS(restrict_order(order_of("123"), {}), std::invalid_argument);
}

TEST_CASE("restrict_domain collapses duplicates") {
    Domain d = domain_of({"1234", "1243", "4123"});
    Domain r = restrict_domain(d, {1, 2, 3});
    REQUIRE(r.orders == std::vector<Order>{{1, 2, 3}});
}

TEST_CASE("dual is an involution") {
    Domain d = domain_of({"123", "231"});
    REQUIRE(dual(d).orders == std::vector<Order>{{1, 3, 2}, {3, 2, 1}});
    REQUIRE(dual(dual(d)) == d);
}

TEST_CASE("relabel and permutation algebra") {
    Perm g = {2, 3, 1};  // 1->2, 2->3, 3->1
    REQUIRE(apply_perm(g, order_of("123")) == order_of("231"));
    Domain d = domain_of({"123", "321"});
    Domain r = relabel(d, g);
    REQUIRE(r.orders == std::vector<Order>{{1, 3, 2}, {2, 3, 1}});
    REQUIRE(compose(g, Perm{3, 2, 1}) == Perm{1, 3, 2});
    REQUIRE(relabel(d, identity_perm(3)) == d);
    REQUIRE_THROWS_AS(check_perm(Perm{1, 1, 2}, 3), std::invalid_argument);
}

TEST_CASE("all_orders and full_domain") {
    REQUIRE(all_orders(ascending_alphabet(3)).size() == 6);
    REQUIRE(full_domain(4).size() == 24);
    REQUIRE_THROWS_AS(all_orders(ascending_alphabet(11)), std::invalid_argument);
}

TEST_CASE("canonical_domain is orbit-constant and idempotent") {
    Domain d = domain_of({"132", "312"});
    CanonicalDomain c = canonical_domain(d);
    REQUIRE(canonical_domain(c.domain).domain == c.domain);
    REQUIRE(relabel(d, c.witness) == c.domain);

    // every relabeling has the same canonical form
    Perm g = identity_perm(3);
    do {
        REQUIRE(canonical_domain(relabel(d, g)).domain == c.domain);
    } while (std::next_permutation(g.begin(), g.end()));
}

TEST_CASE("are_isomorphic") {
    Domain d1 = domain_of({"123", "213"});
    Domain d2 = domain_of({"321", "231"});
    REQUIRE(are_isomorphic(d1, d2));
    REQUIRE_FALSE(are_isomorphic(d1, domain_of({"123", "321"})));
    REQUIRE_THROWS_AS(are_isomorphic(d1, domain_of({"1234"})), std::invalid_argument);
}

TEST_CASE("random relabelings stay isomorphic", "[property]") {
    std::mt19937 rng(12345);
    Domain d = domain_of({"1234", "1243", "2134", "2143", "4321"});
    for (int trial = 0; trial < 50; ++trial) {
        Perm g = identity_perm(4);
        std::shuffle(g.begin(), g.end(), rng);
        REQUIRE(are_isomorphic(d, relabel(d, g)));
    }
}
