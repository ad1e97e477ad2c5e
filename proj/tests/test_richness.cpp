#include <catch2/catch_amalgamated.hpp>
#include <chrono>
#include <set>

#include "aspd/enumerate.hpp"
#include "aspd/richness.hpp"

using namespace aspd;

TEST_CASE("rank_range") {
    Domain b4 = black_domain(4);
    REQUIRE(rank_range(b4, 2) == std::vector<int>{1, 2, 3});
    REQUIRE(rank_range(b4, 4) == std::vector<int>{1, 2, 3, 4});
    REQUIRE(rank_range(domain_of({"123"}), 2) == std::vector<int>{2});
}

TEST_CASE("richness") {
    REQUIRE(richness(black_domain(5)) == 3);
    for (int n = 3; n <= 7; ++n) REQUIRE(richness(cyclic_domain(n)) == n);
    REQUIRE(richness(domain_of({"123"})) == 0);
}

TEST_CASE("is_k_rich") {
    REQUIRE(is_k_rich(full_domain(4), 4));
    REQUIRE_FALSE(is_k_rich(domain_of({"123", "213"}), 2));
    REQUIRE_FALSE(is_k_rich(domain_of({"123", "213"}), 1));  // 3 never first
    REQUIRE(is_k_rich(black_domain(3), 2));
    REQUIRE_THROWS_AS(is_k_rich(black_domain(3), 0), std::invalid_argument);
}

TEST_CASE("terminal_alternatives") {
    REQUIRE(terminal_alternatives(black_domain(4)) == std::vector<Alt>{1, 4});
    REQUIRE(terminal_alternatives(domain_of({"123"})) == std::vector<Alt>{3});
    // terminal alternatives attain every rank in a maximal ASP domain
    for (Alt a : terminal_alternatives(black_domain(5)))
        REQUIRE(rank_range(black_domain(5), a).size() == 5);
}

TEST_CASE("skewed_pivot") {
    // unitary S_4 (all 1N3): every triple containing 1 forbids 1 last
    REQUIRE(skewed_pivot(skewed_sn(4)) == Alt{1});
    // the 3N3-form relabeling of S_4 has pivot 4
    Domain s4_3n3 = domain_from_conditions(uniform_assignment(4, Sym::N33));
    REQUIRE(skewed_pivot(s4_3n3) == Alt{4});
    REQUIRE_FALSE(skewed_pivot(black_domain(5)).has_value());
    REQUIRE(skewed_pivot(black_domain(3)).has_value());
    REQUIRE_THROWS_AS(skewed_pivot(full_domain(3)), std::invalid_argument);
}

TEST_CASE("black_domain") {
    REQUIRE(black_domain(3) == domain_of({"123", "213", "231", "321"}));
    REQUIRE(black_domain(4).size() == 8);
    REQUIRE_THROWS_AS(black_domain(2), std::invalid_argument);
    for (int n = 3; n <= 7; ++n)
        REQUIRE(black_domain(n) == domain_from_conditions(uniform_assignment(n, Sym::N23)));
    // single-peaked w.r.t. the axis 1 < ... < n: upper contour sets are intervals
    for (const Order& o : black_domain(6).orders)
        for (Alt x : o) {
            std::set<Alt> upper;
            for (Alt y : o) {
                upper.insert(y);
                if (y == x) break;
            }
            REQUIRE(*upper.rbegin() - *upper.begin() + 1 == static_cast<Alt>(upper.size()));
        }
}

TEST_CASE("black richness formula, fast up to n=12") {
    auto start = std::chrono::steady_clock::now();
    for (int n = 3; n <= 12; ++n) REQUIRE(richness(black_domain(n)) == n / 2 + 1);
    auto elapsed = std::chrono::steady_clock::now() - start;
    REQUIRE(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() < 1000);
}

TEST_CASE("skewed_sn") {
    REQUIRE(skewed_sn(3) == domain_of({"123", "132", "213", "312"}));
    for (int n = 3; n <= 7; ++n) {
        REQUIRE(skewed_sn(n).size() == (std::size_t{1} << (n - 1)));
        REQUIRE(skewed_sn(n) == domain_from_conditions(uniform_assignment(n, Sym::N13)));
    }
    REQUIRE(richness(skewed_sn(5)) == 2);
    for (int n = 4; n <= 8; ++n) REQUIRE(richness(skewed_sn(n)) == 2);
}

TEST_CASE("richness_report consistency") {
    RichnessReport rep = richness_report(black_domain(5));
    REQUIRE(rep.richness == 3);
    int min_r = 100;
    for (auto [a, r] : rep.r_values) min_r = std::min(min_r, r);
    REQUIRE(rep.richness == min_r);
    REQUIRE(rep.terminals == std::vector<Alt>{1, 5});
    REQUIRE_FALSE(rep.pivot.has_value());
}

TEST_CASE("structural richness invariants over enumerated classes") {
    for (int n = 4; n <= 6; ++n) {
        EnumerationResult r = enumerate_asp(n, EnumMode::Insearch);
        std::uint64_t skewed_count = 0;
        for (const Domain& d : r.domains) {
            RichnessReport rep = richness_report(d);
            REQUIRE(rep.richness >= 2);
            REQUIRE(rep.richness <= n / 2 + 1);
            REQUIRE(rep.terminals.size() <= 2);
            // rank ranges are intervals starting at 1
            for (Alt a = 1; a <= static_cast<Alt>(n); ++a) {
                auto rr = rank_range(d, a);
                for (std::size_t i = 0; i < rr.size(); ++i) REQUIRE(rr[i] == static_cast<int>(i + 1));
            }
            // at most one other alternative shares each r-value
            for (auto [a, ra] : rep.r_values) {
                int same = 0;
                for (auto [b, rb] : rep.r_values)
                    if (b != a && rb == ra) ++same;
                REQUIRE(same <= 1);
            }
            // pivot exists iff richness 2
            REQUIRE(rep.pivot.has_value() == (rep.richness == 2));
            if (rep.pivot) ++skewed_count;
        }
        // skewed classes at n are counted by the classes at n-1
        REQUIRE(skewed_count == count_asp(n - 1));
    }
}

TEST_CASE("cyclic_domain") {
    REQUIRE(cyclic_domain(3) == domain_of({"123", "231", "312"}));
    REQUIRE(cyclic_domain(5).size() == 5);
}
