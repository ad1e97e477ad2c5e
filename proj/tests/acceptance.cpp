// Acceptance driver: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.  Set ASPDOM_ACCEPT_N9=1 to include the
// optional long n=9 enumeration in criteria 1 and 4.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "aspd/canonical.hpp"
#include "aspd/enumerate.hpp"
#include "aspd/io.hpp"
#include "aspd/richness.hpp"
#include "aspd/voting.hpp"

using namespace aspd;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& note = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string sym_str(const ConditionAssignment& ca) {
    std::string s;
    for (Sym sy : ca.symbols) s += sym_name(sy) + " ";
    return s;
}

}  // namespace

int main() {
    const bool run_n9 = []() {
        const char* env = std::getenv("ASPDOM_ACCEPT_N9");
        return env && std::string(env) != "0";
    }();

    // Materialized results for n <= 7; n = 8 (and optionally 9) streamed once.
    std::map<int, EnumerationResult> res;
    for (int n = 3; n <= 7; ++n) res[n] = enumerate_asp(n, EnumMode::Insearch);

    const std::map<int, std::uint64_t> expected_counts = {
        {3, 1}, {4, 2}, {5, 6}, {6, 40}, {7, 560}, {8, 17024}, {9, 1066496}};
    const std::map<int, std::map<int, std::uint64_t>> expected_hist = {
        {3, {{2, 1}}},
        {4, {{2, 1}, {3, 1}}},
        {5, {{2, 2}, {3, 4}}},
        {6, {{2, 6}, {3, 31}, {4, 3}}},
        {7, {{2, 40}, {3, 439}, {4, 81}}},
        {8, {{2, 560}, {3, 12327}, {4, 4101}, {5, 36}}},
        {9, {{2, 17024}, {3, 696497}, {4, 346635}, {5, 6340}}}};

    // One streaming pass per large n: count, richness histogram, skewed count.
    std::map<int, std::uint64_t> big_count;
    std::map<int, std::map<int, std::uint64_t>> big_hist;
    std::map<int, std::uint64_t> big_skewed;
    std::map<int, double> big_seconds;
    for (int n : run_n9 ? std::vector<int>{8, 9} : std::vector<int>{8}) {
        auto t0 = std::chrono::steady_clock::now();
        AspEnumerator eng(n);
        EnumOptions opt;
        opt.jobs = 8;
        eng.run(opt, [&](std::uint64_t, const std::vector<Sym>&,
                         const std::vector<std::uint32_t>& idx) {
            Domain d = eng.domain_of(idx);
            ++big_count[n];
            ++big_hist[n][richness(d)];
            if (skewed_pivot(d)) ++big_skewed[n];
        });
        big_seconds[n] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    // --- 1: enumeration counts ---
    {
        bool ok = true;
        std::ostringstream note;
        for (int n = 3; n <= 7; ++n) ok = ok && res[n].count == expected_counts.at(n);
        ok = ok && big_count[8] == expected_counts.at(8);
        note << "n=8 in " << big_seconds[8] << "s";
        if (run_n9) {
            ok = ok && big_count[9] == expected_counts.at(9);
            note << ", n=9 in " << big_seconds[9] << "s";
        } else {
            note << ", n=9 skipped (set ASPDOM_ACCEPT_N9=1)";
        }
        report(1, "enumeration counts 1,2,6,40,560,17024", ok, note.str());
    }

    // --- 2: mode cross-validation n <= 7 ---
    {
        bool ok = true;
        for (int n = 3; n <= 7 && ok; ++n) {
            EnumerationResult ph = enumerate_asp(n, EnumMode::Posthoc, 8);
            std::set<std::string> a, b;
            for (const auto& ca : res[n].strings) a.insert(sym_str(ca));
            for (const auto& ca : ph.strings) b.insert(sym_str(ca));
            ok = a == b && a.size() == res[n].count;
        }
        report(2, "posthoc and insearch emit identical canonical-string sets", ok);
    }

    // --- 3: structural suite over every enumerated domain, n <= 7 ---
    {
        bool ok = true;
        for (int n = 3; n <= 7 && ok; ++n)
            for (const Domain& d : res[n].domains) {
                RichnessReport rep = richness_report(d);
                ok = ok && d.size() == (std::size_t{1} << (n - 1));
                ok = ok && is_condorcet_sen(d) && is_maximal_condorcet(d);
                ok = ok && is_arrow_single_peaked(d);
                ok = ok && rep.richness >= 2;
                ok = ok && rep.terminals.size() <= 2;
                for (Alt a = 1; a <= static_cast<Alt>(n) && ok; ++a) {
                    auto rr = rank_range(d, a);
                    for (std::size_t i = 0; i < rr.size() && ok; ++i)
                        ok = rr[i] == static_cast<int>(i + 1);
                }
                for (auto [a, ra] : rep.r_values) {
                    int same = 0;
                    for (auto [b, rb] : rep.r_values)
                        if (b != a && rb == ra) ++same;
                    ok = ok && same <= 1;
                }
                if (!ok) break;
            }
        report(3, "structural suite (size, maximal, ASP, 2-rich, terminals, rank ranges)", ok);
    }

    // --- 4: Table 1 reproduction n = 3..8 ---
    {
        bool ok = true;
        for (int n = 3; n <= 7; ++n) ok = ok && richness_histogram(res[n].domains) == expected_hist.at(n);
        ok = ok && big_hist[8] == expected_hist.at(8);
        if (run_n9) ok = ok && big_hist[9] == expected_hist.at(9);
        report(4, "richness histograms match the published rows", ok,
               run_n9 ? "including n=9" : "n=9 skipped");
    }

    // --- 5: skewed count equals a(n-1) for n = 4..8 ---
    {
        bool ok = true;
        for (int n = 4; n <= 7; ++n) {
            std::uint64_t skewed = 0;
            for (const Domain& d : res[n].domains)
                if (skewed_pivot(d)) ++skewed;
            ok = ok && skewed == expected_counts.at(n - 1);
        }
        ok = ok && big_skewed[8] == expected_counts.at(7);
        report(5, "skewed-pivot domain count equals a(n-1) for n=4..8", ok);
    }

    // --- 6: Black's richness formula, n = 3..12, < 1 s ---
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (int n = 3; n <= 12; ++n) ok = ok && richness(black_domain(n)) == n / 2 + 1;
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream note;
        note << secs << "s";
        report(6, "richness(black_domain(n)) = floor(n/2)+1 for n=3..12", ok && secs < 1.0,
               note.str());
    }

    // --- 7: Condorcet oracle agreement ---
    {
        bool ok = true;
        auto agree = [&](const Domain& d) {
            return is_condorcet_sen(d) == is_condorcet_bruteforce(d);
        };
        for (int n = 3; n <= 5 && ok; ++n)
            for (const Domain& d : res[n].domains) {
                ok = agree(d) && agree(dual(d));
                if (!ok) break;
            }
        ok = ok && agree(full_domain(3)) && agree(full_domain(4));
        auto l4 = all_orders(ascending_alphabet(4));
        std::mt19937 rng(424242);
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            std::vector<Order> orders;
            for (const Order& o : l4)
                if (rng() & 1) orders.push_back(o);
            if (orders.empty()) continue;
            ok = agree(make_domain(ascending_alphabet(4), orders));
        }
        report(7, "Sen criterion agrees with brute force on all tested domains", ok);
    }

    // --- 8: plurality/runoff Nash IIA on LF duals; violations on non-LF ---
    {
        bool ok = true;
        int duals = 0;
        for (int n = 3; n <= 5 && ok; ++n)
            for (const Domain& d : res[n].domains) {
                Domain dd = dual(d);
                ok = satisfies_LF(dd) && check_nash_iia(VoteRule::Plurality, dd, 5).holds &&
                     check_nash_iia(VoteRule::Runoff, dd, 5).holds;
                ++duals;
                if (!ok) break;
            }
        ok = ok && duals == 9;
        for (const Domain& d : {black_domain(3), black_domain(4), full_domain(3)})
            ok = ok && !check_nash_iia(VoteRule::Plurality, d, 7).holds &&
                 !check_nash_iia(VoteRule::Runoff, d, 7).holds;
        report(8, "Nash IIA for plurality/runoff holds on the 9 LF duals, fails on non-LF", ok);
    }

    // --- 9: QA suite ---
    {
        bool ok = true;
        for (int n = 2; n <= 10; ++n) {
            Domain q = n % 2 == 0 ? max_qa_domain(n) : max_qa_domain(n, 1);
            ok = ok && satisfies_QA(q) && q.size() == (std::size_t{1} << (n / 2));
        }
        // brute-force n=4 maximum via subset-closed DFS
        auto l4 = all_orders(ascending_alphabet(4));
        std::size_t best = 0;
        std::vector<Order> cur;
        auto dfs = [&](auto&& self, std::size_t start) -> void {
            best = std::max(best, cur.size());
            for (std::size_t i = start; i < l4.size(); ++i) {
                cur.push_back(l4[i]);
                if (satisfies_QA(make_domain(ascending_alphabet(4), cur))) self(self, i + 1);
                cur.pop_back();
            }
        };
        dfs(dfs, 0);
        ok = ok && best == 4;
        for (int n = 2; n <= 5; ++n) {
            Domain q = n % 2 == 0 ? max_qa_domain(n) : max_qa_domain(n, 1);
            ok = ok && check_nash_iia(VoteRule::Borda, q, 4).holds;
        }
        ok = ok && !check_nash_iia(VoteRule::Borda, black_domain(3), 6).holds;
        report(9, "QA suite (max QA domains, n=4 oracle, Borda Nash IIA)", ok);
    }

    // --- 10: hierarchically cyclic suite ---
    {
        bool ok = true;
        for (int n = 2; n <= 20; ++n) {
            std::vector<std::uint64_t> bestp(n + 1, 0);
            bestp[0] = 1;
            for (int m = 2; m <= n; ++m)
                for (int k = 2; k <= m; ++k)
                    bestp[m] = std::max(bestp[m], bestp[m - k] * k);
            ok = ok && hc_max_size(n) == bestp[n];
        }
        for (int n = 2; n <= 10; ++n) {
            Domain d = max_hc_domain(n);
            ok = ok && d.size() == hc_max_size(n) &&
                 hierarchically_cyclic_partition(d).has_value();
            // winner count = size of the first interval: 3 when a size-3 part
            // leads (exceptional part last by default), else the exceptional
            // part itself (n = 2, 4, where it is the only part)
            const std::size_t exceptional = n % 3 == 0 ? 3 : n % 3 == 1 ? 4 : 2;
            const std::size_t default_winners = n - exceptional >= 3 ? 3 : exceptional;
            ok = ok && first_ranked_set(d).size() == default_winners;
            ok = ok && first_ranked_set(max_hc_domain(n, static_cast<int>(exceptional))).size() ==
                           exceptional;
        }
        for (int n = 3; n <= 5; ++n)
            ok = ok && !hierarchically_cyclic_partition(black_domain(n)).has_value();
        for (int n = 2; n <= 5; ++n)
            ok = ok && check_arrow_iia_borda(max_hc_domain(n), 3).holds;
        ok = ok && !check_arrow_iia_borda(black_domain(3), 4).holds;
        report(10, "hierarchically cyclic suite (sizes, partitions, winners, Arrow IIA)", ok);
    }

    // --- 11: determinism across worker counts ---
    {
        bool ok = true;
        for (int n = 5; n <= 6 && ok; ++n)
            for (EnumMode mode : {EnumMode::Insearch, EnumMode::Posthoc}) {
                EnumerationResult r1 = enumerate_asp(n, mode, 1);
                EnumerationResult r8 = enumerate_asp(n, mode, 8);
                ok = r1.count == r8.count && r1.domains == r8.domains;
                std::string s1, s8;
                for (const auto& ca : r1.strings) s1 += sym_str(ca);
                for (const auto& ca : r8.strings) s8 += sym_str(ca);
                ok = ok && s1 == s8;
                if (!ok) break;
            }
        report(11, "1-worker and 8-worker runs produce identical results", ok);
    }

    if (failures) {
        std::cout << failures << " criterion(s) FAILED" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
