/// Voting rules (plurality, runoff, Borda, simple majority), the structural
/// conditions LF / QA / hierarchically cyclic, maximum-domain constructors,
/// and bounded brute-force verifiers for Nash's and Arrow's IIA.
///
/// Borda convention: a voter contributes points equal to the rank they give a
/// candidate, and the LOWEST point total wins.
#pragma once

#include <map>
#include <optional>

#include "aspd/conditions.hpp"

namespace aspd {

// A profile: one linear order per voter, all over a common alternative set.
using Profile = std::vector<Order>;

namespace detail {

inline std::vector<Alt> profile_alphabet(const Profile& p) {
    if (p.empty()) throw std::invalid_argument("empty profile");
    std::vector<Alt> a = p.front();
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace detail

struct Tally {
    std::map<Alt, int> scores;
    std::vector<Alt> winners;   // sorted
    bool lowest_wins = false;   // true for Borda points
    std::vector<Alt> ranking;   // alternatives by score (best first), ties by label
};

inline std::vector<Alt> plurality_winners(const Profile& p) {
    std::map<Alt, int> first;
    for (Alt a : detail::profile_alphabet(p)) first[a] = 0;
    for (const Order& o : p) ++first[o.front()];
    int best = 0;
    for (const auto& [a, c] : first) best = std::max(best, c);
    std::vector<Alt> w;
    for (const auto& [a, c] : first)
        if (c == best) w.push_back(a);
    return w;
}

inline Tally borda(const Profile& p) {
    Tally t;
    t.lowest_wins = true;
    for (Alt a : detail::profile_alphabet(p)) t.scores[a] = 0;
    for (const Order& o : p)
        for (std::size_t i = 0; i < o.size(); ++i) t.scores[o[i]] += static_cast<int>(i) + 1;
    int best = INT32_MAX;
    for (const auto& [a, s] : t.scores) best = std::min(best, s);
    for (const auto& [a, s] : t.scores)
        if (s == best) t.winners.push_back(a);
    for (const auto& [a, s] : t.scores) t.ranking.push_back(a);
    std::stable_sort(t.ranking.begin(), t.ranking.end(),
                     [&](Alt a, Alt b) { return t.scores.at(a) < t.scores.at(b); });
    return t;
}

inline std::vector<Alt> borda_winners(const Profile& p) { return borda(p).winners; }

// Strict pairwise majority relation of a profile.
struct MajorityRelation {
    std::vector<Alt> alphabet;
    std::vector<std::vector<bool>> beats;  // beats[i][j]: alphabet[i] majority-beats alphabet[j]

    bool beats_pair(Alt x, Alt y) const {
        auto ix = std::lower_bound(alphabet.begin(), alphabet.end(), x) - alphabet.begin();
        auto iy = std::lower_bound(alphabet.begin(), alphabet.end(), y) - alphabet.begin();
        return beats[ix][iy];
    }
};

inline MajorityRelation majority_relation(const Profile& p) {
    MajorityRelation m;
    m.alphabet = detail::profile_alphabet(p);
    const int n = static_cast<int>(m.alphabet.size());
    const int N = static_cast<int>(p.size());
    std::vector<std::vector<int>> pref(n, std::vector<int>(n, 0));
    std::vector<int> pos(n);
    for (const Order& o : p) {
        for (int i = 0; i < n; ++i) pos[i] = rank_of(o, m.alphabet[i]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (pos[i] < pos[j]) ++pref[i][j];
    }
    m.beats.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && 2 * pref[i][j] > N) m.beats[i][j] = true;
    return m;
}

inline std::optional<Alt> condorcet_winner(const Profile& p) {
    MajorityRelation m = majority_relation(p);
    const int n = static_cast<int>(m.alphabet.size());
    for (int i = 0; i < n; ++i) {
        bool all = true;
        for (int j = 0; j < n && all; ++j)
            if (i != j && !m.beats[i][j]) all = false;
        if (all) return m.alphabet[i];
    }
    return std::nullopt;
}

// Runoff: a candidate with a strict majority of first places wins outright;
// otherwise the simple-majority (Condorcet) winner among the candidates tied
// at the maximal first-place count.  If that majority relation is cyclic or
// tied, the whole tie set is returned (indeterminate outcome).
inline std::vector<Alt> runoff_winners(const Profile& p) {
    std::vector<Alt> top = plurality_winners(p);
    if (top.size() == 1) return top;  // covers the strict-majority case
    // simple majority among the tie set
    Profile restricted;
    restricted.reserve(p.size());
    for (const Order& o : p) restricted.push_back(restrict_order(o, top));
    if (auto w = condorcet_winner(restricted)) return {*w};
    return top;
}

// LF (limited favoritism): every triple satisfies a never-top condition.
inline bool satisfies_LF(const Domain& d) { return is_arrow_single_dipped(d); }

inline std::vector<Alt> first_ranked_set(const Domain& d) {
    if (d.orders.empty()) throw std::invalid_argument("first_ranked_set: empty domain");
    std::vector<Alt> out;
    for (const Order& o : d.orders) out.push_back(o.front());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// QA (quasi-agreement): every triple restriction has a fixed point.
inline bool satisfies_QA(const Domain& d) {
    if (d.orders.empty()) return true;
    for (const Triple& t : all_triples(d.alphabet))
        if (fixed_points(restrict_domain(d, {t.a, t.b, t.c})).empty()) return false;
    return true;
}

// Adds a new alternative max(alphabet)+1 as a fixed point at the given rank.
inline Domain qa_fixed_point_insert(const Domain& d, int rank) {
    if (!satisfies_QA(d)) throw std::invalid_argument("qa_fixed_point_insert: domain is not QA");
    const int n = d.n();
    if (rank < 1 || rank > n + 1) throw std::invalid_argument("qa_fixed_point_insert: bad rank");
    Alt fresh = d.alphabet.back() + 1;
    std::vector<Alt> alphabet = d.alphabet;
    alphabet.push_back(fresh);
    std::vector<Order> orders;
    orders.reserve(d.size());
    for (const Order& o : d.orders) {
        Order e = o;
        e.insert(e.begin() + (rank - 1), fresh);
        orders.push_back(std::move(e));
    }
    return make_domain(std::move(alphabet), std::move(orders));
}

// Deletes alternative a from every order.
inline Domain delete_alternative(const Domain& d, Alt a) {
    std::vector<Alt> rest;
    for (Alt x : d.alphabet)
        if (x != a) rest.push_back(x);
    if (rest.size() == d.alphabet.size()) throw std::invalid_argument("alternative not in domain");
    return restrict_domain(d, rest);
}

// B^1_n for even n: alternatives 2i-1 and 2i occupy ranks 2i-1 and 2i in
// either order; size 2^{n/2}.  For odd n the fixed point n is inserted at
// fixed_rank into B^1_{n-1}; size 2^{(n-1)/2}.
inline Domain max_qa_domain(int n, std::optional<int> fixed_rank = std::nullopt) {
    if (n < 2) throw std::invalid_argument("max_qa_domain: n must be >= 2");
    if (n % 2 == 1 && !fixed_rank)
        throw std::invalid_argument("max_qa_domain: fixed_rank required for odd n");
    const int m = n % 2 == 0 ? n : n - 1;
    std::vector<Order> orders;
    for (std::uint32_t mask = 0; mask < (1u << (m / 2)); ++mask) {
        Order o;
        o.reserve(m);
        for (int i = 0; i < m / 2; ++i) {
            Alt lo = 2 * i + 1, hi = 2 * i + 2;
            if (mask >> i & 1) std::swap(lo, hi);
            o.push_back(lo);
            o.push_back(hi);
        }
        orders.push_back(std::move(o));
    }
    Domain b = make_domain(ascending_alphabet(m), std::move(orders));
    if (n % 2 == 0) return b;
    return qa_fixed_point_insert(b, *fixed_rank);
}

// A hierarchical decomposition into consecutive label intervals: every order
// lists interval I_1's alternatives first, then I_2's, etc., and each
// interval's restriction is a set of cyclic shifts of one order or has at
// most two orders.
struct IntervalPartition {
    enum class Kind { CyclicShifts, SizeAtMost2 };
    struct Block {
        Alt lo, hi;  // labels lo..hi inclusive
        Kind kind;
    };
    std::vector<Block> blocks;
};

namespace detail {

inline bool is_cyclic_shift_set(const std::vector<Order>& orders) {
    const Order& base = orders.front();
    const std::size_t k = base.size();
    for (const Order& o : orders) {
        std::size_t s = 0;
        while (s < k && o.front() != base[s]) ++s;
        bool match = s < k;
        for (std::size_t i = 0; match && i < k; ++i)
            if (o[i] != base[(s + i) % k]) match = false;
        if (!match) return false;
    }
    return true;
}

}  // namespace detail

// Finds the finest boundary partition: boundaries are the ranks p where every
// order's top-p set equals {1..p}.  If the finest partition's blocks all
// qualify, no coarser one is needed; if it fails, none exists.
inline std::optional<IntervalPartition> hierarchically_cyclic_partition(const Domain& d) {
    const int n = d.n();
    if (d.alphabet != ascending_alphabet(n))
        throw std::invalid_argument("hierarchically_cyclic_partition requires alphabet [1..n]");
    if (d.orders.empty()) return std::nullopt;
    std::vector<bool> boundary(n + 1, true);  // boundary[p]: top-p set == {1..p} everywhere
    for (const Order& o : d.orders) {
        Alt max_seen = 0;
        for (int p = 1; p <= n; ++p) {
            max_seen = std::max(max_seen, o[p - 1]);
            if (max_seen != p) boundary[p] = false;
        }
    }
    IntervalPartition part;
    Alt lo = 1;
    for (int p = 1; p <= n; ++p) {
        if (!boundary[p]) continue;
        std::vector<Alt> labels;
        for (Alt a = lo; a <= p; ++a) labels.push_back(a);
        Domain block = restrict_domain(d, labels);
        IntervalPartition::Kind kind;
        if (detail::is_cyclic_shift_set(block.orders))
            kind = IntervalPartition::Kind::CyclicShifts;
        else if (block.size() <= 2)
            kind = IntervalPartition::Kind::SizeAtMost2;
        else
            return std::nullopt;
        part.blocks.push_back({lo, p, kind});
        lo = p + 1;
    }
    return part;
}

// Maximum size of a hierarchically cyclic domain on n alternatives:
// 3^{n/3}, 4*3^{(n-4)/3}, or 2*3^{(n-2)/3} by n mod 3.
inline std::uint64_t hc_max_size(int n) {
    if (n < 2) throw std::invalid_argument("hc_max_size: n must be >= 2");
    auto pow3 = [](int e) {
        std::uint64_t r = 1;
        while (e-- > 0) r *= 3;
        return r;
    };
    if (n % 3 == 0) return pow3(n / 3);
    if (n % 3 == 1) return 4 * pow3((n - 4) / 3);
    return 2 * pow3((n - 2) / 3);
}

// The maximum-size hierarchically cyclic domain: consecutive intervals of
// size 3 plus one exceptional interval of size 2 or 4 (by n mod 3), each
// realized as all cyclic shifts of its ascending order.  The exceptional
// interval goes last by default; lead places it first, changing the number
// of first-ranked alternatives.
inline Domain max_hc_domain(int n, std::optional<int> lead = std::nullopt) {
    if (n < 2) throw std::invalid_argument("max_hc_domain: n must be >= 2");
    int exceptional = n % 3 == 0 ? 3 : n % 3 == 1 ? 4 : 2;
    if (lead && *lead != exceptional)
        throw std::invalid_argument("max_hc_domain: lead inconsistent with n mod 3");
    std::vector<int> parts((n - exceptional) / 3, 3);
    if (lead)
        parts.insert(parts.begin(), exceptional);
    else
        parts.push_back(exceptional);
    // all concatenations of one cyclic shift per interval
    std::vector<Order> orders{{}};
    Alt next = 1;
    for (int k : parts) {
        std::vector<Order> shifts;
        for (int s = 0; s < k; ++s) {
            Order o;
            for (int i = 0; i < k; ++i) o.push_back(next + (s + i) % k);
            shifts.push_back(std::move(o));
        }
        next += k;
        std::vector<Order> grown;
        grown.reserve(orders.size() * shifts.size());
        for (const Order& head : orders)
            for (const Order& tail : shifts) {
                Order o = head;
                o.insert(o.end(), tail.begin(), tail.end());
                grown.push_back(std::move(o));
            }
        orders = std::move(grown);
    }
    return make_domain(ascending_alphabet(n), std::move(orders));
}

enum class VoteRule { Plurality, Runoff, Borda };

inline std::vector<Alt> rule_winners(VoteRule rule, const Profile& p) {
    switch (rule) {
        case VoteRule::Plurality: return plurality_winners(p);
        case VoteRule::Runoff: return runoff_winners(p);
        case VoteRule::Borda: return borda_winners(p);
    }
    throw std::logic_error("unknown rule");
}

struct IIAVerdict {
    bool holds = true;
    int max_voters = 0;  // search bound used
    // Counterexample fields, set when !holds:
    Profile profile;
    std::vector<Alt> deleted;           // Nash: deleted alternatives
    Profile paired_profile;             // Arrow: the modified profile
    Alt x = 0, y = 0;                   // Arrow: the flipped pair
    std::vector<Alt> winners_before;    // Nash winners / Arrow {x-rank witness via totals}
    std::vector<Alt> winners_after;
};

namespace detail {

// Visits all non-decreasing index sequences (multiset profiles) of each size
// in [1..max_voters]; stops early when f returns true.
template <typename F>
bool for_each_multiset_profile(const Domain& d, int max_voters, F&& f) {
    const int m = static_cast<int>(d.size());
    std::vector<int> idx;
    Profile p;
    auto rec = [&](auto&& self, int start) -> bool {
        if (!p.empty() && f(p)) return true;
        if (static_cast<int>(p.size()) == max_voters) return false;
        for (int i = start; i < m; ++i) {
            p.push_back(d.orders[i]);
            if (self(self, i)) return true;
            p.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace detail

// Nash IIA at scale: over every multiset profile of at most max_voters orders
// from d with a unique rule winner x, and every nonempty deletion set
// B ⊆ X \ {x}, the winner x must stay in the winner set of the profile
// restricted to X \ B.  Returns the lexicographically first counterexample.
inline IIAVerdict check_nash_iia(VoteRule rule, const Domain& d, int max_voters) {
    if (max_voters < 1) throw std::invalid_argument("check_nash_iia: max_voters must be >= 1");
    IIAVerdict v;
    v.max_voters = max_voters;
    const int n = d.n();
    detail::for_each_multiset_profile(d, max_voters, [&](const Profile& p) {
        std::vector<Alt> w = rule_winners(rule, p);
        if (w.size() != 1) return false;
        Alt x = w.front();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<Alt> deleted, rest;
            for (int i = 0; i < n; ++i)
                (mask >> i & 1 ? deleted : rest).push_back(d.alphabet[i]);
            if (std::find(deleted.begin(), deleted.end(), x) != deleted.end()) continue;
            if (rest.size() < 2) continue;  // trivial single-candidate election
            Profile q;
            q.reserve(p.size());
            for (const Order& o : p) q.push_back(restrict_order(o, rest));
            std::vector<Alt> w2 = rule_winners(rule, q);
            if (std::find(w2.begin(), w2.end(), x) == w2.end()) {
                v.holds = false;
                v.profile = p;
                v.deleted = deleted;
                v.winners_before = w;
                v.winners_after = w2;
                return true;
            }
        }
        return false;
    });
    return v;
}

// How a voter may "change the ranks of a subset S" with x,y outside S:
//   Rerank      — alternatives outside S keep their relative order (default;
//                 the only reading that is non-vacuous for n = 3).
//   FixedSlots  — alternatives outside S keep their exact ranks, so members
//                 of S permute within S's rank slots.
//   PairwiseOnly— each voter merely keeps their x-vs-y comparison (the
//                 classical reading).
enum class ArrowIIAReading { Rerank, FixedSlots, PairwiseOnly };

// Arrow IIA for Borda at scale: search pairs of equal-size profiles over d
// where the second differs from the first only by re-ranking a set S with
// x, y outside S, per the chosen reading.  Violation: totals rank x strictly
// before y (lower total) in the first profile but not in the second.
inline IIAVerdict check_arrow_iia_borda(const Domain& d, int max_voters,
                                        ArrowIIAReading reading = ArrowIIAReading::Rerank) {
    if (max_voters < 1) throw std::invalid_argument("check_arrow_iia_borda: max_voters must be >= 1");
    IIAVerdict v;
    v.max_voters = max_voters;
    const int n = d.n();
    detail::for_each_multiset_profile(d, max_voters, [&](const Profile& p) {
        Tally t1 = borda(p);
        const std::size_t N = p.size();
        for (Alt x : d.alphabet)
            for (Alt y : d.alphabet) {
                if (x == y || t1.scores.at(x) >= t1.scores.at(y)) continue;
                // changed sets S, nonempty, excluding x and y
                for (unsigned mask = 1; mask < (1u << n); ++mask) {
                    std::vector<Alt> S;
                    bool bad = false;
                    for (int i = 0; i < n; ++i)
                        if (mask >> i & 1) {
                            if (d.alphabet[i] == x || d.alphabet[i] == y) bad = true;
                            S.push_back(d.alphabet[i]);
                        }
                    if (bad) continue;
                    // per-voter compatible replacement orders
                    std::vector<std::vector<const Order*>> choices(N);
                    std::vector<Alt> outside;
                    for (Alt a : d.alphabet)
                        if (std::find(S.begin(), S.end(), a) == S.end()) outside.push_back(a);
                    for (std::size_t i = 0; i < N; ++i)
                        for (const Order& o : d.orders) {
                            bool ok = true;
                            switch (reading) {
                                case ArrowIIAReading::PairwiseOnly:
                                    ok = (rank_of(o, x) < rank_of(o, y)) ==
                                         (rank_of(p[i], x) < rank_of(p[i], y));
                                    break;
                                case ArrowIIAReading::FixedSlots:
                                    for (Alt a : outside)
                                        if (rank_of(o, a) != rank_of(p[i], a)) {
                                            ok = false;
                                            break;
                                        }
                                    break;
                                case ArrowIIAReading::Rerank:
                                    ok = restrict_order(o, outside) ==
                                         restrict_order(p[i], outside);
                                    break;
                            }
                            if (ok) choices[i].push_back(&o);
                        }
                    // product over voters
                    std::vector<std::size_t> pick(N, 0);
                    for (;;) {
                        Profile q;
                        q.reserve(N);
                        for (std::size_t i = 0; i < N; ++i) q.push_back(*choices[i][pick[i]]);
                        Tally t2 = borda(q);
                        if (t2.scores.at(x) >= t2.scores.at(y)) {
                            v.holds = false;
                            v.profile = p;
                            v.paired_profile = q;
                            v.x = x;
                            v.y = y;
                            v.winners_before = t1.winners;
                            v.winners_after = t2.winners;
                            return true;
                        }
                        std::size_t i = 0;
                        while (i < N && ++pick[i] == choices[i].size()) pick[i++] = 0;
                        if (i == N) break;
                    }
                }
            }
        return false;
    });
    return v;
}

}  // namespace aspd
