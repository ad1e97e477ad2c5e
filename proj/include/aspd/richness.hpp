/// Rank ranges, k-richness, terminal alternatives, skewed structure, and the
/// named reference domains (Black, skewed S_n, cyclic shifts).
#pragma once

#include <map>
#include <optional>

#include "aspd/conditions.hpp"

namespace aspd {

// Set of ranks attained by a in some order of d, sorted ascending.
inline std::vector<int> rank_range(const Domain& d, Alt a) {
    if (d.orders.empty()) throw std::invalid_argument("rank_range: empty domain");
    std::vector<bool> seen(d.n() + 1, false);
    for (const Order& o : d.orders) seen[rank_of(o, a)] = true;
    std::vector<int> out;
    for (int r = 1; r <= d.n(); ++r)
        if (seen[r]) out.push_back(r);
    return out;
}

// Largest r such that a attains every rank in [1..r]; 0 if a is never first.
inline int r_value(const Domain& d, Alt a) {
    std::vector<bool> seen(d.n() + 1, false);
    for (const Order& o : d.orders) seen[rank_of(o, a)] = true;
    int r = 0;
    while (r < d.n() && seen[r + 1]) ++r;
    return r;
}

// Largest k such that every alternative attains every rank in [1..k];
// 0 if some alternative is never ranked first.
inline int richness(const Domain& d) {
    if (d.orders.empty()) throw std::invalid_argument("richness: empty domain");
    int k = d.n();
    for (Alt a : d.alphabet) k = std::min(k, r_value(d, a));
    return k;
}

inline bool is_k_rich(const Domain& d, int k) {
    if (k < 1) throw std::invalid_argument("is_k_rich: k must be >= 1");
    return richness(d) >= k;
}

// Alternatives ranked last by some order.
inline std::vector<Alt> terminal_alternatives(const Domain& d) {
    if (d.orders.empty()) throw std::invalid_argument("terminal_alternatives: empty domain");
    std::vector<Alt> out;
    for (const Order& o : d.orders) out.push_back(o.back());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// An alternative q such that every triple containing q satisfies "q not last
// within the triple".  Equivalent to: q takes only ranks 1 and 2 in d (a rank
// >= 3 puts two triple-mates above q).  Smallest such q if several qualify.
// Precondition: d is Arrow single-peaked.
inline std::optional<Alt> skewed_pivot(const Domain& d) {
    if (!is_arrow_single_peaked(d))
        throw std::invalid_argument("skewed_pivot: domain is not Arrow single-peaked");
    for (Alt q : d.alphabet) {
        bool ok = true;
        for (const Order& o : d.orders)
            if (rank_of(o, q) > 2) {
                ok = false;
                break;
            }
        if (ok) return q;
    }
    return std::nullopt;
}

// Black's single-peaked domain on the axis 1 < 2 < ... < n: the 2^{n-1}
// orders built bottom-up by repeatedly ranking one endpoint of the remaining
// axis interval last.  Equals domain_from_conditions with 2N3 on every triple.
inline Domain black_domain(int n) {
    if (n < 3) throw std::invalid_argument("black_domain: n must be >= 3");
    std::vector<Order> orders;
    orders.reserve(std::size_t{1} << (n - 1));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        Order o(n);
        int lo = 1, hi = n;
        for (int r = n; r >= 2; --r) {
            if (mask >> (n - r) & 1)
                o[r - 1] = lo++;
            else
                o[r - 1] = hi--;
        }
        o[0] = lo;  // lo == hi
        orders.push_back(std::move(o));
    }
    return make_domain(ascending_alphabet(n), std::move(orders));
}

// The most skewed maximal Arrow single-peaked domain, in unitary form (1N3 on
// every triple): each alternative has at most one larger alternative above it.
// Built by inserting m at rank 1 or 2 into every order over {m+1..n}.
inline Domain skewed_sn(int n) {
    if (n < 3) throw std::invalid_argument("skewed_sn: n must be >= 3");
    std::vector<Order> orders{{n}};
    for (Alt m = n - 1; m >= 1; --m) {
        std::vector<Order> next;
        next.reserve(orders.size() * 2);
        for (const Order& o : orders) {
            Order first{m};
            first.insert(first.end(), o.begin(), o.end());
            next.push_back(std::move(first));
            Order second{o.front(), m};
            second.insert(second.end(), o.begin() + 1, o.end());
            next.push_back(std::move(second));
        }
        orders = std::move(next);
    }
    return make_domain(ascending_alphabet(n), std::move(orders));
}

// The n cyclic shifts of the ascending order; richness n.
inline Domain cyclic_domain(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_domain: n must be >= 1");
    std::vector<Order> orders;
    Order base = ascending_order(n);
    for (int s = 0; s < n; ++s) {
        Order o;
        o.insert(o.end(), base.begin() + s, base.end());
        o.insert(o.end(), base.begin(), base.begin() + s);
        orders.push_back(std::move(o));
    }
    return make_domain(ascending_alphabet(n), std::move(orders));
}

// Per-alternative structure report for a domain.
struct RichnessReport {
    std::map<Alt, std::vector<int>> ranges;  // attained ranks per alternative
    std::map<Alt, int> r_values;
    int richness = 0;
    std::vector<Alt> terminals;
    std::optional<Alt> pivot;  // only set when the domain is Arrow single-peaked
};

inline RichnessReport richness_report(const Domain& d) {
    RichnessReport rep;
    for (Alt a : d.alphabet) {
        rep.ranges[a] = rank_range(d, a);
        rep.r_values[a] = r_value(d, a);
    }
    rep.richness = richness(d);
    rep.terminals = terminal_alternatives(d);
    if (is_arrow_single_peaked(d)) rep.pivot = skewed_pivot(d);
    return rep;
}

inline std::map<int, std::uint64_t> richness_histogram(const std::vector<Domain>& domains) {
    std::map<int, std::uint64_t> hist;
    for (const Domain& d : domains) ++hist[richness(d)];
    return hist;
}

}  // namespace aspd
