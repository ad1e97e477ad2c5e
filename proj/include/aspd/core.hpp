/// Linear orders and preference domains over a finite alternative set.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace aspd {

using Alt = int;

// A linear order: alternatives listed most-preferred first.
using Order = std::vector<Alt>;

// A finite set of distinct linear orders over a common alternative set.
// Orders are kept lexicographically sorted and deduplicated, so equality
// and serialization are deterministic.
struct Domain {
    std::vector<Alt> alphabet;  // sorted labels
    std::vector<Order> orders;  // sorted, distinct permutations of alphabet

    bool operator==(const Domain&) const = default;
    int n() const { return static_cast<int>(alphabet.size()); }
    std::size_t size() const { return orders.size(); }
};

inline std::vector<Alt> ascending_alphabet(int n) {
    if (n < 1) throw std::invalid_argument("alphabet size must be positive");
    std::vector<Alt> a(n);
    std::iota(a.begin(), a.end(), 1);
    return a;
}

inline Order ascending_order(int n) { return ascending_alphabet(n); }

inline bool is_permutation_of(const Order& o, const std::vector<Alt>& alphabet) {
    Order s = o;
    std::sort(s.begin(), s.end());
    return s == alphabet;
}

inline Domain make_domain(std::vector<Alt> alphabet, std::vector<Order> orders) {
    std::sort(alphabet.begin(), alphabet.end());
    if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end())
        throw std::invalid_argument("alphabet has duplicate labels");
    for (const Order& o : orders)
        if (!is_permutation_of(o, alphabet))
            throw std::invalid_argument("order is not a permutation of the alphabet");
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return Domain{std::move(alphabet), std::move(orders)};
}

// Alphabet inferred from the first order.
inline Domain make_domain(std::vector<Order> orders) {
    if (orders.empty()) throw std::invalid_argument("cannot infer alphabet of an empty domain");
    std::vector<Alt> alphabet = orders.front();
    std::sort(alphabet.begin(), alphabet.end());
    return make_domain(std::move(alphabet), std::move(orders));
}

// Convenience for tests and small literals: "2314" -> order 2,3,1,4.
inline Order order_of(const std::string& digits) {
    Order o;
    o.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("order literal must use digits 1-9");
        o.push_back(c - '0');
    }
    return o;
}

inline Domain domain_of(std::initializer_list<const char*> orders) {
    std::vector<Order> v;
    for (const char* s : orders) v.push_back(order_of(s));
    return make_domain(std::move(v));
}

// 1-based position of alternative a in the order.
inline int rank_of(const Order& order, Alt a) {
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == a) return static_cast<int>(i) + 1;
    throw std::invalid_argument("alternative " + std::to_string(a) + " not in order");
}

// Subsequence of the ranking containing exactly the alternatives in A,
// relative order preserved.  A must be a nonempty subset of the order.
inline Order restrict_order(const Order& order, const std::vector<Alt>& A) {
    if (A.empty()) throw std::invalid_argument("restriction to empty set");
    Order out;
    out.reserve(A.size());
    for (Alt x : order)
        if (std::find(A.begin(), A.end(), x) != A.end()) out.push_back(x);
    if (out.size() != A.size())
        throw std::invalid_argument("restriction set is not a subset of the order");
    return out;
}

inline Domain restrict_domain(const Domain& d, const std::vector<Alt>& A) {
    std::vector<Alt> alphabet = A;
    std::sort(alphabet.begin(), alphabet.end());
    std::vector<Order> orders;
    orders.reserve(d.orders.size());
    for (const Order& o : d.orders) orders.push_back(restrict_order(o, A));
    return make_domain(std::move(alphabet), std::move(orders));
}

// Reverse every order.  Involution.
inline Domain dual(const Domain& d) {
    std::vector<Order> orders = d.orders;
    for (Order& o : orders) std::reverse(o.begin(), o.end());
    return make_domain(d.alphabet, std::move(orders));
}

// A permutation of [1..n]: g[a-1] is the image of alternative a.
using Perm = std::vector<Alt>;

inline void check_perm(const Perm& g, int n) {
    if (static_cast<int>(g.size()) != n || !is_permutation_of(g, ascending_alphabet(n)))
        throw std::invalid_argument("not a permutation of [1..n]");
}

inline Order apply_perm(const Perm& g, const Order& o) {
    Order out;
    out.reserve(o.size());
    for (Alt a : o) out.push_back(g[a - 1]);
    return out;
}

inline Perm compose(const Perm& g, const Perm& h) {  // (g∘h)(x) = g(h(x))
    Perm out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i] - 1];
    return out;
}

inline Perm identity_perm(int n) { return ascending_alphabet(n); }

// Rename alternatives by g in every order.  Requires alphabet [1..n].
inline Domain relabel(const Domain& d, const Perm& g) {
    if (d.alphabet != ascending_alphabet(d.n()))
        throw std::invalid_argument("relabel requires alphabet [1..n]");
    check_perm(g, d.n());
    std::vector<Order> orders;
    orders.reserve(d.orders.size());
    for (const Order& o : d.orders) orders.push_back(apply_perm(g, o));
    return make_domain(d.alphabet, std::move(orders));
}

// All |alphabet|! orders, lexicographically sorted.  Guarded: factorial growth.
inline std::vector<Order> all_orders(const std::vector<Alt>& alphabet) {
    if (alphabet.size() > 10) throw std::invalid_argument("all_orders: alphabet too large");
    Order o = alphabet;
    std::sort(o.begin(), o.end());
    std::vector<Order> out;
    do {
        out.push_back(o);
    } while (std::next_permutation(o.begin(), o.end()));
    return out;
}

inline Domain full_domain(int n) {
    return make_domain(ascending_alphabet(n), all_orders(ascending_alphabet(n)));
}

}  // namespace aspd
