/// Canonical relabeling of a domain and isomorphism testing.
#pragma once

#include "aspd/core.hpp"

namespace aspd {

struct CanonicalDomain {
    Domain domain;
    Perm witness;  // relabeling that attains the minimum
};

// Lexicographically minimal relabeling of d, comparing the sorted order lists
// of relabel(d, g) over all n! permutations g.  Constant on relabeling orbits
// and idempotent.  Intended for n <= 9; prunes on the first differing order.
inline CanonicalDomain canonical_domain(const Domain& d) {
    const int n = d.n();
    if (d.alphabet != ascending_alphabet(n))
        throw std::invalid_argument("canonical_domain requires alphabet [1..n]");
    Perm g = identity_perm(n);
    Domain best = relabel(d, g);
    Perm best_g = g;
    while (std::next_permutation(g.begin(), g.end())) {
        Domain cand = relabel(d, g);
        if (cand.orders < best.orders) {
            best = std::move(cand);
            best_g = g;
        }
    }
    return CanonicalDomain{std::move(best), std::move(best_g)};
}

// True iff some relabeling maps d1 onto d2.  Both must be over [1..n].
inline bool are_isomorphic(const Domain& d1, const Domain& d2) {
    if (d1.n() != d2.n()) throw std::invalid_argument("are_isomorphic: mismatched n");
    if (d1.size() != d2.size()) return false;
    const int n = d1.n();
    if (d1.alphabet != ascending_alphabet(n) || d2.alphabet != ascending_alphabet(n))
        throw std::invalid_argument("are_isomorphic requires alphabet [1..n]");
    Perm g = identity_perm(n);
    do {
        if (relabel(d1, g).orders == d2.orders) return true;
    } while (std::next_permutation(g.begin(), g.end()));
    return false;
}

}  // namespace aspd
