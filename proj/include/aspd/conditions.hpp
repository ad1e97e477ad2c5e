/// Sen/Fishburn never-condition algebra on triples of alternatives.
#pragma once

#include <array>
#include <optional>

#include "aspd/core.hpp"

namespace aspd {

// A triple of alternatives, strictly increasing.
struct Triple {
    Alt a, b, c;
    bool operator==(const Triple&) const = default;
    auto operator<=>(const Triple&) const = default;
    std::array<Alt, 3> alts() const { return {a, b, c}; }
    bool contains(Alt x) const { return x == a || x == b || x == c; }
};

inline Triple make_triple(Alt a, Alt b, Alt c) {
    if (!(a < b && b < c)) throw std::invalid_argument("triple must be strictly increasing");
    return Triple{a, b, c};
}

// All triples over the alphabet, in lexicographic order.
inline std::vector<Triple> all_triples(const std::vector<Alt>& alphabet) {
    std::vector<Triple> out;
    const int n = static_cast<int>(alphabet.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                out.push_back(Triple{alphabet[i], alphabet[j], alphabet[k]});
    return out;
}

inline std::vector<Triple> all_triples(int n) { return all_triples(ascending_alphabet(n)); }

inline std::size_t triple_count(int n) {
    return static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
}

// "Alternative `subject` of its triple never takes rank `rank`" (1=top,
// 2=middle, 3=bottom) in the domain's restriction to the triple.
struct NeverCondition {
    Alt subject;
    int rank;
    bool operator==(const NeverCondition&) const = default;
    auto operator<=>(const NeverCondition&) const = default;
};

// Fishburn symbol iNj: the i-th alternative of the ascending triple never gets
// rank j.  The enum order is the comparison order used throughout:
// 1N3 < 2N3 < 3N3 < 1N1 < 2N1 < 3N1 < 1N2 < 2N2 < 3N2 < empty.
enum class Sym : unsigned char {
    N13 = 0, N23, N33,
    N11, N21, N31,
    N12, N22, N32,
    Empty
};

inline constexpr int kNumSyms = 9;  // excluding Empty

inline Sym sym_from(int index, int rank) {  // index in [0,2], rank in [1,3]
    int b = rank == 3 ? 0 : rank == 1 ? 3 : 6;
    return static_cast<Sym>(b + index);
}

inline int sym_subject_index(Sym s) { return static_cast<int>(s) % 3; }

inline int sym_rank(Sym s) {
    int b = static_cast<int>(s) / 3;
    return b == 0 ? 3 : b == 1 ? 1 : 2;
}

inline std::string sym_name(Sym s) {
    if (s == Sym::Empty) return "-";
    return std::to_string(sym_subject_index(s) + 1) + "N" + std::to_string(sym_rank(s));
}

inline std::optional<Sym> sym_parse(const std::string& text) {
    if (text == "-") return Sym::Empty;
    if (text.size() == 3 && text[1] == 'N' && text[0] >= '1' && text[0] <= '3' &&
        text[2] >= '1' && text[2] <= '3')
        return sym_from(text[0] - '1', text[2] - '0');
    return std::nullopt;
}

inline NeverCondition condition_of(const Triple& t, Sym s) {
    if (s == Sym::Empty) throw std::invalid_argument("empty symbol has no condition");
    return NeverCondition{t.alts()[sym_subject_index(s)], sym_rank(s)};
}

inline Sym sym_of(const Triple& t, const NeverCondition& c) {
    auto alts = t.alts();
    for (int i = 0; i < 3; ++i)
        if (alts[i] == c.subject) return sym_from(i, c.rank);
    throw std::invalid_argument("condition subject not in triple");
}

// One optional never condition per triple of [1..n], triples in lex order.
struct ConditionAssignment {
    int n = 0;
    std::vector<Sym> symbols;  // size C(n,3)

    bool operator==(const ConditionAssignment&) const = default;
    auto operator<=>(const ConditionAssignment&) const = default;
};

inline ConditionAssignment empty_assignment(int n) {
    return ConditionAssignment{n, std::vector<Sym>(triple_count(n), Sym::Empty)};
}

inline ConditionAssignment uniform_assignment(int n, Sym s) {
    return ConditionAssignment{n, std::vector<Sym>(triple_count(n), s)};
}

namespace detail {

// 9-bit realization mask of d restricted to t: bit (3*rank_within_triple-3 +
// subject_index) set iff some order realizes that (subject, rank) pair.
inline unsigned realized_mask(const Domain& d, const Triple& t) {
    unsigned mask = 0;
    for (const Order& o : d.orders) {
        int pa = rank_of(o, t.a), pb = rank_of(o, t.b), pc = rank_of(o, t.c);
        int ra = 1 + (pb < pa) + (pc < pa);  // rank of t.a within the triple
        int rb = 1 + (pa < pb) + (pc < pb);
        int rc = 1 + (pa < pc) + (pb < pc);
        mask |= 1u << ((ra - 1) * 3 + 0);
        mask |= 1u << ((rb - 1) * 3 + 1);
        mask |= 1u << ((rc - 1) * 3 + 2);
    }
    return mask;
}

// (subject, rank) pairs realized by a single order on t, as the same 9-bit mask.
inline unsigned realized_mask(const Order& o, const Triple& t) {
    int pa = rank_of(o, t.a), pb = rank_of(o, t.b), pc = rank_of(o, t.c);
    int ra = 1 + (pb < pa) + (pc < pa);
    int rb = 1 + (pa < pb) + (pc < pb);
    int rc = 1 + (pa < pc) + (pb < pc);
    return (1u << ((ra - 1) * 3 + 0)) | (1u << ((rb - 1) * 3 + 1)) | (1u << ((rc - 1) * 3 + 2));
}

}  // namespace detail

// All (subject, rank) pairs no order of restrict_domain(d, t) realizes,
// sorted in Fishburn symbol order.
inline std::vector<NeverCondition> satisfied_conditions(const Domain& d, const Triple& t) {
    if (d.orders.empty()) throw std::invalid_argument("satisfied_conditions: empty domain");
    unsigned realized = detail::realized_mask(d, t);
    std::vector<NeverCondition> out;
    for (int s = 0; s < kNumSyms; ++s) {
        Sym sym = static_cast<Sym>(s);
        unsigned bit = 1u << ((sym_rank(sym) - 1) * 3 + sym_subject_index(sym));
        if (!(realized & bit)) out.push_back(condition_of(t, sym));
    }
    return out;
}

// Sen's criterion: every triple carries at least one satisfied never condition.
inline bool is_condorcet_sen(const Domain& d) {
    if (d.orders.empty()) return true;
    for (const Triple& t : all_triples(d.alphabet))
        if (detail::realized_mask(d, t) == 0x1FFu) return false;
    return true;
}

namespace detail {

inline bool majority_transitive_3(const Order& o1, const Order& o2, const Order& o3,
                                  const std::vector<Alt>& alphabet) {
    const int n = static_cast<int>(alphabet.size());
    // beats[i][j]: strict majority of the 3 voters prefers alphabet[i] to alphabet[j]
    std::vector<int> p1(n), p2(n), p3(n);
    for (int i = 0; i < n; ++i) {
        p1[i] = rank_of(o1, alphabet[i]);
        p2[i] = rank_of(o2, alphabet[i]);
        p3[i] = rank_of(o3, alphabet[i]);
    }
    std::vector<std::vector<bool>> beats(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int cnt = (p1[i] < p1[j]) + (p2[i] < p2[j]) + (p3[i] < p3[j]);
            beats[i][j] = cnt >= 2;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (i != j && j != k && i != k && beats[i][j] && beats[j][k] && beats[k][i])
                    return false;
    return true;
}

}  // namespace detail

// Independent oracle: every 3-voter multiset profile drawn from d has a
// transitive strict majority relation.
inline bool is_condorcet_bruteforce(const Domain& d) {
    const std::size_t m = d.orders.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            for (std::size_t k = j; k < m; ++k)
                if (!detail::majority_transitive_3(d.orders[i], d.orders[j], d.orders[k],
                                                   d.alphabet))
                    return false;
    return true;
}

// The set of ALL linear orders on [1..n] whose restriction to every triple
// respects every assigned condition.  May be empty.
inline Domain domain_from_conditions(const ConditionAssignment& ca) {
    const int n = ca.n;
    std::vector<Triple> tris = all_triples(n);
    if (ca.symbols.size() != tris.size())
        throw std::invalid_argument("condition assignment has wrong triple count");
    std::vector<Order> keep;
    std::vector<int> pos(n + 1);
    Order o = ascending_order(n);
    do {
        for (int i = 0; i < n; ++i) pos[o[i]] = i;
        bool ok = true;
        for (std::size_t ti = 0; ti < tris.size() && ok; ++ti) {
            Sym s = ca.symbols[ti];
            if (s == Sym::Empty) continue;
            const Triple& t = tris[ti];
            Alt subject = t.alts()[sym_subject_index(s)];
            // subject is one of the triple, so its self-comparison contributes 0
            int r = 1 + (pos[t.a] < pos[subject]) + (pos[t.b] < pos[subject]) +
                    (pos[t.c] < pos[subject]);
            if (r == sym_rank(s)) ok = false;
        }
        if (ok) keep.push_back(o);
    } while (std::next_permutation(o.begin(), o.end()));
    return Domain{ascending_alphabet(n), std::move(keep)};
}

// True iff no order outside d can be added while keeping every triple's
// satisfied-condition set nonempty.  d must be a Condorcet domain.
inline bool is_maximal_condorcet(const Domain& d) {
    if (!is_condorcet_sen(d)) throw std::invalid_argument("is_maximal_condorcet: not a Condorcet domain");
    std::vector<Triple> tris = all_triples(d.alphabet);
    std::vector<unsigned> satisfied(tris.size());
    for (std::size_t i = 0; i < tris.size(); ++i)
        satisfied[i] = ~detail::realized_mask(d, tris[i]) & 0x1FFu;
    for (const Order& o : all_orders(d.alphabet)) {
        if (std::binary_search(d.orders.begin(), d.orders.end(), o)) continue;
        bool addable = true;
        for (std::size_t i = 0; i < tris.size(); ++i) {
            if ((satisfied[i] & ~detail::realized_mask(o, tris[i])) == 0) {
                addable = false;
                break;
            }
        }
        if (addable) return false;
    }
    return true;
}

// Every triple satisfies some never-bottom condition.
inline bool is_arrow_single_peaked(const Domain& d) {
    if (d.orders.empty()) return true;
    for (const Triple& t : all_triples(d.alphabet))
        if ((detail::realized_mask(d, t) & 0x1C0u) == 0x1C0u)  // all three bottom bits realized
            return false;
    return true;
}

// Every triple satisfies some never-top condition.
inline bool is_arrow_single_dipped(const Domain& d) {
    if (d.orders.empty()) return true;
    for (const Triple& t : all_triples(d.alphabet))
        if ((detail::realized_mask(d, t) & 0x007u) == 0x007u)  // all three top bits realized
            return false;
    return true;
}

// Alternatives whose rank is constant across the domain.
inline std::vector<Alt> fixed_points(const Domain& d) {
    if (d.orders.empty()) throw std::invalid_argument("fixed_points: empty domain");
    std::vector<Alt> out;
    for (Alt a : d.alphabet) {
        int r = rank_of(d.orders.front(), a);
        bool fixed = true;
        for (const Order& o : d.orders)
            if (rank_of(o, a) != r) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(a);
    }
    return out;
}

}  // namespace aspd
