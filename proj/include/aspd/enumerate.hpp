/// Depth-first enumeration of all non-isomorphic maximal Arrow's
/// single-peaked domains on n alternatives (3 <= n <= 9).
///
/// The search works on condition strings: one never-bottom Fishburn symbol
/// (1N3 or 2N3) per triple of [1..n], triples in lexicographic order.  A node
/// carries the bitset of linear orders surviving the decided prefix.  Pruning
/// uses the target size 2^{n-1}, per-triple copiousness, and a feasibility
/// table of fully decided 4/5-alternative windows.  In `insearch` mode an
/// in-search lexicographic minimal-image test rejects non-canonical prefixes;
/// in `posthoc` mode the surviving strings are reduced to canonical
/// representatives at the end.
#pragma once

#include <atomic>
#include <condition_variable>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include "aspd/conditions.hpp"

namespace aspd {

enum class EnumMode { Posthoc, Insearch };

namespace detail {

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return w_[i >> 6] >> (i & 63) & 1; }
    std::size_t size() const { return nbits_; }

    void set_all() {
        std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
        if (nbits_ & 63) w_.back() = (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }

    // dst = a & b, returning the popcount.  dst may alias a.
    static std::size_t and_into(Bits& dst, const Bits& a, const Bits& b) {
        std::size_t cnt = 0;
        const std::size_t nw = a.w_.size();
        dst.nbits_ = a.nbits_;
        dst.w_.resize(nw);
        for (std::size_t i = 0; i < nw; ++i) {
            std::uint64_t v = a.w_[i] & b.w_[i];
            dst.w_[i] = v;
            cnt += static_cast<std::size_t>(std::popcount(v));
        }
        return cnt;
    }

    // First index set in (*this & other), or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_common(const Bits& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t v = w_[i] & other.w_[i];
            if (v) return (i << 6) + static_cast<std::size_t>(std::countr_zero(v));
        }
        return npos;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t v = w_[i];
            while (v) {
                f((i << 6) + static_cast<std::size_t>(std::countr_zero(v)));
                v &= v - 1;
            }
        }
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

// Permutation/triple lookup tables for one n, shared by the engine and the
// standalone minimal-image operations.
struct SymTables {
    int n = 0;
    int T = 0;                     // C(n,3)
    std::size_t nfact = 0;
    std::vector<Triple> tris;      // lex order
    std::array<int, 1000> tri_of;  // tri_of[a*100+b*10+c]
    std::vector<std::uint8_t> perm;  // nfact*n, perm[p*n+a-1] = g(a); row p is also the p-th order
    std::vector<std::uint8_t> inv;   // inv[p*n+a-1] = g^{-1}(a) = 1-based rank of a in order p
    std::vector<std::uint32_t> inv_idx;  // index of the inverse permutation (involution)

    int tri_index(int a, int b, int c) const { return tri_of[a * 100 + b * 10 + c]; }

    Order order_at(std::size_t p) const {
        Order o(n);
        for (int i = 0; i < n; ++i) o[i] = perm[p * n + i];
        return o;
    }
};

inline const SymTables& sym_tables(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SymTables>> cache;
    std::scoped_lock lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        auto t = std::make_unique<SymTables>();
        t->n = n;
        t->T = static_cast<int>(triple_count(n));
        t->tris = all_triples(n);
        t->tri_of.fill(-1);
        for (int i = 0; i < t->T; ++i) {
            const Triple& tr = t->tris[i];
            t->tri_of[tr.a * 100 + tr.b * 10 + tr.c] = i;
        }
        std::size_t nf = 1;
        for (int i = 2; i <= n; ++i) nf *= i;
        t->nfact = nf;
        t->perm.resize(nf * n);
        t->inv.resize(nf * n);
        Order g = ascending_order(n);
        std::size_t p = 0;
        do {
            for (int i = 0; i < n; ++i) {
                t->perm[p * n + i] = static_cast<std::uint8_t>(g[i]);
                t->inv[p * n + g[i] - 1] = static_cast<std::uint8_t>(i + 1);
            }
            ++p;
        } while (std::next_permutation(g.begin(), g.end()));
        // lex rank of each inverse row, via Lehmer code
        std::vector<std::size_t> fact(n + 1, 1);
        for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
        t->inv_idx.resize(nf);
        for (p = 0; p < nf; ++p) {
            const std::uint8_t* row = &t->inv[p * n];
            std::size_t r = 0;
            for (int i = 0; i < n; ++i) {
                int smaller = 0;
                for (int j = i + 1; j < n; ++j)
                    if (row[j] < row[i]) ++smaller;
                r += smaller * fact[n - 1 - i];
            }
            t->inv_idx[p] = static_cast<std::uint32_t>(r);
        }
        slot = std::move(t);
    }
    return *slot;
}

inline constexpr std::uint8_t kEmptySym = 0xFF;

// Image symbol of target-triple position q under permutation p, given the
// current symbol string (codes 0..2 = 1N3/2N3/3N3) and the decided depth.
// Returns kEmptySym when the source triple is undecided.
inline std::uint8_t image_sym_at(const SymTables& st, std::size_t p, int q,
                                 const std::uint8_t* cur, int depth) {
    const Triple& tq = st.tris[q];
    const std::uint8_t* inv = &st.inv[p * st.n];
    int sa = inv[tq.a - 1], sb = inv[tq.b - 1], sc = inv[tq.c - 1];
    int lo = std::min({sa, sb, sc}), hi = std::max({sa, sb, sc});
    int mid = sa + sb + sc - lo - hi;
    int sidx = st.tri_of[lo * 100 + mid * 10 + hi];
    if (sidx >= depth) return kEmptySym;
    std::uint8_t s = cur[sidx];
    int subject = s == 0 ? lo : s == 1 ? mid : hi;
    int img = st.perm[p * st.n + subject - 1];
    return img == tq.a ? 0 : img == tq.b ? 1 : 2;
}

}  // namespace detail

// A search node: a decided prefix of never-bottom symbols (triples in lex
// order), empty symbols after.
struct SearchNode {
    ConditionAssignment partial;
    int depth = 0;
};

inline SearchNode make_search_node(int n, const std::vector<Sym>& prefix) {
    SearchNode node{empty_assignment(n), static_cast<int>(prefix.size())};
    for (std::size_t i = 0; i < prefix.size(); ++i) node.partial.symbols[i] = prefix[i];
    return node;
}

namespace detail {

// Feasibility of a fully decided window: the maximal domain over [w]
// satisfying the assignment must be copious on every triple and a maximal
// Condorcet domain of size 2^{w-1}.  Indexed by bits (bit i = symbol of the
// i-th triple, 0 = 1N3, 1 = 2N3).
inline const std::vector<char>& window_table(int w) {
    static std::mutex mu;
    static std::map<int, std::vector<char>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    const int tw = static_cast<int>(triple_count(w));
    std::vector<char> table(std::size_t{1} << tw, 0);
    const std::size_t target = std::size_t{1} << (w - 1);
    for (std::size_t bits = 0; bits < table.size(); ++bits) {
        ConditionAssignment ca{w, {}};
        ca.symbols.resize(tw);
        for (int i = 0; i < tw; ++i) ca.symbols[i] = (bits >> i & 1) ? Sym::N23 : Sym::N13;
        Domain d = domain_from_conditions(ca);
        bool ok = d.size() == target;
        if (ok)
            for (const Triple& t : all_triples(w))
                if (restrict_domain(d, {t.a, t.b, t.c}).size() != 4) {
                    ok = false;
                    break;
                }
        if (ok) ok = is_maximal_condorcet(d);
        table[bits] = ok ? 1 : 0;
    }
    return cache.emplace(w, std::move(table)).first->second;
}

}  // namespace detail

// True (= reject) iff some size-`window` alternative subset whose internal
// triples are all decided fails the precomputed window feasibility table.
inline bool prune_partial(const SearchNode& node, int window) {
    if (window != 4 && window != 5) throw std::invalid_argument("prune_partial: window must be 4 or 5");
    const int n = node.partial.n;
    if (window > n) return false;
    const auto& st = detail::sym_tables(n);
    const auto& table = detail::window_table(window);
    std::vector<Alt> subset(window);
    std::vector<int> idx(window);
    for (int i = 0; i < window; ++i) idx[i] = i;
    while (true) {
        for (int i = 0; i < window; ++i) subset[i] = idx[i] + 1;
        std::size_t bits = 0;
        int pos = 0;
        bool decided = true;
        for (int x = 0; x < window && decided; ++x)
            for (int y = x + 1; y < window && decided; ++y)
                for (int z = y + 1; z < window && decided; ++z) {
                    int ti = st.tri_index(subset[x], subset[y], subset[z]);
                    if (ti >= node.depth) {
                        decided = false;
                        break;
                    }
                    Sym s = node.partial.symbols[ti];
                    if (s != Sym::N13 && s != Sym::N23)
                        throw std::invalid_argument("prune_partial: decided symbols must be 1N3 or 2N3");
                    bits |= static_cast<std::size_t>(s == Sym::N23 ? 1 : 0) << pos;
                    ++pos;
                }
        if (decided && !table[bits]) return true;
        // next combination
        int i = window - 1;
        while (i >= 0 && idx[i] == n - window + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < window; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

namespace detail {

// True iff the order at index p (equivalently the inverse of permutation
// inv_idx[p]) respects every decided never-bottom condition of cur[0..d).
inline bool order_respects_prefix(const SymTables& st, std::size_t p, const std::uint8_t* cur,
                                  int d) {
    const std::uint8_t* pos = &st.inv[p * st.n];  // rank of each label in order p
    for (int t = 0; t < d; ++t) {
        const Triple& tr = st.tris[t];
        int pa = pos[tr.a - 1], pb = pos[tr.b - 1], pc = pos[tr.c - 1];
        int bottom = pa > pb ? (pa > pc ? 0 : 2) : (pb > pc ? 1 : 2);
        if (bottom == cur[t]) return false;
    }
    return true;
}

}  // namespace detail

// True (= reject) iff some permutation g of [1..n] maps the partial string to
// a string strictly lexicographically smaller over the decided prefix (empty
// symbols largest).  Only permutations that can still produce a string over
// {1N3, 2N3} count: the order (g^{-1}(1),...,g^{-1}(n)) must respect every
// decided condition, otherwise the full image necessarily contains a 3N3
// symbol and is not a search string.  Conservative on partial strings; exact
// on full ones.
inline bool min_image_reject(const SearchNode& node) {
    const int n = node.partial.n;
    const auto& st = detail::sym_tables(n);
    const int d = node.depth;
    std::vector<std::uint8_t> cur(st.T, detail::kEmptySym);
    for (int i = 0; i < d; ++i) {
        Sym s = node.partial.symbols[i];
        if (sym_rank(s) != 3) throw std::invalid_argument("min_image_reject: symbols must be never-bottom");
        cur[i] = static_cast<std::uint8_t>(sym_subject_index(s));
    }
    for (std::size_t p = 0; p < st.nfact; ++p) {
        for (int q = 0; q < d; ++q) {
            std::uint8_t sm = detail::image_sym_at(st, p, q, cur.data(), d);
            std::uint8_t cm = cur[q];
            if (sm == cm) continue;
            if (sm < cm && detail::order_respects_prefix(st, st.inv_idx[p], cur.data(), d))
                return true;
            break;  // larger, non-unitary, or undecided source: cannot reject
        }
    }
    return false;
}

// Lexicographically smallest permutation image of a full never-bottom string.
// The result may contain 3N3 symbols.
inline ConditionAssignment min_image_string(const ConditionAssignment& full) {
    const int n = full.n;
    const auto& st = detail::sym_tables(n);
    if (static_cast<int>(full.symbols.size()) != st.T)
        throw std::invalid_argument("min_image_string: wrong length");
    std::vector<std::uint8_t> cur(st.T);
    for (int i = 0; i < st.T; ++i) {
        Sym s = full.symbols[i];
        if (sym_rank(s) != 3) throw std::invalid_argument("min_image_string: symbols must be never-bottom");
        cur[i] = static_cast<std::uint8_t>(sym_subject_index(s));
    }
    std::vector<std::uint8_t> best = cur, tmp(st.T);
    for (std::size_t p = 0; p < st.nfact; ++p) {
        bool smaller = false;
        for (int q = 0; q < st.T; ++q) {
            std::uint8_t v = detail::image_sym_at(st, p, q, cur.data(), st.T);
            tmp[q] = v;
            if (!smaller) {
                if (v > best[q]) break;
                if (v < best[q]) smaller = true;
            }
            if (q == st.T - 1 && smaller) best = tmp;
        }
    }
    ConditionAssignment out{n, std::vector<Sym>(st.T)};
    for (int i = 0; i < st.T; ++i) out.symbols[i] = sym_from(best[i], 3);
    return out;
}

namespace detail {

// Smallest image over relabelings that keep the string inside {1N3, 2N3}:
// exactly the g with (g^{-1}(1),...,g^{-1}(n)) in the string's domain, whose
// order indices are given.  This is the canonical form used by both search
// modes (the unrestricted orbit minimum can contain 3N3 symbols, which are
// not search strings).
inline std::vector<std::uint8_t> unitary_min_codes(const SymTables& st,
                                                   const std::vector<std::uint8_t>& cur,
                                                   const std::vector<std::uint32_t>& domain_orders) {
    std::vector<std::uint8_t> best = cur, tmp(st.T);
    for (std::uint32_t sigma : domain_orders) {
        std::size_t g = st.inv_idx[sigma];
        bool smaller = false;
        for (int q = 0; q < st.T; ++q) {
            std::uint8_t v = image_sym_at(st, g, q, cur.data(), st.T);
            tmp[q] = v;
            if (!smaller) {
                if (v > best[q]) break;
                if (v < best[q]) smaller = true;
            }
            if (q == st.T - 1 && smaller) best = tmp;
        }
    }
    return best;
}

}  // namespace detail

// Canonical (unitary-minimal) form of a full never-bottom string over
// {1N3, 2N3}: the smallest relabeling image that is again over {1N3, 2N3}.
inline ConditionAssignment unitary_min_string(const ConditionAssignment& full) {
    const int n = full.n;
    const auto& st = detail::sym_tables(n);
    if (static_cast<int>(full.symbols.size()) != st.T)
        throw std::invalid_argument("unitary_min_string: wrong length");
    std::vector<std::uint8_t> cur(st.T);
    for (int i = 0; i < st.T; ++i) {
        Sym s = full.symbols[i];
        if (s != Sym::N13 && s != Sym::N23)
            throw std::invalid_argument("unitary_min_string: symbols must be 1N3 or 2N3");
        cur[i] = static_cast<std::uint8_t>(sym_subject_index(s));
    }
    std::vector<std::uint32_t> domain_orders;
    for (std::size_t p = 0; p < st.nfact; ++p)
        if (detail::order_respects_prefix(st, p, cur.data(), st.T))
            domain_orders.push_back(static_cast<std::uint32_t>(p));
    std::vector<std::uint8_t> best = detail::unitary_min_codes(st, cur, domain_orders);
    ConditionAssignment out{n, std::vector<Sym>(st.T)};
    for (int i = 0; i < st.T; ++i) out.symbols[i] = sym_from(best[i], 3);
    return out;
}

struct EnumOptions {
    EnumMode mode = EnumMode::Insearch;
    int jobs = 1;
    int frontier_depth = 2;  // subtrees are split at this many decided triples
    std::ostream* progress = nullptr;
    // Checkpointing (insearch only): called after a subtree's results have
    // been handed to the sink; subtree ids listed in `skip` are not searched.
    std::function<void(std::uint64_t)> on_subtree_done;
    const std::vector<std::uint64_t>* skip_subtrees = nullptr;
};

struct EnumerationResult {
    int n = 0;
    std::vector<ConditionAssignment> strings;  // canonical, sorted
    std::vector<Domain> domains;               // parallel to strings
    std::uint64_t count = 0;
};

class AspEnumerator {
public:
    // sink(subtree_id, symbols, surviving order indices); called in
    // deterministic (string-ascending) order regardless of worker count.
    using Sink = std::function<void(std::uint64_t, const std::vector<Sym>&,
                                    const std::vector<std::uint32_t>&)>;

    explicit AspEnumerator(int n) : st_(detail::sym_tables(n)), n_(n) {
        if (n < 3 || n > 9) throw std::invalid_argument("enumeration supports 3 <= n <= 9");
        target_ = std::size_t{1} << (n - 1);
        build_masks();
        build_windows();
    }

    int n() const { return n_; }

    Order order_at(std::uint32_t idx) const { return st_.order_at(idx); }

    Domain domain_of(const std::vector<std::uint32_t>& idx) const {
        std::vector<Order> orders;
        orders.reserve(idx.size());
        for (std::uint32_t i : idx) orders.push_back(st_.order_at(i));
        return make_domain(ascending_alphabet(n_), std::move(orders));
    }

    // Maximal domain of a full assignment, via the precomputed masks.
    std::vector<std::uint32_t> survivors_of(const std::vector<Sym>& symbols) const {
        detail::Bits surv(st_.nfact);
        surv.set_all();
        for (int t = 0; t < st_.T; ++t) {
            int s = sym_subject_index(symbols[t]);
            detail::Bits::and_into(surv, surv, allowed_[t * 3 + s]);
        }
        std::vector<std::uint32_t> out;
        surv.for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

    void run(const EnumOptions& opt, const Sink& sink) const {
        if (opt.mode == EnumMode::Insearch)
            run_insearch(opt, sink);
        else
            run_posthoc(opt, sink);
    }

private:
    struct ActivePerm {
        std::uint32_t perm;
        std::uint16_t resume;
    };

    struct Frontier {
        std::uint64_t id;  // prefix symbol bits
        std::vector<std::uint8_t> prefix;
    };

    struct Worker {
        const AspEnumerator* E;
        EnumMode mode;
        std::vector<std::uint8_t> cur;
        std::vector<detail::Bits> surv;                   // per depth
        std::vector<std::vector<ActivePerm>> act;         // per depth: image tied with prefix so far
        std::vector<std::vector<std::uint32_t>> pend;     // per depth: image settled smaller,
                                                          // pending unitarity at the leaf
        std::vector<std::uint32_t> witness;               // T*4, UINT32_MAX = unset
        std::vector<std::pair<std::vector<Sym>, std::vector<std::uint32_t>>> results;

        void init(const AspEnumerator* e, EnumMode m) {
            E = e;
            mode = m;
            const int T = e->st_.T;
            cur.assign(T, detail::kEmptySym);
            surv.assign(T + 1, detail::Bits(e->st_.nfact));
            surv[0].set_all();
            act.resize(T + 1);
            pend.resize(T + 1);
            if (mode == EnumMode::Insearch) {
                act[0].resize(e->st_.nfact);
                for (std::size_t p = 0; p < e->st_.nfact; ++p)
                    act[0][p] = ActivePerm{static_cast<std::uint32_t>(p), 0};
            }
            witness.assign(static_cast<std::size_t>(T) * 4, UINT32_MAX);
        }

        // Replays a prefix; returns false if the prefix is pruned (possible
        // only when the frontier was collected in a different mode).
        bool replay(const std::vector<std::uint8_t>& prefix) {
            for (std::size_t i = 0; i < prefix.size(); ++i)
                if (!step(static_cast<int>(i), prefix[i])) return false;
            return true;
        }

        // Decides triple d with symbol s (0/1); fills surv[d+1] (and
        // act[d+1] in insearch mode).  Returns false if pruned.
        bool step(int d, std::uint8_t s) {
            const AspEnumerator& E_ = *E;
            cur[d] = s;
            std::size_t cnt =
                detail::Bits::and_into(surv[d + 1], surv[d], E_.allowed_[d * 3 + s]);
            if (cnt < E_.target_) return false;
            // copiousness: every decided triple still realizes its 4 allowed patterns
            for (int t = 0; t <= d; ++t) {
                const auto& pats = kAllowedPats[cur[t]];
                for (int pi = 0; pi < 4; ++pi) {
                    std::uint32_t& w = witness[static_cast<std::size_t>(t) * 4 + pi];
                    if (w != UINT32_MAX && surv[d + 1].test(w)) continue;
                    std::size_t found =
                        surv[d + 1].first_common(E_.pat_mask_[t * 6 + pats[pi]]);
                    if (found == detail::Bits::npos) return false;
                    w = static_cast<std::uint32_t>(found);
                }
            }
            for (const auto& wc : E_.windows_at_[d]) {
                std::size_t bits = 0;
                for (std::size_t i = 0; i < wc.tri_idx.size(); ++i)
                    bits |= static_cast<std::size_t>(cur[wc.tri_idx[i]]) << i;
                if (!(*wc.table)[bits]) return false;
            }
            if (mode == EnumMode::Insearch) update_perms(d);
            return true;
        }

        // Advances the minimal-image bookkeeping for the child at depth d+1.
        // A permutation g can only produce a valid search string if the order
        // sigma_g = (g^{-1}(1),...,g^{-1}(n)) survives to the leaf; once
        // sigma_g leaves the surviving set, g is dropped for the subtree.
        void update_perms(int d) {
            const auto& st = E->st_;
            const int nd = d + 1;
            auto& pout = pend[nd];
            pout.clear();
            for (std::uint32_t p : pend[d])
                if (surv[nd].test(st.inv_idx[p])) pout.push_back(p);
            auto& out = act[nd];
            out.clear();
            for (ActivePerm ap : act[d]) {
                if (!surv[nd].test(st.inv_idx[ap.perm])) continue;
                int q = ap.resume;
                bool keep = false, pending = false;
                while (q < nd) {
                    std::uint8_t sm = detail::image_sym_at(st, ap.perm, q, cur.data(), nd);
                    std::uint8_t cm = cur[q];
                    if (sm == cm) {
                        ++q;
                        continue;
                    }
                    if (sm == detail::kEmptySym)
                        keep = true;  // undecided source: comparison still open
                    else if (sm < cm)
                        pending = true;  // settled smaller at q; unitarity decides at the leaf
                    break;               // settled larger or 3N3: drop
                }
                if (q >= nd) keep = true;
                if (pending)
                    pout.push_back(ap.perm);
                else if (keep) {
                    ap.resume = static_cast<std::uint16_t>(q);
                    out.push_back(ap);
                }
            }
        }

        // Exact test at full depth: the string is canonical iff no
        // permutation with surviving sigma_g has a strictly smaller image.
        bool canonical_at_leaf() {
            const auto& st = E->st_;
            const int T = st.T;
            for (std::uint32_t p : pend[T])
                if (surv[T].test(st.inv_idx[p])) return false;
            for (const ActivePerm& ap : act[T]) {
                if (!surv[T].test(st.inv_idx[ap.perm])) continue;
                for (int q = ap.resume; q < T; ++q) {
                    std::uint8_t sm = detail::image_sym_at(st, ap.perm, q, cur.data(), T);
                    if (sm == cur[q]) continue;
                    if (sm < cur[q]) return false;
                    break;
                }
            }
            return true;
        }

        void dfs(int d) {
            const int T = E->st_.T;
            if (d == T) {
                if (mode == EnumMode::Insearch && !canonical_at_leaf()) return;
                std::vector<std::uint32_t> idx;
                surv[T].for_each([&](std::size_t i) { idx.push_back(static_cast<std::uint32_t>(i)); });
                if (idx.size() != E->target_) return;
                std::vector<Sym> syms(T);
                for (int i = 0; i < T; ++i) syms[i] = sym_from(cur[i], 3);
                results.emplace_back(std::move(syms), std::move(idx));
                return;
            }
            for (std::uint8_t s = 0; s < 2; ++s)
                if (step(d, s)) dfs(d + 1);
            cur[d] = detail::kEmptySym;
        }
    };

    static constexpr std::uint8_t kPatterns[6][3] = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    // Patterns allowed by symbol s: kPatterns[pid][2] is the subject at the
    // bottom relative rank, which must differ from s.
    static constexpr std::uint8_t kAllowedPats[3][4] = {
        {0, 1, 2, 4},  // 1N3
        {0, 2, 3, 5},  // 2N3
        {1, 3, 4, 5},  // 3N3 (images only)
    };

    void build_masks() {
        const auto& st = st_;
        pat_mask_.assign(static_cast<std::size_t>(st.T) * 6, detail::Bits(st.nfact));
        allowed_.assign(static_cast<std::size_t>(st.T) * 3, detail::Bits(st.nfact));
        // key (ra-1)*9+(rb-1)*3+(rc-1) -> pattern id
        std::array<int, 27> key2pid;
        key2pid.fill(-1);
        for (int pid = 0; pid < 6; ++pid) {
            int rank_of_subject[3];
            for (int r = 0; r < 3; ++r) rank_of_subject[kPatterns[pid][r]] = r;
            key2pid[rank_of_subject[0] * 9 + rank_of_subject[1] * 3 + rank_of_subject[2]] = pid;
        }
        for (std::size_t o = 0; o < st.nfact; ++o) {
            const std::uint8_t* pos = &st.inv[o * st.n];
            for (int t = 0; t < st.T; ++t) {
                const Triple& tr = st.tris[t];
                int pa = pos[tr.a - 1], pb = pos[tr.b - 1], pc = pos[tr.c - 1];
                int ra = (pa > pb) + (pa > pc);
                int rb = (pb > pa) + (pb > pc);
                int rc = (pc > pa) + (pc > pb);
                pat_mask_[static_cast<std::size_t>(t) * 6 + key2pid[ra * 9 + rb * 3 + rc]].set(o);
            }
        }
        for (int t = 0; t < st.T; ++t)
            for (int s = 0; s < 3; ++s) {
                detail::Bits m(st.nfact);
                for (int pi = 0; pi < 4; ++pi)
                    pat_mask_[static_cast<std::size_t>(t) * 6 + kAllowedPats[s][pi]].for_each(
                        [&](std::size_t i) { m.set(i); });
                allowed_[static_cast<std::size_t>(t) * 3 + s] = std::move(m);
            }
    }

    struct WindowCheck {
        std::vector<std::uint16_t> tri_idx;  // internal triples, lex order
        const std::vector<char>* table = nullptr;
    };

    void build_windows() {
        windows_at_.assign(st_.T, {});
        for (int w = 4; w <= 5; ++w) {
            if (w > n_) continue;
            const auto& table = detail::window_table(w);
            std::vector<int> idx(w);
            for (int i = 0; i < w; ++i) idx[i] = i;
            while (true) {
                std::vector<std::uint16_t> tri_idx;
                for (int x = 0; x < w; ++x)
                    for (int y = x + 1; y < w; ++y)
                        for (int z = y + 1; z < w; ++z)
                            tri_idx.push_back(static_cast<std::uint16_t>(
                                st_.tri_index(idx[x] + 1, idx[y] + 1, idx[z] + 1)));
                int complete_at = *std::max_element(tri_idx.begin(), tri_idx.end());
                windows_at_[complete_at].push_back(WindowCheck{std::move(tri_idx), &table});
                int i = w - 1;
                while (i >= 0 && idx[i] == n_ - w + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }

    std::vector<Frontier> collect_frontier(EnumMode mode, int depth) const {
        const int F = std::min(depth, st_.T);
        std::vector<Frontier> out;
        Worker w;
        w.init(this, mode);
        std::vector<std::uint8_t> prefix;
        collect_rec(w, 0, F, prefix, out);
        return out;
    }

    void collect_rec(Worker& w, int d, int F, std::vector<std::uint8_t>& prefix,
                     std::vector<Frontier>& out) const {
        if (d == F) {
            std::uint64_t id = 0;
            for (std::size_t i = 0; i < prefix.size(); ++i)
                id |= static_cast<std::uint64_t>(prefix[i]) << i;
            out.push_back(Frontier{id, prefix});
            return;
        }
        for (std::uint8_t s = 0; s < 2; ++s) {
            // witnesses are a shared cache; stale entries self-heal on recheck
            if (w.step(d, s)) {
                prefix.push_back(s);
                collect_rec(w, d + 1, F, prefix, out);
                prefix.pop_back();
            }
        }
        w.cur[d] = detail::kEmptySym;
    }

    void run_subtrees(const EnumOptions& opt, EnumMode mode,
                      const std::function<void(std::uint64_t, Worker&)>& flush) const {
        std::vector<Frontier> frontier = collect_frontier(mode, opt.frontier_depth);
        const int jobs = std::max(1, opt.jobs);
        std::vector<int> state(frontier.size(), 0);  // 0 pending, 1 done
        std::vector<std::unique_ptr<Worker>> done(frontier.size());
        std::atomic<std::size_t> next{0};
        std::mutex mu;
        std::condition_variable cv;

        auto is_skipped = [&](std::uint64_t id) {
            return opt.skip_subtrees &&
                   std::find(opt.skip_subtrees->begin(), opt.skip_subtrees->end(), id) !=
                       opt.skip_subtrees->end();
        };

        auto work = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= frontier.size()) return;
                auto w = std::make_unique<Worker>();
                if (!is_skipped(frontier[i].id)) {
                    w->init(this, mode);
                    if (w->replay(frontier[i].prefix))
                        w->dfs(static_cast<int>(frontier[i].prefix.size()));
                }
                std::scoped_lock lock(mu);
                done[i] = std::move(w);
                state[i] = 1;
                cv.notify_all();
            }
        };

        std::vector<std::thread> threads;
        for (int j = 1; j < jobs; ++j) threads.emplace_back(work);
        std::thread main_worker(work);

        // flush completed subtrees in frontier (= string) order
        std::size_t flushed = 0;
        {
            std::unique_lock lock(mu);
            while (flushed < frontier.size()) {
                cv.wait(lock, [&] { return state[flushed] == 1; });
                while (flushed < frontier.size() && state[flushed] == 1) {
                    Worker& w = *done[flushed];
                    lock.unlock();
                    flush(frontier[flushed].id, w);
                    if (opt.progress)
                        (*opt.progress) << "subtree " << (flushed + 1) << "/" << frontier.size()
                                        << " done\n";
                    lock.lock();
                    done[flushed].reset();
                    ++flushed;
                }
            }
        }
        main_worker.join();
        for (auto& t : threads) t.join();
    }

    void run_insearch(const EnumOptions& opt, const Sink& sink) const {
        run_subtrees(opt, EnumMode::Insearch, [&](std::uint64_t id, Worker& w) {
            for (auto& [syms, idx] : w.results) sink(id, syms, idx);
            if (opt.on_subtree_done && !(opt.skip_subtrees &&
                                         std::find(opt.skip_subtrees->begin(),
                                                   opt.skip_subtrees->end(),
                                                   id) != opt.skip_subtrees->end()))
                opt.on_subtree_done(id);
        });
    }

    void run_posthoc(const EnumOptions& opt, const Sink& sink) const {
        // Collect all surviving full strings, then reduce to canonical
        // (unitary-minimal) representatives.
        std::vector<std::pair<std::vector<Sym>, std::vector<std::uint32_t>>> raw;
        run_subtrees(opt, EnumMode::Posthoc, [&](std::uint64_t, Worker& w) {
            for (auto& r : w.results) raw.push_back(std::move(r));
        });
        const int jobs = std::max(1, opt.jobs);
        std::vector<std::vector<Sym>> canon(raw.size());
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            std::vector<std::uint8_t> codes(st_.T);
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= raw.size()) return;
                for (int q = 0; q < st_.T; ++q)
                    codes[q] = static_cast<std::uint8_t>(sym_subject_index(raw[i].first[q]));
                std::vector<std::uint8_t> best =
                    detail::unitary_min_codes(st_, codes, raw[i].second);
                canon[i].resize(st_.T);
                for (int q = 0; q < st_.T; ++q) canon[i][q] = sym_from(best[q], 3);
            }
        };
        std::vector<std::thread> threads;
        for (int j = 1; j < jobs; ++j) threads.emplace_back(work);
        work();
        for (auto& t : threads) t.join();
        std::sort(canon.begin(), canon.end());
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        for (const auto& syms : canon) sink(0, syms, survivors_of(syms));
    }

    const detail::SymTables& st_;
    int n_;
    std::size_t target_;
    std::vector<detail::Bits> pat_mask_;  // T*6
    std::vector<detail::Bits> allowed_;   // T*3
    std::vector<std::vector<WindowCheck>> windows_at_;
};

// Materialized enumeration; intended for n <= 8 (for n = 9 stream instead).
inline EnumerationResult enumerate_asp(int n, EnumMode mode, int jobs = 1) {
    AspEnumerator eng(n);
    EnumOptions opt;
    opt.mode = mode;
    opt.jobs = jobs;
    EnumerationResult res;
    res.n = n;
    eng.run(opt, [&](std::uint64_t, const std::vector<Sym>& syms,
                     const std::vector<std::uint32_t>& idx) {
        res.strings.push_back(ConditionAssignment{n, syms});
        res.domains.push_back(eng.domain_of(idx));
        ++res.count;
    });
    return res;
}

inline std::uint64_t count_asp(int n, int jobs = 1, EnumMode mode = EnumMode::Insearch) {
    AspEnumerator eng(n);
    EnumOptions opt;
    opt.mode = mode;
    opt.jobs = jobs;
    std::uint64_t count = 0;
    eng.run(opt, [&](std::uint64_t, const std::vector<Sym>&, const std::vector<std::uint32_t>&) {
        ++count;
    });
    return count;
}

}  // namespace aspd
