#pragma once

// Independent reference computations and the shared poset corpus.
// The oracles here deliberately avoid the library's traversal code: chains
// are found from the order relation alone, and polynomials are plain
// coefficient vectors.

#include "chowlab/chowlab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using chowlab::BigInt;
using chowlab::ElementId;
using chowlab::IntSequence;
using chowlab::Poset;
using chowlab::RankedPoset;
using chowlab::WeakRank;

inline IntSequence trimmed(IntSequence v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

/// Every chain 0^ < p_1 < ... < p_s (p_0 omitted), found by recursion over
/// all elements using only the order relation.
inline std::vector<std::vector<ElementId>> all_chains(const Poset& p) {
    std::vector<std::vector<ElementId>> out;
    std::vector<ElementId> cur;
    std::function<void(ElementId)> go = [&](ElementId tip) {
        out.push_back(cur);
        for (ElementId y = 0; y < p.size(); ++y) {
            if (y == tip || !p.leq(tip, y)) continue;
            cur.push_back(y);
            go(y);
            cur.pop_back();
        }
    };
    go(p.bottom());
    return out;
}

/// Chow polynomial straight from the definition: every chain, every factor
/// t + ... + t^{d-1} multiplied out by convolution.
inline IntSequence chow_by_definition(const Poset& p, const WeakRank& r) {
    IntSequence total;
    for (const auto& chain : all_chains(p)) {
        IntSequence prod{1};
        ElementId prev = p.bottom();
        for (ElementId x : chain) {
            const auto d = static_cast<std::size_t>(r[x] - r[prev]);
            IntSequence next(prod.size() + d, 0);
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t k = 1; k + 1 <= d; ++k) next[i + k] += prod[i];
            prod = std::move(next);
            prev = x;
        }
        if (total.size() < prod.size()) total.resize(prod.size(), 0);
        for (std::size_t i = 0; i < prod.size(); ++i) total[i] += prod[i];
    }
    return trimmed(total);
}

/// Every FY monomial as a sorted (element, exponent) list, by iterating
/// over chains and all exponent vectors.
using RawMonomial = std::vector<std::pair<ElementId, unsigned>>;

inline std::vector<RawMonomial> fy_by_definition(const Poset& p, const WeakRank& r) {
    std::vector<RawMonomial> out;
    for (const auto& chain : all_chains(p)) {
        std::vector<std::int64_t> cap;
        ElementId prev = p.bottom();
        bool viable = true;
        for (ElementId x : chain) {
            cap.push_back(r[x] - r[prev] - 1);
            if (cap.back() < 1) viable = false;
            prev = x;
        }
        if (!viable) continue;
        std::vector<unsigned> e(chain.size(), 1);
        while (true) {
            RawMonomial m;
            for (std::size_t i = 0; i < chain.size(); ++i) m.emplace_back(chain[i], e[i]);
            std::sort(m.begin(), m.end());
            out.push_back(m);
            std::size_t i = 0;
            while (i < e.size() && e[i] == static_cast<unsigned>(cap[i])) e[i++] = 1;
            if (i == e.size()) break;
            ++e[i];
        }
    }
    return out;
}

inline unsigned raw_degree(const RawMonomial& m) {
    unsigned d = 0;
    for (auto& f : m) d += f.second;
    return d;
}

/// SFY filtered from the FY list by the explicit exponent bound; the chain
/// order of a monomial's support is recovered from ranks.
inline std::set<RawMonomial> sfy_by_definition(const Poset& p, const WeakRank& r) {
    const std::int64_t n = r[p.top()];
    std::set<RawMonomial> out;
    for (auto m : fy_by_definition(p, r)) {
        std::sort(m.begin(), m.end(), [&](auto& a, auto& b) { return r[a.first] < r[b.first]; });
        if (!m.empty() && m.back().first == p.top()) continue;
        bool ok = true;
        for (std::size_t k = 0; k < m.size(); ++k) {
            std::int64_t later = 0;
            for (std::size_t i = k + 1; i < m.size(); ++i) later += m[i].second;
            if (static_cast<std::int64_t>(m[k].second) > n - r[m[k].first] - 2 * later) ok = false;
        }
        if (ok) {
            std::sort(m.begin(), m.end());
            out.insert(m);
        }
    }
    return out;
}

inline RawMonomial to_raw(const chowlab::Monomial& m) {
    RawMonomial out;
    for (auto& [v, e] : m.factors()) out.emplace_back(static_cast<ElementId>(v), e);
    return out;
}

inline std::set<RawMonomial> to_raw(const chowlab::MonomialSet& s) {
    std::set<RawMonomial> out;
    for (auto& m : s) out.insert(to_raw(m));
    return out;
}

/// Checks a decomposition of the product of chains from scratch: every grid
/// point exactly once, consecutive points differ by +1 in one coordinate, and
/// ranks are symmetric about the middle.
inline bool decomposition_is_valid(const std::vector<int>& bounds, const std::vector<std::vector<std::vector<int>>>& chains) {
    int total = 0;
    std::size_t count = 1;
    for (int b : bounds) {
        total += b;
        count *= static_cast<std::size_t>(b + 1);
    }
    std::set<std::vector<int>> seen;
    auto rank = [](const std::vector<int>& g) {
        int s = 0;
        for (int x : g) s += x;
        return s;
    };
    for (const auto& c : chains) {
        if (c.empty()) return false;
        for (std::size_t t = 0; t < c.size(); ++t) {
            const auto& g = c[t];
            if (g.size() != bounds.size()) return false;
            for (std::size_t k = 0; k < g.size(); ++k)
                if (g[k] < 0 || g[k] > bounds[k]) return false;
            if (!seen.insert(g).second) return false;
            if (t > 0) {
                int diff = 0;
                for (std::size_t k = 0; k < g.size(); ++k) {
                    const int d = g[k] - c[t - 1][k];
                    if (d < 0 || d > 1) return false;
                    diff += d;
                }
                if (diff != 1) return false;
            }
        }
        if (rank(c.front()) + rank(c.back()) != total) return false;
    }
    return seen.size() == count;
}

/// Initial-element set by filtering every grid point through the inequalities.
inline std::set<std::vector<int>> initial_set_by_filter(const std::vector<int>& bounds) {
    std::set<std::vector<int>> out;
    std::vector<int> g(bounds.size(), 0);
    while (true) {
        bool ok = true;
        for (std::size_t s = 0; s < g.size() && ok; ++s) {
            int rhs = 0;
            for (std::size_t i = s + 1; i < g.size(); ++i) rhs += bounds[i] - 2 * g[i];
            ok = g[s] <= rhs;
        }
        if (ok) out.insert(g);
        std::size_t k = 0;
        while (k < g.size() && g[k] == bounds[k]) g[k++] = 0;
        if (k == g.size()) break;
        ++g[k];
    }
    return out;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Does a pure order ideal with h-vector (1, h1, h2) exist? Any h2 quadrics in
/// h1 variables form an order ideal together with the variables; pureness
/// needs every variable to divide one of the chosen quadrics.
inline bool pure_len3_exists(unsigned h1, unsigned h2) {
    std::vector<std::pair<unsigned, unsigned>> quad;
    for (unsigned a = 0; a < h1; ++a)
        for (unsigned b = a; b < h1; ++b) quad.emplace_back(a, b);
    if (h2 > quad.size()) return false;
    if (h2 == 0) return h1 == 0;
    std::vector<bool> pick(quad.size(), false);
    std::fill(pick.begin(), pick.begin() + h2, true);
    do {
        unsigned covered = 0;
        for (std::size_t i = 0; i < quad.size(); ++i)
            if (pick[i]) covered |= (1u << quad[i].first) | (1u << quad[i].second);
        if (covered == (1u << h1) - 1) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

/// Random palindromic unimodal sequence whose differential sequence is a
/// positive log-concave sequence (1, g_1, ..., g_k) without internal zeros.
template <class Rng>
IntSequence random_sequence_with_log_concave_delta(Rng& rng) {
    const std::size_t k = 1 + rng() % 6;
    std::vector<long long> g{1};
    while (g.size() < k) {
        const long long prev2 = g.size() >= 2 ? g[g.size() - 2] : 0;
        const long long prev = g.back();
        const long long cap = prev2 == 0 ? 40 : (prev * prev) / prev2;
        if (cap < 1) break;
        g.push_back(1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(cap)));
    }
    std::vector<long long> half;
    long long acc = 0;
    for (auto x : g) half.push_back(acc += x);
    const std::size_t e = 2 * (half.size() - 1) + (rng() % 2);
    IntSequence h(e + 1);
    for (std::size_t i = 0; i <= e; ++i) h[i] = half[std::min(i, e - i)];
    return h;
}

}  // namespace oracle

namespace corpus {

struct Entry {
    std::string label;
    chowlab::RankedPoset poset;
};

/// Seeded random graded posets with the fuzz campaign's per-trial parameters.
inline std::vector<Entry> random_posets(std::uint64_t seed, std::size_t count, int max_rank, int max_width) {
    chowlab::FuzzOptions opt;
    opt.seed = seed;
    opt.max_rank = max_rank;
    opt.max_width = max_width;
    std::vector<Entry> out;
    for (std::size_t i = 0; i < count; ++i) {
        const auto g = chowlab::fuzz_trial_options(opt, i);
        out.push_back({"random#" + std::to_string(i), chowlab::gen_random_graded(g)});
    }
    return out;
}

/// Named families within their size caps, and both counterexample families
/// at small parameters.
inline std::vector<Entry> named_posets() {
    std::vector<Entry> out;
    auto add = [&](const std::string& spec) { out.push_back({spec, chowlab::generate_family(spec)}); };
    for (int n = 1; n <= 9; ++n) add("chain(" + std::to_string(n) + ")");
    for (int n = 1; n <= 6; ++n) add("boolean(" + std::to_string(n) + ")");
    for (const char* s : {"product(1)", "product(1,1)", "product(1,2)", "product(2,2)", "product(3,1)", "product(2,3)",
                          "product(1,1,1)", "product(2,1,2)", "product(1,1,1,1)", "product(3,3)", "product(2,2,2)",
                          "product(4,1,2)", "product(1,1,1,1,1)"})
        add(s);
    for (int m = 1; m <= 6; ++m) add("nonpure(" + std::to_string(m) + ")");
    for (int n = 7; n <= 9; ++n)
        for (int m = 1; m <= 3; ++m) add("nonlogconcave(" + std::to_string(n) + "," + std::to_string(m) + ")");
    return out;
}

}  // namespace corpus
