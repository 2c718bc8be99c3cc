#pragma once

// Sequence properties: palindromicity, unimodality, log-concavity, Macaulay
// O-sequences, SI-sequences, pure O-sequences and Hibi's inequalities.

#include "chowlab/bigint.hpp"
#include "chowlab/monomial.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace chowlab {

/// A yes/no answer with the first offending index on "no".
struct Verdict {
    bool holds = true;
    std::optional<std::size_t> index;

    explicit operator bool() const noexcept { return holds; }
    static Verdict yes() { return {}; }
    static Verdict no(std::size_t at) { return {false, at}; }
};

inline Verdict is_nonnegative(const IntSequence& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0) return Verdict::no(i);
    return Verdict::yes();
}

/// a_i = a_{d-i} for all i; witness is the first i that differs.
inline Verdict is_palindromic(const IntSequence& a) {
    const std::size_t d = a.empty() ? 0 : a.size() - 1;
    for (std::size_t i = 0; i < a.size() / 2; ++i)
        if (a[i] != a[d - i]) return Verdict::no(i);
    return Verdict::yes();
}

/// Weakly increasing then weakly decreasing; witness is the index at which
/// the sequence rises again after having dropped.
inline Verdict is_unimodal(const IntSequence& a) {
    bool descending = false;
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] < a[i - 1]) descending = true;
        else if (a[i] > a[i - 1] && descending) return Verdict::no(i);
    }
    return Verdict::yes();
}

/// a_i^2 >= a_{i-1} a_{i+1} for every internal index i.
inline Verdict is_log_concave(const IntSequence& a) {
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if (a[i] * a[i] < a[i - 1] * a[i + 1]) return Verdict::no(i);
    return Verdict::yes();
}

inline bool has_internal_zeros(const IntSequence& a) {
    std::size_t first = a.size(), last = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) {
            first = std::min(first, i);
            last = i;
        }
    }
    for (std::size_t i = first; i < last; ++i)
        if (a[i] == 0) return true;
    return false;
}

/// Equality of h-vectors, ignoring trailing zeros.
inline bool same_h_vector(IntSequence a, IntSequence b) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (!b.empty() && b.back() == 0) b.pop_back();
    return a == b;
}

/// Differential sequence (h_0, h_1 - h_0, ..., h_{floor(e/2)} - h_{floor(e/2)-1}).
/// Only defined for palindromic unimodal input.
inline IntSequence delta(const IntSequence& h) {
    if (h.empty()) throw Error("differential sequence of an empty sequence");
    if (!is_palindromic(h)) throw Error("differential sequence requires a palindromic sequence");
    if (!is_unimodal(h)) throw Error("differential sequence requires a unimodal sequence");
    const std::size_t half = (h.size() - 1) / 2;
    IntSequence out{h[0]};
    for (std::size_t i = 1; i <= half; ++i) out.push_back(h[i] - h[i - 1]);
    return out;
}

inline BigInt binomial(const BigInt& n, std::uint64_t k) {
    if (n < 0 || BigInt(k) > n) return 0;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

/// n = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_delta, delta), with
/// k_d > k_{d-1} > ... > k_delta >= delta >= 1.
struct BinomialExpansion {
    std::uint64_t degree = 0;
    /// k_d, k_{d-1}, ..., k_delta.
    std::vector<BigInt> indices;

    std::uint64_t lowest() const noexcept { return degree + 1 - indices.size(); }

    BigInt value() const {
        BigInt total = 0;
        for (std::size_t t = 0; t < indices.size(); ++t) total += binomial(indices[t], degree - t);
        return total;
    }
};

namespace detail {
/// Largest k with C(k, d) <= n (n >= 1, d >= 1).
inline BigInt largest_binomial_index(const BigInt& n, std::uint64_t d) {
    BigInt lo = d;  // C(d, d) = 1 <= n
    BigInt hi = lo + 1;
    while (binomial(hi, d) <= n) {
        lo = hi;
        hi = hi * 2;
    }
    // C(lo, d) <= n < C(hi, d)
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (binomial(mid, d) <= n) lo = mid;
        else hi = mid;
    }
    return lo;
}
}  // namespace detail

/// Greedy d-binomial expansion.
inline BinomialExpansion d_binomial_expansion(const BigInt& n, std::uint64_t d) {
    if (n < 1) throw Error("binomial expansion needs n >= 1");
    if (d < 1) throw Error("binomial expansion needs d >= 1");
    BinomialExpansion out{d, {}};
    BigInt rest = n;
    for (std::uint64_t j = d; j >= 1 && rest > 0; --j) {
        BigInt k = detail::largest_binomial_index(rest, j);
        rest -= binomial(k, j);
        out.indices.push_back(std::move(k));
    }
    return out;
}

/// Macaulay's bound for h_{d+1} given h_d = n; zero when n = 0.
inline BigInt macaulay_next_bound(const BigInt& n, std::uint64_t d) {
    if (n < 0) throw Error("Macaulay bound needs n >= 0");
    if (d < 1) throw Error("Macaulay bound needs d >= 1");
    if (n == 0) return 0;
    const auto e = d_binomial_expansion(n, d);
    BigInt bound = 0;
    for (std::size_t t = 0; t < e.indices.size(); ++t) bound += binomial(e.indices[t] + 1, d - t + 1);
    return bound;
}

/// Witness i is the first index with h_{i+1} above the Macaulay bound of h_i
/// (or the first negative entry).
inline Verdict is_O_sequence(const IntSequence& h) {
    if (h.empty() || h[0] != 1) throw Error("an O-sequence must start with 1");
    if (auto neg = is_nonnegative(h); !neg) return neg;
    for (std::size_t i = 1; i + 1 < h.size(); ++i)
        if (h[i + 1] > macaulay_next_bound(h[i], i)) return Verdict::no(i);
    return Verdict::yes();
}

struct SIReport {
    bool holds = false;
    std::string reason;  // empty when holds
    IntSequence differential;
};

/// Nonnegative, palindromic, unimodal, and the differential sequence is an
/// O-sequence.
inline SIReport is_SI_sequence(const IntSequence& h) {
    SIReport rep;
    if (h.empty()) {
        rep.reason = "empty sequence";
        return rep;
    }
    if (auto v = is_nonnegative(h); !v) {
        rep.reason = "negative entry at index " + std::to_string(*v.index);
        return rep;
    }
    if (auto v = is_palindromic(h); !v) {
        rep.reason = "not palindromic at index " + std::to_string(*v.index);
        return rep;
    }
    if (auto v = is_unimodal(h); !v) {
        rep.reason = "not unimodal at index " + std::to_string(*v.index);
        return rep;
    }
    rep.differential = delta(h);
    if (rep.differential[0] != 1) {
        rep.reason = "differential sequence does not start with 1";
        return rep;
    }
    if (auto v = is_O_sequence(rep.differential); !v) {
        rep.reason = "differential sequence violates Macaulay's bound after index " + std::to_string(*v.index);
        return rep;
    }
    rep.holds = true;
    return rep;
}

/// (1, h_1, h_2) is a pure O-sequence iff floor((h_1+1)/2) <= h_2 <= C(h_1+1, 2).
inline bool is_pure_O_len3(const IntSequence& h) {
    if (h.size() != 3) throw Error("length-3 pureness test needs exactly three entries");
    if (h[0] != 1) throw Error("sequence must start with 1");
    if (h[1] < 1) throw Error("length-3 pureness test needs h_1 >= 1");
    return (h[1] + 1) / 2 <= h[2] && h[2] <= binomial(h[1] + 1, 2);
}

/// h_i <= h_j whenever i <= j <= e - i.
struct HibiReport {
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

inline HibiReport hibi_check(const IntSequence& h) {
    if (h.empty()) return {};
    const std::size_t e = h.size() - 1;
    for (std::size_t i = 0; 2 * i <= e; ++i)
        for (std::size_t j = i; j <= e - i; ++j)
            if (h[i] > h[j]) return {false, std::make_pair(i, j)};
    return {};
}

struct LogConcavityFromDelta {
    bool delta_log_concave = false;
    bool h_log_concave = false;
    /// The implication only applies when the differential sequence has no
    /// internal zeros.
    bool implication_applies = false;
    bool implication_holds() const noexcept { return !implication_applies || h_log_concave; }
};

inline LogConcavityFromDelta logconcavity_from_delta(const IntSequence& h) {
    const IntSequence d = delta(h);
    LogConcavityFromDelta rep;
    rep.delta_log_concave = is_log_concave(d).holds;
    rep.h_log_concave = is_log_concave(h).holds;
    rep.implication_applies = rep.delta_log_concave && !has_internal_zeros(d);
    return rep;
}

struct IdealSearchResult {
    /// The ideal found, or empty when the search space was exhausted.
    std::optional<MonomialSet> ideal;
    std::uint64_t nodes = 0;
};

namespace detail {

class IdealSearch {
public:
    IdealSearch(std::vector<std::size_t> h, bool pure, std::uint64_t node_cap)
        : h_(std::move(h)), pure_(pure), cap_(node_cap) {}

    IdealSearchResult run() {
        std::set<Monomial> layer0{Monomial{}};
        std::set<Monomial> layer1;
        for (std::size_t v = 0; v < h_[1]; ++v) layer1.insert(Monomial({{static_cast<Variable>(v), 1}}));
        layers_ = {layer0, layer1};
        IdealSearchResult res;
        if (h_.size() == 2 || extend(2)) {
            std::set<Monomial> all;
            for (const auto& l : layers_) all.insert(l.begin(), l.end());
            res.ideal = MonomialSet(std::move(all));
        }
        res.nodes = nodes_;
        return res;
    }

private:
    bool extend(std::size_t degree) {
        if (degree == h_.size()) return true;
        const auto& below = layers_[degree - 1];
        std::set<Monomial> cand_set;
        for (const auto& m : below) {
            for (std::size_t v = 0; v < h_[1]; ++v) {
                Monomial up = m.times(static_cast<Variable>(v));
                bool closed = true;
                for (const auto& d : up.immediate_divisors()) closed = closed && below.count(d) != 0;
                if (closed) cand_set.insert(std::move(up));
            }
        }
        std::vector<Monomial> cand(cand_set.begin(), cand_set.end());
        if (cand.size() < h_[degree]) return false;
        std::vector<std::size_t> chosen;
        std::vector<std::size_t> counts(h_[1], 0);
        return choose(degree, cand, 0, chosen, counts);
    }

    static Variable min_variable(const Monomial& m) { return m.factors().front().first; }

    // Occurrence counts in the degree-2 layer are non-increasing in the
    // variable index; every ideal can be relabelled to satisfy this.
    bool counts_canonical(const std::vector<Monomial>& cand, std::size_t next, const std::vector<std::size_t>& counts) const {
        const std::size_t final_blocks = next < cand.size() ? min_variable(cand[next]) : counts.size();
        for (std::size_t v = 0; v < final_blocks && v < counts.size(); ++v)
            for (std::size_t w = v + 1; w < counts.size(); ++w)
                if (counts[w] > counts[v]) return false;
        return true;
    }

    bool choose(std::size_t degree, const std::vector<Monomial>& cand, std::size_t next,
                std::vector<std::size_t>& chosen, std::vector<std::size_t>& counts) {
        if (++nodes_ > cap_) throw SizeCapExceeded("pure ideal search exceeded its node cap");
        if (degree == 2 && next > 0 && (next == cand.size() || min_variable(cand[next]) != min_variable(cand[next - 1])))
            if (!counts_canonical(cand, next, counts)) return false;
        const std::size_t need = h_[degree] - chosen.size();
        if (need == 0) {
            std::set<Monomial> layer;
            for (std::size_t i : chosen) layer.insert(cand[i]);
            if (pure_) {
                for (const auto& m : layers_[degree - 1]) {
                    bool covered = false;
                    for (const auto& u : layer) covered = covered || m.divides(u);
                    if (!covered) return false;
                }
            }
            if (degree == 2 && !counts_canonical(cand, cand.size(), counts)) return false;
            layers_.push_back(std::move(layer));
            if (extend(degree + 1)) return true;
            layers_.pop_back();
            return false;
        }
        if (cand.size() - next < need) return false;
        chosen.push_back(next);
        if (degree == 2)
            for (const auto& [v, e] : cand[next].factors()) ++counts[v];
        bool found = choose(degree, cand, next + 1, chosen, counts);
        if (degree == 2)
            for (const auto& [v, e] : cand[next].factors()) --counts[v];
        chosen.pop_back();
        if (found) return true;
        return choose(degree, cand, next + 1, chosen, counts);
    }

    std::vector<std::size_t> h_;
    bool pure_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    std::vector<std::set<Monomial>> layers_;
};

}  // namespace detail

/// Exhaustive search for a monomial order ideal (pure of degree e = len - 1
/// when `pure`) with h-vector h over at most var_limit variables. Throws
/// SizeCapExceeded when the length exceeds degree_limit + 1 or the search
/// exceeds its node budget.
inline IdealSearchResult order_ideal_bruteforce(const IntSequence& h, bool pure, std::size_t var_limit,
                                                std::size_t degree_limit, std::uint64_t node_cap = 0) {
    if (h.empty()) throw Error("empty h-vector");
    if (h.size() - 1 > degree_limit) throw SizeCapExceeded("h-vector is longer than the degree limit");
    for (const auto& x : h)
        if (x < 0) return {};
    if (h[0] != 1) return {};
    if (h.size() == 1) return {MonomialSet(std::set<Monomial>{Monomial{}}), 0};
    if (h[1] > var_limit) return {};
    if (pure && h.size() == 2 && h[1] == 0) return {};
    std::vector<std::size_t> hs;
    for (const auto& x : h) {
        if (x > 1'000'000) throw SizeCapExceeded("h-vector entry too large for brute force");
        hs.push_back(x.convert_to<std::size_t>());
    }
    detail::IdealSearch search(std::move(hs), pure, node_cap ? node_cap : size_cap(50'000'000));
    return search.run();
}

inline IdealSearchResult pure_ideal_bruteforce(const IntSequence& h, std::size_t var_limit, std::size_t degree_limit) {
    return order_ideal_bruteforce(h, true, var_limit, degree_limit);
}

}  // namespace chowlab
