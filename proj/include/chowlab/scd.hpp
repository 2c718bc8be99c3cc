#pragma once

// Symmetric chain decompositions of products of chains, the induced
// decomposition of the FY monomials, and its initial elements (SFY).

#include "chowlab/chow.hpp"
#include "chowlab/monomial.hpp"
#include "chowlab/poset.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace chowlab {

/// Coordinates (a_1, ..., a_n) with 0 <= a_s <= r_s.
using GridPoint = std::vector<int>;

/// C_{r_1} x ... x C_{r_n}, where C_r is the chain 0 < 1 < ... < r. Points are
/// addressed by a mixed-radix index with the first coordinate varying fastest.
class ChainProduct {
public:
    ChainProduct() = default;
    explicit ChainProduct(std::vector<int> bounds) : bounds_(std::move(bounds)) {
        if (bounds_.empty()) throw Error("product of chains needs at least one factor");
        std::size_t stride = 1;
        for (int r : bounds_) {
            if (r < 0) throw Error("chain lengths must be nonnegative");
            strides_.push_back(stride);
            stride *= static_cast<std::size_t>(r) + 1;
            total_rank_ += r;
        }
        size_ = stride;
    }

    const std::vector<int>& bounds() const noexcept { return bounds_; }
    std::size_t dimension() const noexcept { return bounds_.size(); }
    std::size_t size() const noexcept { return size_; }
    int total_rank() const noexcept { return total_rank_; }
    std::size_t stride(std::size_t k) const { return strides_.at(k); }

    int coordinate(std::size_t index, std::size_t k) const {
        return static_cast<int>((index / strides_[k]) % (static_cast<std::size_t>(bounds_[k]) + 1));
    }

    GridPoint decode(std::size_t index) const {
        GridPoint p(bounds_.size());
        for (std::size_t k = 0; k < bounds_.size(); ++k) p[k] = coordinate(index, k);
        return p;
    }

    std::size_t encode(const GridPoint& p) const {
        if (p.size() != bounds_.size()) throw Error("grid point has the wrong dimension");
        std::size_t index = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] < 0 || p[k] > bounds_[k]) throw Error("grid point out of bounds");
            index += static_cast<std::size_t>(p[k]) * strides_[k];
        }
        return index;
    }

    int rank(std::size_t index) const {
        int s = 0;
        for (std::size_t k = 0; k < bounds_.size(); ++k) s += coordinate(index, k);
        return s;
    }

    /// Number of points of each rank 0..total_rank.
    std::vector<std::size_t> whitney_numbers() const {
        std::vector<std::size_t> w{1};
        for (int r : bounds_) {
            std::vector<std::size_t> next(w.size() + static_cast<std::size_t>(r), 0);
            for (std::size_t i = 0; i < w.size(); ++i)
                for (int a = 0; a <= r; ++a) next[i + static_cast<std::size_t>(a)] += w[i];
            w = std::move(next);
        }
        return w;
    }

private:
    std::vector<int> bounds_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 0;
    int total_rank_ = 0;
};

/// A partition of a ranked poset into saturated chains, each listed bottom-up.
template <class T>
struct ChainDecomposition {
    std::vector<std::vector<T>> chains;

    std::vector<T> initial_elements() const {
        std::vector<T> out;
        out.reserve(chains.size());
        for (const auto& c : chains) out.push_back(c.front());
        return out;
    }

    std::size_t element_count() const {
        std::size_t n = 0;
        for (const auto& c : chains) n += c.size();
        return n;
    }
};

struct ProductDecomposition {
    ChainProduct host;
    ChainDecomposition<std::size_t> decomposition;
};

/// Recursive symmetric chain decomposition of C_{r_1} x ... x C_{r_n}: the
/// decomposition of C_{r_2} x ... x C_{r_n} is built first and each
/// C_{r_1} x S' is split into L-shaped chains
///   (j,0) < ... < (j, len-j) < (j+1, len-j) < ... < (r_1, len-j),
/// 0 <= j <= min(r_1, len). Coordinates keep the argument order.
inline ProductDecomposition scd_product_of_chains(const std::vector<int>& bounds) {
    ProductDecomposition out{ChainProduct(bounds), {}};
    const std::size_t n = bounds.size();

    // Chains of the innermost factor, as indices over the trailing coordinates.
    std::vector<std::vector<std::size_t>> chains(1);
    for (int a = 0; a <= bounds[n - 1]; ++a) chains[0].push_back(static_cast<std::size_t>(a));

    for (std::size_t k = n - 1; k-- > 0;) {
        const auto r1 = static_cast<std::size_t>(bounds[k]);
        std::vector<std::vector<std::size_t>> next;
        for (const auto& sub : chains) {
            const std::size_t len = sub.size() - 1;
            for (std::size_t j = 0; j <= std::min(r1, len); ++j) {
                std::vector<std::size_t> chain;
                chain.reserve(len + 1 - j + r1 - j);
                for (std::size_t t = 0; t <= len - j; ++t) chain.push_back(j + (r1 + 1) * sub[t]);
                for (std::size_t a = j + 1; a <= r1; ++a) chain.push_back(a + (r1 + 1) * sub[len - j]);
                next.push_back(std::move(chain));
            }
        }
        chains = std::move(next);
    }
    out.decomposition.chains = std::move(chains);
    return out;
}

/// {(a_1..a_n) : a_s <= r_s and a_s <= sum_{i>s} (r_i - 2 a_i)}.
inline std::vector<GridPoint> initial_elements_formula(const std::vector<int>& bounds) {
    if (bounds.empty()) throw Error("product of chains needs at least one factor");
    std::vector<GridPoint> out;
    GridPoint point(bounds.size(), 0);
    // Fill coordinates from the last one down, carrying the suffix sum.
    auto fill = [&](auto&& self, std::size_t s, long slack) -> void {
        const long hi = std::min<long>(bounds[s], slack);
        for (long a = 0; a <= hi; ++a) {
            point[s] = static_cast<int>(a);
            if (s == 0) out.push_back(point);
            else self(self, s - 1, slack + bounds[s] - 2 * a);
        }
    };
    fill(fill, bounds.size() - 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

struct DecompositionReport {
    bool partition = false;
    bool saturated = false;
    bool symmetric = false;
    bool formula_match = false;   // chain starts equal the closed-form initial set
    bool whitney_match = false;   // W(S_init) equals the difference sequence of W

    bool ok() const noexcept { return partition && saturated && symmetric && formula_match && whitney_match; }
};

inline DecompositionReport verify_product_decomposition(const ProductDecomposition& pd) {
    const ChainProduct& host = pd.host;
    const auto& chains = pd.decomposition.chains;
    DecompositionReport rep;

    std::vector<int> rank(host.size());
    for (std::size_t i = 0; i < host.size(); ++i) rank[i] = host.rank(i);

    std::vector<char> seen(host.size(), 0);
    bool partition = true;
    bool saturated = true;
    bool symmetric = true;
    for (const auto& chain : chains) {
        if (chain.empty()) {
            partition = false;
            continue;
        }
        for (std::size_t t = 0; t < chain.size(); ++t) {
            const std::size_t idx = chain[t];
            if (idx >= host.size() || seen[idx]) {
                partition = false;
                continue;
            }
            seen[idx] = 1;
            if (t == 0) continue;
            const std::size_t prev = chain[t - 1];
            bool cover = false;
            if (idx > prev) {
                const std::size_t diff = idx - prev;
                for (std::size_t k = 0; k < host.dimension() && !cover; ++k)
                    cover = host.stride(k) == diff && host.coordinate(prev, k) < host.bounds()[k];
            }
            saturated = saturated && cover;
        }
        if (chain.front() < host.size() && chain.back() < host.size())
            symmetric = symmetric && rank[chain.front()] + rank[chain.back()] == host.total_rank();
    }
    partition = partition && std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    rep.partition = partition;
    rep.saturated = saturated;
    rep.symmetric = symmetric;

    std::vector<std::size_t> starts;
    for (const auto& chain : chains)
        if (!chain.empty()) starts.push_back(chain.front());
    std::sort(starts.begin(), starts.end());
    std::vector<std::size_t> formula;
    for (const auto& p : initial_elements_formula(host.bounds())) formula.push_back(host.encode(p));
    std::sort(formula.begin(), formula.end());
    rep.formula_match = starts == formula;

    const auto w = host.whitney_numbers();
    const std::size_t half = static_cast<std::size_t>(host.total_rank()) / 2;
    std::vector<std::size_t> start_counts(half + 1, 0);
    bool whitney = true;
    for (std::size_t s : starts) {
        const auto k = static_cast<std::size_t>(rank[s]);
        if (k > half) whitney = false;
        else ++start_counts[k];
    }
    for (std::size_t k = 0; k <= half && whitney; ++k) {
        const long long expected = k == 0 ? static_cast<long long>(w[0])
                                          : static_cast<long long>(w[k]) - static_cast<long long>(w[k - 1]);
        whitney = expected == static_cast<long long>(start_counts[k]);
    }
    rep.whitney_match = whitney;
    return rep;
}

/// One chain per line, points written as "(a,b,...)" and separated by commas.
inline std::string format_product_decomposition(const ProductDecomposition& pd) {
    auto point = [&](std::size_t idx) {
        std::string s = "(";
        const auto p = pd.host.decode(idx);
        for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
        return s + ")";
    };
    std::string out;
    for (const auto& chain : pd.decomposition.chains) {
        for (std::size_t t = 0; t < chain.size(); ++t) out += (t ? "," : "") + point(chain[t]);
        out += "\n";
    }
    return out;
}

namespace detail {

/// Visits chains 0^ < p_1 < ... < p_s < 1^ with every gap >= 2 (including
/// the empty chain), in element order. With `sfy_feasible`, prunes chains on
/// which even all-ones exponents would violate the SFY degree bound.
template <class Fn>
void for_each_fy_support(const Poset& p, const WeakRank& r, bool sfy_feasible, Fn&& fn) {
    const std::int64_t n = r[p.top()];
    std::vector<ElementId> chain;
    auto feasible = [&] {
        const auto s = static_cast<std::int64_t>(chain.size());
        for (std::int64_t k = 0; k < s; ++k)
            if (n - r[chain[static_cast<std::size_t>(k)]] - 2 * (s - 1 - k) < 1) return false;
        return true;
    };
    auto recurse = [&](auto&& self, ElementId tip) -> void {
        for (ElementId y : p.strictly_above(tip)) {
            if (y == p.top() || r.gap(tip, y) < 2) continue;
            chain.push_back(y);
            if (!sfy_feasible || feasible()) {
                fn(static_cast<const std::vector<ElementId>&>(chain));
                self(self, y);
            }
            chain.pop_back();
        }
    };
    fn(static_cast<const std::vector<ElementId>&>(chain));
    recurse(recurse, p.bottom());
}

}  // namespace detail

/// FY monomials supported strictly below 1^ with
///   l_k <= min(d_k - 1, rho(P) - rho(p_k) - 2 sum_{i>k} l_i).
inline MonomialSet sfy_generate(const Poset& p, const WeakRank& r) {
    require_valid_rank(p, r);
    const std::int64_t n = r[p.top()];
    MonomialSet out;
    std::vector<std::uint32_t> exps;
    detail::for_each_fy_support(p, r, true, [&](const std::vector<ElementId>& chain) {
        const std::size_t s = chain.size();
        exps.assign(s, 0);
        // Exponents are chosen from the top of the chain down.
        auto assign = [&](auto&& self, std::size_t k, std::int64_t later) -> void {
            if (k == 0) {
                std::vector<Monomial::Factor> f;
                for (std::size_t i = 0; i < s; ++i) f.emplace_back(static_cast<Variable>(chain[i]), exps[i]);
                out.insert(Monomial(std::move(f)));
                return;
            }
            const std::size_t i = k - 1;
            const ElementId prev = i == 0 ? p.bottom() : chain[i - 1];
            const std::int64_t hi = std::min(r.gap(prev, chain[i]) - 1, n - r[chain[i]] - 2 * later);
            for (std::int64_t l = 1; l <= hi; ++l) {
                exps[i] = static_cast<std::uint32_t>(l);
                self(self, k - 1, later + l);
            }
        };
        assign(assign, s, 0);
    });
    return out;
}

struct FYDecomposition {
    ChainDecomposition<Monomial> decomposition;
    /// Number of support classes FY_C used.
    std::size_t support_classes = 0;
};

/// Decomposes FY class by class: FY_C (support C or C + 1^) is identified with
/// C_{d_1-2} x ... x C_{d_s-2} x C_{d_top-1}, in that order, via
/// x_{p_i}^{a_i+1} x_{1^}^{a_top}; each product is decomposed with
/// scd_product_of_chains and pulled back. Throws if the chain starts differ
/// from sfy_generate.
inline FYDecomposition scd_of_fy(const Poset& p, const WeakRank& r) {
    require_valid_rank(p, r);
    const std::int64_t n = r[p.top()];
    if (n < 1) throw Error("FY decomposition needs weak rank at least 1");
    FYDecomposition out;
    const auto top_var = static_cast<Variable>(p.top());
    detail::for_each_fy_support(p, r, false, [&](const std::vector<ElementId>& chain) {
        ++out.support_classes;
        std::vector<int> bounds;
        ElementId prev = p.bottom();
        for (ElementId x : chain) {
            bounds.push_back(static_cast<int>(r.gap(prev, x) - 2));
            prev = x;
        }
        bounds.push_back(static_cast<int>(n - r[prev] - 1));
        const auto pd = scd_product_of_chains(bounds);
        for (const auto& grid_chain : pd.decomposition.chains) {
            std::vector<Monomial> mchain;
            mchain.reserve(grid_chain.size());
            for (std::size_t idx : grid_chain) {
                std::vector<Monomial::Factor> f;
                for (std::size_t i = 0; i < chain.size(); ++i)
                    f.emplace_back(static_cast<Variable>(chain[i]),
                                   static_cast<std::uint32_t>(pd.host.coordinate(idx, i) + 1));
                f.emplace_back(top_var, static_cast<std::uint32_t>(pd.host.coordinate(idx, chain.size())));
                mchain.emplace_back(std::move(f));
            }
            out.decomposition.chains.push_back(std::move(mchain));
        }
    });
    std::set<Monomial> starts;
    for (const auto& c : out.decomposition.chains) starts.insert(c.front());
    if (MonomialSet(std::move(starts)) != sfy_generate(p, r))
        throw Error("initial elements of the FY decomposition differ from SFY");
    return out;
}

struct FYDecompositionReport {
    bool partition = false;  // chains partition FY exactly
    bool saturated = false;  // consecutive monomials differ by one variable
    bool symmetric = false;  // degrees k .. rank-1-k
    bool ok() const noexcept { return partition && saturated && symmetric; }
};

inline FYDecompositionReport verify_fy_decomposition(const Poset& p, const WeakRank& r, const FYDecomposition& d) {
    FYDecompositionReport rep;
    const auto n = static_cast<std::uint64_t>(r[p.top()]);
    const MonomialSet fy = enumerate_fy_monomials(p, r);
    std::set<Monomial> seen;
    bool distinct = true;
    rep.saturated = true;
    rep.symmetric = true;
    for (const auto& chain : d.decomposition.chains) {
        if (chain.empty()) {
            distinct = false;
            continue;
        }
        for (std::size_t t = 0; t < chain.size(); ++t) {
            distinct = seen.insert(chain[t]).second && distinct;
            if (t > 0)
                rep.saturated = rep.saturated && chain[t].degree() == chain[t - 1].degree() + 1 &&
                                chain[t - 1].divides(chain[t]);
        }
        rep.symmetric = rep.symmetric && chain.front().degree() + chain.back().degree() + 1 == n;
    }
    rep.partition = distinct && MonomialSet(std::move(seen)) == fy;
    return rep;
}

/// One chain per line, monomials separated by commas.
inline std::string format_fy_decomposition(const FYDecomposition& d, const Poset& p, const WeakRank& r) {
    std::string out;
    for (const auto& chain : d.decomposition.chains) {
        for (std::size_t t = 0; t < chain.size(); ++t) out += (t ? ", " : "") + format_fy_monomial(chain[t], p, r);
        out += "\n";
    }
    return out;
}

}  // namespace chowlab
