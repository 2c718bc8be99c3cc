#pragma once

// Chow polynomial of a bounded weakly ranked poset,
//
//   H_P(t) = sum over chains 0^ = p_0 < p_1 < ... < p_s <= 1^ of
//            prod_i (t + t^2 + ... + t^(d_i - 1)),   d_i = rho(p_i) - rho(p_{i-1}),
//
// computed two ways: by summing over chains, and by counting
// Feichtner-Yuzvinsky monomials degree by degree.

#include "chowlab/monomial.hpp"
#include "chowlab/polynomial.hpp"
#include "chowlab/poset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chowlab {

/// x_{p_1}^{l_1} ... x_{p_s}^{l_s} over a chain 0^ < p_1 < ... < p_s <= 1^
/// with 1 <= l_i <= d_i - 1.
struct FYMonomial {
    std::vector<ElementId> support;
    std::vector<std::uint32_t> exponents;

    std::uint64_t degree() const noexcept {
        std::uint64_t d = 0;
        for (auto e : exponents) d += e;
        return d;
    }

    Monomial to_monomial() const {
        std::vector<Monomial::Factor> f;
        f.reserve(support.size());
        for (std::size_t i = 0; i < support.size(); ++i)
            f.emplace_back(static_cast<Variable>(support[i]), exponents[i]);
        return Monomial(std::move(f));
    }
};

namespace detail {

inline void require_chow_input(const Poset& p, const WeakRank& r) {
    require_valid_rank(p, r);
    if (r[p.top()] < 1) throw Error("Chow polynomial needs weak rank at least 1");
}

template <class Fn>
void fy_recurse(const Poset& p, const WeakRank& r, std::uint64_t budget, FYMonomial& current, Fn& fn) {
    const ElementId tip = current.support.empty() ? p.bottom() : current.support.back();
    for (ElementId y : p.strictly_above(tip)) {
        const std::int64_t gap = r.gap(tip, y);
        if (gap < 2) continue;
        const auto max_exp = static_cast<std::uint64_t>(gap - 1);
        current.support.push_back(y);
        current.exponents.push_back(0);
        for (std::uint64_t e = 1; e <= max_exp && e <= budget; ++e) {
            current.exponents.back() = static_cast<std::uint32_t>(e);
            fn(static_cast<const FYMonomial&>(current));
            fy_recurse(p, r, budget - e, current, fn);
        }
        current.support.pop_back();
        current.exponents.pop_back();
    }
}

}  // namespace detail

/// Visits every FY monomial once, including the empty monomial, in
/// lexicographic (chain, exponent) order. Truncated at max_degree if given.
template <class Fn>
void for_each_fy_monomial(const Poset& p, const WeakRank& r, std::optional<std::uint64_t> max_degree, Fn&& fn) {
    require_valid_rank(p, r);
    FYMonomial current;
    fn(static_cast<const FYMonomial&>(current));
    detail::fy_recurse(p, r, max_degree.value_or(UINT64_MAX), current, fn);
}

inline MonomialSet enumerate_fy_monomials(const Poset& p, const WeakRank& r,
                                          std::optional<std::uint64_t> max_degree = {}) {
    MonomialSet out;
    for_each_fy_monomial(p, r, max_degree, [&](const FYMonomial& m) { out.insert(m.to_monomial()); });
    return out;
}

/// Chain sum, accumulated over elements in topological order: F(y) collects
/// the contribution of every chain ending at y, and H is the sum of all F.
inline IntPolynomial chow_chain_sum(const Poset& p, const WeakRank& r) {
    detail::require_chow_input(p, r);
    std::vector<IntPolynomial> ending_at(p.size());
    ending_at[p.bottom()] = IntPolynomial{1};
    IntPolynomial total;
    for (ElementId x : p.topological_order()) {
        const IntPolynomial& fx = ending_at[x];
        if (fx.is_zero()) continue;
        total += fx;
        for (ElementId y : p.strictly_above(x)) {
            const std::int64_t gap = r.gap(x, y);
            for (std::int64_t j = 1; j < gap; ++j) ending_at[y].add_scaled(fx, 1, static_cast<std::size_t>(j));
        }
    }
    const auto n = r[p.top()];
    if (total.degree() != n - 1 || total.leading() != 1)
        throw Error("Chow polynomial is not monic of degree rank - 1");
    return total;
}

/// The same sum taken literally: one product of gap factors per chain, chains
/// with a unit gap skipped.
inline IntPolynomial chow_chain_sum_by_enumeration(const Poset& p, const WeakRank& r) {
    detail::require_chow_input(p, r);
    IntPolynomial total;
    for_each_chain(p, r, 2, [&](const std::vector<ElementId>& chain) {
        IntPolynomial term{1};
        ElementId prev = p.bottom();
        for (ElementId x : chain) {
            term = term * gap_factor(r.gap(prev, x));
            prev = x;
        }
        total += term;
    });
    return total;
}

/// h_k = |FY^k|, counted by visiting every FY monomial.
inline IntPolynomial chow_via_fy(const Poset& p, const WeakRank& r) {
    detail::require_chow_input(p, r);
    std::vector<std::uint64_t> counts;
    for_each_fy_monomial(p, r, std::nullopt, [&](const FYMonomial& m) {
        const auto d = static_cast<std::size_t>(m.degree());
        if (counts.size() <= d) counts.resize(d + 1, 0);
        ++counts[d];
    });
    IntPolynomial h(std::vector<BigInt>(counts.begin(), counts.end()));
#ifndef NDEBUG
    if (!(h == chow_chain_sum(p, r))) throw Error("FY count disagrees with the chain sum");
#endif
    return h;
}

/// Writes FY factors in chain order (by weak rank).
inline std::string format_fy_monomial(const Monomial& m, const Poset& p, const WeakRank& r) {
    return format_monomial(
        m, [&](Variable v) { return p.name(v); }, [&](Variable v) { return r[v]; });
}

/// One monomial per line.
inline std::string format_monomial_set(const MonomialSet& s, const Poset& p, const WeakRank& r) {
    std::string out;
    for (const auto& m : s) out += format_fy_monomial(m, p, r) + "\n";
    return out;
}

}  // namespace chowlab
