#pragma once

#include "chowlab/bigint.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace chowlab {

using Variable = std::uint32_t;

/// A monomial x_{v1}^{e1} ... x_{vk}^{ek}, factors sorted by variable with
/// positive exponents. The empty monomial is 1.
class Monomial {
public:
    using Factor = std::pair<Variable, std::uint32_t>;

    Monomial() = default;

    /// Accepts factors in any order; repeated variables are merged and zero
    /// exponents dropped.
    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end());
        std::vector<Factor> merged;
        for (const auto& [v, e] : factors_) {
            if (e == 0) continue;
            if (!merged.empty() && merged.back().first == v) merged.back().second += e;
            else merged.emplace_back(v, e);
        }
        factors_ = std::move(merged);
    }

    const std::vector<Factor>& factors() const noexcept { return factors_; }

    std::uint64_t degree() const noexcept {
        std::uint64_t d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    std::uint32_t exponent(Variable v) const noexcept {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
        return it != factors_.end() && it->first == v ? it->second : 0;
    }

    /// Divisors obtained by lowering one exponent by one, highest variable first.
    std::vector<Monomial> immediate_divisors() const {
        std::vector<Monomial> out;
        out.reserve(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            Monomial d = *this;
            if (--d.factors_[i].second == 0) d.factors_.erase(d.factors_.begin() + static_cast<long>(i));
            out.push_back(std::move(d));
        }
        return out;
    }

    Monomial times(Variable v, std::uint32_t e = 1) const {
        auto f = factors_;
        f.emplace_back(v, e);
        return Monomial(std::move(f));
    }

    bool divides(const Monomial& other) const {
        for (const auto& [v, e] : factors_)
            if (other.exponent(v) < e) return false;
        return true;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// A finite set of monomials with degree-indexed counts.
class MonomialSet {
public:
    MonomialSet() = default;
    explicit MonomialSet(std::set<Monomial> members) : members_(std::move(members)) {}

    bool insert(Monomial m) { return members_.insert(std::move(m)).second; }
    bool contains(const Monomial& m) const { return members_.count(m) != 0; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    const std::set<Monomial>& members() const noexcept { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    /// h_vector()[k] = number of members of degree k.
    std::vector<std::size_t> h_vector() const {
        std::vector<std::size_t> h;
        for (const auto& m : members_) {
            auto d = static_cast<std::size_t>(m.degree());
            if (h.size() <= d) h.resize(d + 1, 0);
            ++h[d];
        }
        return h;
    }

    IntSequence h_sequence() const {
        auto h = h_vector();
        return IntSequence(h.begin(), h.end());
    }

    friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

private:
    std::set<Monomial> members_;
};

struct OrderIdealReport {
    bool is_order_ideal = true;
    /// (member, missing divisor) when the set is not divisor-closed.
    std::optional<std::pair<Monomial, Monomial>> witness;
};

inline OrderIdealReport is_monomial_order_ideal(const MonomialSet& s) {
    for (const auto& m : s) {
        for (auto& d : m.immediate_divisors()) {
            if (!s.contains(d)) return {false, std::make_pair(m, std::move(d))};
        }
    }
    return {};
}

struct PurenessReport {
    bool pure = true;
    /// Common degree of the maximal members, when there is one.
    std::optional<std::uint64_t> degree;
    /// All divisibility-maximal members.
    std::vector<Monomial> maximal;
    /// A maximal member of the wrong degree.
    std::optional<Monomial> witness;
};

/// Decides whether an order ideal is pure. Without an expected degree the
/// reference degree is the largest degree among maximal members.
inline PurenessReport is_pure_ideal(const MonomialSet& s, std::optional<std::uint64_t> expected_degree = {}) {
    if (!is_monomial_order_ideal(s).is_order_ideal) throw Error("pureness is only defined for monomial order ideals");
    std::set<Monomial> covered;
    for (const auto& m : s)
        for (auto& d : m.immediate_divisors()) covered.insert(std::move(d));

    PurenessReport report;
    std::uint64_t top = 0;
    for (const auto& m : s) {
        if (covered.count(m) == 0) {
            report.maximal.push_back(m);
            top = std::max(top, m.degree());
        }
    }
    const std::uint64_t reference = expected_degree.value_or(top);
    if (report.maximal.empty()) {
        report.pure = !expected_degree.has_value();
        return report;
    }
    for (const auto& m : report.maximal) {
        if (m.degree() != reference) {
            report.pure = false;
            if (!report.witness) report.witness = m;
        }
    }
    if (report.pure) report.degree = reference;
    return report;
}

/// Formats "x[a]^2 * x[b]^1", or "1" for the empty monomial. Factors are
/// written in the order given by `order_key` (variable index by default).
template <class NameFn, class KeyFn>
std::string format_monomial(const Monomial& m, NameFn&& name, KeyFn&& order_key) {
    if (m.factors().empty()) return "1";
    auto factors = m.factors();
    std::stable_sort(factors.begin(), factors.end(),
                     [&](const auto& a, const auto& b) { return order_key(a.first) < order_key(b.first); });
    std::string out;
    for (const auto& [v, e] : factors) {
        if (!out.empty()) out += " * ";
        out += "x[" + std::string(name(v)) + "]^" + std::to_string(e);
    }
    return out;
}

template <class NameFn>
std::string format_monomial(const Monomial& m, NameFn&& name) {
    return format_monomial(m, std::forward<NameFn>(name), [](Variable v) { return v; });
}

}  // namespace chowlab
