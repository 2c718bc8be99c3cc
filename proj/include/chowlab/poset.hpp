#pragma once

// Finite bounded posets with a weak rank function.
//
// Elements carry opaque string names and are addressed internally by dense
// indices assigned in input order. The order relation is kept as a full
// reachability closure; the stored covers are always the transitive
// reduction of whatever relations were supplied.

#include "chowlab/bigint.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chowlab {

using ElementId = std::size_t;
using CoverPair = std::pair<ElementId, ElementId>;

class PosetError : public Error {
public:
    using Error::Error;
};

class Poset {
public:
    Poset() = default;

    /// Builds a poset from named elements and (lower, upper) relation pairs.
    /// Pairs implied by transitivity are dropped. Throws PosetError on a
    /// cycle, a dangling name, duplicate names, or when the poset is not
    /// bounded.
    static Poset build(std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>& relations) {
        std::unordered_map<std::string, ElementId> lookup;
        for (ElementId i = 0; i < elements.size(); ++i) {
            if (!lookup.emplace(elements[i], i).second)
                throw PosetError("duplicate element id: " + elements[i]);
        }
        std::vector<CoverPair> pairs;
        pairs.reserve(relations.size());
        for (const auto& [lo, hi] : relations) {
            auto a = lookup.find(lo);
            auto b = lookup.find(hi);
            if (a == lookup.end()) throw PosetError("cover references unknown element: " + lo);
            if (b == lookup.end()) throw PosetError("cover references unknown element: " + hi);
            pairs.emplace_back(a->second, b->second);
        }
        return from_indices(std::move(elements), pairs);
    }

    /// Same as build(), with relations given by dense index.
    static Poset from_indices(std::vector<std::string> elements, const std::vector<CoverPair>& relations) {
        Poset p;
        p.names_ = std::move(elements);
        const std::size_t n = p.names_.size();
        if (n == 0) throw PosetError("poset has no elements");
        for (ElementId i = 0; i < n; ++i) {
            if (!p.lookup_.emplace(p.names_[i], i).second)
                throw PosetError("duplicate element id: " + p.names_[i]);
        }

        std::vector<std::vector<ElementId>> succ(n);
        std::vector<std::size_t> indegree(n, 0);
        for (const auto& [lo, hi] : relations) {
            if (lo >= n || hi >= n) throw PosetError("cover references unknown element index");
            if (lo == hi) throw PosetError("cycle detected at element " + p.names_[lo]);
            succ[lo].push_back(hi);
        }
        for (auto& s : succ) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            for (ElementId y : s) ++indegree[y];
        }

        // Kahn's algorithm, smallest index first so the order is reproducible.
        std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
        auto remaining = indegree;
        for (ElementId i = 0; i < n; ++i)
            if (remaining[i] == 0) ready.push(i);
        while (!ready.empty()) {
            ElementId x = ready.top();
            ready.pop();
            p.topo_.push_back(x);
            for (ElementId y : succ[x])
                if (--remaining[y] == 0) ready.push(y);
        }
        if (p.topo_.size() != n) {
            for (ElementId i = 0; i < n; ++i)
                if (remaining[i] != 0) throw PosetError("cycle detected through element " + p.names_[i]);
        }

        std::vector<ElementId> minimal, maximal;
        for (ElementId i = 0; i < n; ++i) {
            if (indegree[i] == 0) minimal.push_back(i);
            if (succ[i].empty()) maximal.push_back(i);
        }
        auto describe = [&](const std::vector<ElementId>& ids) {
            std::string s;
            for (ElementId i : ids) s += (s.empty() ? "" : ", ") + p.names_[i];
            return s;
        };
        if (minimal.size() != 1) throw PosetError("poset must have a unique minimal element, found: " + describe(minimal));
        if (maximal.size() != 1) throw PosetError("poset must have a unique maximal element, found: " + describe(maximal));
        p.bottom_ = minimal.front();
        p.top_ = maximal.front();

        p.up_.assign(n, boost::dynamic_bitset<>(n));
        p.down_.assign(n, boost::dynamic_bitset<>(n));
        for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
            ElementId x = *it;
            p.up_[x].set(x);
            for (ElementId y : succ[x]) p.up_[x] |= p.up_[y];
        }
        for (ElementId x = 0; x < n; ++x)
            for (auto y = p.up_[x].find_first(); y != boost::dynamic_bitset<>::npos; y = p.up_[x].find_next(y))
                p.down_[y].set(x);

        p.upper_.assign(n, {});
        p.lower_.assign(n, {});
        for (ElementId x = 0; x < n; ++x) {
            for (ElementId y : succ[x]) {
                auto between = p.up_[x] & p.down_[y];
                between.reset(x);
                between.reset(y);
                if (between.none()) {
                    p.upper_[x].push_back(y);
                    p.lower_[y].push_back(x);
                }
            }
        }
        for (auto& l : p.lower_) std::sort(l.begin(), l.end());

        p.above_.assign(n, {});
        for (ElementId x = 0; x < n; ++x)
            for (auto y = p.up_[x].find_first(); y != boost::dynamic_bitset<>::npos; y = p.up_[x].find_next(y))
                if (y != x) p.above_[x].push_back(y);
        return p;
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(ElementId x) const { return names_.at(x); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<ElementId> index_of(std::string_view name) const {
        auto it = lookup_.find(std::string(name));
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    ElementId bottom() const noexcept { return bottom_; }
    ElementId top() const noexcept { return top_; }

    bool leq(ElementId x, ElementId y) const { return up_.at(x).test(y); }
    bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }

    const std::vector<ElementId>& upper_covers(ElementId x) const { return upper_.at(x); }
    const std::vector<ElementId>& lower_covers(ElementId x) const { return lower_.at(x); }

    /// Elements strictly above x, in index order.
    const std::vector<ElementId>& strictly_above(ElementId x) const { return above_.at(x); }

    /// A linear extension, stable with respect to input order.
    const std::vector<ElementId>& topological_order() const noexcept { return topo_; }

    /// All cover pairs, sorted by (lower, upper).
    std::vector<CoverPair> covers() const {
        std::vector<CoverPair> out;
        for (ElementId x = 0; x < size(); ++x)
            for (ElementId y : upper_[x]) out.emplace_back(x, y);
        return out;
    }

    std::size_t cover_count() const {
        std::size_t c = 0;
        for (const auto& u : upper_) c += u.size();
        return c;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ElementId> lookup_;
    ElementId bottom_ = 0;
    ElementId top_ = 0;
    std::vector<ElementId> topo_;
    std::vector<boost::dynamic_bitset<>> up_;
    std::vector<boost::dynamic_bitset<>> down_;
    std::vector<std::vector<ElementId>> upper_;
    std::vector<std::vector<ElementId>> lower_;
    std::vector<std::vector<ElementId>> above_;
};

/// Weak rank stored as rho(x) = rho(0^, x); rho_{x,y} is rank(y) - rank(x).
class WeakRank {
public:
    WeakRank() = default;
    explicit WeakRank(std::vector<std::int64_t> values) : values_(std::move(values)) {}

    static WeakRank from_map(const Poset& p, const std::map<std::string, std::int64_t>& by_name) {
        std::vector<std::int64_t> values(p.size(), 0);
        for (ElementId x = 0; x < p.size(); ++x) {
            auto it = by_name.find(p.name(x));
            if (it == by_name.end()) throw PosetError("rank missing for element " + p.name(x));
            values[x] = it->second;
        }
        for (const auto& [name, value] : by_name)
            if (!p.index_of(name)) throw PosetError("rank given for unknown element " + name);
        return WeakRank(std::move(values));
    }

    std::int64_t operator[](ElementId x) const { return values_.at(x); }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    std::int64_t gap(ElementId lower, ElementId upper) const { return (*this)[upper] - (*this)[lower]; }

private:
    std::vector<std::int64_t> values_;
};

/// A poset together with its weak rank.
struct RankedPoset {
    Poset poset;
    WeakRank rank;

    std::int64_t weak_rank() const { return rank[poset.top()]; }
};

struct RankReport {
    bool bottom_is_zero = true;
    bool defined_everywhere = true;
    std::vector<CoverPair> violations;  // covers along which the rank does not increase

    bool valid() const noexcept { return bottom_is_zero && defined_everywhere && violations.empty(); }
};

inline RankReport validate_weak_rank(const Poset& p, const WeakRank& r) {
    RankReport report;
    if (r.size() != p.size()) {
        report.defined_everywhere = false;
        return report;
    }
    report.bottom_is_zero = r[p.bottom()] == 0;
    for (const auto& [lo, hi] : p.covers())
        if (r[hi] <= r[lo]) report.violations.emplace_back(lo, hi);
    return report;
}

inline void require_valid_rank(const Poset& p, const WeakRank& r) {
    auto report = validate_weak_rank(p, r);
    if (report.valid()) return;
    if (!report.defined_everywhere) throw PosetError("weak rank is not defined on every element");
    if (!report.bottom_is_zero) throw PosetError("weak rank of the bottom element must be 0");
    const auto& [lo, hi] = report.violations.front();
    throw PosetError("weak rank does not increase along cover " + p.name(lo) + " < " + p.name(hi));
}

/// True iff every cover has rank gap exactly 1.
inline bool is_ranked(const Poset& p, const WeakRank& r) {
    for (const auto& [lo, hi] : p.covers())
        if (r.gap(lo, hi) != 1) return false;
    return true;
}

/// W_i = number of elements of weak rank i, for i = 0..rank(1^).
inline std::vector<std::size_t> whitney_numbers(const Poset& p, const WeakRank& r) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(r[p.top()]) + 1, 0);
    for (ElementId x = 0; x < p.size(); ++x) ++counts.at(static_cast<std::size_t>(r[x]));
    return counts;
}

/// Depth-first stream of chains 0^ = p_0 < p_1 < ... < p_s whose consecutive
/// rank gaps are all >= min_gap. The chain reported excludes p_0; the empty
/// chain comes first. Successors are tried in element index order.
class ChainEnumerator {
public:
    ChainEnumerator(const Poset& p, const WeakRank& r, std::int64_t min_gap)
        : poset_(&p), rank_(&r), min_gap_(min_gap) {
        if (min_gap < 1) throw Error("min_gap must be at least 1");
    }

    bool next() {
        if (!started_) {
            started_ = true;
            stack_.push_back({poset_->bottom(), 0});
            return true;
        }
        while (!stack_.empty()) {
            auto& frame = stack_.back();
            const auto& above = poset_->strictly_above(frame.element);
            while (frame.cursor < above.size()) {
                ElementId y = above[frame.cursor++];
                if (rank_->gap(frame.element, y) >= min_gap_) {
                    chain_.push_back(y);
                    stack_.push_back({y, 0});
                    return true;
                }
            }
            stack_.pop_back();
            if (!chain_.empty() && !stack_.empty()) chain_.pop_back();
        }
        return false;
    }

    /// p_1..p_s of the current chain.
    const std::vector<ElementId>& chain() const noexcept { return chain_; }

private:
    struct Frame {
        ElementId element;
        std::size_t cursor;
    };
    const Poset* poset_;
    const WeakRank* rank_;
    std::int64_t min_gap_;
    bool started_ = false;
    std::vector<Frame> stack_;
    std::vector<ElementId> chain_;
};

template <class Fn>
void for_each_chain(const Poset& p, const WeakRank& r, std::int64_t min_gap, Fn&& fn) {
    ChainEnumerator it(p, r, min_gap);
    while (it.next()) fn(static_cast<const std::vector<ElementId>&>(it.chain()));
}

inline std::vector<std::vector<ElementId>> enumerate_chains_from_bottom(const Poset& p, const WeakRank& r,
                                                                        std::int64_t min_gap) {
    std::vector<std::vector<ElementId>> out;
    for_each_chain(p, r, min_gap, [&](const std::vector<ElementId>& c) { out.push_back(c); });
    return out;
}

}  // namespace chowlab
