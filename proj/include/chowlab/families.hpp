#pragma once

// Named poset families, the two counterexample families, and a seeded
// random generator for graded posets. Every generator is deterministic in
// its parameters.

#include "chowlab/poset.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chowlab {

namespace detail {

inline RankedPoset assemble(std::vector<std::string> names, const std::vector<CoverPair>& covers,
                            std::vector<std::int64_t> rank) {
    Poset p = Poset::from_indices(std::move(names), covers);
    return {std::move(p), WeakRank(std::move(rank))};
}

/// Uniform integer in [lo, hi] by rejection, independent of the standard
/// library's distribution implementation.
inline std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return rng();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + x % span;
}

}  // namespace detail

/// C_n = 0 < 1 < ... < n with rank(i) = i.
inline RankedPoset gen_chain(int n) {
    if (n < 1) throw Error("chain needs n >= 1");
    std::vector<std::string> names;
    std::vector<CoverPair> covers;
    std::vector<std::int64_t> rank;
    for (int i = 0; i <= n; ++i) {
        names.push_back(std::to_string(i));
        rank.push_back(i);
        if (i > 0) covers.emplace_back(i - 1, i);
    }
    return detail::assemble(std::move(names), covers, std::move(rank));
}

/// Subsets of {1..n} under inclusion, rank = cardinality. Subsets are named
/// "{}", "{1}", "{1 2}", ...
inline RankedPoset gen_boolean(int n) {
    if (n < 1 || static_cast<std::uint64_t>(n) > size_cap(6))
        throw Error("boolean lattice needs 1 <= n <= " + std::to_string(size_cap(6)));
    if (n > 20) throw Error("boolean lattice is limited to n <= 20");
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::string> names;
    std::vector<CoverPair> covers;
    std::vector<std::int64_t> rank;
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::string name = "{";
        int card = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                if (card++ > 0) name += ' ';
                name += std::to_string(i + 1);
            }
            else covers.emplace_back(mask, mask | (std::size_t{1} << i));
        }
        names.push_back(name + "}");
        rank.push_back(card);
    }
    return detail::assemble(std::move(names), covers, std::move(rank));
}

/// C_{r_1} x ... x C_{r_k} under the componentwise order, rank = coordinate
/// sum. Points are named "a1.a2...", first coordinate varying fastest.
inline RankedPoset gen_product_of_chains(const std::vector<int>& bounds) {
    if (bounds.empty()) throw Error("product of chains needs at least one factor");
    std::uint64_t count = 1;
    for (int r : bounds) {
        if (r < 1) throw Error("product of chains needs all r_i >= 1");
        count *= static_cast<std::uint64_t>(r) + 1;
        if (count > size_cap(4096)) throw SizeCapExceeded("product of chains exceeds the size cap");
    }
    std::vector<std::string> names;
    std::vector<CoverPair> covers;
    std::vector<std::int64_t> rank;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rest = idx, stride = 1;
        std::string name;
        std::int64_t sum = 0;
        for (std::size_t k = 0; k < bounds.size(); ++k) {
            const auto base = static_cast<std::uint64_t>(bounds[k]) + 1;
            const auto a = rest % base;
            rest /= base;
            name += (k ? "." : "") + std::to_string(a);
            sum += static_cast<std::int64_t>(a);
            if (a < static_cast<std::uint64_t>(bounds[k])) covers.emplace_back(idx, idx + stride);
            stride *= base;
        }
        names.push_back(std::move(name));
        rank.push_back(sum);
    }
    return detail::assemble(std::move(names), covers, std::move(rank));
}

/// 0^ < a_i < 1^ (i = 1..m) beside the chain 0^ < b_1 < b_2 < b_3 < b_4 < 1^,
/// with rho(a_i) = 4, rho(b_i) = i, rho(1^) = 5. Weakly ranked, not ranked.
inline RankedPoset gen_nonpure_counterexample(int m) {
    if (m < 1) throw Error("non-pure family needs m >= 1");
    std::vector<std::string> names{"0hat"};
    std::vector<std::int64_t> rank{0};
    std::vector<CoverPair> covers;
    const std::size_t first_a = 1;
    for (int i = 1; i <= m; ++i) {
        names.push_back("a" + std::to_string(i));
        rank.push_back(4);
    }
    const std::size_t first_b = names.size();
    for (int i = 1; i <= 4; ++i) {
        names.push_back("b" + std::to_string(i));
        rank.push_back(i);
    }
    const std::size_t top = names.size();
    names.push_back("1hat");
    rank.push_back(5);
    for (int i = 0; i < m; ++i) {
        covers.emplace_back(0, first_a + static_cast<std::size_t>(i));
        covers.emplace_back(first_a + static_cast<std::size_t>(i), top);
    }
    covers.emplace_back(0, first_b);
    for (std::size_t i = 0; i < 3; ++i) covers.emplace_back(first_b + i, first_b + i + 1);
    covers.emplace_back(first_b + 3, top);
    return detail::assemble(std::move(names), covers, std::move(rank));
}

/// Two ranked branches between 0^ and 1^ (rank n). The left branch a_1..a_{n-1}
/// is a chain except that ranks 2, 4 and 6 are antichains of m^2 elements
/// a{r}_{j}; the right branch b_1..b_{n-1} is a chain except that rank 2 is an
/// antichain of m^3 elements b2_{j}. Consecutive levels of a branch are
/// completely joined.
inline RankedPoset gen_nonlogconcave_counterexample(int n, int m) {
    if (n < 7) throw Error("non-log-concave family needs n >= 7");
    if (m < 1) throw Error("non-log-concave family needs m >= 1");
    const std::uint64_t wide = static_cast<std::uint64_t>(m) * m * m;
    if (wide > size_cap(8000)) throw SizeCapExceeded("non-log-concave family: m^3 exceeds the size cap");

    std::vector<std::string> names{"0hat"};
    std::vector<std::int64_t> rank{0};
    std::vector<CoverPair> covers;
    auto branch = [&](char label, auto width_of) {
        std::vector<std::size_t> previous{0};
        for (int r = 1; r <= n - 1; ++r) {
            const std::uint64_t width = width_of(r);
            std::vector<std::size_t> level;
            for (std::uint64_t j = 1; j <= width; ++j) {
                std::string name = std::string(1, label) + std::to_string(r);
                if (width > 1) name += "_" + std::to_string(j);
                level.push_back(names.size());
                names.push_back(std::move(name));
                rank.push_back(r);
            }
            for (std::size_t lo : previous)
                for (std::size_t hi : level) covers.emplace_back(lo, hi);
            previous = std::move(level);
        }
        return previous;
    };
    const std::uint64_t square = static_cast<std::uint64_t>(m) * m;
    auto left_top = branch('a', [&](int r) { return (r == 2 || r == 4 || r == 6) ? square : 1; });
    auto right_top = branch('b', [&](int r) { return r == 2 ? wide : 1; });
    const std::size_t top = names.size();
    names.push_back("1hat");
    rank.push_back(n);
    for (std::size_t x : left_top) covers.emplace_back(x, top);
    for (std::size_t x : right_top) covers.emplace_back(x, top);
    return detail::assemble(std::move(names), covers, std::move(rank));
}

struct RandomGradedOptions {
    std::uint64_t seed = 0;
    int max_rank = 4;
    int max_width = 3;
    /// Re-rank with random positive gaps so covers need not have gap 1.
    bool inflate = false;
};

/// Layered random poset: level sizes in [1, max_width], each pair between
/// consecutive levels joined with probability 1/2, and orphans attached to a
/// uniformly chosen neighbour in the adjacent level. Rank = level, or an
/// order-preserving inflation of it bounded by max_rank.
inline RankedPoset gen_random_graded(const RandomGradedOptions& opt) {
    if (opt.max_rank < 1) throw Error("random poset needs max_rank >= 1");
    if (opt.max_width < 1) throw Error("random poset needs max_width >= 1");
    if (static_cast<std::uint64_t>(opt.max_rank) * static_cast<std::uint64_t>(opt.max_width) > size_cap(20000))
        throw SizeCapExceeded("random poset exceeds the size cap");
    std::mt19937_64 rng(opt.seed);
    if (opt.max_rank == 1) return gen_chain(1);

    const int levels = opt.inflate ? static_cast<int>(detail::uniform(rng, 1, static_cast<std::uint64_t>(opt.max_rank)))
                                   : opt.max_rank;
    std::vector<std::string> names{"0hat"};
    std::vector<int> level_of{0};
    std::vector<std::vector<std::size_t>> level_members{{0}};
    for (int k = 1; k < levels; ++k) {
        const auto width = detail::uniform(rng, 1, static_cast<std::uint64_t>(opt.max_width));
        std::vector<std::size_t> members;
        for (std::uint64_t i = 1; i <= width; ++i) {
            members.push_back(names.size());
            names.push_back("x" + std::to_string(k) + "_" + std::to_string(i));
            level_of.push_back(k);
        }
        level_members.push_back(std::move(members));
    }
    level_members.push_back({names.size()});
    names.push_back("1hat");
    level_of.push_back(levels);

    std::vector<CoverPair> covers;
    std::vector<std::vector<std::size_t>> lower(names.size());
    std::vector<char> has_upper(names.size(), 0);
    for (int k = 0; k < levels; ++k) {
        const auto& lo = level_members[static_cast<std::size_t>(k)];
        const auto& hi = level_members[static_cast<std::size_t>(k) + 1];
        std::vector<CoverPair> layer;
        for (std::size_t x : lo)
            for (std::size_t y : hi)
                if (rng() & 1) layer.emplace_back(x, y);
        for (const auto& [x, y] : layer) has_upper[x] = 1, lower[y].push_back(x);
        for (std::size_t y : hi) {
            if (!lower[y].empty()) continue;
            std::size_t x = lo[detail::uniform(rng, 0, lo.size() - 1)];
            layer.emplace_back(x, y);
            has_upper[x] = 1;
            lower[y].push_back(x);
        }
        for (std::size_t x : lo) {
            if (has_upper[x]) continue;
            std::size_t y = hi[detail::uniform(rng, 0, hi.size() - 1)];
            layer.emplace_back(x, y);
            has_upper[x] = 1;
            lower[y].push_back(x);
        }
        covers.insert(covers.end(), layer.begin(), layer.end());
    }

    std::vector<std::int64_t> rank(names.size(), 0);
    if (!opt.inflate) {
        for (std::size_t x = 0; x < names.size(); ++x) rank[x] = level_of[x];
    } else {
        const auto target = static_cast<std::int64_t>(
            detail::uniform(rng, static_cast<std::uint64_t>(levels), static_cast<std::uint64_t>(opt.max_rank)));
        // Elements are stored level by level, so index order is topological.
        for (std::size_t x = 1; x < names.size(); ++x) {
            std::int64_t lo = 0;
            for (std::size_t y : lower[x]) lo = std::max(lo, rank[y] + 1);
            const std::int64_t hi = target - (levels - level_of[x]);
            rank[x] = x + 1 == names.size()
                          ? target
                          : static_cast<std::int64_t>(detail::uniform(rng, static_cast<std::uint64_t>(lo),
                                                                      static_cast<std::uint64_t>(hi)));
        }
    }
    return detail::assemble(std::move(names), covers, std::move(rank));
}

/// A parsed family expression such as "nonpure(m=5)" or "product(1,2)".
struct FamilySpec {
    std::string name;
    std::vector<std::int64_t> positional;
    std::vector<std::pair<std::string, std::int64_t>> named;

    std::int64_t get(std::string_view key, std::size_t position, std::optional<std::int64_t> fallback = {}) const {
        for (const auto& [k, v] : named)
            if (k == key) return v;
        if (position < positional.size()) return positional[position];
        if (fallback) return *fallback;
        throw Error("family '" + name + "' is missing parameter '" + std::string(key) + "'");
    }
};

inline FamilySpec parse_family(std::string_view text) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = strip(text);
    if (text.substr(0, 7) == "family:") text.remove_prefix(7);
    FamilySpec spec;
    const auto open = text.find('(');
    if (open == std::string_view::npos) {
        spec.name = std::string(strip(text));
    } else {
        if (text.back() != ')') throw Error("family spec must end with ')': " + std::string(text));
        spec.name = std::string(strip(text.substr(0, open)));
        std::string_view args = text.substr(open + 1, text.size() - open - 2);
        while (!strip(args).empty()) {
            const auto comma = args.find(',');
            std::string_view item = strip(args.substr(0, comma));
            args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
            if (item.empty()) throw Error("empty family parameter");
            std::string key;
            if (const auto eq = item.find('='); eq != std::string_view::npos) {
                key = std::string(strip(item.substr(0, eq)));
                item = strip(item.substr(eq + 1));
            }
            std::int64_t value = 0;
            try {
                std::size_t used = 0;
                value = std::stoll(std::string(item), &used);
                if (used != item.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw Error("family parameter is not an integer: " + std::string(item));
            }
            if (key.empty()) {
                if (!spec.named.empty()) throw Error("positional family parameter after a named one");
                spec.positional.push_back(value);
            } else {
                spec.named.emplace_back(std::move(key), value);
            }
        }
    }
    if (spec.name.empty()) throw Error("family spec has no name");
    return spec;
}

inline RankedPoset generate_family(const FamilySpec& spec) {
    auto as_int = [](std::int64_t v) {
        if (v < INT32_MIN || v > INT32_MAX) throw Error("family parameter out of range");
        return static_cast<int>(v);
    };
    if (spec.name == "chain") return gen_chain(as_int(spec.get("n", 0)));
    if (spec.name == "boolean") return gen_boolean(as_int(spec.get("n", 0)));
    if (spec.name == "product") {
        if (!spec.named.empty()) throw Error("product takes positional chain lengths only");
        std::vector<int> bounds;
        for (auto v : spec.positional) bounds.push_back(as_int(v));
        return gen_product_of_chains(bounds);
    }
    if (spec.name == "nonpure") return gen_nonpure_counterexample(as_int(spec.get("m", 0)));
    if (spec.name == "nonlogconcave")
        return gen_nonlogconcave_counterexample(as_int(spec.get("n", 0)), as_int(spec.get("m", 1)));
    if (spec.name == "random") {
        RandomGradedOptions opt;
        const auto seed = spec.get("seed", 0);
        if (seed < 0) throw Error("random family needs a nonnegative seed");
        opt.seed = static_cast<std::uint64_t>(seed);
        opt.max_rank = as_int(spec.get("max_rank", 1, 4));
        opt.max_width = as_int(spec.get("max_width", 2, 3));
        opt.inflate = spec.get("inflate", 3, 0) != 0;
        return gen_random_graded(opt);
    }
    throw Error("unknown family: " + spec.name);
}

inline RankedPoset generate_family(std::string_view text) { return generate_family(parse_family(text)); }

}  // namespace chowlab
