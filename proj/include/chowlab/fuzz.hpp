#pragma once

// Randomized invariant campaigns over seeded random posets, with shrinking
// of failing instances.

#include "chowlab/chow.hpp"
#include "chowlab/families.hpp"
#include "chowlab/scd.hpp"
#include "chowlab/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace chowlab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Names of the invariants that fail on (P, rho); empty when all hold.
/// Log-concavity is only required at weak rank <= 6.
inline std::vector<std::string> check_invariants(const Poset& p, const WeakRank& r) {
    std::vector<std::string> failed;
    const IntPolynomial h_chain = chow_chain_sum(p, r);
    const IntPolynomial h_fy = chow_via_fy(p, r);
    if (!(h_chain == h_fy)) failed.push_back("oracle-equivalence");
    const IntSequence h = h_chain.coefficients();
    const std::int64_t n = r[p.top()];

    const bool shape = is_nonnegative(h) && is_palindromic(h) && is_unimodal(h);
    if (!shape) failed.push_back("nonnegative-palindromic-unimodal");
    if (!is_SI_sequence(h).holds) failed.push_back("si-sequence");

    const MonomialSet sfy = sfy_generate(p, r);
    const auto ideal = is_monomial_order_ideal(sfy);
    if (!ideal.is_order_ideal) failed.push_back("sfy-order-ideal");
    if (shape && !same_h_vector(sfy.h_sequence(), delta(h))) failed.push_back("sfy-differential");
    if (ideal.is_order_ideal && is_ranked(p, r)) {
        const auto expected = static_cast<std::uint64_t>((n - 1) / 2);
        if (!is_pure_ideal(sfy, expected).pure) failed.push_back("sfy-pure");
    }
    if (n <= 6 && !is_log_concave(h)) failed.push_back("log-concavity");
    if (shape && !logconcavity_from_delta(h).implication_holds()) failed.push_back("log-difference");
    return failed;
}

/// Induced subposet on `keep` (which must contain bottom and top), ranks kept.
inline RankedPoset induced_subposet(const RankedPoset& rp, const std::vector<ElementId>& keep) {
    std::vector<std::string> names;
    std::vector<std::int64_t> rank;
    for (ElementId x : keep) {
        names.push_back(rp.poset.name(x));
        rank.push_back(rp.rank[x]);
    }
    std::vector<CoverPair> relations;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (rp.poset.less(keep[i], keep[j])) relations.emplace_back(i, j);
    Poset p = Poset::from_indices(std::move(names), relations);
    return {std::move(p), WeakRank(std::move(rank))};
}

/// Greedily deletes elements while `still_fails` holds. Elements on the widest
/// rank levels are tried first; bottom and top are kept, so every candidate
/// stays bounded and its rank stays valid.
template <class Pred>
RankedPoset shrink_failure(RankedPoset rp, Pred&& still_fails) {
    bool changed = true;
    while (changed) {
        changed = false;
        const auto w = whitney_numbers(rp.poset, rp.rank);
        std::vector<ElementId> order;
        for (ElementId x = 0; x < rp.poset.size(); ++x)
            if (x != rp.poset.bottom() && x != rp.poset.top()) order.push_back(x);
        std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
            return w[static_cast<std::size_t>(rp.rank[a])] > w[static_cast<std::size_t>(rp.rank[b])];
        });
        for (ElementId victim : order) {
            std::vector<ElementId> keep;
            for (ElementId x = 0; x < rp.poset.size(); ++x)
                if (x != victim) keep.push_back(x);
            RankedPoset candidate = induced_subposet(rp, keep);
            if (still_fails(candidate)) {
                rp = std::move(candidate);
                changed = true;
                break;
            }
        }
    }
    return rp;
}

struct FuzzOptions {
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    int max_rank = 7;
    int max_width = 4;
    unsigned jobs = 1;
};

struct FuzzFailure {
    std::size_t trial = 0;
    std::vector<std::string> invariants;
    RankedPoset original;
    RankedPoset minimized;
};

struct FuzzReport {
    std::size_t trials = 0;
    std::size_t ranked_trials = 0;
    std::map<std::string, std::size_t> violations;
    std::vector<FuzzFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Parameters of trial i: a derived seed, rank bound in [1, max_rank], and
/// inflation on for roughly half the trials.
inline RandomGradedOptions fuzz_trial_options(const FuzzOptions& opt, std::size_t trial) {
    const std::uint64_t s = splitmix64(opt.seed ^ splitmix64(trial));
    RandomGradedOptions g;
    g.seed = s;
    g.max_rank = 1 + static_cast<int>(splitmix64(s + 1) % static_cast<std::uint64_t>(opt.max_rank));
    g.max_width = opt.max_width;
    g.inflate = (splitmix64(s + 2) & 1) != 0;
    return g;
}

inline FuzzReport run_fuzz(const FuzzOptions& opt) {
    struct Outcome {
        bool ranked = false;
        std::vector<std::string> failed;
    };
    auto run_trial = [&](std::size_t i) {
        RankedPoset rp = gen_random_graded(fuzz_trial_options(opt, i));
        return Outcome{is_ranked(rp.poset, rp.rank), check_invariants(rp.poset, rp.rank)};
    };

    std::vector<Outcome> outcomes(opt.trials);
    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < opt.trials; ++i) outcomes[i] = run_trial(i);
    } else {
        std::vector<std::future<void>> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < opt.trials; i += jobs) outcomes[i] = run_trial(i);
            }));
        }
        for (auto& f : workers) f.get();
    }

    FuzzReport report;
    report.trials = opt.trials;
    for (std::size_t i = 0; i < opt.trials; ++i) {
        if (outcomes[i].ranked) ++report.ranked_trials;
        if (outcomes[i].failed.empty()) continue;
        for (const auto& name : outcomes[i].failed) ++report.violations[name];
        FuzzFailure failure;
        failure.trial = i;
        failure.invariants = outcomes[i].failed;
        failure.original = gen_random_graded(fuzz_trial_options(opt, i));
        const auto target = failure.invariants;
        failure.minimized = shrink_failure(failure.original, [&](const RankedPoset& c) {
            const auto now = check_invariants(c.poset, c.rank);
            return std::any_of(target.begin(), target.end(), [&](const std::string& t) {
                return std::find(now.begin(), now.end(), t) != now.end();
            });
        });
        report.failures.push_back(std::move(failure));
    }
    return report;
}

}  // namespace chowlab
