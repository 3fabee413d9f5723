#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "grouphide/hiding.hpp"

namespace grouphide {

std::uint64_t count_subsets(std::size_t n, std::size_t max_size) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n, k)
    for (std::size_t k = 0; k <= std::min(n, max_size); ++k) {
        if (k > 0) {
            // C(n,k) = C(n,k-1) * (n-k+1) / k, exact at every step.
            unsigned __int128 next = static_cast<unsigned __int128>(binom) * (n - k + 1) / k;
            if (next > kMax) return kMax;
            binom = static_cast<std::uint64_t>(next);
        }
        if (total > kMax - binom) return kMax;
        total += binom;
    }
    return total;
}

namespace {

// Visits subsets of {0..n-1} by size 0..max_size, lexicographic within a
// size. `visit(indices, ordinal)` returns false to stop.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t max_size, Visit visit) {
    std::vector<std::size_t> idx;
    std::uint64_t ordinal = 0;
    for (std::size_t k = 0; k <= std::min(n, max_size); ++k) {
        idx.resize(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            if (!visit(std::span<const std::size_t>(idx), ordinal++)) return;
            // Advance to the next k-combination.
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

std::vector<Edge> pick(const std::vector<Edge> &pool, std::span<const std::size_t> idx) {
    std::vector<Edge> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(pool[i]);
    return out;
}

struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    std::uint64_t ordinal = std::numeric_limits<std::uint64_t>::max();
    std::vector<Edge> removed;

    bool beats(double v, std::uint64_t o) const { return v < value || (v == value && o < ordinal); }
};

}  // namespace

BruteForceResult brute_force_optimal(const HidingInstance &instance, const BruteForceOptions &options) {
    validate(instance);
    std::vector<Edge> pool(instance.removable.begin(), instance.removable.end());
    normalize_edges(pool);
    std::uint64_t subsets = count_subsets(pool.size(), instance.budget);
    if (subsets > options.subset_cap)
        throw EnumerationCapExceeded("brute force would evaluate " + std::to_string(subsets) +
                                     " subsets (cap " + std::to_string(options.subset_cap) +
                                     "); use a smaller budget or removable set");

    const CentralityMeasure measure = freeze(instance.measure, instance.graph);
    const unsigned workers = std::max(1u, options.workers);
    std::vector<Candidate> best(workers);
    std::vector<std::uint64_t> evaluated(workers, 0);
    // Ordinal of the first subset known to reach zero; later ones can be skipped.
    std::atomic<std::uint64_t> cutoff{std::numeric_limits<std::uint64_t>::max()};

    auto run = [&](unsigned w) {
        for_each_subset(pool.size(), instance.budget, [&](std::span<const std::size_t> idx, std::uint64_t ordinal) {
            if (ordinal > cutoff.load(std::memory_order_relaxed)) return false;
            if (ordinal % workers != w) return true;
            std::vector<Edge> removed = pick(pool, idx);
            double value = evaluate(measure, remove_edges(instance.graph, removed), instance.evaders);
            ++evaluated[w];
            if (best[w].beats(value, ordinal)) best[w] = {value, ordinal, std::move(removed)};
            if (value <= 0.0) {
                std::uint64_t seen = cutoff.load();
                while (ordinal < seen && !cutoff.compare_exchange_weak(seen, ordinal)) {
                }
                return false;
            }
            return true;
        });
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    }

    Candidate winner;
    for (Candidate &c : best)
        if (winner.beats(c.value, c.ordinal)) winner = std::move(c);
    BruteForceResult result;
    result.removed = std::move(winner.removed);
    result.value = winner.value;
    for (auto e : evaluated) result.evaluated += e;
    return result;
}

namespace {

// First subset of size <= max_size, in (size, lexicographic) order, whose
// measure is at most theta.
std::optional<std::vector<Edge>> first_qualifying(const HidingInstance &instance, std::size_t max_size,
                                                  std::uint64_t cap) {
    std::vector<Edge> pool(instance.removable.begin(), instance.removable.end());
    normalize_edges(pool);
    const CentralityMeasure measure = freeze(instance.measure, instance.graph);
    std::optional<std::vector<Edge>> found;
    std::uint64_t evaluated = 0;
    for_each_subset(pool.size(), max_size, [&](std::span<const std::size_t> idx, std::uint64_t) {
        if (++evaluated > cap)
            throw EnumerationCapExceeded("subset search exceeded the cap of " + std::to_string(cap) + " subsets");
        std::vector<Edge> removed = pick(pool, idx);
        if (evaluate(measure, remove_edges(instance.graph, removed), instance.evaders) <= instance.theta) {
            found = std::move(removed);
            return false;
        }
        return true;
    });
    return found;
}

double degree_after(const HidingInstance &instance, const std::vector<Edge> &removed) {
    return group_degree(remove_edges(instance.graph, removed), instance.evaders);
}

}  // namespace

std::optional<std::vector<Edge>> solve_group_hiding(const HidingInstance &instance,
                                                    const BruteForceOptions &options) {
    validate(instance);
    if (instance.measure.kind == MeasureKind::Degree) {
        if (group_degree(instance.graph, instance.evaders) <= instance.theta) return std::vector<Edge>{};
        auto removed = optimal_degree_removal(instance.graph, instance.evaders, instance.removable, instance.budget);
        if (degree_after(instance, removed) <= instance.theta) return removed;
        return std::nullopt;
    }
    std::vector<Edge> pool(instance.removable.begin(), instance.removable.end());
    normalize_edges(pool);
    std::uint64_t subsets = count_subsets(pool.size(), instance.budget);
    if (subsets > options.subset_cap)
        throw EnumerationCapExceeded("group hiding search would evaluate " + std::to_string(subsets) +
                                     " subsets (cap " + std::to_string(options.subset_cap) + ")");
    return first_qualifying(instance, instance.budget, options.subset_cap);
}

std::optional<std::vector<Edge>> solve_minimum_group_hiding(const HidingInstance &instance,
                                                            const BruteForceOptions &options) {
    validate(instance);
    std::vector<Edge> pool(instance.removable.begin(), instance.removable.end());
    normalize_edges(pool);
    if (instance.measure.kind == MeasureKind::Degree) {
        for (std::size_t b = 0; b <= pool.size(); ++b) {
            auto removed = optimal_degree_removal(instance.graph, instance.evaders, pool, b);
            if (degree_after(instance, removed) <= instance.theta) return removed;
        }
        return std::nullopt;
    }
    return first_qualifying(instance, pool.size(), options.subset_cap);
}

}  // namespace grouphide
