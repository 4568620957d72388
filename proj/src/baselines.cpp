#include "phycache/baselines.hpp"

#include <algorithm>
#include <numeric>

namespace phycache {

std::vector<int> offline_top_objects(const Catalog& catalog, int n_users, int capacity) {
    const int k_count = catalog.library_size();
    std::vector<double> aggregate(k_count, 0.0);
    for (int j = 0; j < n_users; ++j)
        for (int k = 0; k < k_count; ++k) aggregate[k] += catalog.popularity_of_object(j, k);
    std::vector<int> order(k_count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return aggregate[a] > aggregate[b]; });
    order.resize(std::min<size_t>(order.size(), capacity));
    return order;
}

void offline_placement(const Catalog& catalog, int n_users, CacheState& cache) {
    const std::vector<int> top = offline_top_objects(catalog, n_users, cache.capacity());
    for (int n = 0; n < cache.n_pairs(); ++n) cache.preload(n, top);
}

void LfuCounters::record(const ArrivalBatch& arrivals, const std::vector<uint8_t>& modes) {
    for (int j = 0; j < arrivals.n_users; ++j) {
        for (int k = 0; k < n_objects_; ++k) {
            const int a = arrivals.at(j, k);
            if (a <= 0) continue;
            if (modes[static_cast<size_t>(j) * n_objects_ + k]) {
                for (int n = 0; n < n_pairs_; ++n)
                    counts_[static_cast<size_t>(n) * n_objects_ + k] += a;
            } else {
                counts_[static_cast<size_t>(j) * n_objects_ + k] += a;
            }
        }
    }
}

std::vector<int8_t> lfu_step(const LfuCounters& counters, const CacheState& cache) {
    const int n_pairs = counters.n_pairs();
    const int n_objects = counters.n_objects();
    std::vector<int8_t> actions(static_cast<size_t>(n_pairs) * n_objects, 0);

    for (int n = 0; n < n_pairs; ++n) {
        // uncached candidates by count descending, cached victims ascending;
        // ties resolve to the lower object index
        std::vector<int> uncached, cached;
        for (int k = 0; k < n_objects; ++k)
            (cache.cached(n, k) ? cached : uncached).push_back(k);
        std::stable_sort(uncached.begin(), uncached.end(),
                         [&](int a, int b) { return counters.count(n, a) > counters.count(n, b); });
        std::stable_sort(cached.begin(), cached.end(),
                         [&](int a, int b) { return counters.count(n, a) < counters.count(n, b); });

        size_t ci = 0;  // next candidate
        int free_slots = cache.capacity() - cache.occupancy(n);
        for (; ci < uncached.size() && free_slots > 0; ++ci) {
            if (counters.count(n, uncached[ci]) <= 0) break;  // never cache unrequested objects
            actions[static_cast<size_t>(n) * n_objects + uncached[ci]] = 1;
            --free_slots;
        }
        size_t vi = 0;  // next victim
        for (; ci < uncached.size() && vi < cached.size(); ++ci, ++vi) {
            // strict inequality: ties do not churn the cache
            if (counters.count(n, uncached[ci]) <= counters.count(n, cached[vi])) break;
            actions[static_cast<size_t>(n) * n_objects + uncached[ci]] = 1;
            actions[static_cast<size_t>(n) * n_objects + cached[vi]] = -1;
        }
    }
    return actions;
}

}  // namespace phycache
