#pragma once

#include <vector>

#include "phycache/traffic.hpp"
#include "phycache/vip.hpp"

namespace phycache {

// Fixed placement from long-run arrival rates: every BS caches the same
// top-capacity objects of the aggregate demand. Preloaded before the run, so
// it carries no ongoing placement cost.
void offline_placement(const Catalog& catalog, int n_users, CacheState& cache);

// aggregate top-capacity object list (exposed for tests)
std::vector<int> offline_top_objects(const Catalog& catalog, int n_users, int capacity);

// Per-(BS, object) request frequency counters. A BS counts the requests
// routed through it: its own user's coordinated-mode requests plus every
// user's CoMP-mode requests (those need a copy at each BS).
class LfuCounters {
public:
    LfuCounters() = default;
    LfuCounters(int n_pairs, int n_objects)
        : n_pairs_(n_pairs), n_objects_(n_objects),
          counts_(static_cast<size_t>(n_pairs) * n_objects, 0) {}

    void record(const ArrivalBatch& arrivals, const std::vector<uint8_t>& modes);
    void reset() { std::fill(counts_.begin(), counts_.end(), 0); }
    long count(int n, int k) const { return counts_[static_cast<size_t>(n) * n_objects_ + k]; }

    int n_pairs() const { return n_pairs_; }
    int n_objects() const { return n_objects_; }

private:
    int n_pairs_ = 0;
    int n_objects_ = 0;
    std::vector<long> counts_;
};

// Frame-cadence LFU: per BS, fill free slots with the most-requested uncached
// objects, then swap in any uncached object strictly more frequent than the
// least frequent cached one. Returns placement actions to charge through the
// shared cost accounting.
std::vector<int8_t> lfu_step(const LfuCounters& counters, const CacheState& cache);

}  // namespace phycache
