#pragma once

#include <vector>

#include "phycache/vip.hpp"

namespace phycache {

struct CacheOracleResult {
    std::vector<int8_t> actions;
    double objective = 0.0;
};

struct ControlOracleResult {
    ControlDecision decision;
    double objective = 0.0;
};

// Exhaustive minimizer of the frame drift bound: enumerates every cache
// contents set of size <= capacity per BS and derives the implied actions.
// Enumeration bound: n_objects <= 12, capacity <= 4.
CacheOracleResult brute_force_cache_oracle(const VipState& vip, const CacheState& prior,
                                           const PlacementParams& params);

// Exhaustive minimizer of the slot objective over mode x per-user object
// assignment (including no-serve) x per-BS backhaul target.
// Enumeration bound: n_pairs <= 3, n_objects <= 5.
ControlOracleResult brute_force_control_oracle(const VipState& vip, const RatePair& rates,
                                               const std::vector<double>& backhaul_rate);

}  // namespace phycache
