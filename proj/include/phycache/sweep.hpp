#pragma once

#include <string>
#include <vector>

#include "phycache/parallel.hpp"
#include "phycache/simulator.hpp"

namespace phycache {

// Sweep axes: lambda (arrival_mbps), cache (capacity), zipf (skewness),
// cost-weight (W) and backhaul (total_mbps).
enum class SweepAxis { Lambda, Cache, Zipf, CostWeight, Backhaul };

SweepAxis sweep_axis_from_string(const std::string& s);
const char* to_string(SweepAxis a);

struct SweepRow {
    double value = 0.0;
    Policy policy = Policy::Proposed;
    uint64_t seed = 0;
    double mean_delay_slots = 0.0;
    double mean_delay_s = 0.0;
    double vip_backlog = 0.0;
    double dp_backlog = 0.0;
    double placement_cost = 0.0;
    double comp_fraction = 0.0;
};

// One run per (value, policy, seed); identical traffic and channel seeds are
// shared across policies for paired comparison. Runs execute through
// parallel_for; rows come back in deterministic order regardless.
std::vector<SweepRow> run_sweep(const SimConfig& base, SweepAxis axis,
                                const std::vector<double>& values,
                                const std::vector<Policy>& policies,
                                const std::vector<uint64_t>& seeds,
                                ExecMode mode = ExecMode::Parallel);

SimConfig apply_axis(const SimConfig& base, SweepAxis axis, double value);

void write_sweep_csv(const std::vector<SweepRow>& rows, SweepAxis axis, const std::string& path);

}  // namespace phycache
