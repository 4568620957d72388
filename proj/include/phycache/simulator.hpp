#pragma once

#include <string>
#include <vector>

#include "phycache/config.hpp"
#include "phycache/flow_balance.hpp"

namespace phycache {

// Per-frame observables for the time series output.
struct FrameStats {
    int frame = 0;
    double vip_backlog = 0.0;  // average over the frame's slots
    double dp_backlog = 0.0;
    double placement_cost = 0.0;  // charged at this frame's boundary
    double comp_fraction = 0.0;
    double hit_fraction = 0.0;
    double delivered_objects = 0.0;
    double mean_delay_slots = 0.0;  // of chunks fulfilled in this frame; NaN if none
};

struct MetricsReport {
    std::string policy;
    uint64_t seed = 0;
    int frames = 0;
    int warmup_frames = 0;
    long total_slots = 0;

    long delay_samples = 0;
    double mean_delay_slots = 0.0;
    double mean_delay_s = 0.0;
    double p50_delay_slots = 0.0;
    double p95_delay_slots = 0.0;
    double p99_delay_slots = 0.0;
    long max_delay_slots = 0;

    double vip_backlog_avg = 0.0;       // post-warmup slot average
    double dp_backlog_avg = 0.0;
    double placement_cost_avg = 0.0;    // per frame, post-warmup
    double placement_cost_total = 0.0;  // whole run
    double comp_mode_fraction = 0.0;
    double cache_hit_fraction = 0.0;

    double arrivals_objects = 0.0;
    double delivered_objects = 0.0;
    double mean_comp_rate = 0.0;   // objects/slot, per user
    double mean_coord_rate = 0.0;  // objects/slot, over scheduled users

    // virtual-to-actual mapping diagnostics: max over (user, object) of the
    // absolute running difference between marked demand and granted virtual
    // CoMP service, divided by the horizon
    double mapping_residual = 0.0;
    double virtual_comp_queue_peak = 0.0;

    // share of final cache slots holding top-capacity objects of the
    // aggregate long-run demand
    double cache_top_overlap = 0.0;

    std::vector<FrameStats> series;
    std::vector<long> delay_histogram;       // index = delay in slots
    std::vector<FrameFlowRecord> flow_trace; // one record per frame

    // quarter averages of the total VIP backlog (stability probes)
    double vip_backlog_quarter(int quarter) const;  // quarter in 1..4
};

MetricsReport run_simulation(const SimConfig& cfg);

void write_summary_json(const MetricsReport& report, const SimConfig& cfg, const std::string& path);
void write_timeseries_csv(const MetricsReport& report, const std::string& path);
void write_delays_csv(const MetricsReport& report, const std::string& path);

}  // namespace phycache
