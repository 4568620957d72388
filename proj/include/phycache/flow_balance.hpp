#pragma once

#include <string>
#include <vector>

namespace phycache {

// Per-frame sums of arrivals and allocated service for every queue class,
// together with the cache state the frame ran under.
struct FrameFlowRecord {
    std::vector<uint8_t> cache_state;                    // [n][k] bits
    std::vector<double> server_arrival, server_service;  // [n]
    std::vector<double> coord_arrival, coord_service;    // [n]
    std::vector<double> comp_arrival, comp_service;      // [n][j]
};

struct QueueSlack {
    std::string queue;           // e.g. "server[2]", "coord[0]", "comp[1,2]"
    double arrival_rate = 0.0;   // conditional average, objects/slot
    double service_rate = 0.0;
    double slack = 0.0;          // arrival - service (negative is healthy)
    double std_error = 0.0;      // of the per-frame slack mean
    bool violation = false;      // slack > 3 standard errors
};

struct CacheStateGroup {
    std::vector<uint8_t> state;
    long frames = 0;
    double probability = 0.0;  // share of observed frames
    bool excluded = false;     // below the frame-count threshold
    std::vector<QueueSlack> slacks;
};

struct FlowBalanceReport {
    long total_frames = 0;
    int min_frames = 0;
    std::vector<CacheStateGroup> groups;

    bool any_violation() const;
    long violation_count() const;
};

// Groups frames by cache state and checks arrival <= service per queue class
// within each recurrent state, at a 3-standard-error tolerance. States seen
// fewer than min_frames times are reported but excluded from flagging.
FlowBalanceReport check_conditional_flow_balance(const std::vector<FrameFlowRecord>& trace,
                                                 int slots_per_frame, int min_frames = 50);

}  // namespace phycache
