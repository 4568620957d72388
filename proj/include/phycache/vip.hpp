#pragma once

#include <vector>

#include "phycache/zf.hpp"

namespace phycache {

// Virtual-plane counters, one per (node, object). Users and BSs are indexed
// 0..N-1 with the identity pairing. All counters start at 0 and stay >= 0.
struct VipState {
    int n_pairs = 0;
    int n_objects = 0;
    std::vector<double> user_v;  // [j][k]
    std::vector<double> bs_v;    // [n][k]

    VipState() = default;
    VipState(int n, int k)
        : n_pairs(n),
          n_objects(k),
          user_v(static_cast<size_t>(n) * k, 0.0),
          bs_v(static_cast<size_t>(n) * k, 0.0) {}

    double& user(int j, int k) { return user_v[static_cast<size_t>(j) * n_objects + k]; }
    double user(int j, int k) const { return user_v[static_cast<size_t>(j) * n_objects + k]; }
    double& bs(int n, int k) { return bs_v[static_cast<size_t>(n) * n_objects + k]; }
    double bs(int n, int k) const { return bs_v[static_cast<size_t>(n) * n_objects + k]; }

    double total() const;
};

// Binary per-BS cache contents plus the per-frame placement actions that
// produced them and the accumulated placement cost.
class CacheState {
public:
    CacheState() = default;
    CacheState(int n_pairs, int n_objects, int capacity);

    int capacity() const { return capacity_; }
    int n_pairs() const { return n_pairs_; }
    int n_objects() const { return n_objects_; }
    bool cached(int n, int k) const { return s_[static_cast<size_t>(n) * n_objects_ + k] != 0; }
    int occupancy(int n) const { return occupancy_[n]; }

    // applies actions in {-1,0,+1}; rejects redundant actions and size overflow
    void apply(const std::vector<int8_t>& actions, double price);

    // direct contents assignment (offline placement; charges nothing)
    void preload(int n, const std::vector<int>& objects);

    const std::vector<int8_t>& last_actions() const { return last_actions_; }
    double cumulative_cost() const { return cumulative_cost_; }
    double last_frame_cost() const { return last_frame_cost_; }
    int last_frame_adds(int n) const { return last_adds_[n]; }

private:
    int n_pairs_ = 0;
    int n_objects_ = 0;
    int capacity_ = 0;
    std::vector<uint8_t> s_;
    std::vector<int> occupancy_;
    std::vector<int8_t> last_actions_;
    std::vector<int> last_adds_;
    double cumulative_cost_ = 0.0;
    double last_frame_cost_ = 0.0;
};

// Per-slot control output: forwarding mode, the object each user's full mode
// rate is assigned to (or none), and the per-BS backhaul drain target.
struct ControlDecision {
    bool comp_mode = true;              // M(t)
    std::vector<int> comp_object;       // per user; -1 = no allocation
    std::vector<double> comp_rate;      // mu_j^A assigned to comp_object[j]
    std::vector<int> coord_object;      // per user; -1 = no allocation
    std::vector<double> coord_rate;     // mu_j^B assigned to coord_object[j]
    std::vector<int> backhaul_object;   // per BS, receives the full data sub-channel
    std::vector<double> backhaul_rate;  // R_d per BS
    double delta_comp = 0.0;            // one-step gain of CoMP forwarding
    double delta_coord = 0.0;           // one-step gain of coordinated forwarding
};

struct PlacementParams {
    double cost_weight = 0.0;      // W
    int slots_per_frame = 1;       // T
    double placement_price = 0.0;  // gamma
    double read_rate = 1.0;        // r_n (symmetric)
    int capacity = 0;              // L_C
};

// One-sided queue recursions, users first then BSs; the per-BS cache drain
// r_n * s_n^k applies every slot the object is cached.
void update_vip_queues(VipState& state, const ControlDecision& dec, const std::vector<int>& arrivals,
                       const CacheState& cache, double read_rate);

// Frame-boundary placement: per BS, promote the highest-backlog objects into
// the cache when the backlog reduction clears the placement price threshold
// W*gamma/(2T); returns actions compatible with the current contents.
std::vector<int8_t> place_cache(const VipState& vip, const CacheState& cache,
                                const PlacementParams& params);

// Slot-level backhaul allocation, per-mode weighted rate assignment and mode
// choice (CoMP wins ties). allow_comp=false restricts to coordinated mode.
ControlDecision fast_control(const VipState& vip, const RatePair& rates,
                             const std::vector<double>& backhaul_rate, bool allow_comp = true);

// Placement-dependent part of the frame drift bound for the given actions;
// the placement-independent constant is omitted.
double drift_upper_bound(const VipState& vip, const CacheState& prev_cache,
                         const std::vector<int8_t>& actions, const PlacementParams& params);

// Objective of the slot-level problem for an arbitrary decision (lower is
// better); used by the exhaustive oracle for exact comparisons.
double one_step_objective(const ControlDecision& dec, const VipState& vip);

}  // namespace phycache
