#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "phycache/traffic.hpp"
#include "phycache/vip.hpp"

namespace phycache {

// Signed balance between the virtual CoMP service granted to a (user, object)
// pair and the demand actually marked CoMP for it; drives IP mode selection.
struct VirtualCompQueues {
    int n_pairs = 0;
    int n_objects = 0;
    std::vector<double> u;

    VirtualCompQueues() = default;
    VirtualCompQueues(int n, int k)
        : n_pairs(n), n_objects(k), u(static_cast<size_t>(n) * k, 0.0) {}

    double& at(int j, int k) { return u[static_cast<size_t>(j) * n_objects + k]; }
    double at(int j, int k) const { return u[static_cast<size_t>(j) * n_objects + k]; }
    double max_abs() const;
};

// All request chunks of a (user, object) slot batch share one mode: CoMP when
// the accumulated virtual CoMP service still exceeds the demand already
// marked, coordinated otherwise.
std::vector<uint8_t> select_ip_modes(VirtualCompQueues& u, const ArrivalBatch& arrivals,
                                     const ControlDecision& dec);

// Actual-plane queues: per-BS server-side backhaul queues, per-BS coordinated
// buffers, per-(BS,user) CoMP buffers, rate-capped cache reads, and the
// chunk-level FIFO used for per-request delay attribution. Queue recursions
// are service-before-arrival: fluid routed during slot t becomes servable at
// slot t+1 (end_slot commits the staging).
class PacketLedger {
public:
    struct Fulfillment {
        long creation_slot;
        long chunks;
    };

    PacketLedger() = default;
    PacketLedger(int n_pairs, int n_objects, int chunks_per_object, double read_rate);

    // backhaul drain of the committed server queues, then demand routing
    // (cache hits feed the rate-capped reader, misses queue at the server),
    // then cache reads; all outputs staged for the next slot
    void route_packets(const CacheState& cache, const std::vector<uint8_t>& modes,
                       const ArrivalBatch& arrivals, const std::vector<double>& backhaul_rate);

    // PHY delivery from the committed buffers; CoMP drains every BS copy of a
    // user synchronously by the minimum buffer, coordinated drains the serving
    // BS buffer; delivered fluid fulfills the oldest outstanding chunks FIFO
    void deliver_phy(const ControlDecision& dec);

    void end_slot();

    const std::vector<Fulfillment>& fulfillments() const { return fulfillments_; }

    // per-slot flow records (arrivals seen by each queue class this slot)
    const std::vector<double>& server_arrivals() const { return server_arrivals_; }
    const std::vector<double>& comp_buffer_arrivals() const { return buf_a_arrivals_; }
    const std::vector<double>& coord_buffer_arrivals() const { return buf_b_arrivals_; }
    double hit_objects() const { return hit_objects_; }
    double miss_objects() const { return miss_objects_; }

    double server_backlog() const;
    double buffer_backlog() const;
    double pending_backlog() const;
    double total_backlog() const { return server_backlog() + buffer_backlog() + pending_backlog(); }
    double comp_buffer(int n, int j) const { return buf_a_[static_cast<size_t>(n) * n_pairs_ + j]; }
    double coord_buffer(int n) const { return buf_b_[n]; }
    double server_queue(int n) const;

    long created_chunks() const { return created_chunks_; }
    long fulfilled_chunks() const { return fulfilled_chunks_; }
    double delivered_objects() const { return delivered_objects_; }

    // max absolute conservation error over lanes and BS paths
    // (created == in pipeline + delivered, for every path)
    double audit() const;

private:
    struct Segment {          // fluid with a destination lane
        double amount;
        int user;
        uint8_t comp;
    };
    struct PendingRead {      // cache hit waiting for the per-object read budget
        double amount;
        int object;
        int user;
        uint8_t comp;
    };
    struct ChunkGroup {
        long creation_slot;
        long count;
    };

    void stage_buffer(int n, int user, bool comp, double amount);
    void fulfill(int lane, double delivered);

    int lane(int user, bool comp) const { return user * 2 + (comp ? 1 : 0); }

    int n_pairs_ = 0;
    int n_objects_ = 0;
    int chunks_per_object_ = 1;
    double read_rate_ = 0.0;

    std::vector<std::deque<Segment>> server_q_;
    std::vector<double> server_staging_flat_;  // amount per (n); segments kept in order below
    std::vector<std::vector<Segment>> server_staging_;
    std::vector<std::deque<PendingRead>> pending_;
    std::vector<double> buf_a_, stage_a_;  // [n][j]
    std::vector<double> buf_b_, stage_b_;  // [n]

    // per-lane FIFO of outstanding chunks and delivery accounting
    std::vector<std::deque<ChunkGroup>> lane_chunks_;
    std::vector<double> lane_delivered_;
    std::vector<long> lane_fulfilled_;
    std::vector<long> lane_created_;

    std::vector<double> server_arrivals_, buf_a_arrivals_, buf_b_arrivals_;
    std::vector<double> read_budget_scratch_;
    std::vector<Fulfillment> fulfillments_;
    double hit_objects_ = 0.0, miss_objects_ = 0.0;
    long created_chunks_ = 0, fulfilled_chunks_ = 0;
    double delivered_objects_ = 0.0;
};

}  // namespace phycache
