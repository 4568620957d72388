#include "phycache/ledger.hpp"

#include <algorithm>
#include <cmath>

namespace phycache {

double VirtualCompQueues::max_abs() const {
    double m = 0.0;
    for (double v : u) m = std::max(m, std::abs(v));
    return m;
}

std::vector<uint8_t> select_ip_modes(VirtualCompQueues& u, const ArrivalBatch& arrivals,
                                     const ControlDecision& dec) {
    const int n_pairs = u.n_pairs;
    const int n_objects = u.n_objects;
    std::vector<uint8_t> modes(static_cast<size_t>(n_pairs) * n_objects, 0);
    for (int j = 0; j < n_pairs; ++j) {
        if (dec.comp_mode && dec.comp_object[j] >= 0)
            u.at(j, dec.comp_object[j]) += dec.comp_rate[j];
        for (int k = 0; k < n_objects; ++k) {
            const int a = arrivals.at(j, k);
            if (a <= 0) continue;
            const bool comp = u.at(j, k) > 0.0;
            modes[static_cast<size_t>(j) * n_objects + k] = comp ? 1 : 0;
            if (comp) u.at(j, k) -= a;
        }
    }
    return modes;
}

PacketLedger::PacketLedger(int n_pairs, int n_objects, int chunks_per_object, double read_rate)
    : n_pairs_(n_pairs),
      n_objects_(n_objects),
      chunks_per_object_(chunks_per_object),
      read_rate_(read_rate),
      server_q_(n_pairs),
      server_staging_(n_pairs),
      pending_(n_pairs),
      buf_a_(static_cast<size_t>(n_pairs) * n_pairs, 0.0),
      stage_a_(static_cast<size_t>(n_pairs) * n_pairs, 0.0),
      buf_b_(n_pairs, 0.0),
      stage_b_(n_pairs, 0.0),
      lane_chunks_(static_cast<size_t>(n_pairs) * 2),
      lane_delivered_(static_cast<size_t>(n_pairs) * 2, 0.0),
      lane_fulfilled_(static_cast<size_t>(n_pairs) * 2, 0),
      lane_created_(static_cast<size_t>(n_pairs) * 2, 0),
      server_arrivals_(n_pairs, 0.0),
      buf_a_arrivals_(static_cast<size_t>(n_pairs) * n_pairs, 0.0),
      buf_b_arrivals_(n_pairs, 0.0),
      read_budget_scratch_(n_objects, 0.0) {}

void PacketLedger::stage_buffer(int n, int user, bool comp, double amount) {
    if (comp) {
        stage_a_[static_cast<size_t>(n) * n_pairs_ + user] += amount;
        buf_a_arrivals_[static_cast<size_t>(n) * n_pairs_ + user] += amount;
    } else {
        stage_b_[n] += amount;
        buf_b_arrivals_[n] += amount;
    }
}

void PacketLedger::route_packets(const CacheState& cache, const std::vector<uint8_t>& modes,
                                 const ArrivalBatch& arrivals,
                                 const std::vector<double>& backhaul_rate) {
    std::fill(server_arrivals_.begin(), server_arrivals_.end(), 0.0);
    std::fill(buf_a_arrivals_.begin(), buf_a_arrivals_.end(), 0.0);
    std::fill(buf_b_arrivals_.begin(), buf_b_arrivals_.end(), 0.0);
    hit_objects_ = miss_objects_ = 0.0;

    // 1. backhaul drains the committed server queues, FIFO
    for (int n = 0; n < n_pairs_; ++n) {
        double budget = backhaul_rate[n];
        auto& q = server_q_[n];
        while (budget > 1e-15 && !q.empty()) {
            Segment& seg = q.front();
            const double moved = std::min(seg.amount, budget);
            stage_buffer(n, seg.user, seg.comp, moved);
            seg.amount -= moved;
            budget -= moved;
            if (seg.amount <= 1e-15) q.pop_front();
        }
    }

    // 2. this slot's demand: cache hits feed the reader, misses queue at the
    //    server; CoMP demand touches every BS, coordinated only the serving BS
    for (int j = 0; j < n_pairs_; ++j) {
        for (int k = 0; k < n_objects_; ++k) {
            const int a = arrivals.at(j, k);
            if (a <= 0) continue;
            const bool comp = modes[static_cast<size_t>(j) * n_objects_ + k] != 0;
            const double amount = static_cast<double>(a);
            lane_chunks_[lane(j, comp)].push_back(
                {arrivals.slot, static_cast<long>(a) * chunks_per_object_});
            lane_created_[lane(j, comp)] += static_cast<long>(a) * chunks_per_object_;
            created_chunks_ += static_cast<long>(a) * chunks_per_object_;
            if (comp) {
                for (int n = 0; n < n_pairs_; ++n) {
                    if (cache.cached(n, k)) {
                        pending_[n].push_back({amount, k, j, 1});
                        hit_objects_ += amount;
                    } else {
                        server_staging_[n].push_back({amount, j, 1});
                        server_arrivals_[n] += amount;
                        miss_objects_ += amount;
                    }
                }
            } else {
                const int n = j;  // serving BS
                if (cache.cached(n, k)) {
                    pending_[n].push_back({amount, k, j, 0});
                    hit_objects_ += amount;
                } else {
                    server_staging_[n].push_back({amount, j, 0});
                    server_arrivals_[n] += amount;
                    miss_objects_ += amount;
                }
            }
        }
    }

    // 3. cache reads, capped at the read rate per (BS, object) per slot
    for (int n = 0; n < n_pairs_; ++n) {
        auto& q = pending_[n];
        size_t keep = 0;
        std::fill(read_budget_scratch_.begin(), read_budget_scratch_.end(), read_rate_);
        for (size_t i = 0; i < q.size(); ++i) {
            PendingRead& p = q[i];
            double& budget = read_budget_scratch_[p.object];
            const double moved = std::min(p.amount, budget);
            if (moved > 0.0) {
                stage_buffer(n, p.user, p.comp != 0, moved);
                p.amount -= moved;
                budget -= moved;
            }
            if (p.amount > 1e-15) q[keep++] = p;
        }
        q.resize(keep);
    }
}

void PacketLedger::deliver_phy(const ControlDecision& dec) {
    if (dec.comp_mode) {
        for (int j = 0; j < n_pairs_; ++j) {
            const double rate = dec.comp_rate[j];
            if (rate <= 0.0) continue;
            double floor_q = buf_a_[j];  // min over BS copies
            for (int n = 1; n < n_pairs_; ++n)
                floor_q = std::min(floor_q, buf_a_[static_cast<size_t>(n) * n_pairs_ + j]);
            const double moved = std::min(rate, floor_q);
            if (moved <= 0.0) continue;
            for (int n = 0; n < n_pairs_; ++n)
                buf_a_[static_cast<size_t>(n) * n_pairs_ + j] -= moved;
            fulfill(lane(j, true), moved);
        }
    } else {
        for (int n = 0; n < n_pairs_; ++n) {
            const int j = n;  // associated user
            const double rate = dec.coord_rate[j];
            if (rate <= 0.0) continue;
            const double moved = std::min(rate, buf_b_[n]);
            if (moved <= 0.0) continue;
            buf_b_[n] -= moved;
            fulfill(lane(j, false), moved);
        }
    }
}

void PacketLedger::fulfill(int lane_id, double delivered) {
    delivered_objects_ += delivered;
    lane_delivered_[lane_id] += delivered;
    const long covered =
        static_cast<long>(std::floor(lane_delivered_[lane_id] * chunks_per_object_ + 1e-9));
    long due = covered - lane_fulfilled_[lane_id];
    auto& q = lane_chunks_[lane_id];
    while (due > 0 && !q.empty()) {
        ChunkGroup& g = q.front();
        const long take = std::min(due, g.count);
        fulfillments_.push_back({g.creation_slot, take});
        lane_fulfilled_[lane_id] += take;
        fulfilled_chunks_ += take;
        g.count -= take;
        due -= take;
        if (g.count == 0) q.pop_front();
    }
}

void PacketLedger::end_slot() {
    for (int n = 0; n < n_pairs_; ++n) {
        for (Segment& s : server_staging_[n]) {
            // adjacent same-lane fluid coalesces; FIFO order is unaffected
            if (!server_q_[n].empty() && server_q_[n].back().user == s.user &&
                server_q_[n].back().comp == s.comp) {
                server_q_[n].back().amount += s.amount;
            } else {
                server_q_[n].push_back(s);
            }
        }
        server_staging_[n].clear();
    }
    for (size_t i = 0; i < buf_a_.size(); ++i) {
        buf_a_[i] += stage_a_[i];
        stage_a_[i] = 0.0;
    }
    for (size_t i = 0; i < buf_b_.size(); ++i) {
        buf_b_[i] += stage_b_[i];
        stage_b_[i] = 0.0;
    }
    fulfillments_.clear();
}

double PacketLedger::server_backlog() const {
    double sum = 0.0;
    for (const auto& q : server_q_)
        for (const Segment& s : q) sum += s.amount;
    for (const auto& st : server_staging_)
        for (const Segment& s : st) sum += s.amount;
    return sum;
}

double PacketLedger::server_queue(int n) const {
    double sum = 0.0;
    for (const Segment& s : server_q_[n]) sum += s.amount;
    return sum;
}

double PacketLedger::buffer_backlog() const {
    double sum = 0.0;
    for (double v : buf_a_) sum += v;
    for (double v : stage_a_) sum += v;
    for (double v : buf_b_) sum += v;
    for (double v : stage_b_) sum += v;
    return sum;
}

double PacketLedger::pending_backlog() const {
    double sum = 0.0;
    for (const auto& q : pending_)
        for (const PendingRead& p : q) sum += p.amount;
    return sum;
}

double PacketLedger::audit() const {
    double worst = 0.0;
    for (int j = 0; j < n_pairs_; ++j) {
        for (int comp = 0; comp <= 1; ++comp) {
            const int l = j * 2 + comp;
            const double created = static_cast<double>(lane_created_[l]) / chunks_per_object_;
            const double delivered = lane_delivered_[l];
            // every BS path of the lane must carry the same outstanding fluid
            const int n_lo = comp ? 0 : j;
            const int n_hi = comp ? n_pairs_ - 1 : j;
            for (int n = n_lo; n <= n_hi; ++n) {
                double in_flight = comp ? buf_a_[static_cast<size_t>(n) * n_pairs_ + j] +
                                              stage_a_[static_cast<size_t>(n) * n_pairs_ + j]
                                        : buf_b_[n] + stage_b_[n];
                for (const Segment& s : server_q_[n])
                    if (s.user == j && (s.comp != 0) == (comp != 0)) in_flight += s.amount;
                for (const Segment& s : server_staging_[n])
                    if (s.user == j && (s.comp != 0) == (comp != 0)) in_flight += s.amount;
                for (const PendingRead& p : pending_[n])
                    if (p.user == j && (p.comp != 0) == (comp != 0)) in_flight += p.amount;
                worst = std::max(worst, std::abs(created - delivered - in_flight));
            }
        }
    }
    return worst;
}

}  // namespace phycache
