#include "phycache/vip.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phycache {

double VipState::total() const {
    double sum = 0.0;
    for (double v : user_v) sum += v;
    for (double v : bs_v) sum += v;
    return sum;
}

CacheState::CacheState(int n_pairs, int n_objects, int capacity)
    : n_pairs_(n_pairs),
      n_objects_(n_objects),
      capacity_(capacity),
      s_(static_cast<size_t>(n_pairs) * n_objects, 0),
      occupancy_(n_pairs, 0),
      last_actions_(static_cast<size_t>(n_pairs) * n_objects, 0),
      last_adds_(n_pairs, 0) {
    if (capacity < 0 || capacity > n_objects)
        throw std::invalid_argument("cache capacity must be in [0, n_objects]");
}

void CacheState::apply(const std::vector<int8_t>& actions, double price) {
    if (actions.size() != s_.size()) throw std::invalid_argument("cache actions: wrong size");
    last_frame_cost_ = 0.0;
    std::fill(last_adds_.begin(), last_adds_.end(), 0);
    for (int n = 0; n < n_pairs_; ++n) {
        for (int k = 0; k < n_objects_; ++k) {
            const size_t idx = static_cast<size_t>(n) * n_objects_ + k;
            const int8_t p = actions[idx];
            if (p == 0) continue;
            if (p == 1) {
                if (s_[idx]) throw std::logic_error("cache: adding an already cached object");
                s_[idx] = 1;
                ++occupancy_[n];
                ++last_adds_[n];
                last_frame_cost_ += price;
            } else if (p == -1) {
                if (!s_[idx]) throw std::logic_error("cache: evicting a non-cached object");
                s_[idx] = 0;
                --occupancy_[n];
            } else {
                throw std::invalid_argument("cache actions must be in {-1,0,1}");
            }
        }
        if (occupancy_[n] > capacity_) throw std::logic_error("cache: capacity exceeded");
    }
    last_actions_ = actions;
    cumulative_cost_ += last_frame_cost_;
}

void CacheState::preload(int n, const std::vector<int>& objects) {
    if (static_cast<int>(objects.size()) > capacity_)
        throw std::invalid_argument("cache preload exceeds capacity");
    for (int k = 0; k < n_objects_; ++k) s_[static_cast<size_t>(n) * n_objects_ + k] = 0;
    for (int k : objects) s_[static_cast<size_t>(n) * n_objects_ + k] = 1;
    occupancy_[n] = static_cast<int>(objects.size());
}

void update_vip_queues(VipState& state, const ControlDecision& dec, const std::vector<int>& arrivals,
                       const CacheState& cache, double read_rate) {
    const int n_pairs = state.n_pairs;
    const int n_objects = state.n_objects;
    const bool comp = dec.comp_mode;

    // User queues: clamp the served object, then add this slot's arrivals.
    // Forwarding is conservative: the BSs receive exactly the VIPs the user
    // queue lost, not the full allocated rate.
    std::vector<double> forwarded(n_pairs, 0.0);
    std::vector<int> forwarded_obj(n_pairs, -1);
    for (int j = 0; j < n_pairs; ++j) {
        const int served = comp ? dec.comp_object[j] : dec.coord_object[j];
        if (served >= 0) {
            const double mu = comp ? dec.comp_rate[j] : dec.coord_rate[j];
            const double moved = std::min(state.user(j, served), mu);
            state.user(j, served) -= moved;
            forwarded[j] = moved;
            forwarded_obj[j] = served;
        }
        for (int k = 0; k < n_objects; ++k) {
            const int a = arrivals[static_cast<size_t>(j) * n_objects + k];
            if (a > 0) state.user(j, k) += a;
        }
    }

    // BS queues: backhaul drain first, then forwarded inflow minus cache drain,
    // outer clamp last (nesting order matters)
    for (int n = 0; n < n_pairs; ++n) {
        for (int k = 0; k < n_objects; ++k) {
            double v = state.bs(n, k);
            if (dec.backhaul_object[n] == k) v = std::max(v - dec.backhaul_rate[n], 0.0);
            double inflow = 0.0;
            if (comp) {
                for (int j = 0; j < n_pairs; ++j)
                    if (forwarded_obj[j] == k) inflow += forwarded[j];
            } else {
                if (forwarded_obj[n] == k) inflow += forwarded[n];  // associated user
            }
            const double drain = cache.cached(n, k) ? read_rate : 0.0;
            state.bs(n, k) = std::max(v + inflow - drain, 0.0);
        }
    }
}

std::vector<int8_t> place_cache(const VipState& vip, const CacheState& cache,
                                const PlacementParams& params) {
    const int n_pairs = vip.n_pairs;
    const int n_objects = vip.n_objects;
    const double threshold = params.cost_weight * params.placement_price / (2.0 * params.slots_per_frame);
    std::vector<int8_t> actions(static_cast<size_t>(n_pairs) * n_objects, 0);

    std::vector<int> order(n_objects);
    for (int n = 0; n < n_pairs; ++n) {
        // top-capacity objects by backlog; ties go to the lower object index
        std::iota(order.begin(), order.end(), 0);
        const int take = std::min(params.capacity, n_objects);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return vip.bs(n, a) > vip.bs(n, b); });

        std::vector<uint8_t> target(n_objects, 0);
        for (int i = 0; i < take; ++i) target[order[i]] = 1;

        std::vector<int> candidates;  // target \ cached, backlog descending
        for (int i = 0; i < take; ++i)
            if (!cache.cached(n, order[i])) candidates.push_back(order[i]);

        std::vector<int> evictable;  // cached \ target, backlog ascending
        for (int i = n_objects - 1; i >= 0; --i)
            if (cache.cached(n, order[i]) && !target[order[i]]) evictable.push_back(order[i]);

        // free slots first: the strongest candidates enter without eviction
        const int free_slots = static_cast<int>(candidates.size()) - static_cast<int>(evictable.size());
        for (size_t i = 0; i < candidates.size(); ++i) {
            const int add = candidates[i];
            if (static_cast<int>(i) < free_slots) {
                if (vip.bs(n, add) * params.read_rate >= threshold)
                    actions[static_cast<size_t>(n) * n_objects + add] = 1;
            } else {
                const int evict = evictable[i - free_slots];
                if ((vip.bs(n, add) - vip.bs(n, evict)) * params.read_rate >= threshold) {
                    actions[static_cast<size_t>(n) * n_objects + add] = 1;
                    actions[static_cast<size_t>(n) * n_objects + evict] = -1;
                }
            }
        }
    }
    return actions;
}

ControlDecision fast_control(const VipState& vip, const RatePair& rates,
                             const std::vector<double>& backhaul_rate, bool allow_comp) {
    const int n_pairs = vip.n_pairs;
    const int n_objects = vip.n_objects;
    ControlDecision dec;
    dec.comp_object.assign(n_pairs, -1);
    dec.comp_rate.assign(n_pairs, 0.0);
    dec.coord_object.assign(n_pairs, -1);
    dec.coord_rate.assign(n_pairs, 0.0);
    dec.backhaul_object.assign(n_pairs, 0);
    dec.backhaul_rate = backhaul_rate;

    // backhaul: the full data sub-channel drains each BS's longest queue
    for (int n = 0; n < n_pairs; ++n) {
        int best = 0;
        for (int k = 1; k < n_objects; ++k)
            if (vip.bs(n, k) > vip.bs(n, best)) best = k;
        dec.backhaul_object[n] = best;
    }

    // per-BS backlog sums reused by the CoMP weights
    std::vector<double> bs_sum(n_objects, 0.0);
    for (int n = 0; n < n_pairs; ++n)
        for (int k = 0; k < n_objects; ++k) bs_sum[k] += vip.bs(n, k);

    // each user's full mode rate goes to its best-weight object, if positive
    std::vector<int> comp_pick(n_pairs, -1), coord_pick(n_pairs, -1);
    double delta_comp = 0.0, delta_coord = 0.0;
    for (int j = 0; j < n_pairs; ++j) {
        double best_a = 0.0, best_b = 0.0;
        for (int k = 0; k < n_objects; ++k) {
            const double wa = vip.user(j, k) - bs_sum[k];
            if (wa > best_a) {
                best_a = wa;
                comp_pick[j] = k;
            }
            const double wb = vip.user(j, k) - vip.bs(j, k);
            if (wb > best_b) {
                best_b = wb;
                coord_pick[j] = k;
            }
        }
        delta_comp += rates.comp_rates[j] * best_a;
        delta_coord += rates.coord_rates[j] * best_b;
    }
    dec.delta_comp = allow_comp ? delta_comp : 0.0;
    dec.delta_coord = delta_coord;

    dec.comp_mode = allow_comp && delta_comp >= delta_coord;
    if (dec.comp_mode) {
        for (int j = 0; j < n_pairs; ++j) {
            if (comp_pick[j] >= 0 && rates.comp_rates[j] > 0.0) {
                dec.comp_object[j] = comp_pick[j];
                dec.comp_rate[j] = rates.comp_rates[j];
            }
        }
    } else {
        for (int j = 0; j < n_pairs; ++j) {
            if (coord_pick[j] >= 0 && rates.coord_rates[j] > 0.0) {
                dec.coord_object[j] = coord_pick[j];
                dec.coord_rate[j] = rates.coord_rates[j];
            }
        }
    }
    return dec;
}

double drift_upper_bound(const VipState& vip, const CacheState& prev_cache,
                         const std::vector<int8_t>& actions, const PlacementParams& params) {
    const int n_pairs = vip.n_pairs;
    const int n_objects = vip.n_objects;
    double cost_term = 0.0;
    double backlog_term = 0.0;
    for (int n = 0; n < n_pairs; ++n) {
        for (int k = 0; k < n_objects; ++k) {
            const int8_t p = actions[static_cast<size_t>(n) * n_objects + k];
            if (p == 1) cost_term += params.cost_weight * params.placement_price;
            const int s_new = (prev_cache.cached(n, k) ? 1 : 0) + p;
            if (s_new != 0)
                backlog_term += vip.bs(n, k) * params.read_rate * s_new;
        }
    }
    return cost_term - 2.0 * params.slots_per_frame * backlog_term;
}

double one_step_objective(const ControlDecision& dec, const VipState& vip) {
    const int n_pairs = vip.n_pairs;
    double obj = 0.0;
    std::vector<double> bs_sum(vip.n_objects, 0.0);
    for (int n = 0; n < n_pairs; ++n)
        for (int k = 0; k < vip.n_objects; ++k) bs_sum[k] += vip.bs(n, k);

    for (int j = 0; j < n_pairs; ++j) {
        if (dec.comp_mode && dec.comp_object[j] >= 0) {
            const int k = dec.comp_object[j];
            obj += dec.comp_rate[j] * (bs_sum[k] - vip.user(j, k));
        }
        if (!dec.comp_mode && dec.coord_object[j] >= 0) {
            const int k = dec.coord_object[j];
            obj += dec.coord_rate[j] * (vip.bs(j, k) - vip.user(j, k));
        }
    }
    for (int n = 0; n < n_pairs; ++n)
        obj -= vip.bs(n, dec.backhaul_object[n]) * dec.backhaul_rate[n];
    return obj;
}

}  // namespace phycache
