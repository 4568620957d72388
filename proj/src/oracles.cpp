#include "phycache/oracles.hpp"

#include <stdexcept>

namespace phycache {

namespace {

// visits every subset of {0..n-1} with at most `cap` elements
template <typename Fn>
void for_each_subset(int n, int cap, Fn&& fn) {
    std::vector<int> subset;
    auto recurse = [&](auto&& self, int start) -> void {
        fn(subset);
        if (static_cast<int>(subset.size()) == cap) return;
        for (int k = start; k < n; ++k) {
            subset.push_back(k);
            self(self, k + 1);
            subset.pop_back();
        }
    };
    recurse(recurse, 0);
}

}  // namespace

CacheOracleResult brute_force_cache_oracle(const VipState& vip, const CacheState& prior,
                                           const PlacementParams& params) {
    const int n_pairs = vip.n_pairs;
    const int n_objects = vip.n_objects;
    if (n_objects > 12 || params.capacity > 4)
        throw std::invalid_argument("cache oracle: instance too large to enumerate");

    CacheOracleResult best;
    best.actions.assign(static_cast<size_t>(n_pairs) * n_objects, 0);

    // the objective and constraints separate per BS, so each BS's contents are
    // enumerated independently
    std::vector<int8_t> bs_actions(n_objects, 0);
    for (int n = 0; n < n_pairs; ++n) {
        double bs_best = 0.0;
        std::vector<int8_t> bs_best_actions(n_objects, 0);
        bool first = true;

        std::vector<uint8_t> member(n_objects, 0);
        auto evaluate = [&](const std::vector<int>& subset) {
            std::fill(member.begin(), member.end(), 0);
            for (int k : subset) member[k] = 1;
            double obj = 0.0;
            for (int k = 0; k < n_objects; ++k) {
                const bool was = prior.cached(n, k);
                bs_actions[k] = static_cast<int8_t>(member[k] - (was ? 1 : 0));
                if (bs_actions[k] == 1) obj += params.cost_weight * params.placement_price;
                if (member[k])
                    obj -= 2.0 * params.slots_per_frame * vip.bs(n, k) * params.read_rate;
            }
            if (first || obj < bs_best) {
                first = false;
                bs_best = obj;
                bs_best_actions = bs_actions;
            }
        };
        for_each_subset(n_objects, params.capacity, evaluate);

        for (int k = 0; k < n_objects; ++k)
            best.actions[static_cast<size_t>(n) * n_objects + k] = bs_best_actions[k];
    }
    best.objective = drift_upper_bound(vip, prior, best.actions, params);
    return best;
}

ControlOracleResult brute_force_control_oracle(const VipState& vip, const RatePair& rates,
                                               const std::vector<double>& backhaul_rate) {
    const int n_pairs = vip.n_pairs;
    const int n_objects = vip.n_objects;
    if (n_pairs > 3 || n_objects > 5)
        throw std::invalid_argument("control oracle: instance too large to enumerate");

    ControlOracleResult best;
    bool first = true;

    ControlDecision dec;
    dec.comp_object.assign(n_pairs, -1);
    dec.comp_rate.assign(n_pairs, 0.0);
    dec.coord_object.assign(n_pairs, -1);
    dec.coord_rate.assign(n_pairs, 0.0);
    dec.backhaul_object.assign(n_pairs, 0);
    dec.backhaul_rate = backhaul_rate;

    // the backhaul term separates per BS: pick each BS's best target exactly
    for (int n = 0; n < n_pairs; ++n) {
        int arg = 0;
        for (int k = 1; k < n_objects; ++k)
            if (vip.bs(n, k) > vip.bs(n, arg)) arg = k;
        dec.backhaul_object[n] = arg;
    }

    // joint enumeration of mode and per-user assignment (-1 = no serve)
    std::vector<int> assign(n_pairs, -1);
    for (int mode = 0; mode <= 1; ++mode) {
        dec.comp_mode = mode == 1;
        bool done = false;
        std::fill(assign.begin(), assign.end(), -1);
        while (!done) {
            for (int j = 0; j < n_pairs; ++j) {
                if (dec.comp_mode) {
                    dec.comp_object[j] = assign[j];
                    dec.comp_rate[j] = assign[j] >= 0 ? rates.comp_rates[j] : 0.0;
                    dec.coord_object[j] = -1;
                    dec.coord_rate[j] = 0.0;
                } else {
                    dec.coord_object[j] = assign[j];
                    dec.coord_rate[j] = assign[j] >= 0 ? rates.coord_rates[j] : 0.0;
                    dec.comp_object[j] = -1;
                    dec.comp_rate[j] = 0.0;
                }
            }
            const double obj = one_step_objective(dec, vip);
            if (first || obj < best.objective) {
                first = false;
                best.objective = obj;
                best.decision = dec;
            }
            // odometer over {-1, 0, .., n_objects-1}^n_pairs
            int pos = 0;
            while (pos < n_pairs) {
                if (++assign[pos] < n_objects) break;
                assign[pos] = -1;
                ++pos;
            }
            done = pos == n_pairs;
        }
    }
    return best;
}

}  // namespace phycache
