#include "phycache/dof_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phycache {

namespace {
constexpr double kEps = 1e-12;
}

double RegionParams::tail_mass() const {
    double s = 0.0;
    for (int k = capacity; k < n_objects; ++k) s += popularity[k];
    return s;
}

void RegionParams::validate() const {
    if (n_pairs < 1) throw std::invalid_argument("region: n_pairs must be >= 1");
    if (static_cast<int>(popularity.size()) != n_objects)
        throw std::invalid_argument("region: popularity size mismatch");
    if (capacity < 0 || capacity > n_objects)
        throw std::invalid_argument("region: capacity out of range");
    if (d_b > d_a + kEps) throw std::invalid_argument("region: d_b must not exceed d_a");
    if (backhaul < 0.0) throw std::invalid_argument("region: backhaul must be >= 0");
    double sum = 0.0;
    for (size_t k = 0; k < popularity.size(); ++k) {
        sum += popularity[k];
        if (k > 0 && popularity[k] > popularity[k - 1] + kEps)
            throw std::invalid_argument("region: popularity must be descending");
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("region: popularity must sum to 1");
}

const char* to_string(DofBranch b) {
    switch (b) {
        case DofBranch::RanLimited: return "ran-limited";
        case DofBranch::Mixed: return "mixed";
        case DofBranch::BackhaulLimited: return "backhaul-limited";
    }
    return "?";
}

MaxSumDofResult max_sum_dof(const RegionParams& params) {
    params.validate();
    const int n = params.n_pairs;
    if (params.read_rate + kEps < n * params.d_a)
        throw std::invalid_argument("max_sum_dof: requires read_rate >= n_pairs * d_a");

    const double tail = params.tail_mass();
    const double r_a = n * params.d_a * tail;      // backhaul needed for always-CoMP
    const double r_b = params.d_b * tail;          // backhaul needed for always-coordinated
    MaxSumDofResult res;

    if (params.backhaul >= r_a) {
        res.branch = DofBranch::RanLimited;
        res.d_star = params.d_a;
        res.alpha_star = 0.0;
        return res;
    }
    if (params.backhaul <= r_b) {
        res.branch = DofBranch::BackhaulLimited;
        res.d_star = params.backhaul / tail;  // tail > 0 here, else the first branch fired
        res.alpha_star = 1.0;
        return res;
    }

    res.branch = DofBranch::Mixed;
    const double denom_hat = r_a - n * r_b;
    double alpha = -1.0;
    if (denom_hat > kEps) {
        const double alpha_hat = (r_a - n * params.backhaul) / denom_hat;
        if ((1.0 - alpha_hat) * r_a / n + alpha_hat * r_b <= alpha_hat * params.d_b + kEps)
            alpha = alpha_hat;
    }
    if (alpha < 0.0)
        alpha = (r_a - params.backhaul) / (r_a - n * r_b + (n - 1) * params.d_b);
    res.alpha_star = std::clamp(alpha, 0.0, 1.0);
    res.d_star = (1.0 - res.alpha_star) * params.d_a + res.alpha_star * params.d_b;
    return res;
}

namespace {

// Feasibility of a symmetric per-user DoF d at coordinated fraction alpha.
// Demand splits into a CoMP-carried share and a coordinated share; per-user
// budgets are (1-alpha)*d_a and alpha*d_b, and only the tail (uncached) share
// loads the backhaul, at cost N per CoMP unit and 1 per coordinated unit.
bool symmetric_feasible(const RegionParams& p, double alpha, double d) {
    const double tail = p.tail_mass();
    const double z_min = std::max(0.0, d - (1.0 - alpha) * p.d_a);
    const double z_max = std::min(alpha * p.d_b, d);
    if (z_min > z_max + kEps) return false;
    const double tail_demand = d * tail;
    const double backhaul_load =
        p.n_pairs * tail_demand - (p.n_pairs - 1) * std::min(tail_demand, z_max);
    return backhaul_load <= p.backhaul + kEps;
}

double max_d_at_alpha(const RegionParams& p, double alpha) {
    if (!symmetric_feasible(p, alpha, 0.0)) return 0.0;
    double lo = 0.0, hi = p.d_a;
    if (symmetric_feasible(p, alpha, hi)) return hi;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (symmetric_feasible(p, alpha, mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

GridOracleResult grid_alpha_oracle(const RegionParams& params, double alpha_step, ExecMode mode) {
    params.validate();
    if (params.read_rate + kEps < params.n_pairs * params.d_a)
        throw std::invalid_argument("grid_alpha_oracle: requires read_rate >= n_pairs * d_a");
    const size_t steps = static_cast<size_t>(std::llround(1.0 / alpha_step));
    std::vector<double> values(steps + 1);
    parallel_for(steps + 1, mode, [&](size_t i) {
        const double alpha = std::min(1.0, static_cast<double>(i) * alpha_step);
        values[i] = max_d_at_alpha(params, alpha);
    });
    GridOracleResult res;
    for (size_t i = 0; i <= steps; ++i) {
        if (values[i] > res.d_star) {
            res.d_star = values[i];
            res.alpha_star = std::min(1.0, static_cast<double>(i) * alpha_step);
        }
    }
    return res;
}

namespace {

struct SplitTotals {
    std::vector<double> tail_x, tail_y, head_x, head_y;  // per user
    bool ok = false;
};

// Greedy per-user split of demand into mode shares under the two budgets.
// tail_first such that the cheap (coordinated) backhaul carries the tail, or
// head_first to spare the cache read excess; both are tried by the caller.
SplitTotals split_users(const std::vector<double>& tail, const std::vector<double>& head,
                        double xbudget, double ybudget, bool tail_first) {
    const size_t n = tail.size();
    SplitTotals s;
    s.tail_x.assign(n, 0.0);
    s.tail_y.assign(n, 0.0);
    s.head_x.assign(n, 0.0);
    s.head_y.assign(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
        double y_left = ybudget;
        if (tail_first) {
            s.tail_y[j] = std::min(tail[j], y_left);
            y_left -= s.tail_y[j];
            s.tail_x[j] = tail[j] - s.tail_y[j];
            if (s.tail_x[j] > xbudget + kEps) return s;
            s.head_x[j] = std::min(head[j], xbudget - s.tail_x[j]);
            s.head_y[j] = head[j] - s.head_x[j];
            if (s.head_y[j] > y_left + kEps) return s;
        } else {
            s.head_y[j] = std::min(head[j], y_left);
            y_left -= s.head_y[j];
            s.head_x[j] = head[j] - s.head_y[j];
            s.tail_y[j] = std::min(tail[j], y_left);
            s.tail_x[j] = tail[j] - s.tail_y[j];
            if (s.head_x[j] + s.tail_x[j] > xbudget + kEps) return s;
        }
    }
    s.ok = true;
    return s;
}

bool membership_at_alpha(const std::vector<double>& tail, const std::vector<double>& head,
                         const RegionParams& p, double alpha) {
    const double xbudget = (1.0 - alpha) * p.d_a;
    const double ybudget = alpha * p.d_b;
    for (bool tail_first : {true, false}) {
        const SplitTotals s = split_users(tail, head, xbudget, ybudget, tail_first);
        if (!s.ok) continue;
        const double x_tail_total = std::accumulate(s.tail_x.begin(), s.tail_x.end(), 0.0);
        const double x_head_total = std::accumulate(s.head_x.begin(), s.head_x.end(), 0.0);
        bool fits = true;
        for (int n = 0; n < p.n_pairs && fits; ++n) {
            const double head_load = x_head_total + s.head_y[n];
            const double excess = std::max(0.0, head_load - p.read_rate);
            fits = excess + x_tail_total + s.tail_y[n] <= p.backhaul + kEps;
        }
        if (fits) return true;
    }
    return false;
}

}  // namespace

bool dof_region_membership(const std::vector<double>& dof_tuple, const RegionParams& params,
                           double alpha_step) {
    params.validate();
    const int n = params.n_pairs;
    const int k_count = params.n_objects;
    if (static_cast<int>(dof_tuple.size()) != n * k_count)
        throw std::invalid_argument("membership: tuple size mismatch");
    for (double d : dof_tuple)
        if (d < 0.0 || !std::isfinite(d)) throw std::invalid_argument("membership: malformed tuple");

    // relabel objects by aggregate demand; the head placement covers the
    // heaviest `capacity` objects
    std::vector<double> aggregate(k_count, 0.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < k_count; ++k) aggregate[k] += dof_tuple[static_cast<size_t>(j) * k_count + k];
    std::vector<int> order(k_count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return aggregate[a] > aggregate[b]; });
    std::vector<uint8_t> in_head(k_count, 0);
    for (int i = 0; i < params.capacity; ++i) in_head[order[i]] = 1;

    std::vector<double> tail(n, 0.0), head(n, 0.0);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < k_count; ++k) {
            const double d = dof_tuple[static_cast<size_t>(j) * k_count + k];
            (in_head[k] ? head[j] : tail[j]) += d;
        }
    }

    const int steps = static_cast<int>(std::llround(1.0 / alpha_step));
    for (int i = 0; i <= steps; ++i) {
        const double alpha = std::min(1.0, i * alpha_step);
        if (membership_at_alpha(tail, head, params, alpha)) return true;
    }
    return false;
}

}  // namespace phycache
