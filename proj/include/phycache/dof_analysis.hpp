#pragma once

#include <string>
#include <vector>

#include "phycache/parallel.hpp"

namespace phycache {

// Parameters of the high-SNR stability-region analysis. Rates are in DoF
// units: d_a / d_b are the symmetric per-user DoF of the two modes, backhaul
// is the data sub-channel in the same units.
struct RegionParams {
    int n_pairs = 0;
    int n_objects = 0;
    int capacity = 0;
    std::vector<double> popularity;  // descending, normalized
    double backhaul = 0.0;           // R_d
    double read_rate = 0.0;          // r_n
    double d_a = 1.0;
    double d_b = 0.5;

    // popularity mass not covered by the fixed head placement
    double tail_mass() const;
    void validate() const;
};

enum class DofBranch { RanLimited, Mixed, BackhaulLimited };

struct MaxSumDofResult {
    double d_star = 0.0;      // per-user total DoF at the symmetric optimum
    double alpha_star = 0.0;  // long-run coordinated-mode fraction
    DofBranch branch = DofBranch::RanLimited;
};

const char* to_string(DofBranch b);

// Closed-form maximum symmetric per-user DoF under identical user popularity.
// Requires read_rate >= n_pairs * d_a (cache reads never the bottleneck).
MaxSumDofResult max_sum_dof(const RegionParams& params);

// Independent oracle: exhaustive grid over the mode-split fraction alpha with
// a feasibility bisection on the per-user DoF at each grid point.
struct GridOracleResult {
    double d_star = 0.0;
    double alpha_star = 0.0;
};
GridOracleResult grid_alpha_oracle(const RegionParams& params, double alpha_step = 1e-4,
                                   ExecMode mode = ExecMode::Parallel);

// Feasibility of an arbitrary DoF tuple d[j][k] (row-major) under the fixed
// head placement, searching the mode-split fraction over a grid. Objects are
// relabeled by aggregate demand so the head really is the popular set.
bool dof_region_membership(const std::vector<double>& dof_tuple, const RegionParams& params,
                           double alpha_step = 1e-3);

}  // namespace phycache
