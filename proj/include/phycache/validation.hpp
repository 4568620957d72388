#pragma once

#include <string>
#include <vector>

#include "phycache/parallel.hpp"

namespace phycache {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct ValidationOptions {
    int cache_oracle_trials = 1000;
    int control_oracle_trials = 1000;
    int dof_draws = 200;
    uint64_t seed = 7;
    ExecMode mode = ExecMode::Parallel;
};

// Oracle-equivalence and closed-form checks (fast).
CheckResult check_cache_placement_optimality(const ValidationOptions& opt);
CheckResult check_fast_control_optimality(const ValidationOptions& opt);
CheckResult check_max_dof_closed_form(const ValidationOptions& opt);
CheckResult check_zf_properties(const ValidationOptions& opt);

// Simulation-level checks (minutes).
CheckResult check_stability_transition(const ValidationOptions& opt);
CheckResult check_cost_backlog_tradeoff(const ValidationOptions& opt);
CheckResult check_mapping_fidelity(const ValidationOptions& opt);
CheckResult check_baseline_ordering(const ValidationOptions& opt);
CheckResult check_zero_cost_stationary(const ValidationOptions& opt);
CheckResult check_flow_balance_audit(const ValidationOptions& opt);

std::vector<CheckResult> run_oracle_checks(const ValidationOptions& opt);
std::vector<CheckResult> run_all_checks(const ValidationOptions& opt);

void print_results(const std::vector<CheckResult>& results);

}  // namespace phycache
