#include "phycache/sweep.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace phycache {

SweepAxis sweep_axis_from_string(const std::string& s) {
    if (s == "lambda") return SweepAxis::Lambda;
    if (s == "cache") return SweepAxis::Cache;
    if (s == "zipf") return SweepAxis::Zipf;
    if (s == "cost-weight") return SweepAxis::CostWeight;
    if (s == "backhaul") return SweepAxis::Backhaul;
    throw std::invalid_argument("sweep: unknown axis '" + s +
                                "' (expected lambda|cache|zipf|cost-weight|backhaul)");
}

const char* to_string(SweepAxis a) {
    switch (a) {
        case SweepAxis::Lambda: return "lambda";
        case SweepAxis::Cache: return "cache";
        case SweepAxis::Zipf: return "zipf";
        case SweepAxis::CostWeight: return "cost-weight";
        case SweepAxis::Backhaul: return "backhaul";
    }
    return "?";
}

SimConfig apply_axis(const SimConfig& base, SweepAxis axis, double value) {
    SimConfig cfg = base;
    switch (axis) {
        case SweepAxis::Lambda: cfg.arrival_mbps = value; break;
        case SweepAxis::Cache: cfg.cache_capacity = static_cast<int>(std::llround(value)); break;
        case SweepAxis::Zipf: cfg.zipf_skewness = value; break;
        case SweepAxis::CostWeight: cfg.cost_weight = value; break;
        case SweepAxis::Backhaul: cfg.backhaul_mbps = value; break;
    }
    return cfg;
}

std::vector<SweepRow> run_sweep(const SimConfig& base, SweepAxis axis,
                                const std::vector<double>& values,
                                const std::vector<Policy>& policies,
                                const std::vector<uint64_t>& seeds, ExecMode mode) {
    struct Task {
        double value;
        Policy policy;
        uint64_t seed;
    };
    std::vector<Task> tasks;
    for (double v : values)
        for (Policy p : policies)
            for (uint64_t s : seeds) tasks.push_back({v, p, s});

    std::vector<SweepRow> rows(tasks.size());
    parallel_for(tasks.size(), mode, [&](size_t i) {
        SimConfig cfg = apply_axis(base, axis, tasks[i].value);
        cfg.policy = tasks[i].policy;
        cfg.seed = tasks[i].seed;
        const MetricsReport rep = run_simulation(cfg);
        SweepRow& row = rows[i];
        row.value = tasks[i].value;
        row.policy = tasks[i].policy;
        row.seed = tasks[i].seed;
        row.mean_delay_slots = rep.mean_delay_slots;
        row.mean_delay_s = rep.mean_delay_s;
        row.vip_backlog = rep.vip_backlog_avg;
        row.dp_backlog = rep.dp_backlog_avg;
        row.placement_cost = rep.placement_cost_avg;
        row.comp_fraction = rep.comp_mode_fraction;
    });
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, SweepAxis axis, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "axis,value,policy,seed,mean_delay_slots,mean_delay_s,vip_backlog,dp_backlog,"
           "placement_cost,comp_fraction\n";
    char line[320];
    for (const SweepRow& r : rows) {
        std::snprintf(line, sizeof(line), "%s,%.9g,%s,%llu,%.9g,%.9g,%.9g,%.9g,%.9g,%.6g\n",
                      to_string(axis), r.value, to_string(r.policy),
                      static_cast<unsigned long long>(r.seed), r.mean_delay_slots, r.mean_delay_s,
                      r.vip_backlog, r.dp_backlog, r.placement_cost, r.comp_fraction);
        out << line;
    }
}

}  // namespace phycache
