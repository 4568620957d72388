#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "phycache/dof_analysis.hpp"
#include "phycache/traffic.hpp"
#include "phycache/simulator.hpp"
#include "phycache/sweep.hpp"
#include "phycache/validation.hpp"

namespace {

using phycache::SimConfig;

SimConfig resolve_config(const std::string& config_path, const std::string& preset) {
    if (!config_path.empty()) return phycache::load_config_file(config_path);
    if (preset == "desk") return phycache::desk_preset();
    if (preset == "paper") return phycache::paper_preset();
    throw std::invalid_argument("unknown preset '" + preset + "' (expected desk|paper)");
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw std::invalid_argument("--values must list at least one number");
    return out;
}

// scalar-or-array field in the analysis parameter document
std::vector<double> number_list(const nlohmann::json& doc, const char* key,
                                std::vector<double> fallback) {
    if (!doc.contains(key)) return fallback;
    const auto& v = doc.at(key);
    if (v.is_array()) return v.get<std::vector<double>>();
    return {v.get<double>()};
}

int run_analyze_dof(const std::string& params_path, const std::string& out_path) {
    std::ifstream in(params_path);
    if (!in) throw std::runtime_error("cannot open '" + params_path + "'");
    nlohmann::json doc;
    in >> doc;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        static const std::set<std::string> known{"n_pairs", "library_size", "d_a",    "d_b",
                                                 "read_rate", "capacity",   "zipf",   "backhaul"};
        if (!known.count(it.key()))
            throw std::invalid_argument("analyze-dof: unknown field '" + it.key() + "'");
    }

    phycache::RegionParams base;
    base.n_pairs = doc.value("n_pairs", 3);
    base.n_objects = doc.value("library_size", 100);
    base.d_a = doc.value("d_a", 1.0);
    base.d_b = doc.value("d_b", 2.0 / 3.0);
    base.read_rate = doc.value("read_rate", base.n_pairs * base.d_a);
    const auto capacities = number_list(doc, "capacity", {static_cast<double>(base.n_objects / 10)});
    const auto skews = number_list(doc, "zipf", {0.5});
    const auto backhauls = number_list(doc, "backhaul", {0.5});

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
        out = &file;
    }
    *out << "n_pairs,library_size,capacity,zipf,backhaul,d_a,d_b,d_star,alpha_star,branch,"
            "d_star_n_users,d_star_k_objects\n";
    char line[320];
    for (double skew : skews) {
        for (double cap : capacities) {
            for (double rd : backhauls) {
                phycache::RegionParams p = base;
                p.capacity = static_cast<int>(cap);
                p.popularity = phycache::zipf_popularity(p.n_objects, skew);
                p.backhaul = rd;
                const auto r = phycache::max_sum_dof(p);
                std::snprintf(line, sizeof(line),
                              "%d,%d,%d,%.6g,%.9g,%.6g,%.6g,%.9g,%.9g,%s,%.9g,%.9g\n", p.n_pairs,
                              p.n_objects, p.capacity, skew, rd, p.d_a, p.d_b, r.d_star,
                              r.alpha_star, phycache::to_string(r.branch),
                              r.d_star * p.n_pairs, r.d_star * p.n_objects);
                *out << line;
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-slot simulator and analysis toolkit for cached dual-mode MIMO networks"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run one experiment and write summary/time series");
    std::string sim_config, sim_preset = "desk", sim_out = ".";
    uint64_t sim_seed = 0;
    bool sim_seed_set = false;
    sim->add_option("--config", sim_config, "JSON config file");
    sim->add_option("--preset", sim_preset, "Built-in preset when no config is given (desk|paper)");
    auto* seed_opt = sim->add_option("--seed", sim_seed, "Override the config seed");
    sim->add_option("--out", sim_out, "Output directory");

    // sweep
    auto* swp = app.add_subcommand("sweep", "Run one axis sweep across policies");
    std::string swp_config, swp_preset = "desk", swp_axis, swp_values, swp_out = "sweep.csv";
    std::string swp_policies = "all", swp_seeds = "";
    bool swp_serial = false;
    swp->add_option("--config", swp_config, "JSON config file");
    swp->add_option("--preset", swp_preset, "Built-in preset when no config is given");
    swp->add_option("--axis", swp_axis, "lambda|cache|zipf|cost-weight|backhaul")->required();
    swp->add_option("--values", swp_values, "Comma-separated axis values")->required();
    swp->add_option("--policies", swp_policies,
                    "Comma-separated policies or 'all' (proposed,offline,lfu,vip-single)");
    swp->add_option("--seeds", swp_seeds, "Comma-separated seeds (default: config seed)");
    swp->add_flag("--serial", swp_serial, "Run the sweep on one thread");
    swp->add_option("--out", swp_out, "Output CSV path");

    // analyze-dof
    auto* dof = app.add_subcommand("analyze-dof", "Closed-form stability-region calculator");
    std::string dof_params, dof_out;
    dof->add_option("--params", dof_params, "JSON parameter file")->required();
    dof->add_option("--out", dof_out, "Output CSV path (default: stdout)");

    // validate
    auto* val = app.add_subcommand("validate", "Run the oracle-equivalence suites");
    int val_trials = 1000;
    bool val_all = false, val_serial = false;
    val->add_option("--oracle-trials", val_trials, "Instances per oracle suite");
    val->add_flag("--all", val_all, "Also run the simulation-level checks");
    val->add_flag("--serial", val_serial, "Disable parallel execution");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) {
            SimConfig cfg = resolve_config(sim_config, sim_preset);
            if (seed_opt->count() > 0) {
                cfg.seed = sim_seed;
                (void)sim_seed_set;
            }
            const auto report = phycache::run_simulation(cfg);
            std::filesystem::create_directories(sim_out);
            phycache::write_summary_json(report, cfg, sim_out + "/summary.json");
            phycache::write_timeseries_csv(report, sim_out + "/timeseries.csv");
            phycache::write_delays_csv(report, sim_out + "/delays.csv");
            std::printf("policy=%s seed=%llu mean_delay=%.3f slots (%.4f s) backlog=%.3f cost=%.4f "
                        "comp_fraction=%.3f hit_fraction=%.3f\n",
                        report.policy.c_str(), static_cast<unsigned long long>(report.seed),
                        report.mean_delay_slots, report.mean_delay_s, report.vip_backlog_avg,
                        report.placement_cost_avg, report.comp_mode_fraction,
                        report.cache_hit_fraction);
            return 0;
        }
        if (*swp) {
            SimConfig cfg = resolve_config(swp_config, swp_preset);
            const auto axis = phycache::sweep_axis_from_string(swp_axis);
            const auto values = parse_values(swp_values);
            std::vector<phycache::Policy> policies;
            if (swp_policies == "all") {
                policies = {phycache::Policy::Proposed, phycache::Policy::Offline,
                            phycache::Policy::Lfu, phycache::Policy::VipSingle};
            } else {
                std::stringstream ss(swp_policies);
                std::string item;
                while (std::getline(ss, item, ',')) policies.push_back(phycache::policy_from_string(item));
            }
            std::vector<uint64_t> seeds;
            if (swp_seeds.empty()) {
                seeds = {cfg.seed};
            } else {
                std::stringstream ss(swp_seeds);
                std::string item;
                while (std::getline(ss, item, ',')) seeds.push_back(std::stoull(item));
            }
            const auto rows =
                phycache::run_sweep(cfg, axis, values, policies, seeds,
                                    swp_serial ? phycache::ExecMode::Serial
                                               : phycache::ExecMode::Parallel);
            phycache::write_sweep_csv(rows, axis, swp_out);
            std::printf("wrote %zu rows to %s\n", rows.size(), swp_out.c_str());
            return 0;
        }
        if (*dof) return run_analyze_dof(dof_params, dof_out);
        if (*val) {
            phycache::ValidationOptions opt;
            opt.cache_oracle_trials = val_trials;
            opt.control_oracle_trials = val_trials;
            opt.mode = val_serial ? phycache::ExecMode::Serial : phycache::ExecMode::Parallel;
            const auto results =
                val_all ? phycache::run_all_checks(opt) : phycache::run_oracle_checks(opt);
            phycache::print_results(results);
            for (const auto& r : results)
                if (!r.pass) return 1;
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
