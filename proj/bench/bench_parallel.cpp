// Wall-clock comparison of the serial reference paths against the OpenMP
// paths for the three data-parallel workloads: the alpha-grid oracle, the
// oracle-equivalence trial batches, and a policy sweep.

#include <chrono>
#include <cstdio>

#include "phycache/dof_analysis.hpp"
#include "phycache/parallel.hpp"
#include "phycache/sweep.hpp"
#include "phycache/traffic.hpp"
#include "phycache/validation.hpp"

using namespace phycache;

namespace {

template <typename Fn>
double time_s(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %7.3f s   openmp %7.3f s   speedup %.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", parallel_threads());

    {
        RegionParams p;
        p.n_pairs = 4;
        p.n_objects = 200;
        p.capacity = 40;
        p.popularity = zipf_popularity(200, 0.8);
        p.d_a = 1.0;
        p.d_b = 0.5;
        p.read_rate = 4.0;
        p.backhaul = 0.7;
        GridOracleResult serial_res, parallel_res;
        const double ts = time_s([&] {
            for (int i = 0; i < 20; ++i) serial_res = grid_alpha_oracle(p, 1e-4, ExecMode::Serial);
        });
        const double tp = time_s([&] {
            for (int i = 0; i < 20; ++i) parallel_res = grid_alpha_oracle(p, 1e-4, ExecMode::Parallel);
        });
        report("alpha-grid oracle x20", ts, tp);
        if (serial_res.d_star != parallel_res.d_star)
            std::printf("  WARNING: serial/parallel mismatch (%.12f vs %.12f)\n", serial_res.d_star,
                        parallel_res.d_star);
    }

    {
        ValidationOptions opt;
        opt.cache_oracle_trials = 4000;
        opt.control_oracle_trials = 4000;
        opt.mode = ExecMode::Serial;
        double ts = time_s([&] {
            check_cache_placement_optimality(opt);
            check_fast_control_optimality(opt);
        });
        opt.mode = ExecMode::Parallel;
        double tp = time_s([&] {
            check_cache_placement_optimality(opt);
            check_fast_control_optimality(opt);
        });
        report("oracle trials x8000", ts, tp);
    }

    {
        SimConfig cfg = desk_preset();
        cfg.frames = 300;
        const std::vector<double> values{0.5 * cfg.arrival_mbps, cfg.arrival_mbps};
        const std::vector<Policy> policies{Policy::Proposed, Policy::Offline, Policy::Lfu,
                                           Policy::VipSingle};
        const double ts = time_s(
            [&] { run_sweep(cfg, SweepAxis::Lambda, values, policies, {1, 2}, ExecMode::Serial); });
        const double tp = time_s(
            [&] { run_sweep(cfg, SweepAxis::Lambda, values, policies, {1, 2}, ExecMode::Parallel); });
        report("sweep 16 runs", ts, tp);
    }
    return 0;
}
