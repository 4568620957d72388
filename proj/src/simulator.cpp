#include "phycache/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "phycache/baselines.hpp"
#include "phycache/ledger.hpp"
#include "phycache/zf.hpp"

namespace phycache {

namespace {

// uniform subset of `count` users, Fisher-Yates prefix
std::vector<int> pick_scheduled(int n_pairs, int count, RngStream& rng) {
    std::vector<int> users(n_pairs);
    for (int i = 0; i < n_pairs; ++i) users[i] = i;
    const int take = std::min(count, n_pairs);
    for (int i = 0; i < take; ++i) {
        const int swap_with = i + static_cast<int>(rng.uniform_index(n_pairs - i));
        std::swap(users[i], users[swap_with]);
    }
    users.resize(take);
    std::sort(users.begin(), users.end());
    return users;
}

double percentile_from_histogram(const std::vector<long>& hist, long samples, double q) {
    if (samples == 0) return 0.0;
    const long target = static_cast<long>(std::ceil(q * samples));
    long seen = 0;
    for (size_t d = 0; d < hist.size(); ++d) {
        seen += hist[d];
        if (seen >= target) return static_cast<double>(d);
    }
    return static_cast<double>(hist.size() - 1);
}

}  // namespace

double MetricsReport::vip_backlog_quarter(int quarter) const {
    const size_t n = series.size();
    const size_t lo = n * (quarter - 1) / 4;
    const size_t hi = n * quarter / 4;
    if (hi <= lo) return 0.0;
    double sum = 0.0;
    for (size_t i = lo; i < hi; ++i) sum += series[i].vip_backlog;
    return sum / (hi - lo);
}

MetricsReport run_simulation(const SimConfig& cfg) {
    cfg.validate();
    const UnitContext ctx = cfg.units();
    const int n = cfg.topology.n_pairs;
    const int k_count = cfg.library_size;
    const double power = std::pow(10.0, cfg.power_db / 10.0);
    const double backhaul_total = cfg.backhaul_objects_per_slot();
    const double lambda = cfg.arrival_objects_per_slot();

    RngStream topo_rng(cfg.seed, "topology");
    RngStream channel_rng(cfg.seed, "channels");
    RngStream arrival_rng(cfg.seed, "arrivals");
    RngStream selection_rng(cfg.seed, "user-selection");
    RngStream catalog_rng(cfg.seed, "catalogs");

    const Topology topo = build_topology(cfg.topology, cfg.tx_antennas, cfg.rx_antennas, topo_rng);
    const Catalog catalog(n, k_count, cfg.catalog_size, cfg.zipf_skewness, cfg.shared_catalog,
                          catalog_rng);
    const TrafficModel traffic(catalog, lambda, cfg.truncation_factor);

    VipState vip(n, k_count);
    CacheState cache(n, k_count, cfg.cache_capacity);
    VirtualCompQueues vcq(n, k_count);
    PacketLedger ledger(n, k_count, cfg.chunks_per_object, cfg.read_rate);
    LfuCounters lfu(n, k_count);

    if (cfg.policy == Policy::Offline) offline_placement(catalog, n, cache);

    PlacementParams pparams;
    pparams.cost_weight = cfg.cost_weight;
    pparams.slots_per_frame = cfg.slots_per_frame;
    pparams.placement_price = cfg.placement_price;
    pparams.read_rate = cfg.read_rate;
    pparams.capacity = cfg.cache_capacity;

    MetricsReport rep;
    rep.policy = to_string(cfg.policy);
    rep.seed = cfg.seed;
    rep.frames = cfg.frames;
    rep.warmup_frames = cfg.warmup_frames();
    rep.total_slots = static_cast<long>(cfg.frames) * cfg.slots_per_frame;
    rep.series.reserve(cfg.frames);
    rep.flow_trace.reserve(cfg.frames);

    const long warmup_end_slot = static_cast<long>(rep.warmup_frames) * cfg.slots_per_frame;
    const bool allow_comp = cfg.policy != Policy::VipSingle;
    std::vector<double> backhaul_rate(n, backhaul_total);

    long post_slots = 0, comp_slots = 0;
    double vip_sum = 0.0, dp_sum = 0.0, cost_post = 0.0;
    double hits_post = 0.0, misses_post = 0.0;
    double comp_rate_sum = 0.0, coord_rate_sum = 0.0;
    long coord_rate_count = 0;
    double delay_weighted = 0.0;
    int post_frames = 0;

    long t = 0;
    for (int frame = 1; frame <= cfg.frames; ++frame) {
        // frame boundary: cache placement, then the backhaul split for the frame
        double frame_cost = 0.0;
        switch (cfg.policy) {
            case Policy::Proposed:
            case Policy::VipSingle: {
                const auto actions = place_cache(vip, cache, pparams);
                cache.apply(actions, cfg.placement_price);
                frame_cost = cache.last_frame_cost();
                break;
            }
            case Policy::Lfu: {
                const auto actions = lfu_step(lfu, cache);
                cache.apply(actions, cfg.placement_price);
                frame_cost = cache.last_frame_cost();
                break;
            }
            case Policy::Offline:
                break;
        }
        for (int b = 0; b < n; ++b) {
            const double control = std::min(
                static_cast<double>(cache.last_frame_adds(b)) / cfg.slots_per_frame,
                cfg.control_fraction_cap * backhaul_total);
            backhaul_rate[b] = backhaul_total - control;
        }

        const bool post_warmup = frame > rep.warmup_frames;
        if (post_warmup) {
            cost_post += frame_cost;
            ++post_frames;
        }

        FrameStats fs;
        fs.frame = frame;
        fs.placement_cost = frame_cost;
        FrameFlowRecord flow;
        flow.cache_state.resize(static_cast<size_t>(n) * k_count);
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < k_count; ++k)
                flow.cache_state[static_cast<size_t>(b) * k_count + k] = cache.cached(b, k) ? 1 : 0;
        flow.server_arrival.assign(n, 0.0);
        flow.server_service.assign(n, 0.0);
        flow.coord_arrival.assign(n, 0.0);
        flow.coord_service.assign(n, 0.0);
        flow.comp_arrival.assign(static_cast<size_t>(n) * n, 0.0);
        flow.comp_service.assign(static_cast<size_t>(n) * n, 0.0);

        double frame_vip = 0.0, frame_dp = 0.0, frame_hits = 0.0, frame_misses = 0.0;
        double frame_delivered = 0.0, frame_delay_sum = 0.0;
        long frame_comp = 0, frame_delay_count = 0;

        for (int slot_in_frame = 0; slot_in_frame < cfg.slots_per_frame; ++slot_in_frame) {
            ++t;
            // channel and the coordinated-mode schedule for this slot
            RatePair rates;
            for (int attempt = 0;; ++attempt) {
                const ChannelState ch = sample_channels(topo, cfg.pathloss, channel_rng, t);
                rates.scheduled_set = pick_scheduled(n, cfg.coordinated_users, selection_rng);
                try {
                    rates.comp_rates = comp_zf_rates(ch, power, ctx);
                    rates.coord_rates = coordinated_zf_rates(ch, rates.scheduled_set, power, ctx);
                    break;
                } catch (const SingularChannelError&) {
                    if (attempt >= 1) throw;  // measure-zero event; one resample allowed
                }
            }

            const ArrivalBatch arrivals = traffic.generate(arrival_rng, t, n);

            const ControlDecision dec = fast_control(vip, rates, backhaul_rate, allow_comp);
            update_vip_queues(vip, dec, arrivals.counts, cache, cfg.read_rate);
            const std::vector<uint8_t> modes = select_ip_modes(vcq, arrivals, dec);
            if (cfg.policy == Policy::Lfu) lfu.record(arrivals, modes);
            ledger.route_packets(cache, modes, arrivals, backhaul_rate);
            ledger.deliver_phy(dec);

            // metrics before the staging commit so queue levels match the
            // service-before-arrival recursions
            for (const auto& f : ledger.fulfillments()) {
                const long delay = t - f.creation_slot;
                frame_delay_sum += static_cast<double>(delay) * f.chunks;
                frame_delay_count += f.chunks;
                frame_delivered += static_cast<double>(f.chunks) / cfg.chunks_per_object;
                if (f.creation_slot > warmup_end_slot) {
                    if (static_cast<size_t>(delay) >= rep.delay_histogram.size())
                        rep.delay_histogram.resize(delay + 1, 0);
                    rep.delay_histogram[delay] += f.chunks;
                    rep.delay_samples += f.chunks;
                    delay_weighted += static_cast<double>(delay) * f.chunks;
                }
            }
            ledger.end_slot();

            const double vip_total = vip.total();
            const double dp_total = ledger.total_backlog();
            frame_vip += vip_total;
            frame_dp += dp_total;
            frame_hits += ledger.hit_objects();
            frame_misses += ledger.miss_objects();
            if (dec.comp_mode) ++frame_comp;

            for (int b = 0; b < n; ++b) {
                flow.server_arrival[b] += ledger.server_arrivals()[b];
                flow.server_service[b] += backhaul_rate[b];
                flow.coord_arrival[b] += ledger.coord_buffer_arrivals()[b];
                flow.coord_service[b] += dec.coord_rate[b];  // zero in CoMP slots
                for (int j = 0; j < n; ++j) {
                    flow.comp_arrival[static_cast<size_t>(b) * n + j] +=
                        ledger.comp_buffer_arrivals()[static_cast<size_t>(b) * n + j];
                    flow.comp_service[static_cast<size_t>(b) * n + j] += dec.comp_rate[j];
                }
            }

            if (post_warmup) {
                ++post_slots;
                vip_sum += vip_total;
                dp_sum += dp_total;
                hits_post += ledger.hit_objects();
                misses_post += ledger.miss_objects();
                if (dec.comp_mode) ++comp_slots;
                for (int j = 0; j < n; ++j) {
                    comp_rate_sum += rates.comp_rates[j];
                    if (rates.coord_rates[j] > 0.0) {
                        coord_rate_sum += rates.coord_rates[j];
                        ++coord_rate_count;
                    }
                }
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < k_count; ++k) rep.arrivals_objects += arrivals.at(j, k);
            }
            rep.virtual_comp_queue_peak = std::max(rep.virtual_comp_queue_peak, vcq.max_abs());
        }

        fs.vip_backlog = frame_vip / cfg.slots_per_frame;
        fs.dp_backlog = frame_dp / cfg.slots_per_frame;
        fs.comp_fraction = static_cast<double>(frame_comp) / cfg.slots_per_frame;
        const double routed = frame_hits + frame_misses;
        fs.hit_fraction = routed > 0.0 ? frame_hits / routed : 0.0;
        fs.delivered_objects = frame_delivered;
        fs.mean_delay_slots =
            frame_delay_count > 0 ? frame_delay_sum / frame_delay_count
                                  : std::numeric_limits<double>::quiet_NaN();
        rep.series.push_back(fs);
        rep.flow_trace.push_back(std::move(flow));
    }

    rep.placement_cost_total = cache.cumulative_cost();
    rep.placement_cost_avg = post_frames > 0 ? cost_post / post_frames : 0.0;
    rep.vip_backlog_avg = post_slots > 0 ? vip_sum / post_slots : 0.0;
    rep.dp_backlog_avg = post_slots > 0 ? dp_sum / post_slots : 0.0;
    rep.comp_mode_fraction = post_slots > 0 ? static_cast<double>(comp_slots) / post_slots : 0.0;
    const double routed_post = hits_post + misses_post;
    rep.cache_hit_fraction = routed_post > 0.0 ? hits_post / routed_post : 0.0;
    rep.delivered_objects = ledger.delivered_objects();
    rep.mean_comp_rate = post_slots > 0 ? comp_rate_sum / (static_cast<double>(post_slots) * n) : 0.0;
    rep.mean_coord_rate = coord_rate_count > 0 ? coord_rate_sum / coord_rate_count : 0.0;
    rep.mapping_residual = vcq.max_abs() / rep.total_slots;

    // fraction of cache slots holding the heaviest-demand objects
    {
        const auto top = offline_top_objects(catalog, n, cfg.cache_capacity);
        std::vector<uint8_t> is_top(k_count, 0);
        for (int k : top) is_top[k] = 1;
        int match = 0;
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < k_count; ++k)
                if (cache.cached(b, k) && is_top[k]) ++match;
        rep.cache_top_overlap =
            cfg.cache_capacity > 0 ? static_cast<double>(match) / (n * cfg.cache_capacity) : 0.0;
    }

    if (rep.delay_samples > 0) {
        rep.mean_delay_slots = delay_weighted / rep.delay_samples;
        rep.mean_delay_s = rep.mean_delay_slots * cfg.slot_s;
        rep.p50_delay_slots = percentile_from_histogram(rep.delay_histogram, rep.delay_samples, 0.50);
        rep.p95_delay_slots = percentile_from_histogram(rep.delay_histogram, rep.delay_samples, 0.95);
        rep.p99_delay_slots = percentile_from_histogram(rep.delay_histogram, rep.delay_samples, 0.99);
        rep.max_delay_slots = static_cast<long>(rep.delay_histogram.size()) - 1;
    }
    return rep;
}

void write_summary_json(const MetricsReport& rep, const SimConfig& cfg, const std::string& path) {
    nlohmann::ordered_json doc;
    doc["policy"] = rep.policy;
    doc["seed"] = rep.seed;
    doc["frames"] = rep.frames;
    doc["warmup_frames"] = rep.warmup_frames;
    doc["total_slots"] = rep.total_slots;
    doc["delay"] = {{"samples", rep.delay_samples},
                    {"mean_slots", rep.mean_delay_slots},
                    {"mean_s", rep.mean_delay_s},
                    {"p50_slots", rep.p50_delay_slots},
                    {"p95_slots", rep.p95_delay_slots},
                    {"p99_slots", rep.p99_delay_slots},
                    {"max_slots", rep.max_delay_slots}};
    doc["vip_backlog_avg"] = rep.vip_backlog_avg;
    doc["dp_backlog_avg"] = rep.dp_backlog_avg;
    doc["placement_cost_avg_per_frame"] = rep.placement_cost_avg;
    doc["placement_cost_total"] = rep.placement_cost_total;
    doc["comp_mode_fraction"] = rep.comp_mode_fraction;
    doc["cache_hit_fraction"] = rep.cache_hit_fraction;
    doc["cache_top_overlap"] = rep.cache_top_overlap;
    doc["arrivals_objects"] = rep.arrivals_objects;
    doc["delivered_objects"] = rep.delivered_objects;
    doc["mean_comp_rate_objects_per_slot"] = rep.mean_comp_rate;
    doc["mean_coord_rate_objects_per_slot"] = rep.mean_coord_rate;
    doc["mapping_residual_objects_per_slot"] = rep.mapping_residual;
    doc["virtual_comp_queue_peak"] = rep.virtual_comp_queue_peak;
    doc["config"] = config_to_json(cfg);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << doc.dump(2) << "\n";
}

void write_timeseries_csv(const MetricsReport& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "frame,vip_backlog,dp_backlog,placement_cost,comp_fraction,hit_fraction,"
           "delivered_objects,mean_delay_slots\n";
    char line[256];
    for (const FrameStats& f : rep.series) {
        std::snprintf(line, sizeof(line), "%d,%.9g,%.9g,%.9g,%.6g,%.6g,%.9g,%.9g\n", f.frame,
                      f.vip_backlog, f.dp_backlog, f.placement_cost, f.comp_fraction,
                      f.hit_fraction, f.delivered_objects, f.mean_delay_slots);
        out << line;
    }
}

void write_delays_csv(const MetricsReport& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "delay_slots,count\n";
    for (size_t d = 0; d < rep.delay_histogram.size(); ++d)
        if (rep.delay_histogram[d] > 0) out << d << "," << rep.delay_histogram[d] << "\n";
}

}  // namespace phycache
