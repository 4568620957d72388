#include "phycache/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace phycache {

using nlohmann::json;
using nlohmann::ordered_json;

const char* to_string(Policy p) {
    switch (p) {
        case Policy::Proposed: return "proposed";
        case Policy::Offline: return "offline";
        case Policy::Lfu: return "lfu";
        case Policy::VipSingle: return "vip-single";
    }
    return "?";
}

Policy policy_from_string(const std::string& s) {
    if (s == "proposed") return Policy::Proposed;
    if (s == "offline") return Policy::Offline;
    if (s == "lfu") return Policy::Lfu;
    if (s == "vip-single") return Policy::VipSingle;
    throw std::invalid_argument("config: unknown policy '" + s + "'");
}

UnitContext SimConfig::units() const {
    UnitContext ctx;
    ctx.object_bits = object_bits;
    ctx.chunks_per_object = chunks_per_object;
    ctx.bandwidth_hz = bandwidth_hz;
    ctx.slot_s = slot_s;
    return ctx;
}

double SimConfig::arrival_objects_per_slot() const {
    return mbps_to_objects_per_slot(arrival_mbps, units());
}

double SimConfig::backhaul_objects_per_slot() const {
    return mbps_to_objects_per_slot(backhaul_mbps, units());
}

int SimConfig::warmup_frames() const {
    return static_cast<int>(frames * warmup_fraction);
}

void SimConfig::validate() const {
    units().validate();
    if (topology.n_pairs < 1) throw std::invalid_argument("config: topology.n_pairs must be >= 1");
    if (topology.cell_radius_m <= 0.0)
        throw std::invalid_argument("config: topology.cell_radius_m must be > 0");
    if (tx_antennas < 1 || rx_antennas != 1)
        throw std::invalid_argument("config: requires tx_antennas >= 1 and rx_antennas == 1");
    if (coordinated_users < 1 || coordinated_users > tx_antennas)
        throw std::invalid_argument("config: coordinated_users must be in [1, tx_antennas]");
    if (slots_per_frame < 1) throw std::invalid_argument("config: slots_per_frame must be >= 1");
    if (frames < 1) throw std::invalid_argument("config: frames must be >= 1");
    if (arrival_mbps < 0.0) throw std::invalid_argument("config: arrival_mbps must be >= 0");
    if (library_size < 1 || catalog_size < 1 || catalog_size > library_size)
        throw std::invalid_argument("config: need 1 <= catalog_size <= library_size");
    if (zipf_skewness < 0.0) throw std::invalid_argument("config: zipf_skewness must be >= 0");
    if (cache_capacity < 0 || cache_capacity > library_size)
        throw std::invalid_argument("config: cache_capacity must be in [0, library_size]");
    if (placement_price < 0.0 || cost_weight < 0.0)
        throw std::invalid_argument("config: placement_price and cost_weight must be >= 0");
    if (read_rate <= 0.0) throw std::invalid_argument("config: read_rate must be > 0");
    if (backhaul_mbps < 0.0) throw std::invalid_argument("config: backhaul_mbps must be >= 0");
    if (control_fraction_cap < 0.0 || control_fraction_cap >= 1.0)
        throw std::invalid_argument("config: control_fraction_cap must be in [0, 1)");
    if (warmup_fraction < 0.0 || warmup_fraction >= 1.0)
        throw std::invalid_argument("config: warmup_fraction must be in [0, 1)");
}

namespace {

void reject_unknown(const json& obj, const std::string& scope, const std::set<std::string>& known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key()))
            throw std::invalid_argument("config: unknown field '" + scope + it.key() + "'");
    }
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
    if (obj.contains(key)) out = obj.at(key).get<T>();
}

Layout layout_from_string(const std::string& s) {
    if (s == "hex7") return Layout::Hex7;
    if (s == "ring") return Layout::Ring;
    if (s == "single") return Layout::Single;
    throw std::invalid_argument("config: unknown layout '" + s + "'");
}

const char* to_string(Layout l) {
    switch (l) {
        case Layout::Hex7: return "hex7";
        case Layout::Ring: return "ring";
        case Layout::Single: return "single";
    }
    return "?";
}

UserPlacement placement_from_string(const std::string& s) {
    if (s == "uniform") return UserPlacement::UniformInCell;
    if (s == "edge") return UserPlacement::CellEdge;
    if (s == "fixed") return UserPlacement::FixedOffset;
    throw std::invalid_argument("config: unknown user_placement '" + s + "'");
}

const char* to_string(UserPlacement p) {
    switch (p) {
        case UserPlacement::UniformInCell: return "uniform";
        case UserPlacement::CellEdge: return "edge";
        case UserPlacement::FixedOffset: return "fixed";
    }
    return "?";
}

}  // namespace

SimConfig config_from_json(const json& doc) {
    SimConfig cfg;
    reject_unknown(doc, "",
                   {"seed", "policy", "topology", "phy", "timing", "objects", "traffic", "cache",
                    "backhaul", "metrics"});
    read(doc, "seed", cfg.seed);
    if (doc.contains("policy")) cfg.policy = policy_from_string(doc.at("policy").get<std::string>());

    if (doc.contains("topology")) {
        const json& t = doc.at("topology");
        reject_unknown(t, "topology.",
                       {"n_pairs", "layout", "cell_radius_m", "user_placement", "user_offset_m",
                        "min_user_distance_m"});
        read(t, "n_pairs", cfg.topology.n_pairs);
        if (t.contains("layout"))
            cfg.topology.layout = layout_from_string(t.at("layout").get<std::string>());
        read(t, "cell_radius_m", cfg.topology.cell_radius_m);
        if (t.contains("user_placement"))
            cfg.topology.user_placement =
                placement_from_string(t.at("user_placement").get<std::string>());
        read(t, "user_offset_m", cfg.topology.user_offset_m);
        read(t, "min_user_distance_m", cfg.topology.min_user_distance_m);
    }
    if (doc.contains("phy")) {
        const json& p = doc.at("phy");
        reject_unknown(p, "phy.",
                       {"tx_antennas", "rx_antennas", "power_db", "bandwidth_hz", "pathloss",
                        "coordinated_users"});
        read(p, "tx_antennas", cfg.tx_antennas);
        read(p, "rx_antennas", cfg.rx_antennas);
        read(p, "power_db", cfg.power_db);
        read(p, "bandwidth_hz", cfg.bandwidth_hz);
        if (p.contains("pathloss")) {
            const std::string s = p.at("pathloss").get<std::string>();
            if (s == "log-distance")
                cfg.pathloss = PathlossModel::LogDistance;
            else if (s == "none")
                cfg.pathloss = PathlossModel::None;
            else
                throw std::invalid_argument("config: unknown pathloss '" + s + "'");
        }
        read(p, "coordinated_users", cfg.coordinated_users);
    }
    if (doc.contains("timing")) {
        const json& t = doc.at("timing");
        reject_unknown(t, "timing.", {"slot_s", "slots_per_frame", "frames"});
        read(t, "slot_s", cfg.slot_s);
        read(t, "slots_per_frame", cfg.slots_per_frame);
        read(t, "frames", cfg.frames);
    }
    if (doc.contains("objects")) {
        const json& o = doc.at("objects");
        reject_unknown(o, "objects.", {"object_bits", "chunks_per_object"});
        read(o, "object_bits", cfg.object_bits);
        read(o, "chunks_per_object", cfg.chunks_per_object);
    }
    if (doc.contains("traffic")) {
        const json& t = doc.at("traffic");
        reject_unknown(t, "traffic.",
                       {"arrival_mbps", "library_size", "catalog_size", "shared_catalog",
                        "zipf_skewness", "truncation_factor"});
        read(t, "arrival_mbps", cfg.arrival_mbps);
        read(t, "library_size", cfg.library_size);
        read(t, "catalog_size", cfg.catalog_size);
        read(t, "shared_catalog", cfg.shared_catalog);
        read(t, "zipf_skewness", cfg.zipf_skewness);
        read(t, "truncation_factor", cfg.truncation_factor);
    }
    if (doc.contains("cache")) {
        const json& c = doc.at("cache");
        reject_unknown(c, "cache.", {"capacity", "placement_price", "cost_weight", "read_rate"});
        read(c, "capacity", cfg.cache_capacity);
        read(c, "placement_price", cfg.placement_price);
        read(c, "cost_weight", cfg.cost_weight);
        read(c, "read_rate", cfg.read_rate);
    }
    if (doc.contains("backhaul")) {
        const json& b = doc.at("backhaul");
        reject_unknown(b, "backhaul.", {"total_mbps", "control_fraction_cap"});
        read(b, "total_mbps", cfg.backhaul_mbps);
        read(b, "control_fraction_cap", cfg.control_fraction_cap);
    }
    if (doc.contains("metrics")) {
        const json& m = doc.at("metrics");
        reject_unknown(m, "metrics.", {"warmup_fraction"});
        read(m, "warmup_fraction", cfg.warmup_fraction);
    }
    cfg.validate();
    return cfg;
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    json doc;
    in >> doc;
    return config_from_json(doc);
}

SimConfig desk_preset() { return SimConfig{}; }  // the struct defaults

SimConfig paper_preset() {
    SimConfig cfg;
    cfg.topology.n_pairs = 7;
    cfg.topology.layout = Layout::Hex7;
    cfg.topology.cell_radius_m = 250.0;
    cfg.power_db = 130.0;
    cfg.bandwidth_hz = 1.0e7;
    cfg.slot_s = 0.002;
    cfg.slots_per_frame = 250;  // 0.5 s frames
    cfg.frames = 1000;
    cfg.object_bits = 8.0e6;    // 1 MB objects, 50 KB chunks
    cfg.chunks_per_object = 20;
    cfg.arrival_mbps = 13.25;
    cfg.library_size = 1000;
    cfg.catalog_size = 100;
    cfg.cache_capacity = 80;
    cfg.backhaul_mbps = 30.0;
    return cfg;
}

ordered_json config_to_json(const SimConfig& cfg) {
    ordered_json doc;
    doc["seed"] = cfg.seed;
    doc["policy"] = to_string(cfg.policy);
    doc["topology"] = {{"n_pairs", cfg.topology.n_pairs},
                       {"layout", to_string(cfg.topology.layout)},
                       {"cell_radius_m", cfg.topology.cell_radius_m},
                       {"user_placement", to_string(cfg.topology.user_placement)},
                       {"user_offset_m", cfg.topology.user_offset_m},
                       {"min_user_distance_m", cfg.topology.min_user_distance_m}};
    doc["phy"] = {{"tx_antennas", cfg.tx_antennas},
                  {"rx_antennas", cfg.rx_antennas},
                  {"power_db", cfg.power_db},
                  {"bandwidth_hz", cfg.bandwidth_hz},
                  {"pathloss", cfg.pathloss == PathlossModel::LogDistance ? "log-distance" : "none"},
                  {"coordinated_users", cfg.coordinated_users}};
    doc["timing"] = {{"slot_s", cfg.slot_s},
                     {"slots_per_frame", cfg.slots_per_frame},
                     {"frames", cfg.frames}};
    doc["objects"] = {{"object_bits", cfg.object_bits}, {"chunks_per_object", cfg.chunks_per_object}};
    doc["traffic"] = {{"arrival_mbps", cfg.arrival_mbps},
                      {"library_size", cfg.library_size},
                      {"catalog_size", cfg.catalog_size},
                      {"shared_catalog", cfg.shared_catalog},
                      {"zipf_skewness", cfg.zipf_skewness},
                      {"truncation_factor", cfg.truncation_factor}};
    doc["cache"] = {{"capacity", cfg.cache_capacity},
                    {"placement_price", cfg.placement_price},
                    {"cost_weight", cfg.cost_weight},
                    {"read_rate", cfg.read_rate}};
    doc["backhaul"] = {{"total_mbps", cfg.backhaul_mbps},
                       {"control_fraction_cap", cfg.control_fraction_cap}};
    doc["metrics"] = {{"warmup_fraction", cfg.warmup_fraction}};
    return doc;
}

}  // namespace phycache
