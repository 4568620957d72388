#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "phycache/channel.hpp"
#include "phycache/topology.hpp"
#include "phycache/units.hpp"

namespace phycache {

enum class Policy { Proposed, Offline, Lfu, VipSingle };

const char* to_string(Policy p);
Policy policy_from_string(const std::string& s);

// Full experiment description. Defaults form the desk-scale preset; the
// paper-scale preset ships as configs/paper.json.
struct SimConfig {
    uint64_t seed = 1;
    Policy policy = Policy::Proposed;

    TopologyConfig topology;  // 3 pairs on a ring, 250 m cells, uniform users

    // phy
    int tx_antennas = 2;
    int rx_antennas = 1;
    double power_db = 145.0;  // transmit SNR scaling over unit noise
    double bandwidth_hz = 1.0e7;
    PathlossModel pathloss = PathlossModel::LogDistance;
    int coordinated_users = 2;

    // timing
    double slot_s = 0.002;
    int slots_per_frame = 50;
    int frames = 2000;

    // objects
    double object_bits = 8.0e6;  // 50 KB chunks
    int chunks_per_object = 20;

    // traffic
    double arrival_mbps = 62.0;  // total per user
    int library_size = 100;
    int catalog_size = 30;
    bool shared_catalog = false;
    double zipf_skewness = 0.5;
    double truncation_factor = 50.0;

    // cache
    int cache_capacity = 8;
    double placement_price = 1.0;  // gamma
    double cost_weight = 40.0;     // W
    double read_rate = 1.0;        // r_n, objects/slot

    // backhaul
    double backhaul_mbps = 110.0;        // R, per BS
    double control_fraction_cap = 0.2;   // ceiling on the control sub-channel share

    // metrics
    double warmup_fraction = 0.1;

    UnitContext units() const;
    double arrival_objects_per_slot() const;
    double backhaul_objects_per_slot() const;
    int warmup_frames() const;
    void validate() const;
};

// Strict parser: unknown fields anywhere in the document are rejected.
SimConfig config_from_json(const nlohmann::json& doc);
SimConfig load_config_file(const std::string& path);
nlohmann::ordered_json config_to_json(const SimConfig& cfg);

// Built-in presets. desk: 3 pairs, 100-object library, runs in seconds.
// paper: 7 hex cells, 1000 objects, 0.5 s frames of 2 ms slots.
SimConfig desk_preset();
SimConfig paper_preset();

}  // namespace phycache
