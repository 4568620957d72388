#pragma once

#include <stdexcept>

namespace phycache {

// All internal rates are in data objects/slot; bits/s appear only at config
// boundaries and are converted through this context.
struct UnitContext {
    double object_bits = 1.0e6;   // F, bits per data object
    int chunks_per_object = 20;   // D
    double bandwidth_hz = 1.0e7;  // B_W
    double slot_s = 0.002;

    double chunk_bits() const { return object_bits / chunks_per_object; }

    void validate() const {
        if (object_bits <= 0.0) throw std::invalid_argument("object_bits must be > 0");
        if (chunks_per_object < 1) throw std::invalid_argument("chunks_per_object must be >= 1");
        if (bandwidth_hz <= 0.0) throw std::invalid_argument("bandwidth_hz must be > 0");
        if (slot_s <= 0.0) throw std::invalid_argument("slot_s must be > 0");
    }
};

// bits/s -> data objects/slot; the single conversion rule used everywhere
inline double convert_rate(double bps, const UnitContext& ctx) {
    if (bps < 0.0) throw std::invalid_argument("rate must be >= 0");
    return bps * ctx.slot_s / ctx.object_bits;
}

inline double mbps_to_objects_per_slot(double mbps, const UnitContext& ctx) {
    return convert_rate(mbps * 1.0e6, ctx);
}

inline double objects_per_slot_to_bps(double rate, const UnitContext& ctx) {
    return rate * ctx.object_bits / ctx.slot_s;
}

// Frame/slot bookkeeping: slots are 1-based, frame i = ceil(t / T).
struct FrameClock {
    int slots_per_frame = 50;

    int frame_of(long slot) const { return static_cast<int>((slot + slots_per_frame - 1) / slots_per_frame); }
    bool is_frame_start(long slot) const { return (slot - 1) % slots_per_frame == 0; }
    long frame_start_slot(int frame) const { return static_cast<long>(frame - 1) * slots_per_frame + 1; }
};

}  // namespace phycache
