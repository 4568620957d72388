#pragma once

#include <complex>
#include <vector>

#include "phycache/rng.hpp"
#include "phycache/topology.hpp"

namespace phycache {

enum class PathlossModel { LogDistance, None };

// Per-slot channel realization. H(j,n) is the L_R x L_T matrix between BS n
// and user j, amplitude gain including pathloss; i.i.d. across slots and
// quasi-static within a slot.
struct ChannelState {
    long slot = 0;
    int n_pairs = 0;
    int lt = 0;
    int lr = 0;
    std::vector<std::complex<double>> h;  // [j][n][r][t] row-major

    std::complex<double>& at(int j, int n, int r, int t) {
        return h[((static_cast<size_t>(j) * n_pairs + n) * lr + r) * lt + t];
    }
    const std::complex<double>& at(int j, int n, int r, int t) const {
        return h[((static_cast<size_t>(j) * n_pairs + n) * lr + r) * lt + t];
    }
};

// pathloss in dB at distance d (meters); 3GPP-style log-distance law with d in km
double pathloss_db(double distance_m);

// dB power loss -> amplitude gain
inline double amplitude_gain(double pl_db) { return std::pow(10.0, -pl_db / 20.0); }

ChannelState sample_channels(const Topology& topo, PathlossModel model, RngStream& rng, long slot);

}  // namespace phycache
