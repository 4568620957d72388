#include "phycache/channel.hpp"

#include <cmath>

namespace phycache {

double pathloss_db(double distance_m) {
    return 140.7 + 36.7 * std::log10(distance_m / 1000.0);
}

ChannelState sample_channels(const Topology& topo, PathlossModel model, RngStream& rng, long slot) {
    ChannelState ch;
    ch.slot = slot;
    ch.n_pairs = topo.n_pairs();
    ch.lt = topo.tx_antennas();
    ch.lr = topo.rx_antennas();
    ch.h.resize(static_cast<size_t>(ch.n_pairs) * ch.n_pairs * ch.lt * ch.lr);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < ch.n_pairs; ++j) {
        for (int n = 0; n < ch.n_pairs; ++n) {
            const double gain = model == PathlossModel::None
                                    ? 1.0
                                    : amplitude_gain(pathloss_db(topo.distance_m(j, n)));
            for (int r = 0; r < ch.lr; ++r) {
                for (int t = 0; t < ch.lt; ++t) {
                    // circularly-symmetric complex Gaussian, unit variance
                    const double re = rng.normal() * inv_sqrt2;
                    const double im = rng.normal() * inv_sqrt2;
                    ch.at(j, n, r, t) = gain * std::complex<double>(re, im);
                }
            }
        }
    }
    return ch;
}

}  // namespace phycache
