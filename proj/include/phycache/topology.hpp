#pragma once

#include <string>
#include <vector>

#include "phycache/rng.hpp"

namespace phycache {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

enum class Layout { Hex7, Ring, Single };
enum class UserPlacement { UniformInCell, CellEdge, FixedOffset };

struct TopologyConfig {
    int n_pairs = 3;
    Layout layout = Layout::Ring;
    double cell_radius_m = 250.0;
    UserPlacement user_placement = UserPlacement::UniformInCell;
    double user_offset_m = 125.0;    // FixedOffset / CellEdge distance from the serving BS
    double min_user_distance_m = 35.0;
};

// N BS-user pairs; user j is served by BS j (identity pairing). Geometry is
// consumed only through the pairwise distance matrix; for the hex7 layout the
// wrap-around is folded in by taking the minimum distance over the mirrored
// cluster images.
class Topology {
public:
    Topology(std::vector<Point> bs, std::vector<Point> users,
             std::vector<double> distance_m, int lt, int lr);

    int n_pairs() const { return static_cast<int>(bs_positions_.size()); }
    int tx_antennas() const { return lt_; }
    int rx_antennas() const { return lr_; }
    int serving_bs(int user) const { return user; }
    int associated_user(int bs) const { return bs; }

    const Point& bs_position(int n) const { return bs_positions_[n]; }
    const Point& user_position(int j) const { return user_positions_[j]; }

    // distance between user j and BS n, meters
    double distance_m(int user, int bs) const { return distance_m_[user * n_pairs() + bs]; }

private:
    std::vector<Point> bs_positions_;
    std::vector<Point> user_positions_;
    std::vector<double> distance_m_;  // row-major [user][bs]
    int lt_ = 2;
    int lr_ = 1;
};

Topology build_topology(const TopologyConfig& cfg, int lt, int lr, RngStream& rng);

}  // namespace phycache
