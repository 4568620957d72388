#include "phycache/topology.hpp"

#include <cmath>
#include <stdexcept>

namespace phycache {

Topology::Topology(std::vector<Point> bs, std::vector<Point> users,
                   std::vector<double> distance_m, int lt, int lr)
    : bs_positions_(std::move(bs)),
      user_positions_(std::move(users)),
      distance_m_(std::move(distance_m)),
      lt_(lt),
      lr_(lr) {
    const size_t n = bs_positions_.size();
    if (n == 0 || user_positions_.size() != n || distance_m_.size() != n * n)
        throw std::invalid_argument("topology: inconsistent sizes");
    for (double d : distance_m_)
        if (!(d > 0.0)) throw std::invalid_argument("topology: all pairwise distances must be > 0");
}

namespace {

// hex lattice basis for circumradius R: adjacent centers are sqrt(3)*R apart
Point hex_axial(double d, int q, int r) {
    return {d * (q + 0.5 * r), d * (std::sqrt(3.0) / 2.0) * r};
}

std::vector<Point> hex7_centers(double radius) {
    const double d = std::sqrt(3.0) * radius;
    static const int axial[7][2] = {{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    std::vector<Point> centers;
    centers.reserve(7);
    for (auto& a : axial) centers.push_back(hex_axial(d, a[0], a[1]));
    return centers;
}

// translations that tile the plane with copies of the 7-cell cluster
// (cluster shift (2,1) in axial coordinates and its 60-degree rotations)
std::vector<Point> hex7_wrap_images(double radius) {
    const double d = std::sqrt(3.0) * radius;
    static const int shifts[7][2] = {{0, 0},  {2, 1},  {-1, 3}, {-3, 2},
                                     {-2, -1}, {1, -3}, {3, -2}};
    std::vector<Point> images;
    images.reserve(7);
    for (auto& s : shifts) images.push_back(hex_axial(d, s[0], s[1]));
    return images;
}

double dist(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

Point place_user(const TopologyConfig& cfg, const Point& bs, RngStream& rng) {
    switch (cfg.user_placement) {
        case UserPlacement::FixedOffset:
            return {bs.x + cfg.user_offset_m, bs.y};
        case UserPlacement::CellEdge: {
            const double theta = rng.uniform(0.0, 2.0 * M_PI);
            return {bs.x + cfg.user_offset_m * std::cos(theta),
                    bs.y + cfg.user_offset_m * std::sin(theta)};
        }
        case UserPlacement::UniformInCell: {
            // uniform in the annulus [min_user_distance, cell_radius]
            const double r_min = cfg.min_user_distance_m;
            const double r_max = cfg.cell_radius_m;
            const double u = rng.uniform();
            const double r = std::sqrt(r_min * r_min + u * (r_max * r_max - r_min * r_min));
            const double theta = rng.uniform(0.0, 2.0 * M_PI);
            return {bs.x + r * std::cos(theta), bs.y + r * std::sin(theta)};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Topology build_topology(const TopologyConfig& cfg, int lt, int lr, RngStream& rng) {
    if (cfg.n_pairs < 1) throw std::invalid_argument("topology: n_pairs must be >= 1");
    if (cfg.cell_radius_m <= 0.0) throw std::invalid_argument("topology: cell_radius_m must be > 0");

    std::vector<Point> bs;
    std::vector<Point> images{{0.0, 0.0}};
    switch (cfg.layout) {
        case Layout::Hex7:
            if (cfg.n_pairs != 7) throw std::invalid_argument("topology: hex7 layout requires n_pairs = 7");
            bs = hex7_centers(cfg.cell_radius_m);
            images = hex7_wrap_images(cfg.cell_radius_m);
            break;
        case Layout::Single:
            if (cfg.n_pairs != 1) throw std::invalid_argument("topology: single layout requires n_pairs = 1");
            bs = {{0.0, 0.0}};
            break;
        case Layout::Ring: {
            if (cfg.n_pairs == 1) {
                bs = {{0.0, 0.0}};
            } else {
                // chord between adjacent BSs equals the hex center spacing
                const double spacing = std::sqrt(3.0) * cfg.cell_radius_m;
                const double ring_r = spacing / (2.0 * std::sin(M_PI / cfg.n_pairs));
                for (int n = 0; n < cfg.n_pairs; ++n) {
                    const double theta = 2.0 * M_PI * n / cfg.n_pairs;
                    bs.push_back({ring_r * std::cos(theta), ring_r * std::sin(theta)});
                }
            }
            break;
        }
    }

    std::vector<Point> users;
    users.reserve(bs.size());
    for (const Point& b : bs) users.push_back(place_user(cfg, b, rng));

    const int n = cfg.n_pairs;
    std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        for (int b = 0; b < n; ++b) {
            double best = dist(users[j], bs[b]);
            for (const Point& img : images) {
                const Point shifted{bs[b].x + img.x, bs[b].y + img.y};
                best = std::min(best, dist(users[j], shifted));
            }
            d[j * n + b] = std::max(best, 1.0);  // floor at 1 m keeps pathloss finite
        }
    }
    return Topology(std::move(bs), std::move(users), std::move(d), lt, lr);
}

}  // namespace phycache
