#pragma once

#include <vector>

#include "phycache/rng.hpp"

namespace phycache {

// rank popularity rho_k proportional to k^(-skewness), normalized, descending
std::vector<double> zipf_popularity(int count, double skewness);

// Per-user catalogs over the library: user j requests only objects in
// catalog(j), with Zipf popularity over the catalog ranks. Catalogs are drawn
// once at setup and stay fixed for the run.
class Catalog {
public:
    // shared = true draws a single catalog used by every user (identical
    // preference); otherwise one independent draw per user
    Catalog(int n_users, int library_size, int catalog_size, double skewness, bool shared,
            RngStream& rng);

    int library_size() const { return library_size_; }
    int catalog_size() const { return catalog_size_; }
    const std::vector<double>& popularity() const { return popularity_; }
    int object_at_rank(int user, int rank) const {
        return objects_[static_cast<size_t>(user) * catalog_size_ + rank];
    }
    // long-run arrival rate of object k at user j, for a total per-user rate of 1
    double popularity_of_object(int user, int object) const;

private:
    int library_size_;
    int catalog_size_;
    std::vector<double> popularity_;
    std::vector<int> objects_;        // [user][rank] -> object id
    std::vector<double> rate_share_;  // [user][object] -> rho at that user (0 if absent)
};

// A_j^k(t) counts in whole data objects; each object stamps D chunk requests
// with the creation slot in the actual plane.
struct ArrivalBatch {
    long slot = 0;
    int n_users = 0;
    int library_size = 0;
    std::vector<int> counts;  // [user][object]

    int at(int user, int object) const {
        return counts[static_cast<size_t>(user) * library_size + object];
    }
};

class TrafficModel {
public:
    // total_rate: objects/slot per user; arrivals are Poisson per catalog rank,
    // truncated at a_max (boundedness), statistically invisible by default
    TrafficModel(const Catalog& catalog, double total_rate, double truncation_factor);

    ArrivalBatch generate(RngStream& rng, long slot, int n_users) const;

    double total_rate() const { return total_rate_; }
    int truncation_limit() const { return a_max_; }

private:
    const Catalog& catalog_;
    double total_rate_;
    int a_max_;
};

}  // namespace phycache
