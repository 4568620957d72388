#include "phycache/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phycache {

std::vector<double> zipf_popularity(int count, double skewness) {
    if (count < 1) throw std::invalid_argument("zipf: count must be >= 1");
    if (skewness < 0.0) throw std::invalid_argument("zipf: skewness must be >= 0");
    std::vector<double> rho(count);
    double sum = 0.0;
    for (int k = 0; k < count; ++k) {
        rho[k] = std::pow(static_cast<double>(k + 1), -skewness);
        sum += rho[k];
    }
    for (double& r : rho) r /= sum;
    return rho;
}

Catalog::Catalog(int n_users, int library_size, int catalog_size, double skewness, bool shared,
                 RngStream& rng)
    : library_size_(library_size), catalog_size_(catalog_size) {
    if (catalog_size < 1 || catalog_size > library_size)
        throw std::invalid_argument("catalog size must be in [1, library size]");
    popularity_ = zipf_popularity(catalog_size, skewness);
    objects_.resize(static_cast<size_t>(n_users) * catalog_size);
    rate_share_.assign(static_cast<size_t>(n_users) * library_size, 0.0);

    std::vector<int> pool(library_size);
    std::vector<int> draw;
    for (int j = 0; j < n_users; ++j) {
        if (!shared || j == 0) {
            std::iota(pool.begin(), pool.end(), 0);
            draw.clear();
            for (int r = 0; r < catalog_size; ++r) {
                const size_t pick = static_cast<size_t>(rng.uniform_index(pool.size() - r)) ;
                std::swap(pool[pick], pool[pool.size() - 1 - r]);
                draw.push_back(pool[pool.size() - 1 - r]);
            }
        }
        for (int r = 0; r < catalog_size; ++r) {
            objects_[static_cast<size_t>(j) * catalog_size + r] = draw[r];
            rate_share_[static_cast<size_t>(j) * library_size + draw[r]] = popularity_[r];
        }
    }
}

double Catalog::popularity_of_object(int user, int object) const {
    return rate_share_[static_cast<size_t>(user) * library_size_ + object];
}

TrafficModel::TrafficModel(const Catalog& catalog, double total_rate, double truncation_factor)
    : catalog_(catalog), total_rate_(total_rate) {
    if (total_rate < 0.0) throw std::invalid_argument("arrival rate must be >= 0");
    a_max_ = std::max(3, static_cast<int>(std::ceil(truncation_factor * total_rate)));
}

ArrivalBatch TrafficModel::generate(RngStream& rng, long slot, int n_users) const {
    ArrivalBatch batch;
    batch.slot = slot;
    batch.n_users = n_users;
    batch.library_size = catalog_.library_size();
    batch.counts.assign(static_cast<size_t>(n_users) * batch.library_size, 0);
    if (total_rate_ <= 0.0) return batch;
    for (int j = 0; j < n_users; ++j) {
        for (int r = 0; r < catalog_.catalog_size(); ++r) {
            const double mean = total_rate_ * catalog_.popularity()[r];
            int a = rng.poisson(mean);
            if (a > a_max_) a = a_max_;
            if (a > 0)
                batch.counts[static_cast<size_t>(j) * batch.library_size +
                             catalog_.object_at_rank(j, r)] = a;
        }
    }
    return batch;
}

}  // namespace phycache
