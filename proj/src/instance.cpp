#include "aco/instance.hpp"

#include <cmath>
#include <stdexcept>

#include "aco/rng.hpp"

namespace aco {

std::int64_t euc2d_distance(const Point& p, const Point& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return static_cast<std::int64_t>(std::floor(std::sqrt(dx * dx + dy * dy) + 0.5));
}

void TspInstance::validate() const {
    if (points.size() < 2) {
        throw std::invalid_argument("instance needs at least 2 points, got " +
                                    std::to_string(points.size()));
    }
    if (depot < 0 || depot >= size()) {
        throw std::invalid_argument("depot index " + std::to_string(depot) + " out of range");
    }
    for (const Point& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("instance '" + name + "' has a non-finite coordinate");
        }
    }
}

DistanceMatrix build_distance_matrix(const TspInstance& inst) {
    inst.validate();
    const int n = inst.size();
    DistanceMatrix dm(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            dm.set(i, j, euc2d_distance(inst.points[i], inst.points[j]));
        }
    }
    return dm;
}

std::int64_t tour_length(std::span<const int> order, const DistanceMatrix& dm) {
    const int n = dm.size();
    if (static_cast<int>(order.size()) != n) {
        throw std::invalid_argument("tour visits " + std::to_string(order.size()) +
                                    " nodes, instance has " + std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (int node : order) {
        if (node < 0 || node >= n || seen[node]) {
            throw std::invalid_argument("tour is not a permutation of 0.." +
                                        std::to_string(n - 1));
        }
        seen[node] = true;
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        total += dm.at(order[i], order[i + 1]);
    }
    total += dm.at(order.back(), order.front());
    return total;
}

TspInstance random_instance(int n, std::uint64_t seed, double lo, double hi) {
    if (n < 2) {
        throw std::invalid_argument("random_instance needs n >= 2, got " + std::to_string(n));
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("random_instance needs lo < hi");
    }
    TspInstance inst;
    inst.name = "random-n" + std::to_string(n) + "-s" + std::to_string(seed);
    inst.points.reserve(static_cast<std::size_t>(n));
    Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        const double x = lo + rng.uniform01() * (hi - lo);
        const double y = lo + rng.uniform01() * (hi - lo);
        inst.points.push_back({x, y});
    }
    return inst;
}

} // namespace aco
