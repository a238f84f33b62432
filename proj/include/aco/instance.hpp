#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace aco {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Rounded Euclidean distance: floor(||p - q|| + 0.5).
std::int64_t euc2d_distance(const Point& p, const Point& q);

/// A symmetric Euclidean TSP instance. Node indices are 0..n-1 in point
/// order; every tour starts and ends at the depot.
struct TspInstance {
    std::string name;
    std::vector<Point> points;
    int depot = 0;

    int size() const { return static_cast<int>(points.size()); }

    /// Throws std::invalid_argument if the instance has fewer than two
    /// points, a non-finite coordinate, or an out-of-range depot.
    void validate() const;
};

/// Precomputed symmetric distance matrix with zero diagonal.
class DistanceMatrix {
  public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

    std::int64_t at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, std::int64_t v) {
        d_[static_cast<std::size_t>(i) * n_ + j] = v;
        d_[static_cast<std::size_t>(j) * n_ + i] = v;
    }
    int size() const { return n_; }

  private:
    int n_ = 0;
    std::vector<std::int64_t> d_;
};

DistanceMatrix build_distance_matrix(const TspInstance& inst);

/// A closed tour: a permutation of all nodes starting at the depot plus its
/// closed-loop length (the edge back to the depot is implicit in `order`).
struct Tour {
    std::vector<int> order;
    std::int64_t length = 0;
};

/// Length of the closed tour visiting `order` and returning to order[0].
/// Throws std::invalid_argument if `order` is not a permutation of 0..n-1.
std::int64_t tour_length(std::span<const int> order, const DistanceMatrix& dm);

/// n points drawn uniformly from [lo,hi]^2 with a seeded generator; the same
/// seed always yields the identical instance.
TspInstance random_instance(int n, std::uint64_t seed, double lo = -100.0, double hi = 100.0);

} // namespace aco
