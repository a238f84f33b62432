#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aco/instance.hpp"
#include "aco/pheromone.hpp"
#include "aco/rng.hpp"

namespace aco {

/// An ant's in-progress tour. Extension never mutates a parent: children are
/// cloned and appended to, so distinct partials can be extended concurrently
/// against a read-only pheromone snapshot.
struct PartialPath {
    std::vector<int> order;             ///< visited sequence, starts at the depot
    std::vector<std::uint8_t> visited;  ///< 0/1 membership per node
    int current = 0;                    ///< last node of `order`
    std::int64_t length = 0;            ///< open-path length along `order`

    static PartialPath at_depot(int n, int depot);

    int visited_count() const { return static_cast<int>(order.size()); }
    bool complete(int n) const { return visited_count() == n; }
};

/// Path-extension engine for one (instance, parameter) pair.
///
/// The inverse-distance factor (1/max(d,eps))^beta is precomputed per edge at
/// construction, so a weight evaluation in the hot loop is one multiply (plus
/// a pow when alpha != 1). The values are bit-identical to heuristic_weight.
class PathExtender {
  public:
    PathExtender(const DistanceMatrix& dm, const AcoParams& params);

    /// Heuristic weight of moving i -> j under the given pheromone state.
    double weight(const PheromoneMatrix& pheromone, int i, int j) const {
        const double tau = pheromone.at(i, j);
        const double tau_term = alpha_is_one_ ? tau : tau_pow(tau);
        return tau_term * eta_pow_[static_cast<std::size_t>(i) * n_ + j];
    }

    /// Per-node selection probabilities: normalized weights on unvisited
    /// nodes, zero on visited ones. Throws if every node is visited.
    std::vector<double> extension_distribution(const PartialPath& pp,
                                               const PheromoneMatrix& pheromone) const;

    /// Extend pp by min(k, #unvisited) distinct nodes sampled from the
    /// selection distribution without replacement (renormalizing after each
    /// draw). Children appear in draw order.
    std::vector<PartialPath> stochastic_extend(const PartialPath& pp, int k,
                                               const PheromoneMatrix& pheromone, Rng& rng) const;

    /// Extend pp by the min(k, #unvisited) unvisited nodes of largest weight,
    /// in descending weight order. Consumes no randomness; ties go to the
    /// lower node index.
    std::vector<PartialPath> greedy_extend(const PartialPath& pp, int k,
                                           const PheromoneMatrix& pheromone) const;

    /// Highest-weight node outside visited and already_chosen; lower index
    /// wins ties. Calling this repeatedly with a growing already_chosen set
    /// enumerates nodes in descending weight order. Throws when no eligible
    /// node remains.
    int find_next_best(int current, std::span<const std::uint8_t> visited,
                       std::span<const std::uint8_t> already_chosen,
                       const PheromoneMatrix& pheromone) const;

    /// Complete path -> closed tour (adds the implicit edge to the depot).
    /// Throws if pp has unvisited nodes.
    Tour close_tour(const PartialPath& pp) const;

    const DistanceMatrix& distances() const { return *dm_; }
    const AcoParams& params() const { return params_; }

  private:
    double tau_pow(double tau) const;

    const DistanceMatrix* dm_;
    AcoParams params_;
    int n_;
    bool alpha_is_one_;
    std::vector<double> eta_pow_; ///< (1/max(d,eps))^beta per edge
};

/// Prune `pool` in place to its min(n, |pool|) entries with smallest length,
/// ties broken by lexicographic visit order. Survivors end up sorted by that
/// key. Throws on an empty pool.
void pick_top_n(std::vector<PartialPath>& pool, std::size_t n);

} // namespace aco
