#include "aco/construction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aco {

PartialPath PartialPath::at_depot(int n, int depot) {
    PartialPath pp;
    pp.order.reserve(static_cast<std::size_t>(n));
    pp.order.push_back(depot);
    pp.visited.assign(static_cast<std::size_t>(n), 0);
    pp.visited[static_cast<std::size_t>(depot)] = 1;
    pp.current = depot;
    pp.length = 0;
    return pp;
}

namespace {

PartialPath extend_by(const PartialPath& parent, int node, const DistanceMatrix& dm) {
    PartialPath child = parent; // clone and append
    child.order.push_back(node);
    child.visited[static_cast<std::size_t>(node)] = 1;
    child.length += dm.at(parent.current, node);
    child.current = node;
    return child;
}

} // namespace

PathExtender::PathExtender(const DistanceMatrix& dm, const AcoParams& params)
    : dm_(&dm), params_(params), n_(dm.size()), alpha_is_one_(params.alpha == 1.0),
      eta_pow_(static_cast<std::size_t>(dm.size()) * dm.size(), 0.0) {
    params_.validate();
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            const double inv =
                1.0 / std::max(static_cast<double>(dm.at(i, j)), params_.eta_epsilon);
            eta_pow_[static_cast<std::size_t>(i) * n_ + j] = std::pow(inv, params_.beta);
        }
    }
}

double PathExtender::tau_pow(double tau) const { return std::pow(tau, params_.alpha); }

std::vector<double> PathExtender::extension_distribution(const PartialPath& pp,
                                                         const PheromoneMatrix& pheromone) const {
    std::vector<double> probs(static_cast<std::size_t>(n_), 0.0);
    double total = 0.0;
    for (int y = 0; y < n_; ++y) {
        if (pp.visited[static_cast<std::size_t>(y)]) continue;
        const double w = weight(pheromone, pp.current, y);
        probs[static_cast<std::size_t>(y)] = w;
        total += w;
    }
    if (total <= 0.0) {
        throw std::invalid_argument("extension_distribution: no unvisited node");
    }
    for (double& p : probs) {
        p /= total;
    }
    return probs;
}

std::vector<PartialPath> PathExtender::stochastic_extend(const PartialPath& pp, int k,
                                                         const PheromoneMatrix& pheromone,
                                                         Rng& rng) const {
    // Candidate urn in ascending node order; picked entries swap to the back
    // so each draw renormalizes over the remainder without a rebuild.
    std::vector<std::pair<int, double>> urn;
    urn.reserve(static_cast<std::size_t>(n_) - pp.order.size());
    double total = 0.0;
    for (int y = 0; y < n_; ++y) {
        if (pp.visited[static_cast<std::size_t>(y)]) continue;
        const double w = weight(pheromone, pp.current, y);
        urn.emplace_back(y, w);
        total += w;
    }
    if (urn.empty()) {
        throw std::invalid_argument("stochastic_extend: no unvisited node");
    }

    const std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(k), urn.size());
    std::vector<PartialPath> children;
    children.reserve(want);
    std::size_t live = urn.size();
    for (std::size_t j = 0; j < want; ++j) {
        const double r = rng.uniform01() * total;
        double acc = 0.0;
        std::size_t pick = live - 1; // rounding may leave r beyond the last bucket
        for (std::size_t i = 0; i < live; ++i) {
            acc += urn[i].second;
            if (r < acc) {
                pick = i;
                break;
            }
        }
        children.push_back(extend_by(pp, urn[pick].first, *dm_));
        total -= urn[pick].second;
        --live;
        std::swap(urn[pick], urn[live]);
    }
    return children;
}

std::vector<PartialPath> PathExtender::greedy_extend(const PartialPath& pp, int k,
                                                     const PheromoneMatrix& pheromone) const {
    const int unvisited = n_ - pp.visited_count();
    if (unvisited <= 0) {
        throw std::invalid_argument("greedy_extend: no unvisited node");
    }
    const int want = std::min(k, unvisited);
    std::vector<std::uint8_t> chosen(static_cast<std::size_t>(n_), 0);
    std::vector<PartialPath> children;
    children.reserve(static_cast<std::size_t>(want));
    for (int j = 0; j < want; ++j) {
        const int next = find_next_best(pp.current, pp.visited, chosen, pheromone);
        chosen[static_cast<std::size_t>(next)] = 1;
        children.push_back(extend_by(pp, next, *dm_));
    }
    return children;
}

int PathExtender::find_next_best(int current, std::span<const std::uint8_t> visited,
                                 std::span<const std::uint8_t> already_chosen,
                                 const PheromoneMatrix& pheromone) const {
    int best = -1;
    double best_weight = -1.0;
    for (int y = 0; y < n_; ++y) {
        if (visited[static_cast<std::size_t>(y)] || already_chosen[static_cast<std::size_t>(y)]) {
            continue;
        }
        const double w = weight(pheromone, current, y);
        if (w > best_weight) { // strict: the lowest index wins ties
            best_weight = w;
            best = y;
        }
    }
    if (best < 0) {
        throw std::invalid_argument("find_next_best: no eligible node");
    }
    return best;
}

Tour PathExtender::close_tour(const PartialPath& pp) const {
    if (!pp.complete(n_)) {
        throw std::invalid_argument("close_tour: path visits " +
                                    std::to_string(pp.visited_count()) + " of " +
                                    std::to_string(n_) + " nodes");
    }
    Tour tour;
    tour.order = pp.order;
    tour.length = pp.length + dm_->at(pp.current, pp.order.front());
    return tour;
}

void pick_top_n(std::vector<PartialPath>& pool, std::size_t n) {
    if (pool.empty()) {
        throw std::invalid_argument("pick_top_n: empty pool");
    }
    const auto by_length_then_order = [](const PartialPath& a, const PartialPath& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.order < b.order;
    };
    if (n >= pool.size()) {
        std::sort(pool.begin(), pool.end(), by_length_then_order);
        return;
    }
    std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n), pool.end(),
                      by_length_then_order);
    pool.resize(n);
}

} // namespace aco
