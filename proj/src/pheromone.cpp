#include "aco/pheromone.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aco {

void AcoParams::validate() const {
    if (!(rho > 0.0 && rho < 1.0)) {
        throw std::invalid_argument("rho must be in (0,1), got " + std::to_string(rho));
    }
    if (!(tau_min > 0.0 && tau_min <= tau_init && tau_init <= tau_max)) {
        throw std::invalid_argument("need 0 < tau_min <= tau_init <= tau_max");
    }
    if (q_deposit <= 0.0) {
        throw std::invalid_argument("q_deposit must be positive");
    }
    if (n_ants < 1) {
        throw std::invalid_argument("n_ants must be at least 1");
    }
    if (beam_width < 1) {
        throw std::invalid_argument("beam_width must be at least 1");
    }
    if (n_paths < 0) {
        throw std::invalid_argument("n_paths must be positive (or 0 for the default)");
    }
    if (eta_epsilon <= 0.0) {
        throw std::invalid_argument("eta_epsilon must be positive");
    }
}

PheromoneMatrix::PheromoneMatrix(int n, double tau_init)
    : n_(n), tau_(static_cast<std::size_t>(n) * n, tau_init) {
    for (int i = 0; i < n; ++i) {
        tau_[static_cast<std::size_t>(i) * n + i] = 0.0; // diagonal unused
    }
}

double heuristic_weight(double tau, std::int64_t dist, double alpha, double beta, double eps) {
    // pow(x, 1) is exact, but skipping it keeps the hot path cheap; the
    // branch must match the precomputed table in construction.cpp bit for bit.
    const double tau_term = (alpha == 1.0) ? tau : std::pow(tau, alpha);
    const double inv = 1.0 / std::max(static_cast<double>(dist), eps);
    return tau_term * std::pow(inv, beta);
}

void evaporate(PheromoneMatrix& pheromone, double rho) {
    if (!(rho > 0.0 && rho < 1.0)) {
        throw std::invalid_argument("rho must be in (0,1)");
    }
    const int n = pheromone.size();
    const double keep = 1.0 - rho;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pheromone.set(i, j, pheromone.at(i, j) * keep);
        }
    }
}

void deposit_tour(PheromoneMatrix& pheromone, const Tour& tour, double amount) {
    if (amount <= 0.0) {
        throw std::invalid_argument("deposit amount must be positive");
    }
    const std::size_t n = tour.order.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int a = tour.order[i];
        const int b = tour.order[(i + 1) % n];
        pheromone.add(a, b, amount);
    }
}

void mmas_update(PheromoneMatrix& pheromone, std::span<const Tour> tours,
                 const AcoParams& params) {
    if (tours.empty()) {
        throw std::invalid_argument("mmas_update needs at least one tour");
    }
    evaporate(pheromone, params.rho);
    for (const Tour& tour : tours) {
        deposit_tour(pheromone, tour, params.q_deposit / static_cast<double>(tour.length));
    }
    const int n = pheromone.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pheromone.set(i, j, std::clamp(pheromone.at(i, j), params.tau_min, params.tau_max));
        }
    }
}

void elitist_update(PheromoneMatrix& pheromone, const Tour& best, const AcoParams& params) {
    evaporate(pheromone, params.rho);
    deposit_tour(pheromone, best, params.q_deposit / static_cast<double>(best.length));
}

} // namespace aco
