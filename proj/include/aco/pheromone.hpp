#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aco/instance.hpp"

namespace aco {

/// Shared knobs for all solver variants. Defaults follow the usual TSP
/// benchmark settings: alpha 1, beta 4, evaporation 0.1, deposit 1.0 and
/// pheromone bounds [0.1, 0.9].
struct AcoParams {
    double alpha = 1.0;        ///< pheromone exponent
    double beta = 4.0;         ///< inverse-distance exponent
    double rho = 0.1;          ///< evaporation rate in (0,1)
    double q_deposit = 1.0;    ///< deposit constant; each tour adds q/length per edge
    double tau_min = 0.1;      ///< MMAS lower bound
    double tau_max = 0.9;      ///< MMAS upper bound
    double tau_init = 0.5;     ///< initial pheromone level
    int n_ants = 10;
    int beam_width = 10;       ///< k: extensions per partial and beam slots per ant
    int n_paths = 0;           ///< beam pool cap; 0 derives it per solver
    double eta_epsilon = 1e-6; ///< distance floor guarding coincident points

    /// gBeam normally collapses to a single ant (extra ants are provably
    /// redundant). Setting this keeps the configured ant count and repeats
    /// the identical construction per ant, to measure the redundant work.
    bool gbeam_keep_redundant_ants = false;

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

/// Symmetric positive pheromone levels, one per edge. Both triangles are
/// stored so construction can scan a full row; writes keep them mirrored.
class PheromoneMatrix {
  public:
    PheromoneMatrix() = default;
    PheromoneMatrix(int n, double tau_init);

    double at(int i, int j) const { return tau_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        tau_[static_cast<std::size_t>(i) * n_ + j] = v;
        tau_[static_cast<std::size_t>(j) * n_ + i] = v;
    }
    void add(int i, int j, double amount) { set(i, j, at(i, j) + amount); }

    /// Pointer to row i (n entries), for tight construction loops.
    const double* row(int i) const { return tau_.data() + static_cast<std::size_t>(i) * n_; }

    int size() const { return n_; }

  private:
    int n_ = 0;
    std::vector<double> tau_;
};

/// Combined desirability of edge (x,y): tau^alpha * (1 / max(dist, eps))^beta.
double heuristic_weight(double tau, std::int64_t dist, double alpha, double beta, double eps);

/// Multiply every off-diagonal entry by (1 - rho).
void evaporate(PheromoneMatrix& pheromone, double rho);

/// Add `amount` to every closed-tour edge (including the edge back to the
/// start), on both symmetric entries.
void deposit_tour(PheromoneMatrix& pheromone, const Tour& tour, double amount);

/// MMAS rule: evaporate, deposit q/length for every given tour, then clamp
/// all off-diagonal entries into [tau_min, tau_max].
void mmas_update(PheromoneMatrix& pheromone, std::span<const Tour> tours,
                 const AcoParams& params);

/// Elitist rule: evaporate, then deposit q/length for the best tour only.
void elitist_update(PheromoneMatrix& pheromone, const Tour& best, const AcoParams& params);

} // namespace aco
