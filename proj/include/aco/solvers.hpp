#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aco/construction.hpp"
#include "aco/instance.hpp"
#include "aco/pheromone.hpp"
#include "aco/rng.hpp"

namespace aco {

/// When to stop a solver run. Predicates are evaluated only between
/// iterations: a running iteration is never interrupted, so a wall-clock
/// budget may be exceeded by up to one iteration.
class StopPredicate {
  public:
    static StopPredicate max_iterations(long iterations);
    static StopPredicate wall_clock(double seconds);
    /// Stop when any member predicate fires (whichever comes first).
    static StopPredicate any_of(std::vector<StopPredicate> preds);
    /// Stop once every member predicate has fired (whichever takes longest).
    static StopPredicate all_of(std::vector<StopPredicate> preds);

    bool should_stop(long iterations_done, double elapsed_s) const;

    /// Throws std::invalid_argument on budgets that could stop a run before
    /// its first iteration (zero iterations, non-positive durations).
    void validate() const;

  private:
    enum class Kind { MaxIterations, WallClock, AnyOf, AllOf };
    StopPredicate(Kind kind) : kind_(kind) {}

    Kind kind_;
    long max_iterations_ = 0;
    double seconds_ = 0.0;
    std::vector<StopPredicate> members_;
};

enum class Algorithm { Elitist, Mmas, Beam, GBeam };

/// Parse one of "elitist", "mmas", "beam", "gbeam"; throws
/// std::invalid_argument listing the valid labels otherwise.
Algorithm algorithm_from_label(const std::string& label);
std::string algorithm_label(Algorithm algo);

struct SolverResult {
    Tour best_tour;
    long iterations = 0;
    /// Partial-path work: every requested clone-and-append extension counts
    /// one, so each beam extension call adds k even when fewer distinct
    /// children remain near path completion.
    std::uint64_t partial_paths_considered = 0;
    double elapsed_s = 0.0;
    std::uint64_t seed = 0;
    std::string algorithm;
    AcoParams params;
    /// Best-so-far closed-tour length after each iteration (non-increasing).
    std::vector<std::int64_t> best_length_history;
};

/// Called after each iteration's pheromone update; handy for convergence
/// traces and for asserting pheromone invariants mid-run.
using IterationObserver =
    std::function<void(long iteration, std::int64_t best_length, const PheromoneMatrix&)>;

/// Classic ACO, best-tour-only deposit. Each ant builds a tour by repeated
/// single-node sampling; only the global best deposits pheromone.
SolverResult run_elitist(const TspInstance& inst, const AcoParams& params,
                         const StopPredicate& stop, Rng& rng,
                         const IterationObserver& observer = {});

/// Classic ACO, max-min variant: every ant's tour deposits, then all entries
/// are clamped into [tau_min, tau_max].
SolverResult run_mmas(const TspInstance& inst, const AcoParams& params, const StopPredicate& stop,
                      Rng& rng, const IterationObserver& observer = {});

/// Beam search over stochastic extensions: each step every pooled partial
/// spawns k sampled children and the pool is pruned to the shortest
/// n_ants * k. All surviving tours feed an MMAS-style update.
SolverResult run_beam_aco(const TspInstance& inst, const AcoParams& params,
                          const StopPredicate& stop, Rng& rng,
                          const IterationObserver& observer = {});

/// Greedy beam variant: children are the top-k by heuristic weight, so the
/// run consumes no randomness and is identical across seeds and ant counts.
/// A single ant is used regardless of params.n_ants (extra ants provably
/// repeat the same work) unless params.gbeam_keep_redundant_ants is set.
SolverResult run_gbeam_aco(const TspInstance& inst, const AcoParams& params,
                           const StopPredicate& stop, Rng& rng,
                           const IterationObserver& observer = {});

/// Seed-taking conveniences; each run owns one generator built from `seed`.
SolverResult run_elitist(const TspInstance&, const AcoParams&, const StopPredicate&,
                         std::uint64_t seed);
SolverResult run_mmas(const TspInstance&, const AcoParams&, const StopPredicate&,
                      std::uint64_t seed);
SolverResult run_beam_aco(const TspInstance&, const AcoParams&, const StopPredicate&,
                          std::uint64_t seed);
SolverResult run_gbeam_aco(const TspInstance&, const AcoParams&, const StopPredicate&,
                           std::uint64_t seed);

/// Beam width for a single greedy ant doing about the same per-step extension
/// work as n_ants stochastic ants of width k: round(k * sqrt(n_ants)).
int equivalent_beam_width(int n_ants, int k);

/// Dispatch on a textual algorithm label.
SolverResult solve(const TspInstance& inst, const std::string& label, const AcoParams& params,
                   const StopPredicate& stop, std::uint64_t seed);

} // namespace aco
