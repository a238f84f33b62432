#include "aco/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace aco {

StopPredicate StopPredicate::max_iterations(long iterations) {
    StopPredicate p(Kind::MaxIterations);
    p.max_iterations_ = iterations;
    return p;
}

StopPredicate StopPredicate::wall_clock(double seconds) {
    StopPredicate p(Kind::WallClock);
    p.seconds_ = seconds;
    return p;
}

StopPredicate StopPredicate::any_of(std::vector<StopPredicate> preds) {
    StopPredicate p(Kind::AnyOf);
    p.members_ = std::move(preds);
    return p;
}

StopPredicate StopPredicate::all_of(std::vector<StopPredicate> preds) {
    StopPredicate p(Kind::AllOf);
    p.members_ = std::move(preds);
    return p;
}

bool StopPredicate::should_stop(long iterations_done, double elapsed_s) const {
    switch (kind_) {
    case Kind::MaxIterations:
        return iterations_done >= max_iterations_;
    case Kind::WallClock:
        return elapsed_s >= seconds_;
    case Kind::AnyOf:
        return std::any_of(members_.begin(), members_.end(), [&](const StopPredicate& p) {
            return p.should_stop(iterations_done, elapsed_s);
        });
    case Kind::AllOf:
        return std::all_of(members_.begin(), members_.end(), [&](const StopPredicate& p) {
            return p.should_stop(iterations_done, elapsed_s);
        });
    }
    return true;
}

void StopPredicate::validate() const {
    switch (kind_) {
    case Kind::MaxIterations:
        if (max_iterations_ < 1) {
            throw std::invalid_argument("stop predicate needs at least 1 iteration");
        }
        return;
    case Kind::WallClock:
        if (!(seconds_ > 0.0)) {
            throw std::invalid_argument("stop predicate needs a positive duration");
        }
        return;
    case Kind::AnyOf:
    case Kind::AllOf:
        if (members_.empty()) {
            throw std::invalid_argument("composite stop predicate needs members");
        }
        for (const StopPredicate& p : members_) {
            p.validate();
        }
        return;
    }
}

Algorithm algorithm_from_label(const std::string& label) {
    if (label == "elitist") return Algorithm::Elitist;
    if (label == "mmas") return Algorithm::Mmas;
    if (label == "beam") return Algorithm::Beam;
    if (label == "gbeam") return Algorithm::GBeam;
    throw std::invalid_argument("unknown algorithm '" + label +
                                "' (valid: elitist, mmas, beam, gbeam)");
}

std::string algorithm_label(Algorithm algo) {
    switch (algo) {
    case Algorithm::Elitist: return "elitist";
    case Algorithm::Mmas: return "mmas";
    case Algorithm::Beam: return "beam";
    case Algorithm::GBeam: return "gbeam";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct RunState {
    Tour best;
    bool has_best = false;
    std::vector<std::int64_t> history;

    void offer(const Tour& tour) {
        if (!has_best || tour.length < best.length) {
            best = tour;
            has_best = true;
        }
    }
};

void check_inputs(const TspInstance& inst, const AcoParams& params, const StopPredicate& stop) {
    inst.validate();
    params.validate();
    stop.validate();
}

SolverResult finish(RunState& state, long iterations, std::uint64_t counter, double elapsed_s,
                    std::uint64_t seed, Algorithm algo, const AcoParams& params) {
    SolverResult result;
    result.best_tour = std::move(state.best);
    result.iterations = iterations;
    result.partial_paths_considered = counter;
    result.elapsed_s = elapsed_s;
    result.seed = seed;
    result.algorithm = algorithm_label(algo);
    result.params = params;
    result.best_length_history = std::move(state.history);
    return result;
}

/// One full construction for all ants in a classic (non-beam) variant.
std::vector<Tour> classic_build_tours(const PathExtender& ext, const PheromoneMatrix& pheromone,
                                      int n, int depot, int n_ants, Rng& rng,
                                      std::uint64_t& counter) {
    std::vector<Tour> tours;
    tours.reserve(static_cast<std::size_t>(n_ants));
    for (int ant = 0; ant < n_ants; ++ant) {
        PartialPath pp = PartialPath::at_depot(n, depot);
        for (int step = 1; step < n; ++step) {
            std::vector<PartialPath> child = ext.stochastic_extend(pp, 1, pheromone, rng);
            counter += 1;
            pp = std::move(child.front());
        }
        tours.push_back(ext.close_tour(pp));
    }
    return tours;
}

SolverResult run_classic(const TspInstance& inst, const AcoParams& params,
                         const StopPredicate& stop, Rng& rng, Algorithm algo,
                         const IterationObserver& observer) {
    check_inputs(inst, params, stop);
    const int n = inst.size();
    const DistanceMatrix dm = build_distance_matrix(inst);
    const PathExtender ext(dm, params);
    PheromoneMatrix pheromone(n, params.tau_init);

    // elapsed covers the iterations only, not matrix precomputation
    const auto start = Clock::now();
    RunState state;
    std::uint64_t counter = 0;
    long iteration = 0;
    do {
        ++iteration;
        const std::vector<Tour> tours =
            classic_build_tours(ext, pheromone, n, inst.depot, params.n_ants, rng, counter);
        for (const Tour& t : tours) {
            state.offer(t);
        }
        if (algo == Algorithm::Elitist) {
            elitist_update(pheromone, state.best, params);
        } else {
            mmas_update(pheromone, tours, params);
        }
        state.history.push_back(state.best.length);
        if (observer) {
            observer(iteration, state.best.length, pheromone);
        }
    } while (!stop.should_stop(iteration, seconds_since(start)));

    return finish(state, iteration, counter, seconds_since(start), rng.seed(), algo, params);
}

/// One beam iteration: grow a pool of partials from `n_start` depot
/// singletons to complete paths, pruning to `n_paths` each step. Returns the
/// surviving closed tours. The counter advances by k per extension call, the
/// unit the complexity accounting is stated in.
std::vector<Tour> beam_build_tours(const PathExtender& ext, const PheromoneMatrix& pheromone,
                                   int n, int depot, int n_start, int k, std::size_t n_paths,
                                   bool greedy, Rng& rng, std::uint64_t& counter) {
    std::vector<PartialPath> pool;
    pool.reserve(static_cast<std::size_t>(n_start));
    for (int i = 0; i < n_start; ++i) {
        pool.push_back(PartialPath::at_depot(n, depot));
    }
    std::vector<PartialPath> children;
    for (int step = 1; step < n; ++step) {
        children.clear();
        children.reserve(pool.size() * static_cast<std::size_t>(k));
        for (const PartialPath& parent : pool) {
            std::vector<PartialPath> kids = greedy ? ext.greedy_extend(parent, k, pheromone)
                                                   : ext.stochastic_extend(parent, k, pheromone, rng);
            counter += static_cast<std::uint64_t>(k);
            for (PartialPath& kid : kids) {
                children.push_back(std::move(kid));
            }
        }
        pick_top_n(children, std::min(n_paths, children.size()));
        pool.swap(children);
    }
    std::vector<Tour> tours;
    tours.reserve(pool.size());
    for (const PartialPath& pp : pool) {
        tours.push_back(ext.close_tour(pp));
    }
    return tours;
}

SolverResult run_beam_family(const TspInstance& inst, const AcoParams& params,
                             const StopPredicate& stop, Rng& rng, Algorithm algo,
                             const IterationObserver& observer) {
    check_inputs(inst, params, stop);
    const bool greedy = algo == Algorithm::GBeam;
    const int n = inst.size();
    const int k = params.beam_width;
    // gBeam ants are redundant: one ant per iteration unless the caller asks
    // to keep them (timing experiments). Redundant ants repeat the identical
    // construction, so results never depend on the ant count.
    const int repeats = greedy ? (params.gbeam_keep_redundant_ants ? params.n_ants : 1) : 1;
    const int n_start = greedy ? 1 : params.n_ants;
    const std::size_t n_paths = params.n_paths > 0
                                    ? static_cast<std::size_t>(params.n_paths)
                                    : static_cast<std::size_t>(n_start) * static_cast<std::size_t>(k);

    const DistanceMatrix dm = build_distance_matrix(inst);
    const PathExtender ext(dm, params);
    PheromoneMatrix pheromone(n, params.tau_init);

    // elapsed covers the iterations only, not matrix precomputation
    const auto start = Clock::now();
    RunState state;
    std::uint64_t counter = 0;
    long iteration = 0;
    do {
        ++iteration;
        std::vector<Tour> tours;
        for (int rep = 0; rep < repeats; ++rep) {
            tours = beam_build_tours(ext, pheromone, n, inst.depot, n_start, k, n_paths, greedy,
                                     rng, counter);
        }
        for (const Tour& t : tours) {
            state.offer(t);
        }
        mmas_update(pheromone, tours, params);
        state.history.push_back(state.best.length);
        if (observer) {
            observer(iteration, state.best.length, pheromone);
        }
    } while (!stop.should_stop(iteration, seconds_since(start)));

    return finish(state, iteration, counter, seconds_since(start), rng.seed(), algo, params);
}

} // namespace

SolverResult run_elitist(const TspInstance& inst, const AcoParams& params,
                         const StopPredicate& stop, Rng& rng, const IterationObserver& observer) {
    return run_classic(inst, params, stop, rng, Algorithm::Elitist, observer);
}

SolverResult run_mmas(const TspInstance& inst, const AcoParams& params, const StopPredicate& stop,
                      Rng& rng, const IterationObserver& observer) {
    return run_classic(inst, params, stop, rng, Algorithm::Mmas, observer);
}

SolverResult run_beam_aco(const TspInstance& inst, const AcoParams& params,
                          const StopPredicate& stop, Rng& rng, const IterationObserver& observer) {
    return run_beam_family(inst, params, stop, rng, Algorithm::Beam, observer);
}

SolverResult run_gbeam_aco(const TspInstance& inst, const AcoParams& params,
                           const StopPredicate& stop, Rng& rng, const IterationObserver& observer) {
    return run_beam_family(inst, params, stop, rng, Algorithm::GBeam, observer);
}

SolverResult run_elitist(const TspInstance& inst, const AcoParams& params,
                         const StopPredicate& stop, std::uint64_t seed) {
    Rng rng(seed);
    return run_elitist(inst, params, stop, rng);
}

SolverResult run_mmas(const TspInstance& inst, const AcoParams& params, const StopPredicate& stop,
                      std::uint64_t seed) {
    Rng rng(seed);
    return run_mmas(inst, params, stop, rng);
}

SolverResult run_beam_aco(const TspInstance& inst, const AcoParams& params,
                          const StopPredicate& stop, std::uint64_t seed) {
    Rng rng(seed);
    return run_beam_aco(inst, params, stop, rng);
}

SolverResult run_gbeam_aco(const TspInstance& inst, const AcoParams& params,
                           const StopPredicate& stop, std::uint64_t seed) {
    Rng rng(seed);
    return run_gbeam_aco(inst, params, stop, rng);
}

int equivalent_beam_width(int n_ants, int k) {
    if (n_ants < 1 || k < 1) {
        throw std::invalid_argument("equivalent_beam_width needs n_ants >= 1 and k >= 1");
    }
    return static_cast<int>(std::lround(k * std::sqrt(static_cast<double>(n_ants))));
}

SolverResult solve(const TspInstance& inst, const std::string& label, const AcoParams& params,
                   const StopPredicate& stop, std::uint64_t seed) {
    switch (algorithm_from_label(label)) {
    case Algorithm::Elitist: return run_elitist(inst, params, stop, seed);
    case Algorithm::Mmas: return run_mmas(inst, params, stop, seed);
    case Algorithm::Beam: return run_beam_aco(inst, params, stop, seed);
    case Algorithm::GBeam: return run_gbeam_aco(inst, params, stop, seed);
    }
    throw std::logic_error("unreachable");
}

} // namespace aco
