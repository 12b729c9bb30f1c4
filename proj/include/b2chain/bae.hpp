#pragma once

#include "b2chain/tq.hpp"

#include <optional>
#include <string>
#include <vector>

namespace b2chain::bae {

struct Solution {
    tq::BetheRoots roots;
    bool converged = false;
    double residual_inf = 0.0;  // worst root-condition residual, printed form
    int iterations = 0;
};

struct SolveOptions {
    int max_iter = 200;
    int multistarts = 50;
    double tol = 1e-10;
    uint64_t seed = 42;
    int homotopy_steps = 10;  // open chain: path from the diagonal limit
};

// damped Newton on the stacked root conditions from a given initial guess
Solution polish(tq::BetheRoots init, const ModelConfig& cfg, const SolveOptions& opt);

// deterministic multistart (+ homotopy for the open chain) in one sector;
// returns deduplicated converged solutions
std::vector<Solution> solve_sector(const ModelConfig& cfg, int l1, int l2,
                                   const SolveOptions& opt);

// Gauss-Newton seeding against a sampled branch of the transfer spectrum,
// then Newton-polished on the root conditions
std::optional<Solution> solve_targeted(const ModelConfig& cfg, int l1, int l2,
                                       const std::vector<cx>& us, const std::vector<cx>& target,
                                       const SolveOptions& opt, bool flip_x = false,
                                       const std::vector<cx>* target_spinor = nullptr,
                                       const std::vector<tq::BetheRoots>* warm_starts = nullptr);

struct SectorRecord {
    int l1 = 0, l2 = 0;
    std::vector<Solution> solutions;       // converged, deduplicated
    std::vector<int> matched_branch;       // per solution, branch row or -1
};

struct MatchReport {
    std::vector<SectorRecord> sectors;
    std::vector<char> branch_matched;      // per branch row of the spectrum
    std::vector<cx> sample_points;
    int matched_branches = 0;              // rows with at least one match
    int total_branches = 0;
    double worst_match_error = 0.0;        // over matched pairs
    double worst_bae_residual = 0.0;       // over converged solutions
};

// enumerate the sectors of the given mode, solve, and match against the
// brute-force spectrum (multiplicities counted through the branch rows)
MatchReport run_spectrum_match(const ModelConfig& cfg, const SolveOptions& opt,
                               int max_l1 = -1);

// sample points for eigenvalue matching, kept away from the trial-factor
// zeros of all candidate solutions
std::vector<cx> matching_points(const ModelConfig& cfg, int count, uint64_t seed);

}  // namespace b2chain::bae
