#pragma once

// Damped per-vertex fixed-point iteration on residue vectors: computes the
// unique w-balanced geodesic mapping in the homotopy class.

#include <cstdint>

#include "hyptutte/gmap.hpp"

namespace hyptutte {

struct SolverConfig {
  double tau = 0.5;          // step in (0, 1]
  double eps = 1e-10;        // residual scale: stop when mu < eps
  long max_iters = 200000;   // sweep budget
  double backtrack = 0.5;    // tau multiplier on a rejected sweep
  std::uint64_t seed = 0;    // used by perturbation utilities, not by solve
  bool record_energy = true;

  void check() const;
};

struct SolveTrace {
  std::vector<double> mu_history;      // mu before each sweep, then final
  std::vector<double> accepted_tau;    // effective step size per sweep
  std::vector<double> energy_history;  // energy after each accepted sweep
  long sweeps = 0;
  bool converged = false;
  double final_mu = 0.0;
};

struct NoConvergenceError : Error {
  SolveTrace trace;
  NoConvergenceError(const std::string& what, SolveTrace t)
      : Error(what), trace(std::move(t)) {}
};

struct SolveResult {
  GeodesicMapping mapping;
  SolveTrace trace;
};

// One Jacobi sweep: x_i <- exp(tau r_i / W_i) for every vertex
// simultaneously; returns the new mapping and mu = max_i |r_i|/W_i measured
// before the step. Labels unchanged.
std::pair<GeodesicMapping, double> step(const GeodesicMapping& m,
                                        const Weights& w, double tau);

// Iterates sweeps with backtracking (accept iff the new mu does not exceed
// the old one); every 64 sweeps gauge-normalizes vertex 0 and re-projects
// all label isometries. Throws NoConvergenceError when the sweep budget is
// exhausted or no step size can decrease mu (residual floor reached).
SolveResult solve(const GeodesicMapping& m0, const Weights& w,
                  const SolverConfig& cfg);

// Same contract with m0 = prev; separate entry point so callers can assert
// small iteration counts on nearby weights.
SolveResult solve_warm(const GeodesicMapping& prev, const Weights& w,
                       const SolverConfig& cfg);

// Deterministic per-vertex lift noise: tangent direction from the seeded rng,
// norm uniform in [0, max_norm]. Used by uniqueness probes and the CLI.
GeodesicMapping perturb_lifts(const GeodesicMapping& m, double max_norm,
                              std::uint64_t seed);

}  // namespace hyptutte
