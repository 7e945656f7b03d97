#pragma once

// Mean-value-coordinate weights, weight-space interpolation, and the
// morphing pipeline between embedded geodesic triangulations.

#include "hyptutte/balance.hpp"

namespace hyptutte {

// Inner angles at the three corners of a face, in stored vertex order.
// Throws DegenerateFaceError if any edge length <= 1e-14.
std::array<double, 3> corner_angles(const GeodesicMapping& m, int face);

// (tan(alpha/2) + tan(beta/2)) / len.
double mvc_weight(double alpha, double beta, double len);

// Mean value coordinates of an embedded mapping: for each directed edge
// (i,j), alpha/beta are the corner angles at i in the two adjacent faces.
// Throws NotEmbeddedError if a face is degenerate or flipped.
Weights mvc(const GeodesicMapping& m);

// (1-t) w0 + t w1 per directed edge; log_space interpolates exponents.
Weights interpolate(const Weights& w0, const Weights& w1, double t,
                    bool log_space = false);

struct MorphPlan {
  GeodesicMapping m0, m1;  // same complex & labels, both embedded
  int frames = 2;          // N >= 2
  SolverConfig cfg;
  bool log_space = false;
  bool cold_start = false;  // solve every frame from m0 instead of warm
};

struct MorphResult {
  std::vector<GeodesicMapping> frames;
  std::vector<long> sweeps;  // per frame
};

// Solves Phi(interpolate(mvc(m0), mvc(m1), k/(N-1))) for k = 0..N-1 with
// warm starts. Throws LabelMismatchError / NotEmbeddedError on bad plans and
// propagates NoConvergenceError with the failing frame noted.
MorphResult morph(const MorphPlan& plan);

}  // namespace hyptutte
