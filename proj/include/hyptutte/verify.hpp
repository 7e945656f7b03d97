#pragma once

// Certification that a mapping is an embedded geodesic triangulation, plus
// randomized comparison-geometry oracles.

#include <cstdint>
#include <string>

#include "hyptutte/gmap.hpp"

namespace hyptutte {

// Orientation sign of a face: oriented_side of the two outgoing edge vectors
// at the face's first stored vertex. Throws DegenerateFaceError.
int orientation(const GeodesicMapping& m, int face);

// |sum of corner angles - 2pi| per vertex. Throws DegenerateFaceError.
std::vector<double> vertex_angle_sums(const GeodesicMapping& m);

struct GaussBonnetReport {
  // per face: |angle sum + side-length area - pi| (two independent area
  // routes; identically small unless the codepaths diverge)
  std::vector<double> face_residual;
  double max_face_residual = 0.0;
  double total_area = 0.0;           // sum of angle deficits
  double total_area_residual = 0.0;  // |total - 2 pi |chi||
};

GaussBonnetReport gauss_bonnet(const GeodesicMapping& m);

// Independent triangle area from side lengths (hyperbolic L'Huilier):
// tan^2(A/4) = tanh(s/2) tanh((s-a)/2) tanh((s-b)/2) tanh((s-c)/2).
double area_from_side_lengths(double a, double b, double c);

struct EmbeddingReport {
  int faces = 0;
  std::vector<int> orientation_sign;     // per face; 0 marks degenerate
  std::vector<int> degenerate_faces;
  std::vector<int> flipped_faces;
  std::vector<double> vertex_residual;   // |angle sum - 2pi|
  double max_vertex_residual = 0.0;
  std::vector<double> face_gb_residual;
  double max_face_gb_residual = 0.0;
  double total_area = 0.0;
  double total_area_residual = 0.0;
  std::vector<std::pair<int, int>> overlaps;  // paranoid mode only
  bool pass = false;

  std::string to_text() const;
};

// Aggregate certificate: pass iff every face is positively oriented and
// non-degenerate, vertex angle sums are within 1e-9 of 2pi, and the total
// area is within 1e-8 of 2 pi |chi|. paranoid additionally runs the O(F^2)
// pairwise overlap scan in the universal cover.
EmbeddingReport embedding_report(const GeodesicMapping& m, bool paranoid = false);

// Pairs of faces whose lifted triangles overlap with positive area.
std::vector<std::pair<int, int>> overlap_scan(const GeodesicMapping& m);

struct Cat0Report {
  long samples = 0;
  // max over samples of  |v(z,x)-v(z,y)| - d(x,y)  (should be <= 0)
  double max_violation_1 = 0.0;
  // max over samples of  d(x,y)^2 - (v(x,y).v(x,z) + v(y,x).v(y,z))
  double max_violation_2 = 0.0;
  // worst |equality gap| on constructed collinear triples
  double collinear_equality_residual = 0.0;
  // smallest strict-inequality slack on near-degenerate triples (> 0)
  double near_degenerate_slack = 0.0;

  std::string to_text() const;
};

Cat0Report cat0_oracle(long samples, std::uint64_t seed);

}  // namespace hyptutte
