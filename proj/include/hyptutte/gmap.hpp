#pragma once

// Geodesic mappings: simplicial complex + deck labels + vertex lifts, with
// the derived quantities (edge vectors, lengths, energy, residues), gauge
// changes and the sup distance on a homotopy class.

#include <memory>
#include <vector>

#include "hyptutte/fuchsian.hpp"
#include "hyptutte/hyperboloid.hpp"
#include "hyptutte/simplicial.hpp"

namespace hyptutte {

struct Label {
  Isometry iso;
  Word word;
};

// One Label per directed edge, indexed by Complex::dir_id.
struct DeckLabels {
  std::vector<Label> l;

  const Label& at(int dir) const { return l[size_t(dir)]; }
  Label& at(int dir) { return l[size_t(dir)]; }
};

struct GeodesicMapping {
  std::shared_ptr<const SurfaceGroup> group;
  std::shared_ptr<const Complex> complex;
  DeckLabels labels;
  std::vector<HPoint> lifts;

  GeodesicMapping with_lift(int i, const HPoint& p) const {
    GeodesicMapping m = *this;
    m.lifts[size_t(i)] = p;
    return m;
  }
};

struct Weights {
  std::vector<double> w;  // by directed edge id; all > 0

  double at(int dir) const { return w[size_t(dir)]; }
};

Weights uniform_weights(const Complex& c);
// i.i.d. per directed edge in [1, cap]; condition number lambda_w <= cap.
Weights random_weights(const Complex& c, double cap, std::uint64_t seed);
double lambda_w(const Weights& w);
void check_positive(const Weights& w);

// log(x_i, A_ij x_j); zero tangent on a degenerate edge.
TangentVec edge_vector(const GeodesicMapping& m, int i, int j);
double edge_length(const GeodesicMapping& m, int i, int j);

// r_i = sum_j w_ij edge_vector(i,j).
TangentVec residue(const GeodesicMapping& m, const Weights& w, int i);
// W_i = sum_j w_ij.
double vertex_weight(const GeodesicMapping& m, const Weights& w, int i);
// max_i |r_i| / W_i.
double max_normalized_residual(const GeodesicMapping& m, const Weights& w);

// 1/2 sum over undirected edges of (w_ij + w_ji)/2 * l_ij^2.
double energy(const GeodesicMapping& m, const Weights& w);

// Lift change x_i <- B x_i with compensating label updates.
GeodesicMapping gauge(const GeodesicMapping& m, int i, const Isometry& b,
                      const Word& b_word);

// Gauge that moves the vertex-0 lift into the fundamental polygon.
GeodesicMapping normalize_anchor(const GeodesicMapping& m);

// Sup distance over the 1-skeleton = max over vertices (convexity of the
// distance between geodesics in CAT(0)). Throws LabelMismatchError when the
// labels differ beyond tol.
double distance_X(const GeodesicMapping& a, const GeodesicMapping& b,
                  double label_tol = 1e-8);

struct ResidualReport {
  std::vector<double> residual;  // per face (cocycle) or per edge (involution)
  double max_residual = 0.0;
};

// ||A_ij A_jk A_ki - I|| per face.
ResidualReport check_cocycle(const GeodesicMapping& m);
// ||A_ji - A_ij^-1|| per undirected edge.
ResidualReport check_involution(const GeodesicMapping& m);

}  // namespace hyptutte
