#pragma once

// Deck group of a closed orientable genus-g surface, realized as the
// side-pairing group of the regular 4g-gon with interior angle 2pi/4g.

#include <string>
#include <vector>

#include "hyptutte/hyperboloid.hpp"

namespace hyptutte {

// Word over the group generators: signed 1-based tokens, +k = generator k,
// -k = its inverse. Generator k=1..2g is named a1,b1,a2,b2,...; the string
// form uses capitals for inverses ("a1B2"), "e" for the identity.
struct Word {
  std::vector<int> t;

  bool empty() const { return t.empty(); }
};

Word word_inverse(const Word& w);
// Concatenation with free reduction.
Word word_concat(const Word& a, const Word& b);
std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s, int genus);

struct ReduceResult {
  HPoint q;
  Isometry g;
  Word word;
};

struct SidePairingReport {
  // Max deviation of mapped side endpoints from the paired side, one entry
  // per generator in list order a1,b1,a1^-1,b1^-1,...
  std::vector<double> residual;
  double max_residual = 0.0;
};

class SurfaceGroup {
 public:
  // Regular 4g-gon construction; throws GenusTooSmallError for genus < 2.
  static SurfaceGroup regular(int genus);

  int genus() const { return genus_; }
  int sides() const { return 4 * genus_; }
  const HPoint& base() const { return base_; }
  // 4g generators ordered a1, b1, a1^-1, b1^-1, a2, ...
  const std::vector<Isometry>& generators() const { return generators_; }
  // 4g polygon corners, counterclockwise.
  const std::vector<HPoint>& polygon() const { return polygon_; }
  // Geodesic midpoints of the polygon sides (side k runs corner k -> k+1).
  const std::vector<HPoint>& side_midpoints() const { return midpoints_; }

  double circumradius() const { return circumradius_; }

  // Base generator k = 1..2g (a1,b1,a2,...), or its inverse for -k.
  const Isometry& generator(int signed_token) const;
  // For generator list index 0..4g-1: the side it maps and the target side.
  std::pair<int, int> pairing_sides(int list_index) const;

  // Evaluates a word to a matrix (long double accumulation, projected).
  Isometry eval(const Word& w) const;

  // Relator residual ||a1 b1 a1^-1 b1^-1 ... - I||_inf.
  double relator_residual() const;
  // Sum of the 4g polygon corner angles (2pi on the quotient vertex).
  double corner_angle_sum() const;

  // Diagnostic what-if copy with one generator (by list index) replaced.
  SurfaceGroup with_generator(int list_index, const Isometry& g) const;

 private:
  int genus_ = 0;
  HPoint base_;
  double circumradius_ = 0.0;
  std::vector<Isometry> generators_;          // 4g, with inverses
  std::vector<Isometry> base_generators_;     // 2g: a1,b1,a2,...
  std::vector<HPoint> polygon_;
  std::vector<HPoint> midpoints_;
  std::vector<std::pair<int, int>> pairing_;  // per list index: (source, target)
};

// Greedy nearest-point descent: returns q = g.p with dist(q, base) locally
// minimal over single-generator refinements; g is a product of generators.
ReduceResult reduce(const SurfaceGroup& group, const HPoint& p);

SidePairingReport side_pairing_check(const SurfaceGroup& group);

}  // namespace hyptutte
