#pragma once

// Hyperbolic plane kernel in the hyperboloid model:
//   H^2 = { x : <x,x> = -1, x3 > 0 } with the Minkowski form
//   <u,v> = u1 v1 + u2 v2 - u3 v3  on R^{2,1}.
// All operations are closed-form linear algebra. Interiors are computed in
// long double with inputs re-projected onto the sheet; double-precision
// hyperboloid coordinates only determine a point to ~eps*cosh(r)^2, and the
// re-projection keeps that error from being amplified by cosh-scale factors.

#include <Eigen/Core>

#include "hyptutte/errors.hpp"

namespace hyptutte {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kZeroVectorTol = 1e-14;  // degenerate-edge threshold

// Minkowski inner product.
double mdot(const Vec3& u, const Vec3& v);

struct HPoint {
  Vec3 c{0.0, 0.0, 1.0};

  HPoint() = default;
  explicit HPoint(const Vec3& coords) : c(coords) {}

  double x() const { return c[0]; }
  double y() const { return c[1]; }
  double z() const { return c[2]; }
};

struct TangentVec {
  HPoint base;
  Vec3 v{0.0, 0.0, 0.0};

  TangentVec() = default;
  TangentVec(const HPoint& base_, const Vec3& vec) : base(base_), v(vec) {}

  double norm() const;
  bool is_zero() const { return norm() < kZeroVectorTol; }
};

// Orientation-preserving isometry of H^2, an element of SO+(2,1).
struct Isometry {
  Mat3 m = Mat3::Identity();

  Isometry() = default;
  explicit Isometry(const Mat3& mat) : m(mat) {}
};

HPoint origin();

// Projects raw coordinates onto the upper sheet (normalizes <p,p> to -1).
HPoint project_point(const Vec3& raw);

// Geodesic distance. Equals arccosh(-<p,q>), evaluated through the chord
// length 2 asinh(|q - p|/2) which is exact near zero as well.
double dist(const HPoint& p, const HPoint& q);

// exp_p(v): cosh|v| p + sinh|v| v/|v|; p itself for |v| = 0.
HPoint exp_map(const TangentVec& v);

// log_p(q): the unique tangent at p with exp(log) = q and |log| = dist(p,q).
TangentVec log_map(const HPoint& p, const HPoint& q);

// Parallel transport of v from T_p to T_q along the p->q geodesic.
TangentVec transport(const HPoint& p, const HPoint& q, const TangentVec& v);

// Dot product of tangent vectors (at a common base point).
double tdot(const TangentVec& u, const TangentVec& v);

// Angle in [0, pi]. Throws ZeroVectorError below the degeneracy threshold.
double angle(const TangentVec& u, const TangentVec& v);

// Sign of det[u, v, p]: +1 iff (u,v) is a positively oriented pair in T_p.
int oriented_side(const TangentVec& u, const TangentVec& v);

// Angle deficit pi - (sum of inner angles); 0 for degenerate triples.
double triangle_area(const HPoint& p, const HPoint& q, const HPoint& r);

HPoint apply(const Isometry& g, const HPoint& p);
TangentVec apply_tangent(const Isometry& g, const TangentVec& v);
Isometry compose(const Isometry& g, const Isometry& h);
// Exact inverse for SO(2,1): J G^T J.
Isometry inverse(const Isometry& g);
// Minkowski Gram-Schmidt re-orthonormalization; idempotent.
// Throws NotOrthochronousError if the result swaps sheets.
Isometry project(const Isometry& g);

Isometry rotation(double theta);              // about the origin
Isometry translation_x(double t);             // along the x-axis geodesic
Isometry rotation_about(const HPoint& p, double phi);

// Residuals of the isometry invariants: max |G^T J G - J| and |det - 1|.
double isometry_defect(const Isometry& g);

}  // namespace hyptutte
