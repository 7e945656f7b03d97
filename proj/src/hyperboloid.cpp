#include "hyptutte/hyperboloid.hpp"

#include <Eigen/LU>
#include <cmath>

namespace hyptutte {

namespace {

using LVec = Eigen::Matrix<long double, 3, 1>;
using LMat = Eigen::Matrix<long double, 3, 3>;

inline long double lmdot(const LVec& u, const LVec& v) {
  return u[0] * v[0] + u[1] * v[1] - u[2] * v[2];
}

// Re-project onto the sheet in extended precision.
inline LVec sheet(const Vec3& p) {
  LVec q = p.cast<long double>();
  long double s = -lmdot(q, q);
  q /= std::sqrt(s);
  if (q[2] < 0) q = -q;
  return q;
}

// Tangent component at base (kills the off-sheet part of stored doubles).
inline LVec tangent_at(const LVec& base, const Vec3& v) {
  LVec w = v.cast<long double>();
  return w + lmdot(w, base) * base;
}

inline long double ldist(const LVec& p, const LVec& q) {
  LVec d = q - p;
  long double n2 = lmdot(d, d);
  if (n2 < 0) n2 = 0;
  return 2.0L * std::asinh(0.5L * std::sqrt(n2));
}

inline LMat lminkJ() {
  LMat j = LMat::Identity();
  j(2, 2) = -1.0L;
  return j;
}

}  // namespace

double mdot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] - u[2] * v[2];
}

double TangentVec::norm() const {
  LVec b = sheet(base.c);
  LVec w = tangent_at(b, v);
  long double n2 = lmdot(w, w);
  return n2 > 0 ? double(std::sqrt(n2)) : 0.0;
}

HPoint origin() { return HPoint(Vec3(0.0, 0.0, 1.0)); }

HPoint project_point(const Vec3& raw) {
  LVec q = raw.cast<long double>();
  long double s = -lmdot(q, q);
  if (!(s > 0)) throw Error("project_point: coordinates are not timelike");
  q /= std::sqrt(s);
  if (q[2] < 0) q = -q;
  return HPoint(q.cast<double>());
}

double dist(const HPoint& p, const HPoint& q) {
  return double(ldist(sheet(p.c), sheet(q.c)));
}

HPoint exp_map(const TangentVec& tv) {
  LVec p = sheet(tv.base.c);
  LVec v = tangent_at(p, tv.v);
  long double t2 = lmdot(v, v);
  long double t = t2 > 0 ? std::sqrt(t2) : 0.0L;
  LVec out;
  if (t < 1e-18L) {
    out = p + v;
  } else {
    out = std::cosh(t) * p + (std::sinh(t) / t) * v;
  }
  out /= std::sqrt(-lmdot(out, out));
  if (out[2] < 0) out = -out;
  return HPoint(out.cast<double>());
}

TangentVec log_map(const HPoint& pp, const HPoint& qq) {
  LVec p = sheet(pp.c);
  LVec q = sheet(qq.c);
  long double d = ldist(p, q);
  if (d < kZeroVectorTol) return TangentVec(pp, Vec3::Zero());
  long double c = -lmdot(p, q);
  LVec u = q - c * p;
  long double nu2 = lmdot(u, u);
  if (nu2 <= 0) return TangentVec(pp, Vec3::Zero());
  LVec v = (d / std::sqrt(nu2)) * u;
  return TangentVec(pp, v.cast<double>());
}

TangentVec transport(const HPoint& pp, const HPoint& qq, const TangentVec& tv) {
  LVec p = sheet(pp.c);
  LVec q = sheet(qq.c);
  LVec v = tangent_at(p, tv.v);
  long double c = -lmdot(p, q);
  if (c <= 1.0L) return TangentVec(qq, v.cast<double>());
  LVec w = v + (lmdot(q, v) / (1.0L + c)) * (p + q);
  // clean up against the target base
  LVec qb = q;
  w += lmdot(w, qb) * qb;
  return TangentVec(qq, w.cast<double>());
}

double tdot(const TangentVec& u, const TangentVec& v) {
  LVec b = sheet(u.base.c);
  return double(lmdot(tangent_at(b, u.v), tangent_at(b, v.v)));
}

double angle(const TangentVec& u, const TangentVec& v) {
  LVec b = sheet(u.base.c);
  LVec uu = tangent_at(b, u.v);
  LVec vv = tangent_at(b, v.v);
  long double nu = std::sqrt(std::max(lmdot(uu, uu), 0.0L));
  long double nv = std::sqrt(std::max(lmdot(vv, vv), 0.0L));
  if (nu < kZeroVectorTol || nv < kZeroVectorTol)
    throw ZeroVectorError("angle: degenerate edge (zero tangent)");
  long double c = lmdot(uu, vv) / (nu * nv);
  if (c > 1.0L) c = 1.0L;
  if (c < -1.0L) c = -1.0L;
  return double(std::acos(c));
}

int oriented_side(const TangentVec& u, const TangentVec& v) {
  LMat m;
  m.col(0) = u.v.cast<long double>();
  m.col(1) = v.v.cast<long double>();
  m.col(2) = u.base.c.cast<long double>();
  long double det = m.determinant();
  if (det > 0) return 1;
  if (det < 0) return -1;
  return 0;
}

double triangle_area(const HPoint& p, const HPoint& q, const HPoint& r) {
  if (dist(p, q) < kZeroVectorTol || dist(q, r) < kZeroVectorTol ||
      dist(r, p) < kZeroVectorTol)
    return 0.0;
  double s = angle(log_map(p, q), log_map(p, r)) +
             angle(log_map(q, r), log_map(q, p)) +
             angle(log_map(r, p), log_map(r, q));
  double a = M_PI - s;
  return a > 0 ? a : 0.0;
}

HPoint apply(const Isometry& g, const HPoint& p) {
  LVec q = g.m.cast<long double>() * sheet(p.c);
  q /= std::sqrt(-lmdot(q, q));
  if (q[2] < 0) q = -q;
  return HPoint(q.cast<double>());
}

TangentVec apply_tangent(const Isometry& g, const TangentVec& tv) {
  HPoint q = apply(g, tv.base);
  LVec w = g.m.cast<long double>() * tv.v.cast<long double>();
  LVec qb = sheet(q.c);
  w += lmdot(w, qb) * qb;
  return TangentVec(q, w.cast<double>());
}

Isometry compose(const Isometry& g, const Isometry& h) {
  LMat p = g.m.cast<long double>() * h.m.cast<long double>();
  return Isometry(p.cast<double>());
}

Isometry inverse(const Isometry& g) {
  Mat3 inv;
  // J G^T J, written out: flips the sign of the (0,2),(1,2),(2,0),(2,1) blocks.
  inv(0, 0) = g.m(0, 0);
  inv(0, 1) = g.m(1, 0);
  inv(0, 2) = -g.m(2, 0);
  inv(1, 0) = g.m(0, 1);
  inv(1, 1) = g.m(1, 1);
  inv(1, 2) = -g.m(2, 1);
  inv(2, 0) = -g.m(0, 2);
  inv(2, 1) = -g.m(1, 2);
  inv(2, 2) = g.m(2, 2);
  return Isometry(inv);
}

Isometry project(const Isometry& g) {
  // Minkowski Gram-Schmidt on the columns: c0, c1 spacelike, c2 timelike.
  LMat m = g.m.cast<long double>();
  LVec c2 = m.col(2);
  long double n2 = -lmdot(c2, c2);
  if (!(n2 > 0)) throw NotOrthochronousError("project: timelike column degenerated");
  c2 /= std::sqrt(n2);
  LVec c0 = m.col(0);
  c0 += lmdot(c0, c2) * c2;  // subtract timelike component (note signature)
  c0 /= std::sqrt(lmdot(c0, c0));
  LVec c1 = m.col(1);
  c1 += lmdot(c1, c2) * c2;
  c1 -= lmdot(c1, c0) * c0;
  c1 /= std::sqrt(lmdot(c1, c1));
  LMat out;
  out.col(0) = c0;
  out.col(1) = c1;
  out.col(2) = c2;
  if (out(2, 2) <= 0)
    throw NotOrthochronousError("project: matrix swaps hyperboloid sheets");
  if (out.determinant() < 0)
    throw NotOrthochronousError("project: matrix reverses orientation");
  return Isometry(out.cast<double>());
}

Isometry rotation(double theta) {
  Mat3 m = Mat3::Identity();
  double c = std::cos(theta), s = std::sin(theta);
  m(0, 0) = c;
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = c;
  return Isometry(m);
}

Isometry translation_x(double t) {
  Mat3 m = Mat3::Identity();
  double c = std::cosh(t), s = std::sinh(t);
  m(0, 0) = c;
  m(0, 2) = s;
  m(2, 0) = s;
  m(2, 2) = c;
  return Isometry(m);
}

Isometry rotation_about(const HPoint& p, double phi) {
  // Rodrigues form in so(2,1): K v = J (p x v).
  LVec x = sheet(p.c);
  LMat cross;
  cross << 0, -x[2], x[1], x[2], 0, -x[0], -x[1], x[0], 0;
  LMat k = lminkJ() * cross;
  long double c = std::cos((long double)phi), s = std::sin((long double)phi);
  LMat m = LMat::Identity() + s * k + (1.0L - c) * (k * k);
  return Isometry(m.cast<double>());
}

double isometry_defect(const Isometry& g) {
  Mat3 j = Mat3::Identity();
  j(2, 2) = -1.0;
  double r = (g.m.transpose() * j * g.m - j).cwiseAbs().maxCoeff();
  return std::max(r, std::abs(g.m.determinant() - 1.0));
}

}  // namespace hyptutte
