#include <doctest.h>

#include <Eigen/LU>
#include <cmath>

#include "hyptutte/hyperboloid.hpp"
#include "test_util.hpp"

using namespace hyptutte;
using testutil::Rng;

namespace {

// Independent oracle: integrate the ambient geodesic equation
// gamma'' = <gamma', gamma'>_M gamma with RK4.
HPoint integrate_geodesic(const HPoint& base, const Vec3& vel, double t, int steps) {
  Vec3 x = base.c, v = vel;
  double h = t / steps;
  auto acc = [](const Vec3& xx, const Vec3& vv) { return mdot(vv, vv) * xx; };
  for (int s = 0; s < steps; ++s) {
    Vec3 k1x = v, k1v = acc(x, v);
    Vec3 k2x = v + 0.5 * h * k1v, k2v = acc(x + 0.5 * h * k1x, v + 0.5 * h * k1v);
    Vec3 k3x = v + 0.5 * h * k2v, k3v = acc(x + 0.5 * h * k2x, v + 0.5 * h * k2v);
    Vec3 k4x = v + h * k3v, k4v = acc(x + h * k3x, v + h * k3v);
    x += (h / 6.0) * (k1x + 2 * k2x + 2 * k3x + k4x);
    v += (h / 6.0) * (k1v + 2 * k2v + 2 * k3v + k4v);
  }
  return project_point(x);
}

}  // namespace

TEST_CASE("dist basics") {
  HPoint o = origin();
  CHECK(dist(o, o) == 0.0);
  HPoint q(Vec3(std::sinh(1.0), 0.0, std::cosh(1.0)));
  CHECK(dist(o, q) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dist(q, o) == dist(o, q));
}

TEST_CASE("dist triangle inequality over random triples") {
  Rng rng(101);
  for (int s = 0; s < 10000; ++s) {
    HPoint p = testutil::random_point(2.0, rng);
    HPoint q = testutil::random_point(2.0, rng);
    HPoint r = testutil::random_point(2.0, rng);
    CHECK(dist(p, r) <= dist(p, q) + dist(q, r) + 1e-12);
  }
}

TEST_CASE("exp of the zero vector") {
  Rng rng(7);
  HPoint p = testutil::random_point(1.5, rng);
  HPoint q = exp_map(TangentVec(p, Vec3::Zero()));
  CHECK((q.c - p.c).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("exp against geodesic integration") {
  HPoint o = origin();
  for (double t : {0.5, 1.0, 2.0}) {
    HPoint ours = exp_map(TangentVec(o, Vec3(t, 0.0, 0.0)));
    HPoint ref = integrate_geodesic(o, Vec3(1.0, 0.0, 0.0), t, 20000);
    CHECK((ours.c - ref.c).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(ours.c[0] == doctest::Approx(std::sinh(t)).epsilon(1e-14));
    CHECK(ours.c[2] == doctest::Approx(std::cosh(t)).epsilon(1e-14));
  }
  // off-axis base, random directions
  Rng rng(8);
  for (int s = 0; s < 20; ++s) {
    HPoint p = testutil::random_point(1.0, rng);
    TangentVec dir = testutil::random_unit_tangent(p, rng);
    double t = 0.3 + 2.0 * rng.u();
    HPoint ours = exp_map(TangentVec(p, t * dir.v));
    HPoint ref = integrate_geodesic(p, dir.v, t, 20000);
    CHECK(dist(ours, ref) < 1e-10);
  }
}

TEST_CASE("dist(base, exp(v)) equals |v|") {
  Rng rng(11);
  for (int s = 0; s < 10000; ++s) {
    HPoint p = testutil::random_point(1.5, rng);
    TangentVec dir = testutil::random_unit_tangent(p, rng);
    double t = 5.0 * rng.u();
    CHECK(dist(p, exp_map(TangentVec(p, t * dir.v))) == doctest::Approx(t).epsilon(1e-10));
  }
}

TEST_CASE("log basics and roundtrip oracle") {
  Rng rng(12);
  HPoint p = testutil::random_point(1.5, rng);
  CHECK(log_map(p, p).norm() == 0.0);

  double worst = 0.0;
  for (int s = 0; s < 10000; ++s) {
    auto [a, b] = testutil::random_pair(1.5, 5.0, rng);
    TangentVec v = log_map(a, b);
    CHECK(v.norm() == doctest::Approx(dist(a, b)).epsilon(1e-13));
    worst = std::max(worst, dist(exp_map(v), b));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("transport preserves norms and inverts") {
  Rng rng(13);
  HPoint p = testutil::random_point(1.5, rng);
  TangentVec v = testutil::random_unit_tangent(p, rng);
  CHECK((transport(p, p, v).v - v.v).cwiseAbs().maxCoeff() == 0.0);

  double worst = 0.0;
  for (int s = 0; s < 10000; ++s) {
    auto [a, b] = testutil::random_pair(1.5, 5.0, rng);
    TangentVec w = testutil::random_unit_tangent(a, rng);
    w = TangentVec(a, (3.0 * rng.u()) * w.v);
    TangentVec t = transport(a, b, w);
    CHECK(t.norm() == doctest::Approx(w.norm()).epsilon(1e-12));
    TangentVec back = transport(b, a, t);
    worst = std::max(worst, (back.v - w.v).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("transport preserves the angle with the geodesic direction") {
  Rng rng(14);
  for (int s = 0; s < 200; ++s) {
    auto [a, b] = testutil::random_pair(1.0, 4.0, rng);
    if (dist(a, b) < 1e-6) continue;
    TangentVec w = testutil::random_unit_tangent(a, rng);
    double before = angle(w, log_map(a, b));
    double after = angle(transport(a, b, w), TangentVec(b, -log_map(b, a).v));
    CHECK(before == doctest::Approx(after).epsilon(1e-10));
  }
}

TEST_CASE("angle special values and degenerate error") {
  HPoint o = origin();
  TangentVec e1(o, Vec3(1, 0, 0)), e2(o, Vec3(0, 1, 0));
  CHECK(angle(e1, e1) == 0.0);
  CHECK(angle(e1, TangentVec(o, -e1.v)) == doctest::Approx(M_PI));
  CHECK(angle(e1, e2) == doctest::Approx(M_PI / 2));
  CHECK_THROWS_AS(angle(TangentVec(o, Vec3(1e-15, 0, 0)), e2), ZeroVectorError);
}

TEST_CASE("oriented_side convention and antisymmetry") {
  HPoint o = origin();
  TangentVec e1(o, Vec3(1, 0, 0)), e2(o, Vec3(0, 1, 0));
  CHECK(oriented_side(e1, e2) == 1);
  CHECK(oriented_side(e2, e1) == -1);
  CHECK(oriented_side(e1, e1) == 0);
  Rng rng(15);
  for (int s = 0; s < 100; ++s) {
    HPoint p = testutil::random_point(2.0, rng);
    TangentVec u = testutil::random_unit_tangent(p, rng);
    TangentVec v = testutil::random_unit_tangent(p, rng);
    CHECK(oriented_side(u, v) == -oriented_side(v, u));
  }
}

TEST_CASE("triangle area: degenerate, equilateral, isometry invariance") {
  HPoint o = origin();
  CHECK(triangle_area(o, o, o) == 0.0);

  // equilateral with all angles pi/4: circumradius from
  // cosh(side) = cosh^2 r + sinh^2 r / 2 and cosh(side) = 1 + sqrt(2)
  double cr = std::sqrt((3.0 + 2.0 * std::sqrt(2.0)) / 3.0);
  double r = std::acosh(cr);
  std::array<HPoint, 3> tri;
  for (int k = 0; k < 3; ++k) {
    double th = 2.0 * M_PI * k / 3.0;
    tri[size_t(k)] = exp_map(TangentVec(o, r * Vec3(std::cos(th), std::sin(th), 0)));
  }
  CHECK(triangle_area(tri[0], tri[1], tri[2]) == doctest::Approx(M_PI / 4).epsilon(1e-12));

  Rng rng(16);
  for (int s = 0; s < 1000; ++s) {
    HPoint a = testutil::random_point(1.5, rng);
    HPoint b = testutil::random_point(1.5, rng);
    HPoint c = testutil::random_point(1.5, rng);
    Isometry g = compose(rotation(2 * M_PI * rng.u()), translation_x(2.0 * rng.u() - 1.0));
    double before = triangle_area(a, b, c);
    double after = triangle_area(apply(g, a), apply(g, b), apply(g, c));
    CHECK(std::abs(before - after) < 1e-11);
  }
}

TEST_CASE("hyperbolic law of sines") {
  Rng rng(17);
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    HPoint x = testutil::random_point(2.0, rng);
    HPoint y = testutil::random_point(2.0, rng);
    HPoint z = testutil::random_point(2.0, rng);
    double a = dist(y, z), b = dist(x, z), c = dist(x, y);
    if (std::min({a, b, c}) < 1e-3) continue;
    double sa = std::sin(angle(log_map(x, y), log_map(x, z))) / std::sinh(a);
    double sb = std::sin(angle(log_map(y, z), log_map(y, x))) / std::sinh(b);
    double sc = std::sin(angle(log_map(z, x), log_map(z, y))) / std::sinh(c);
    worst = std::max({worst, std::abs(sa - sb), std::abs(sb - sc)});
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("comparison inequalities with strictness on fat triples") {
  Rng rng(18);
  for (int s = 0; s < 10000; ++s) {
    HPoint x = testutil::random_point(2.0, rng);
    HPoint y = testutil::random_point(2.0, rng);
    HPoint z = testutil::random_point(2.0, rng);
    double lhs1 = TangentVec(z, log_map(z, x).v - log_map(z, y).v).norm();
    CHECK(lhs1 <= dist(x, y) + 1e-12);
    double lhs2 = tdot(log_map(x, y), log_map(x, z)) + tdot(log_map(y, x), log_map(y, z));
    double d = dist(x, y);
    CHECK(lhs2 >= d * d - 1e-12);
    Eigen::Matrix3d vol;
    vol.col(0) = x.c;
    vol.col(1) = y.c;
    vol.col(2) = z.c;
    if (std::abs(vol.determinant()) > 1e-6 && d > 1e-3) {
      CHECK(lhs1 < dist(x, y));
      CHECK(lhs2 > d * d);
    }
  }
}

TEST_CASE("angle-deficit area against side-length area and Monte Carlo") {
  Rng rng(19);
  // the side-length formula is an independent route; they must agree tightly
  for (int s = 0; s < 200; ++s) {
    HPoint a = testutil::random_point(1.5, rng);
    HPoint b = testutil::random_point(1.5, rng);
    HPoint c = testutil::random_point(1.5, rng);
    double defect = triangle_area(a, b, c);
    double s1 = dist(a, b), s2 = dist(b, c), s3 = dist(a, c);
    double lh = 4.0 * std::atan(std::sqrt(std::max(
                    std::tanh((s1 + s2 + s3) / 4) * std::tanh((s2 + s3 - s1) / 4) *
                        std::tanh((s1 + s3 - s2) / 4) * std::tanh((s1 + s2 - s3) / 4),
                    0.0)));
    CHECK(std::abs(defect - lh) < 1e-11);
  }
  // Monte Carlo quadrature in the Klein model: dA = dx dy / (1-x^2-y^2)^{3/2}
  Rng mc(20);
  for (int s = 0; s < 10; ++s) {
    HPoint pts[3];
    do {
      for (auto& p : pts) p = testutil::random_point(1.5, mc);
    } while (triangle_area(pts[0], pts[1], pts[2]) < 0.05);
    double kx[3], ky[3];
    for (int k = 0; k < 3; ++k) {
      kx[k] = pts[k].c[0] / pts[k].c[2];
      ky[k] = pts[k].c[1] / pts[k].c[2];
    }
    double ux = kx[1] - kx[0], uy = ky[1] - ky[0];
    double vx = kx[2] - kx[0], vy = ky[2] - ky[0];
    double euclid = 0.5 * std::abs(ux * vy - uy * vx);
    const int N = 200000;
    double sum = 0.0;
    for (int k = 0; k < N; ++k) {
      double r1 = mc.u(), r2 = mc.u();
      if (r1 + r2 > 1) {
        r1 = 1 - r1;
        r2 = 1 - r2;
      }
      double px = kx[0] + r1 * ux + r2 * vx;
      double py = ky[0] + r1 * uy + r2 * vy;
      sum += std::pow(1.0 - px * px - py * py, -1.5);
    }
    double mc_area = euclid * sum / N;
    double defect = triangle_area(pts[0], pts[1], pts[2]);
    CHECK(std::abs(mc_area - defect) / defect < 1e-2);
  }
}

TEST_CASE("isometry operations") {
  Rng rng(21);
  HPoint p = testutil::random_point(2.0, rng);
  CHECK((apply(Isometry(), p).c - p.c).cwiseAbs().maxCoeff() < 1e-15);

  for (int s = 0; s < 200; ++s) {
    Isometry g = compose(compose(rotation(2 * M_PI * rng.u()), translation_x(rng.u())),
                         rotation(2 * M_PI * rng.u()));
    HPoint a = testutil::random_point(2.0, rng);
    HPoint b = testutil::random_point(2.0, rng);
    CHECK(dist(apply(g, a), apply(g, b)) == doctest::Approx(dist(a, b)).epsilon(1e-12));
    CHECK((compose(g, inverse(g)).m - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-10);
  }

  // project: idempotent, repairs drift, rejects sheet swaps
  Isometry g = compose(rotation(0.3), translation_x(1.1));
  Mat3 drifted = g.m;
  drifted(0, 1) += 3e-7;
  Isometry fixed = project(Isometry(drifted));
  CHECK(isometry_defect(fixed) < 1e-12);
  CHECK((project(fixed).m - fixed.m).cwiseAbs().maxCoeff() < 1e-14);
  Mat3 swap = Mat3::Identity();
  swap(1, 1) = -1;
  swap(2, 2) = -1;  // J-orthogonal, det 1, lower sheet
  CHECK_THROWS_AS(project(Isometry(swap)), NotOrthochronousError);
}

TEST_CASE("apply_tangent keeps tangency and norm") {
  Rng rng(22);
  for (int s = 0; s < 100; ++s) {
    Isometry g = compose(rotation(2 * M_PI * rng.u()), translation_x(rng.u()));
    HPoint p = testutil::random_point(1.5, rng);
    TangentVec v = testutil::random_unit_tangent(p, rng);
    TangentVec w = apply_tangent(g, v);
    CHECK(std::abs(mdot(w.v, w.base.c)) < 1e-13);
    CHECK(w.norm() == doctest::Approx(v.norm()).epsilon(1e-12));
  }
}
