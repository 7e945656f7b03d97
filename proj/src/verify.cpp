#include "hyptutte/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "hyptutte/mvc.hpp"

namespace hyptutte {

int orientation(const GeodesicMapping& m, int face) {
  const auto& f = m.complex->faces()[size_t(face)];
  TangentVec u = edge_vector(m, f[0], f[1]);
  TangentVec v = edge_vector(m, f[0], f[2]);
  if (u.is_zero() || v.is_zero() || edge_vector(m, f[1], f[2]).is_zero())
    throw DegenerateFaceError("orientation: degenerate face " +
                              std::to_string(face));
  return oriented_side(u, v);
}

std::vector<double> vertex_angle_sums(const GeodesicMapping& m) {
  const Complex& c = *m.complex;
  std::vector<double> sum(size_t(c.n()), 0.0);
  for (int fi = 0; fi < c.face_count(); ++fi) {
    auto th = corner_angles(m, fi);
    const auto& f = c.faces()[size_t(fi)];
    for (int k = 0; k < 3; ++k) sum[size_t(f[size_t(k)])] += th[size_t(k)];
  }
  for (auto& s : sum) s = std::abs(s - 2.0 * M_PI);
  return sum;
}

double area_from_side_lengths(double a, double b, double c) {
  double s = 0.5 * (a + b + c);
  double t = std::tanh(s / 2) * std::tanh((s - a) / 2) * std::tanh((s - b) / 2) *
             std::tanh((s - c) / 2);
  return 4.0 * std::atan(std::sqrt(std::max(t, 0.0)));
}

GaussBonnetReport gauss_bonnet(const GeodesicMapping& m) {
  const Complex& c = *m.complex;
  GaussBonnetReport rep;
  rep.face_residual.reserve(size_t(c.face_count()));
  for (int fi = 0; fi < c.face_count(); ++fi) {
    auto th = corner_angles(m, fi);
    const auto& f = c.faces()[size_t(fi)];
    double sum = th[0] + th[1] + th[2];
    double area = area_from_side_lengths(edge_length(m, f[0], f[1]),
                                         edge_length(m, f[1], f[2]),
                                         edge_length(m, f[2], f[0]));
    double r = std::abs(sum + area - M_PI);
    rep.face_residual.push_back(r);
    rep.max_face_residual = std::max(rep.max_face_residual, r);
    rep.total_area += M_PI - sum;
  }
  rep.total_area_residual =
      std::abs(rep.total_area - 2.0 * M_PI * std::abs(euler_char(c)));
  return rep;
}

std::string EmbeddingReport::to_text() const {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific;
  os << "verdict: " << (pass ? "pass" : "fail") << "\n";
  os << "faces: " << faces << "\n";
  os << "degenerate_faces: " << degenerate_faces.size() << "\n";
  os << "flipped_faces: " << flipped_faces.size() << "\n";
  os << "max_vertex_angle_residual: " << max_vertex_residual << "\n";
  os << "max_face_gauss_bonnet_residual: " << max_face_gb_residual << "\n";
  os << "total_area: " << total_area << "\n";
  os << "total_area_residual: " << total_area_residual << "\n";
  os << "overlapping_face_pairs: " << overlaps.size() << "\n";
  auto list = [&os](const char* key, const std::vector<int>& v) {
    if (v.empty()) return;
    os << key << ":";
    for (int x : v) os << " " << x;
    os << "\n";
  };
  list("degenerate", degenerate_faces);
  list("flipped", flipped_faces);
  return os.str();
}

EmbeddingReport embedding_report(const GeodesicMapping& m, bool paranoid) {
  const Complex& c = *m.complex;
  EmbeddingReport rep;
  rep.faces = c.face_count();
  rep.orientation_sign.assign(size_t(c.face_count()), 0);
  for (int fi = 0; fi < c.face_count(); ++fi) {
    try {
      int s = orientation(m, fi);
      rep.orientation_sign[size_t(fi)] = s;
      if (s <= 0) rep.flipped_faces.push_back(fi);
    } catch (const DegenerateFaceError&) {
      rep.degenerate_faces.push_back(fi);
    }
  }
  if (rep.degenerate_faces.empty()) {
    rep.vertex_residual = vertex_angle_sums(m);
    for (double r : rep.vertex_residual)
      rep.max_vertex_residual = std::max(rep.max_vertex_residual, r);
    GaussBonnetReport gb = gauss_bonnet(m);
    rep.face_gb_residual = std::move(gb.face_residual);
    rep.max_face_gb_residual = gb.max_face_residual;
    rep.total_area = gb.total_area;
    rep.total_area_residual = gb.total_area_residual;
  }
  if (paranoid && rep.degenerate_faces.empty()) rep.overlaps = overlap_scan(m);
  rep.pass = rep.degenerate_faces.empty() && rep.flipped_faces.empty() &&
             rep.max_vertex_residual < 1e-9 && rep.total_area_residual < 1e-8 &&
             rep.overlaps.empty();
  return rep;
}

namespace {

struct KleinTri {
  double x[3], y[3];
};

KleinTri to_klein(const HPoint& a, const HPoint& b, const HPoint& c) {
  KleinTri t;
  const HPoint* p[3] = {&a, &b, &c};
  for (int k = 0; k < 3; ++k) {
    t.x[k] = p[k]->c[0] / p[k]->c[2];
    t.y[k] = p[k]->c[1] / p[k]->c[2];
  }
  // shrink slightly toward the centroid so shared edges do not count
  double cx = (t.x[0] + t.x[1] + t.x[2]) / 3.0;
  double cy = (t.y[0] + t.y[1] + t.y[2]) / 3.0;
  for (int k = 0; k < 3; ++k) {
    t.x[k] = cx + (t.x[k] - cx) * (1.0 - 1e-9);
    t.y[k] = cy + (t.y[k] - cy) * (1.0 - 1e-9);
  }
  return t;
}

// Separating axis test for two triangles in the plane.
bool tris_overlap(const KleinTri& a, const KleinTri& b) {
  const KleinTri* tri[2] = {&a, &b};
  for (int s = 0; s < 2; ++s) {
    const KleinTri& t = *tri[size_t(s)];
    const KleinTri& o = *tri[size_t(1 - s)];
    for (int e = 0; e < 3; ++e) {
      double nx = -(t.y[(e + 1) % 3] - t.y[e]);
      double ny = t.x[(e + 1) % 3] - t.x[e];
      double tmin = 1e300, tmax = -1e300, omin = 1e300, omax = -1e300;
      for (int k = 0; k < 3; ++k) {
        double pt = nx * t.x[k] + ny * t.y[k];
        double po = nx * o.x[k] + ny * o.y[k];
        tmin = std::min(tmin, pt);
        tmax = std::max(tmax, pt);
        omin = std::min(omin, po);
        omax = std::max(omax, po);
      }
      if (tmax <= omin || omax <= tmin) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::pair<int, int>> overlap_scan(const GeodesicMapping& m) {
  const Complex& c = *m.complex;
  const SurfaceGroup& g = *m.group;

  double rmax = 0.0;
  for (const auto& p : m.lifts) rmax = std::max(rmax, dist(p, g.base()));
  double lmax = 0.0;
  for (int e = 0; e < c.edge_count(); ++e) {
    const auto& uv = c.edges()[size_t(e)];
    lmax = std::max(lmax, edge_length(m, uv[0], uv[1]));
  }
  const double cutoff = 2.0 * (rmax + lmax) + 0.5;

  // group elements with d(gamma o, o) <= cutoff, by breadth-first products
  std::vector<Isometry> translates{Isometry()};
  std::vector<Isometry> frontier{Isometry()};
  auto seen = [&](const Isometry& cand) {
    for (const auto& t : translates)
      if ((t.m - cand.m).cwiseAbs().maxCoeff() < 1e-6) return true;
    return false;
  };
  while (!frontier.empty()) {
    std::vector<Isometry> next;
    for (const auto& f : frontier) {
      for (int tok = -2 * g.genus(); tok <= 2 * g.genus(); ++tok) {
        if (tok == 0) continue;
        Isometry cand = project(compose(f, g.generator(tok)));
        if (dist(apply(cand, g.base()), g.base()) > cutoff) continue;
        if (seen(cand)) continue;
        translates.push_back(cand);
        next.push_back(cand);
      }
    }
    frontier = std::move(next);
  }

  // anchored lifted triangles
  std::vector<std::array<HPoint, 3>> lifted(size_t(c.face_count()));
  for (int fi = 0; fi < c.face_count(); ++fi) {
    const auto& f = c.faces()[size_t(fi)];
    lifted[size_t(fi)] = {
        m.lifts[size_t(f[0])],
        apply(m.labels.at(c.dir_id(f[0], f[1])).iso, m.lifts[size_t(f[1])]),
        apply(m.labels.at(c.dir_id(f[0], f[2])).iso, m.lifts[size_t(f[2])])};
  }

  std::vector<std::pair<int, int>> bad;
  for (int i = 0; i < c.face_count(); ++i) {
    KleinTri ti = to_klein(lifted[size_t(i)][0], lifted[size_t(i)][1],
                           lifted[size_t(i)][2]);
    for (int j = i; j < c.face_count(); ++j) {
      for (const auto& t : translates) {
        bool is_id = (t.m - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-9;
        if (i == j && is_id) continue;
        KleinTri tj = to_klein(apply(t, lifted[size_t(j)][0]),
                               apply(t, lifted[size_t(j)][1]),
                               apply(t, lifted[size_t(j)][2]));
        if (tris_overlap(ti, tj)) {
          bad.push_back({i, j});
          break;
        }
      }
    }
  }
  return bad;
}

std::string Cat0Report::to_text() const {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific;
  os << "samples: " << samples << "\n";
  os << "max_violation_difference_bound: " << max_violation_1 << "\n";
  os << "max_violation_inner_product_bound: " << max_violation_2 << "\n";
  os << "collinear_equality_residual: " << collinear_equality_residual << "\n";
  os << "near_degenerate_slack: " << near_degenerate_slack << "\n";
  return os.str();
}

Cat0Report cat0_oracle(long samples, std::uint64_t seed) {
  if (samples < 1) throw Error("cat0_oracle: samples must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const HPoint o = origin();
  auto rand_point = [&](double radius) {
    double th = 2.0 * M_PI * u(rng);
    double rr = radius * std::sqrt(u(rng));
    return exp_map(TangentVec(o, Vec3(rr * std::cos(th), rr * std::sin(th), 0.0)));
  };

  Cat0Report rep;
  rep.samples = samples;
  for (long s = 0; s < samples; ++s) {
    // pairwise distances stay below 5 (disk of radius 2 about the base)
    HPoint x = rand_point(2.0), y = rand_point(2.0), z = rand_point(2.0);
    TangentVec zx = log_map(z, x), zy = log_map(z, y);
    double lhs1 = TangentVec(z, zx.v - zy.v).norm();
    rep.max_violation_1 = std::max(rep.max_violation_1, lhs1 - dist(x, y));
    double lhs2 = tdot(log_map(x, y), log_map(x, z)) +
                  tdot(log_map(y, x), log_map(y, z));
    double d2 = dist(x, y);
    rep.max_violation_2 = std::max(rep.max_violation_2, d2 * d2 - lhs2);
  }

  // equality on collinear triples (z on the geodesic through x, y)
  const Vec3 e1(1.0, 0.0, 0.0);
  for (double t : {-1.2, -0.4, 0.3, 0.9, 2.1}) {
    HPoint x = exp_map(TangentVec(o, -1.5 * e1));
    HPoint y = exp_map(TangentVec(o, 0.8 * e1));
    HPoint z = exp_map(TangentVec(o, t * e1));
    double gap = std::abs(TangentVec(z, log_map(z, x).v - log_map(z, y).v).norm() -
                          dist(x, y));
    rep.collinear_equality_residual = std::max(rep.collinear_equality_residual, gap);
  }

  // strictness just off the geodesic
  {
    HPoint x = exp_map(TangentVec(o, -1.5 * e1));
    HPoint y = exp_map(TangentVec(o, 0.8 * e1));
    HPoint z = exp_map(TangentVec(o, Vec3(0.3, 1e-3, 0.0)));
    rep.near_degenerate_slack =
        dist(x, y) - TangentVec(z, log_map(z, x).v - log_map(z, y).v).norm();
  }
  return rep;
}

}  // namespace hyptutte
