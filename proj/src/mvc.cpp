#include "hyptutte/mvc.hpp"

#include <cmath>

#include "hyptutte/verify.hpp"

namespace hyptutte {

std::array<double, 3> corner_angles(const GeodesicMapping& m, int face) {
  const auto& f = m.complex->faces()[size_t(face)];
  TangentVec v01 = edge_vector(m, f[0], f[1]);
  TangentVec v02 = edge_vector(m, f[0], f[2]);
  TangentVec v10 = edge_vector(m, f[1], f[0]);
  TangentVec v12 = edge_vector(m, f[1], f[2]);
  TangentVec v20 = edge_vector(m, f[2], f[0]);
  TangentVec v21 = edge_vector(m, f[2], f[1]);
  if (v01.is_zero() || v12.is_zero() || v20.is_zero())
    throw DegenerateFaceError("corner_angles: degenerate face " +
                              std::to_string(face));
  return {angle(v01, v02), angle(v12, v10), angle(v20, v21)};
}

double mvc_weight(double alpha, double beta, double len) {
  return (std::tan(alpha / 2.0) + std::tan(beta / 2.0)) / len;
}

Weights mvc(const GeodesicMapping& m) {
  const Complex& c = *m.complex;
  // corner angles per face, plus the embedding preconditions
  std::vector<std::array<double, 3>> th(size_t(c.face_count()));
  for (int fi = 0; fi < c.face_count(); ++fi) {
    try {
      th[size_t(fi)] = corner_angles(m, fi);
    } catch (const DegenerateFaceError&) {
      throw NotEmbeddedError("mvc: degenerate face " + std::to_string(fi));
    }
    if (orientation(m, fi) <= 0)
      throw NotEmbeddedError("mvc: flipped face " + std::to_string(fi));
  }
  auto corner_of = [&](int face, int v) {
    const auto& f = c.faces()[size_t(face)];
    for (int k = 0; k < 3; ++k)
      if (f[size_t(k)] == v) return th[size_t(face)][size_t(k)];
    throw Error("mvc: vertex not in face");
  };

  Weights w;
  w.w.assign(size_t(c.dir_edge_count()), 0.0);
  for (int d = 0; d < c.dir_edge_count(); ++d) {
    auto [i, j] = c.dir_endpoints(d);
    int f1 = c.face_of(i, j);
    int f2 = c.face_of(j, i);
    if (f1 < 0 || f2 < 0)
      throw NotEmbeddedError("mvc: directed edge without two adjacent faces");
    double alpha = corner_of(f1, i);
    double beta = corner_of(f2, i);
    double len = edge_length(m, i, j);
    w.w[size_t(d)] = mvc_weight(alpha, beta, len);
  }
  check_positive(w);
  return w;
}

Weights interpolate(const Weights& w0, const Weights& w1, double t,
                    bool log_space) {
  if (w0.w.size() != w1.w.size())
    throw Error("interpolate: weight vectors over different edge sets");
  Weights out;
  out.w.resize(w0.w.size());
  for (size_t k = 0; k < w0.w.size(); ++k) {
    out.w[k] = log_space
                   ? std::exp((1.0 - t) * std::log(w0.w[k]) + t * std::log(w1.w[k]))
                   : (1.0 - t) * w0.w[k] + t * w1.w[k];
  }
  return out;
}

MorphResult morph(const MorphPlan& plan) {
  if (plan.frames < 2) throw Error("morph: need at least 2 frames");
  // same homotopy class: distance_X performs the label comparison
  distance_X(plan.m0, plan.m1);
  if (!embedding_report(plan.m0).pass)
    throw NotEmbeddedError("morph: first endpoint fails the embedding report");
  if (!embedding_report(plan.m1).pass)
    throw NotEmbeddedError("morph: second endpoint fails the embedding report");

  Weights w0 = mvc(plan.m0);
  Weights w1 = mvc(plan.m1);
  MorphResult res;
  res.frames.reserve(size_t(plan.frames));
  const GeodesicMapping* start = &plan.m0;
  for (int k = 0; k < plan.frames; ++k) {
    double t = double(k) / double(plan.frames - 1);
    Weights wt = interpolate(w0, w1, t, plan.log_space);
    try {
      SolveResult r = solve_warm(*start, wt, plan.cfg);
      res.sweeps.push_back(r.trace.sweeps);
      res.frames.push_back(std::move(r.mapping));
    } catch (const NoConvergenceError& e) {
      throw NoConvergenceError("morph: frame " + std::to_string(k) + " at t=" +
                                   std::to_string(t) + ": " + e.what(),
                               e.trace);
    }
    if (!plan.cold_start) start = &res.frames.back();
  }
  return res;
}

}  // namespace hyptutte
