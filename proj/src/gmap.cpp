#include "hyptutte/gmap.hpp"

#include <cmath>
#include <random>

namespace hyptutte {

Weights uniform_weights(const Complex& c) {
  Weights w;
  w.w.assign(size_t(c.dir_edge_count()), 1.0);
  return w;
}

Weights random_weights(const Complex& c, double cap, std::uint64_t seed) {
  if (cap < 1.0) throw Error("random_weights: cap must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Weights w;
  w.w.resize(size_t(c.dir_edge_count()));
  for (auto& x : w.w) x = std::exp(std::log(cap) * u(rng));
  return w;
}

double lambda_w(const Weights& w) {
  double lo = w.w.front(), hi = w.w.front();
  for (double x : w.w) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return hi / lo;
}

void check_positive(const Weights& w) {
  for (double x : w.w)
    if (!(x > 0.0)) throw Error("weights must be positive");
}

TangentVec edge_vector(const GeodesicMapping& m, int i, int j) {
  int d = m.complex->dir_id(i, j);
  return log_map(m.lifts[size_t(i)],
                 apply(m.labels.at(d).iso, m.lifts[size_t(j)]));
}

double edge_length(const GeodesicMapping& m, int i, int j) {
  int d = m.complex->dir_id(i, j);
  return dist(m.lifts[size_t(i)], apply(m.labels.at(d).iso, m.lifts[size_t(j)]));
}

TangentVec residue(const GeodesicMapping& m, const Weights& w, int i) {
  Vec3 r = Vec3::Zero();
  for (int j : m.complex->neighbors(i)) {
    int d = m.complex->dir_id(i, j);
    r += w.at(d) * edge_vector(m, i, j).v;
  }
  return TangentVec(m.lifts[size_t(i)], r);
}

double vertex_weight(const GeodesicMapping& m, const Weights& w, int i) {
  double s = 0.0;
  for (int j : m.complex->neighbors(i)) s += w.at(m.complex->dir_id(i, j));
  return s;
}

double max_normalized_residual(const GeodesicMapping& m, const Weights& w) {
  double mu = 0.0;
  for (int i = 0; i < m.complex->n(); ++i)
    mu = std::max(mu, residue(m, w, i).norm() / vertex_weight(m, w, i));
  return mu;
}

double energy(const GeodesicMapping& m, const Weights& w) {
  double e = 0.0;
  for (int ei = 0; ei < m.complex->edge_count(); ++ei) {
    const auto& uv = m.complex->edges()[size_t(ei)];
    double l = edge_length(m, uv[0], uv[1]);
    double sym = 0.5 * (w.w[size_t(2 * ei)] + w.w[size_t(2 * ei + 1)]);
    e += 0.5 * sym * l * l;
  }
  return e;
}

GeodesicMapping gauge(const GeodesicMapping& m, int i, const Isometry& b,
                      const Word& b_word) {
  GeodesicMapping out = m;
  out.lifts[size_t(i)] = apply(b, m.lifts[size_t(i)]);
  Isometry binv = inverse(b);
  Word binv_word = word_inverse(b_word);
  for (int j : m.complex->neighbors(i)) {
    int dij = m.complex->dir_id(i, j);
    int dji = m.complex->dir_id(j, i);
    out.labels.at(dij).iso = project(compose(b, m.labels.at(dij).iso));
    out.labels.at(dij).word = word_concat(b_word, m.labels.at(dij).word);
    out.labels.at(dji).iso = project(compose(m.labels.at(dji).iso, binv));
    out.labels.at(dji).word = word_concat(m.labels.at(dji).word, binv_word);
  }
  return out;
}

GeodesicMapping normalize_anchor(const GeodesicMapping& m) {
  ReduceResult r = reduce(*m.group, m.lifts[0]);
  if (r.word.empty()) return m;
  return gauge(m, 0, r.g, r.word);
}

double distance_X(const GeodesicMapping& a, const GeodesicMapping& b,
                  double label_tol) {
  if (a.complex->n() != b.complex->n() ||
      a.complex->edge_count() != b.complex->edge_count() ||
      a.complex->faces() != b.complex->faces())
    throw LabelMismatchError("distance_X: different complexes");
  for (int d = 0; d < a.complex->dir_edge_count(); ++d) {
    double diff = (a.labels.at(d).iso.m - b.labels.at(d).iso.m)
                      .cwiseAbs()
                      .maxCoeff();
    if (diff > label_tol)
      throw LabelMismatchError("distance_X: labels differ on a directed edge");
  }
  double dmax = 0.0;
  for (int i = 0; i < a.complex->n(); ++i)
    dmax = std::max(dmax, dist(a.lifts[size_t(i)], b.lifts[size_t(i)]));
  return dmax;
}

ResidualReport check_cocycle(const GeodesicMapping& m) {
  ResidualReport rep;
  rep.residual.reserve(size_t(m.complex->face_count()));
  for (const auto& f : m.complex->faces()) {
    Isometry p = compose(
        compose(m.labels.at(m.complex->dir_id(f[0], f[1])).iso,
                m.labels.at(m.complex->dir_id(f[1], f[2])).iso),
        m.labels.at(m.complex->dir_id(f[2], f[0])).iso);
    double r = (p.m - Mat3::Identity()).cwiseAbs().maxCoeff();
    rep.residual.push_back(r);
    rep.max_residual = std::max(rep.max_residual, r);
  }
  return rep;
}

ResidualReport check_involution(const GeodesicMapping& m) {
  ResidualReport rep;
  rep.residual.reserve(size_t(m.complex->edge_count()));
  for (int e = 0; e < m.complex->edge_count(); ++e) {
    double r = (m.labels.at(2 * e + 1).iso.m -
                inverse(m.labels.at(2 * e).iso).m)
                   .cwiseAbs()
                   .maxCoeff();
    rep.residual.push_back(r);
    rep.max_residual = std::max(rep.max_residual, r);
  }
  return rep;
}

}  // namespace hyptutte
