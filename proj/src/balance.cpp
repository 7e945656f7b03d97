#include "hyptutte/balance.hpp"

#include <cmath>
#include <random>

namespace hyptutte {

namespace {

struct Field {
  std::vector<Vec3> r;   // residue per vertex
  double mu = 0.0;       // max |r_i|/W_i
  double energy = 0.0;   // 1/4 sum_dir w_d l_d^2
};

Field residues(const Complex& c, const DeckLabels& labels,
               const std::vector<HPoint>& lifts, const Weights& w,
               const std::vector<double>& W) {
  Field f;
  f.r.assign(size_t(c.n()), Vec3::Zero());
  for (int i = 0; i < c.n(); ++i) {
    Vec3 acc = Vec3::Zero();
    for (int j : c.neighbors(i)) {
      int d = c.dir_id(i, j);
      TangentVec v = log_map(lifts[size_t(i)],
                             apply(labels.at(d).iso, lifts[size_t(j)]));
      acc += w.at(d) * v.v;
      double l2 = mdot(v.v, v.v);
      f.energy += 0.25 * w.at(d) * (l2 > 0 ? l2 : 0.0);
    }
    f.r[size_t(i)] = acc;
    double rn = TangentVec(lifts[size_t(i)], acc).norm();
    f.mu = std::max(f.mu, rn / W[size_t(i)]);
  }
  return f;
}

std::vector<double> vertex_weights(const Complex& c, const Weights& w) {
  std::vector<double> W(size_t(c.n()), 0.0);
  for (int i = 0; i < c.n(); ++i)
    for (int j : c.neighbors(i)) W[size_t(i)] += w.at(c.dir_id(i, j));
  return W;
}

std::vector<HPoint> sweep(const Complex& c, const std::vector<HPoint>& lifts,
                          const Field& f, const std::vector<double>& W,
                          double tau) {
  std::vector<HPoint> out(lifts.size());
  for (int i = 0; i < c.n(); ++i) {
    Vec3 stepv = (tau / W[size_t(i)]) * f.r[size_t(i)];
    out[size_t(i)] = exp_map(TangentVec(lifts[size_t(i)], stepv));
  }
  return out;
}

void reproject_labels(GeodesicMapping& m) {
  for (auto& lab : m.labels.l) lab.iso = project(lab.iso);
}

}  // namespace

void SolverConfig::check() const {
  if (!(tau > 0.0 && tau <= 1.0)) throw Error("solver config: tau must be in (0,1]");
  if (!(eps > 0.0)) throw Error("solver config: eps must be positive");
  if (max_iters < 1) throw Error("solver config: max_iters must be >= 1");
  if (!(backtrack > 0.0 && backtrack < 1.0))
    throw Error("solver config: backtrack must be in (0,1)");
}

std::pair<GeodesicMapping, double> step(const GeodesicMapping& m,
                                        const Weights& w, double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) throw Error("step: tau must be in (0,1]");
  check_positive(w);
  std::vector<double> W = vertex_weights(*m.complex, w);
  Field f = residues(*m.complex, m.labels, m.lifts, w, W);
  GeodesicMapping out = m;
  out.lifts = sweep(*m.complex, m.lifts, f, W, tau);
  return {std::move(out), f.mu};
}

SolveResult solve(const GeodesicMapping& m0, const Weights& w,
                  const SolverConfig& cfg) {
  cfg.check();
  check_positive(w);
  GeodesicMapping m = m0;
  const std::vector<double> W = vertex_weights(*m.complex, w);

  SolveTrace trace;
  Field f = residues(*m.complex, m.labels, m.lifts, w, W);
  trace.mu_history.push_back(f.mu);

  while (f.mu >= cfg.eps) {
    if (trace.sweeps >= cfg.max_iters) {
      trace.final_mu = f.mu;
      throw NoConvergenceError("solve: sweep budget exhausted at mu = " +
                                   std::to_string(f.mu),
                               trace);
    }
    double tau_eff = cfg.tau;
    for (;;) {
      std::vector<HPoint> cand = sweep(*m.complex, m.lifts, f, W, tau_eff);
      Field fc = residues(*m.complex, m.labels, cand, w, W);
      if (fc.mu <= f.mu) {
        m.lifts = std::move(cand);
        f = std::move(fc);
        break;
      }
      tau_eff *= cfg.backtrack;
      if (tau_eff < cfg.tau * 1e-14) {
        trace.final_mu = f.mu;
        throw NoConvergenceError(
            "solve: residual floor reached at mu = " + std::to_string(f.mu) +
                " (no step size decreases it)",
            trace);
      }
    }
    ++trace.sweeps;
    trace.accepted_tau.push_back(tau_eff);
    trace.mu_history.push_back(f.mu);
    if (cfg.record_energy) trace.energy_history.push_back(f.energy);
    if (trace.sweeps % 64 == 0) {
      m = normalize_anchor(m);
      reproject_labels(m);
      f = residues(*m.complex, m.labels, m.lifts, w, W);
    }
  }
  trace.converged = true;
  trace.final_mu = f.mu;
  return {std::move(m), std::move(trace)};
}

SolveResult solve_warm(const GeodesicMapping& prev, const Weights& w,
                       const SolverConfig& cfg) {
  return solve(prev, w, cfg);
}

GeodesicMapping perturb_lifts(const GeodesicMapping& m, double max_norm,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  GeodesicMapping out = m;
  for (auto& p : out.lifts) {
    Vec3 v(gauss(rng), gauss(rng), gauss(rng));
    v += mdot(v, p.c) * p.c;  // tangent projection (since <p,p> = -1)
    double n = TangentVec(p, v).norm();
    if (n < 1e-12) continue;
    v *= (max_norm * u(rng)) / n;
    p = exp_map(TangentVec(p, v));
  }
  return out;
}

}  // namespace hyptutte
