#include "hyptutte/meshing.hpp"

#include <cmath>
#include <map>

namespace hyptutte {

namespace {

HPoint geodesic_midpoint(const HPoint& a, const HPoint& b) {
  TangentVec v = log_map(a, b);
  return exp_map(TangentVec(a, 0.5 * v.v));
}

HPoint centroid3(const HPoint& a, const HPoint& b, const HPoint& c) {
  return project_point((a.c + b.c + c.c) / 3.0);
}

// Disk triangulation of the polygon with explicit positions, plus the
// ordered boundary chain of each side, then boundary gluing by the pairings.
struct QuotientBuilder {
  const SurfaceGroup& group;
  std::vector<HPoint> pos;                  // disk vertex positions
  std::vector<std::array<int, 3>> tris;     // disk faces, ccw
  std::vector<std::array<int, 2>> relations;  // pos[first] = g_tok * pos[second]
  std::vector<int> relation_tok;

  explicit QuotientBuilder(const SurfaceGroup& g) : group(g) {}

  int add(const HPoint& p) {
    pos.push_back(p);
    return int(pos.size()) - 1;
  }

  GeodesicMapping glue(std::shared_ptr<const SurfaceGroup> group_ptr) const {
    const int nd = int(pos.size());
    // adjacency of the identification graph, edges carry the generator token
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(nd));
    for (size_t r = 0; r < relations.size(); ++r) {
      int pp = relations[r][0], p = relations[r][1], tok = relation_tok[r];
      adj[size_t(p)].push_back({pp, tok});
      adj[size_t(pp)].push_back({p, -tok});
    }
    std::vector<int> quot(size_t(nd), -1);
    std::vector<Word> gw(static_cast<size_t>(nd));
    std::vector<HPoint> lifts;
    for (int root = 0; root < nd; ++root) {
      if (quot[size_t(root)] >= 0) continue;
      int qid = int(lifts.size());
      lifts.push_back(pos[size_t(root)]);
      quot[size_t(root)] = qid;
      std::vector<int> stack{root};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [w, tok] : adj[size_t(u)]) {
          if (quot[size_t(w)] >= 0) continue;
          quot[size_t(w)] = qid;
          gw[size_t(w)] = word_concat(Word{{tok}}, gw[size_t(u)]);
          stack.push_back(w);
        }
      }
    }

    std::vector<std::array<int, 3>> qfaces;
    qfaces.reserve(tris.size());
    for (const auto& t : tris)
      qfaces.push_back({quot[size_t(t[0])], quot[size_t(t[1])], quot[size_t(t[2])]});

    auto complex = std::make_shared<Complex>(int(lifts.size()), qfaces);
    GeodesicMapping m;
    m.group = group_ptr;
    m.complex = complex;
    m.lifts = lifts;
    m.labels.l.assign(size_t(complex->dir_edge_count()), Label{});

    std::vector<char> have(size_t(complex->edge_count()), 0);
    for (const auto& t : tris) {
      for (int c = 0; c < 3; ++c) {
        int p = t[size_t(c)], q = t[size_t((c + 1) % 3)];
        int i = quot[size_t(p)], j = quot[size_t(q)];
        // orient the stored copy to the canonical (min->max) direction
        if (i > j) {
          std::swap(p, q);
          std::swap(i, j);
        }
        Word w = word_concat(word_inverse(gw[size_t(p)]), gw[size_t(q)]);
        Isometry iso = group.eval(w);
        int d = complex->dir_id(i, j);
        int e = d / 2;
        if (!have[size_t(e)]) {
          have[size_t(e)] = 1;
          m.labels.at(d) = Label{iso, w};
          m.labels.at(d ^ 1) = Label{inverse(iso), word_inverse(w)};
        } else {
          double diff = (m.labels.at(d).iso.m - iso.m).cwiseAbs().maxCoeff();
          if (diff > 1e-8)
            throw Error("builtin_mesh: inconsistent label on a glued edge");
        }
      }
    }
    return m;
  }
};

}  // namespace

GeodesicMapping builtin_mesh(std::shared_ptr<const SurfaceGroup> group_ptr) {
  const SurfaceGroup& g = *group_ptr;
  const int n = g.sides();
  QuotientBuilder qb(g);

  int center = qb.add(g.base());
  std::vector<int> corner(static_cast<size_t>(n)), mid(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) corner[size_t(k)] = qb.add(g.polygon()[size_t(k)]);
  for (int k = 0; k < n; ++k) mid[size_t(k)] = qb.add(g.side_midpoints()[size_t(k)]);

  // cone triangles, ccw: (o, V_k, M_k), (o, M_k, V_{k+1})
  std::vector<std::array<int, 3>> cones;
  for (int k = 0; k < n; ++k) {
    cones.push_back({center, corner[size_t(k)], mid[size_t(k)]});
    cones.push_back({center, mid[size_t(k)], corner[size_t((k + 1) % n)]});
  }

  // one barycentric round inside the disk
  std::map<std::array<int, 2>, int> emid;
  auto midpoint_of = [&](int a, int b) {
    std::array<int, 2> key{std::min(a, b), std::max(a, b)};
    auto it = emid.find(key);
    if (it != emid.end()) return it->second;
    int id = qb.add(geodesic_midpoint(qb.pos[size_t(key[0])], qb.pos[size_t(key[1])]));
    emid.emplace(key, id);
    return id;
  };
  for (const auto& t : cones) {
    int f = qb.add(centroid3(qb.pos[size_t(t[0])], qb.pos[size_t(t[1])],
                             qb.pos[size_t(t[2])]));
    int mab = midpoint_of(t[0], t[1]);
    int mbc = midpoint_of(t[1], t[2]);
    int mca = midpoint_of(t[2], t[0]);
    qb.tris.push_back({t[0], mab, f});
    qb.tris.push_back({mab, t[1], f});
    qb.tris.push_back({t[1], mbc, f});
    qb.tris.push_back({mbc, t[2], f});
    qb.tris.push_back({t[2], mca, f});
    qb.tris.push_back({mca, t[0], f});
  }

  // boundary chains: side k is [V_k, b, M_k, b', V_{k+1}]
  auto chain = [&](int k) {
    int a = corner[size_t(k)], m = mid[size_t(k)], b = corner[size_t((k + 1) % n)];
    return std::array<int, 5>{a, midpoint_of(a, m), m, midpoint_of(m, b), b};
  };
  // Base generator tokens: a_{m+1} = +(2m+1) maps side 4m+2 onto 4m,
  // b_{m+1} = +(2m+2) maps side 4m+1 onto 4m+3.
  for (int m = 0; m < g.genus(); ++m) {
    struct P {
      int tok, src, tgt;
    };
    for (const P& p : {P{2 * m + 1, 4 * m + 2, 4 * m}, P{2 * m + 2, 4 * m + 1, 4 * m + 3}}) {
      auto src = chain(p.src), tgt = chain(p.tgt);
      for (int t = 0; t < 5; ++t) {
        // g maps the source chain reversed onto the target chain
        qb.relations.push_back({tgt[size_t(t)], src[size_t(4 - t)]});
        qb.relation_tok.push_back(p.tok);
      }
    }
  }
  return qb.glue(group_ptr);
}

GeodesicMapping subdivide(const GeodesicMapping& m) {
  const Complex& c = *m.complex;
  const int n = c.n();
  const int ne = c.edge_count();

  for (int e = 0; e < ne; ++e) {
    const auto& uv = c.edges()[size_t(e)];
    if (edge_length(m, uv[0], uv[1]) < kZeroVectorTol)
      throw DegenerateEdgeError("subdivide: degenerate edge " +
                                std::to_string(uv[0]) + "-" + std::to_string(uv[1]));
  }

  std::vector<HPoint> lifts = m.lifts;
  lifts.reserve(size_t(n + ne));
  for (int e = 0; e < ne; ++e) {
    const auto& uv = c.edges()[size_t(e)];
    const Label& lab = m.labels.at(2 * e);  // canonical u -> v direction
    lifts.push_back(geodesic_midpoint(m.lifts[size_t(uv[0])],
                                      apply(lab.iso, m.lifts[size_t(uv[1])])));
  }
  auto mid_id = [&](int i, int j) { return n + c.dir_id(i, j) / 2; };

  std::vector<std::array<int, 3>> faces;
  faces.reserve(size_t(4 * c.face_count()));
  for (const auto& f : c.faces()) {
    int m01 = mid_id(f[0], f[1]), m12 = mid_id(f[1], f[2]), m20 = mid_id(f[2], f[0]);
    faces.push_back({f[0], m01, m20});
    faces.push_back({m01, f[1], m12});
    faces.push_back({m20, m12, f[2]});
    faces.push_back({m01, m12, m20});
  }

  auto complex = std::make_shared<Complex>(n + ne, faces);
  GeodesicMapping out;
  out.group = m.group;
  out.complex = complex;
  out.lifts = std::move(lifts);
  out.labels.l.assign(size_t(complex->dir_edge_count()), Label{});
  std::vector<char> have(size_t(complex->edge_count()), 0);

  Label ident{};
  auto old_label = [&](int i, int j) -> Label {
    if (i == j) return ident;
    return m.labels.at(c.dir_id(i, j));
  };
  auto set_label = [&](int i, int j, const Label& lab) {
    int d = complex->dir_id(i, j);
    int e = d / 2;
    if (have[size_t(e)]) return;
    have[size_t(e)] = 1;
    out.labels.at(d) = lab;
    out.labels.at(d ^ 1) = Label{inverse(lab.iso), word_inverse(lab.word)};
  };

  for (const auto& f : c.faces()) {
    int v0 = f[0], v1 = f[1], v2 = f[2];
    // vertex -> edge-midpoint: label(v, m_e) = A(v, anchor(e))
    struct VM {
      int v, a, b;
    };
    for (const VM& x : {VM{v0, v0, v1}, VM{v1, v0, v1}, VM{v1, v1, v2},
                        VM{v2, v1, v2}, VM{v2, v2, v0}, VM{v0, v2, v0}}) {
      int u = std::min(x.a, x.b);
      set_label(x.v, mid_id(x.a, x.b), old_label(x.v, u));
    }
    // midpoint -> midpoint within the face, anchored at v0:
    // label(m_e, m_f) = A(anchor(e), v0) A(v0, anchor(f))
    struct MM {
      int a1, b1, a2, b2;
    };
    for (const MM& x : {MM{v0, v1, v1, v2}, MM{v1, v2, v2, v0}, MM{v2, v0, v0, v1}}) {
      int u1 = std::min(x.a1, x.b1), u2 = std::min(x.a2, x.b2);
      Label l1 = old_label(u1, v0), l2 = old_label(v0, u2);
      Label lab{project(compose(l1.iso, l2.iso)), word_concat(l1.word, l2.word)};
      set_label(mid_id(x.a1, x.b1), mid_id(x.a2, x.b2), lab);
    }
  }
  return out;
}

}  // namespace hyptutte
