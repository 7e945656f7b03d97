#include "hyptutte/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hyptutte {

namespace {
inline std::int64_t key(int i, int j) {
  return (std::int64_t(i) << 32) | std::uint32_t(j);
}
}  // namespace

Complex::Complex(int n, std::vector<std::array<int, 3>> faces)
    : n_(n), faces_(std::move(faces)) {
  std::set<std::array<int, 2>> eset;
  for (const auto& f : faces_) {
    for (int c = 0; c < 3; ++c) {
      int a = f[size_t(c)], b = f[size_t((c + 1) % 3)];
      if (a == b) continue;  // degenerate; validate() reports it
      eset.insert({std::min(a, b), std::max(a, b)});
    }
  }
  edges_.assign(eset.begin(), eset.end());
  for (int e = 0; e < int(edges_.size()); ++e)
    edge_index_[key(edges_[size_t(e)][0], edges_[size_t(e)][1])] = e;

  face_of_dir_.assign(size_t(2 * edges_.size()), -1);
  for (int fi = 0; fi < int(faces_.size()); ++fi) {
    const auto& f = faces_[size_t(fi)];
    for (int c = 0; c < 3; ++c) {
      int d = dir_id(f[size_t(c)], f[size_t((c + 1) % 3)]);
      if (d >= 0 && face_of_dir_[size_t(d)] < 0) face_of_dir_[size_t(d)] = fi;
    }
  }
  nbr_.assign(size_t(std::max(n_, 0)), {});
  for (const auto& e : edges_) {
    if (e[0] >= 0 && e[0] < n_ && e[1] >= 0 && e[1] < n_) {
      nbr_[size_t(e[0])].push_back(e[1]);
      nbr_[size_t(e[1])].push_back(e[0]);
    }
  }
  for (auto& v : nbr_) std::sort(v.begin(), v.end());
}

int Complex::dir_id(int i, int j) const {
  auto it = edge_index_.find(key(std::min(i, j), std::max(i, j)));
  if (it == edge_index_.end()) return -1;
  return 2 * it->second + (i < j ? 0 : 1);
}

std::pair<int, int> Complex::dir_endpoints(int dir) const {
  const auto& e = edges_[size_t(dir / 2)];
  return (dir % 2 == 0) ? std::make_pair(e[0], e[1]) : std::make_pair(e[1], e[0]);
}

int Complex::face_of(int i, int j) const {
  int d = dir_id(i, j);
  return d < 0 ? -1 : face_of_dir_[size_t(d)];
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  os << "violations: " << violations.size() << "\n";
  for (const auto& v : violations) os << v << "\n";
  return os.str();
}

ValidationReport validate(const Complex& c) {
  ValidationReport rep;
  auto add = [&](const std::string& s) { rep.violations.push_back(s); };

  std::set<std::array<int, 3>> face_sets;
  std::map<std::array<int, 2>, int> undirected_count;
  std::map<std::array<int, 2>, int> directed_count;

  for (int fi = 0; fi < c.face_count(); ++fi) {
    const auto& f = c.faces()[size_t(fi)];
    bool in_range = true;
    for (int v : f)
      if (v < 0 || v >= c.n()) in_range = false;
    if (!in_range) {
      add("VertexOutOfRange face " + std::to_string(fi));
      continue;
    }
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
      add("DegenerateFace face " + std::to_string(fi));
      continue;
    }
    std::array<int, 3> s = f;
    std::sort(s.begin(), s.end());
    if (!face_sets.insert(s).second)
      add("DuplicateFace face " + std::to_string(fi));
    for (int k = 0; k < 3; ++k) {
      int a = f[size_t(k)], b = f[size_t((k + 1) % 3)];
      ++undirected_count[{std::min(a, b), std::max(a, b)}];
      ++directed_count[{a, b}];
    }
  }

  for (const auto& e : c.edges()) {
    if (e[0] == e[1]) add("SelfLoop edge " + std::to_string(e[0]));
    auto it = undirected_count.find(e);
    int cnt = it == undirected_count.end() ? 0 : it->second;
    if (cnt != 2)
      add("NonManifoldEdge " + std::to_string(e[0]) + "-" + std::to_string(e[1]) +
          " in " + std::to_string(cnt) + " faces");
  }
  for (const auto& [de, cnt] : directed_count) {
    if (cnt > 1)
      add("InconsistentOrientation directed edge " + std::to_string(de[0]) + "->" +
          std::to_string(de[1]) + " in " + std::to_string(cnt) + " faces");
  }

  // connectivity over edges
  if (c.n() > 0) {
    std::vector<char> seen(size_t(c.n()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : c.neighbors(u)) {
        if (!seen[size_t(v)]) {
          seen[size_t(v)] = 1;
          ++reached;
          stack.push_back(v);
        }
      }
    }
    if (reached != c.n()) add("NotConnected");
  }
  return rep;
}

int euler_char(const Complex& c) {
  return c.n() - c.edge_count() + c.face_count();
}

Complex tetrahedron() {
  return Complex(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

}  // namespace hyptutte
