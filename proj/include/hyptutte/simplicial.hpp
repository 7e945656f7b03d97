#pragma once

// Combinatorial triangulations of closed orientable surfaces.

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyptutte {

class Complex {
 public:
  Complex() = default;
  // Edges are derived from the faces. Tolerates invalid input (validate()
  // reports problems); the directed-edge index is usable only when valid.
  Complex(int n, std::vector<std::array<int, 3>> faces);

  int n() const { return n_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }

  int edge_count() const { return int(edges_.size()); }
  int face_count() const { return int(faces_.size()); }
  int dir_edge_count() const { return 2 * int(edges_.size()); }

  // Directed edge id: 2*e for (min->max), 2*e+1 for (max->min). -1 if absent.
  int dir_id(int i, int j) const;
  int rev(int dir) const { return dir ^ 1; }
  std::pair<int, int> dir_endpoints(int dir) const;

  // Face containing the directed edge (i,j); -1 if none recorded.
  int face_of(int i, int j) const;

  // Neighbors of i in increasing index order (fixed summation order).
  const std::vector<int>& neighbors(int i) const { return nbr_[size_t(i)]; }

 private:
  int n_ = 0;
  std::vector<std::array<int, 3>> faces_;
  std::vector<std::array<int, 2>> edges_;
  std::unordered_map<std::int64_t, int> edge_index_;
  std::vector<int> face_of_dir_;
  std::vector<std::vector<int>> nbr_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
  std::string to_text() const;
};

// Reports every violated closed-oriented-surface invariant.
ValidationReport validate(const Complex& c);

int euler_char(const Complex& c);

// Convenience for tests: boundary of the tetrahedron (sphere, chi = 2).
Complex tetrahedron();

}  // namespace hyptutte
