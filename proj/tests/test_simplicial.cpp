#include <doctest.h>

#include "hyptutte/meshing.hpp"
#include "hyptutte/simplicial.hpp"
#include "hyptutte/verify.hpp"

using namespace hyptutte;

TEST_CASE("tetrahedron is a valid sphere") {
  Complex c = tetrahedron();
  CHECK(validate(c).valid());
  CHECK(euler_char(c) == 2);
  CHECK(c.n() == 4);
  CHECK(c.edge_count() == 6);
  CHECK(c.face_count() == 4);
}

TEST_CASE("validate reports broken complexes") {
  // an edge in 3 faces
  Complex nonmanifold(5, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}, {1, 2, 4}});
  auto rep = validate(nonmanifold);
  CHECK(!rep.valid());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.find("NonManifoldEdge") != std::string::npos) found = true;
  CHECK(found);

  // flipped face breaks orientation consistency
  Complex flipped(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 2, 3}});
  rep = validate(flipped);
  CHECK(!rep.valid());
  found = false;
  for (const auto& v : rep.violations)
    if (v.find("InconsistentOrientation") != std::string::npos) found = true;
  CHECK(found);

  // degenerate and duplicate faces
  CHECK(!validate(Complex(3, {{0, 1, 1}})).valid());
  Complex dup(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}, {2, 1, 3}});
  rep = validate(dup);
  found = false;
  for (const auto& v : rep.violations)
    if (v.find("DuplicateFace") != std::string::npos) found = true;
  CHECK(found);

  // two disjoint tetrahedra are not connected
  Complex two(8, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2},
                  {4, 5, 6}, {4, 6, 7}, {4, 7, 5}, {5, 7, 6}});
  rep = validate(two);
  found = false;
  for (const auto& v : rep.violations)
    if (v.find("NotConnected") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("randomized mutations of a valid mesh are rejected") {
  auto group = std::make_shared<SurfaceGroup>(SurfaceGroup::regular(2));
  GeodesicMapping m = builtin_mesh(group);
  const Complex& c = *m.complex;
  REQUIRE(validate(c).valid());

  for (int fi = 0; fi < c.face_count(); fi += 7) {
    // face flip
    auto faces = c.faces();
    std::swap(faces[size_t(fi)][0], faces[size_t(fi)][1]);
    CHECK(!validate(Complex(c.n(), faces)).valid());
    // face removal exposes non-manifold edges
    faces = c.faces();
    faces.erase(faces.begin() + fi);
    CHECK(!validate(Complex(c.n(), faces)).valid());
  }
}

TEST_CASE("builtin genus-2 mesh combinatorics") {
  auto group = std::make_shared<SurfaceGroup>(SurfaceGroup::regular(2));
  GeodesicMapping m = builtin_mesh(group);
  const Complex& c = *m.complex;
  CHECK(validate(c).valid());
  CHECK(c.face_count() == 96);  // 16 cone triangles x 6
  CHECK(c.n() == 46);
  CHECK(c.edge_count() == 144);
  CHECK(euler_char(c) == -2);
  CHECK(check_cocycle(m).max_residual < 1e-9);
  CHECK(check_involution(m).max_residual == 0.0);
  for (int fi = 0; fi < c.face_count(); ++fi) CHECK(orientation(m, fi) == 1);
}

TEST_CASE("builtin genus-3 mesh combinatorics") {
  auto group = std::make_shared<SurfaceGroup>(SurfaceGroup::regular(3));
  GeodesicMapping m = builtin_mesh(group);
  CHECK(validate(*m.complex).valid());
  CHECK(m.complex->face_count() == 144);
  CHECK(euler_char(*m.complex) == -4);
  CHECK(check_cocycle(m).max_residual < 1e-9);
}

TEST_CASE("subdivision quadruples faces and keeps structure") {
  auto group = std::make_shared<SurfaceGroup>(SurfaceGroup::regular(2));
  GeodesicMapping m = builtin_mesh(group);
  GeodesicMapping s = subdivide(m);
  CHECK(validate(*s.complex).valid());
  CHECK(s.complex->face_count() == 4 * m.complex->face_count());
  CHECK(euler_char(*s.complex) == euler_char(*m.complex));
  CHECK(check_cocycle(s).max_residual < 1e-9);
  CHECK(check_involution(s).max_residual == 0.0);
  // old vertex lifts are unchanged
  for (int i = 0; i < m.complex->n(); ++i)
    CHECK((s.lifts[size_t(i)].c - m.lifts[size_t(i)].c).cwiseAbs().maxCoeff() == 0.0);
  // twice more, chi preserved
  GeodesicMapping s2 = subdivide(s);
  CHECK(euler_char(*s2.complex) == -2);
  CHECK(check_cocycle(s2).max_residual < 1e-9);
  CHECK(validate(*s2.complex).valid());
}

TEST_CASE("subdivision rejects degenerate edges") {
  auto group = std::make_shared<SurfaceGroup>(SurfaceGroup::regular(2));
  GeodesicMapping m = builtin_mesh(group);
  // collapse one edge by moving a lift onto its neighbor's edge image
  const auto& e = m.complex->edges()[0];
  m.lifts[size_t(e[0])] =
      apply(m.labels.at(m.complex->dir_id(e[0], e[1])).iso, m.lifts[size_t(e[1])]);
  CHECK_THROWS_AS(subdivide(m), DegenerateEdgeError);
}
