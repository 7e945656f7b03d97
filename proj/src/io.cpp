#include "hyptutte/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hyptutte {

namespace {

std::string next_line(std::istream& is, const char* what) {
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw ParseError(std::string("unexpected end of file, expected ") + what);
}

template <typename... Args>
void scan(const std::string& line, const char* fmt, const char* what, Args... args) {
  if (std::sscanf(line.c_str(), fmt, args...) != int(sizeof...(args)))
    throw ParseError(std::string("malformed ") + what + " line: " + line);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open for reading: " + path);
  return is;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_mapping(std::ostream& os, const GeodesicMapping& m, bool with_lifts) {
  const Complex& c = *m.complex;
  os << "hyptutte-mesh v1\n";
  os << "genus " << m.group->genus() << "\n";
  os << "vertices " << c.n() << "\n";
  os << "edges " << c.dir_edge_count() << "\n";
  for (int d = 0; d < c.dir_edge_count(); ++d) {
    auto [i, j] = c.dir_endpoints(d);
    os << i << " " << j << " " << word_to_string(m.labels.at(d).word) << "\n";
  }
  os << "faces " << c.face_count() << "\n";
  for (const auto& f : c.faces()) os << f[0] << " " << f[1] << " " << f[2] << "\n";
  if (with_lifts) {
    os << "lifts\n";
    for (const auto& p : m.lifts)
      os << format_double(p.c[0]) << " " << format_double(p.c[1]) << " "
         << format_double(p.c[2]) << "\n";
  }
}

void write_mapping_file(const std::string& path, const GeodesicMapping& m,
                        bool with_lifts) {
  auto os = open_out(path);
  write_mapping(os, m, with_lifts);
  if (!os) throw IoError("write failed: " + path);
}

MappingFile read_mapping(std::istream& is) {
  if (next_line(is, "header") != "hyptutte-mesh v1")
    throw ParseError("not a hyptutte-mesh v1 file");
  int genus = 0, n = 0, ndir = 0, nf = 0;
  scan(next_line(is, "genus"), "genus %d", "genus", &genus);
  scan(next_line(is, "vertices"), "vertices %d", "vertices", &n);
  scan(next_line(is, "edges"), "edges %d", "edges", &ndir);

  auto group = std::make_shared<SurfaceGroup>(SurfaceGroup::regular(genus));

  struct RawEdge {
    int i, j;
    std::string word;
  };
  std::vector<RawEdge> raw;
  raw.reserve(size_t(ndir));
  for (int k = 0; k < ndir; ++k) {
    std::istringstream ls(next_line(is, "edge"));
    RawEdge e;
    if (!(ls >> e.i >> e.j >> e.word))
      throw ParseError("malformed directed edge line");
    raw.push_back(std::move(e));
  }
  scan(next_line(is, "faces"), "faces %d", "faces", &nf);
  std::vector<std::array<int, 3>> faces;
  faces.reserve(size_t(nf));
  for (int k = 0; k < nf; ++k) {
    std::array<int, 3> f{};
    scan(next_line(is, "face"), "%d %d %d", "face", &f[0], &f[1], &f[2]);
    faces.push_back(f);
  }

  MappingFile out;
  out.mapping.group = group;
  out.mapping.complex = std::make_shared<Complex>(n, faces);
  const Complex& c = *out.mapping.complex;
  if (c.dir_edge_count() != ndir)
    throw ParseError("edge count does not match the face combinatorics");
  out.mapping.labels.l.assign(size_t(ndir), Label{});
  std::vector<char> have(size_t(ndir), 0);
  for (const auto& e : raw) {
    int d = c.dir_id(e.i, e.j);
    if (d < 0) throw ParseError("edge line does not match any face edge");
    Word w = word_from_string(e.word, genus);
    out.mapping.labels.at(d) = Label{group->eval(w), w};
    have[size_t(d)] = 1;
  }
  for (char h : have)
    if (!h) throw ParseError("missing directed edge line");

  // optional lifts section
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line != "lifts") throw ParseError("unexpected line: " + line);
    for (int i = 0; i < n; ++i) {
      Vec3 v;
      scan(next_line(is, "lift"), "%lg %lg %lg", "lift", &v[0], &v[1], &v[2]);
      out.mapping.lifts.push_back(HPoint(v));
    }
    out.had_lifts = true;
    break;
  }
  if (!out.had_lifts)
    out.mapping.lifts.assign(size_t(n), group->base());
  return out;
}

MappingFile read_mapping_file(const std::string& path) {
  auto is = open_in(path);
  return read_mapping(is);
}

void write_weights(std::ostream& os, const Complex& c, const Weights& w) {
  os << "hyptutte-weights v1\n";
  for (int d = 0; d < c.dir_edge_count(); ++d) {
    auto [i, j] = c.dir_endpoints(d);
    os << i << " " << j << " " << format_double(w.at(d)) << "\n";
  }
}

void write_weights_file(const std::string& path, const Complex& c,
                        const Weights& w) {
  auto os = open_out(path);
  write_weights(os, c, w);
  if (!os) throw IoError("write failed: " + path);
}

Weights read_weights(std::istream& is, const Complex& c) {
  if (next_line(is, "header") != "hyptutte-weights v1")
    throw ParseError("not a hyptutte-weights v1 file");
  Weights w;
  w.w.assign(size_t(c.dir_edge_count()), 0.0);
  std::vector<char> have(size_t(c.dir_edge_count()), 0);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    int i, j;
    double v;
    scan(line, "%d %d %lg", "weight", &i, &j, &v);
    int d = c.dir_id(i, j);
    if (d < 0) throw ParseError("weight line for unknown edge: " + line);
    w.w[size_t(d)] = v;
    have[size_t(d)] = 1;
  }
  for (char h : have)
    if (!h) throw ParseError("weights file is missing directed edges");
  check_positive(w);
  return w;
}

Weights read_weights_file(const std::string& path, const Complex& c) {
  auto is = open_in(path);
  return read_weights(is, c);
}

void write_group(std::ostream& os, const SurfaceGroup& g) {
  os << "genus " << g.genus() << "\n";
  for (int k = 0; k < 4 * g.genus(); ++k) {
    // generator list order a1,b1,a1^-1,b1^-1,...: word tokens
    int m = k / 4, which = k % 4;
    int tok = 2 * m + (which % 2) + 1;
    if (which >= 2) tok = -tok;
    os << "gen " << word_to_string(Word{{tok}}) << "\n";
    const Mat3& mat = g.generators()[size_t(k)].m;
    for (int r = 0; r < 3; ++r)
      os << format_double(mat(r, 0)) << " " << format_double(mat(r, 1)) << " "
         << format_double(mat(r, 2)) << "\n";
  }
}

void write_group_file(const std::string& path, const SurfaceGroup& g) {
  auto os = open_out(path);
  write_group(os, g);
  if (!os) throw IoError("write failed: " + path);
}

SurfaceGroup read_group(std::istream& is) {
  int genus = 0;
  scan(next_line(is, "genus"), "genus %d", "genus", &genus);
  SurfaceGroup g = SurfaceGroup::regular(genus);
  for (int k = 0; k < 4 * genus; ++k) {
    std::istringstream ls(next_line(is, "gen"));
    std::string kw, word;
    if (!(ls >> kw >> word) || kw != "gen") throw ParseError("expected gen line");
    Mat3 mat;
    for (int r = 0; r < 3; ++r) {
      Vec3 row;
      scan(next_line(is, "matrix row"), "%lg %lg %lg", "matrix row", &row[0],
           &row[1], &row[2]);
      mat.row(r) = row;
    }
    Isometry rebuilt = g.eval(word_from_string(word, genus));
    if ((rebuilt.m - mat).cwiseAbs().maxCoeff() > 1e-9)
      throw ParseError("stored generator matrix disagrees with its word");
  }
  return g;
}

SurfaceGroup read_group_file(const std::string& path) {
  auto is = open_in(path);
  return read_group(is);
}

}  // namespace hyptutte
