#include "hyptutte/render.hpp"

#include <cmath>
#include <sstream>

namespace hyptutte {

namespace {

struct DiskPt {
  double x, y;
};

DiskPt to_disk(const HPoint& p) {
  return {p.c[0] / (1.0 + p.c[2]), p.c[1] / (1.0 + p.c[2])};
}

struct Canvas {
  double r;  // disk radius in px; disk center at (r+1, r+1)
  double px(double x) const { return r + 1.0 + r * x; }
  double py(double y) const { return r + 1.0 - r * y; }  // svg y is downward
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Exact geodesic arc between two disk points: the circle through both
// orthogonal to the unit circle; a straight segment through the center.
std::string edge_path(const Canvas& cv, DiskPt a, DiskPt b) {
  double cross = a.x * b.y - a.y * b.x;
  std::ostringstream d;
  if (std::abs(cross) < 1e-12) {  // collinear with the center
    d << "M " << fmt(cv.px(a.x)) << " " << fmt(cv.py(a.y)) << " L "
      << fmt(cv.px(b.x)) << " " << fmt(cv.py(b.y));
    return d.str();
  }
  // center c solves 2 c.a = |a|^2 + 1, 2 c.b = |b|^2 + 1.
  double ra = (a.x * a.x + a.y * a.y + 1.0) / 2.0;
  double rb = (b.x * b.x + b.y * b.y + 1.0) / 2.0;
  double cx = (ra * b.y - rb * a.y) / cross;
  double cy = (rb * a.x - ra * b.x) / cross;
  double radius = std::sqrt((a.x - cx) * (a.x - cx) + (a.y - cy) * (a.y - cy));
  // geodesic arc is the minor arc; sweep flag from the turning sense,
  // flipped once more because svg's y axis points down
  double turn = (a.x - cx) * (b.y - cy) - (a.y - cy) * (b.x - cx);
  int sweep = turn > 0 ? 0 : 1;
  d << "M " << fmt(cv.px(a.x)) << " " << fmt(cv.py(a.y)) << " A "
    << fmt(radius * cv.r) << " " << fmt(radius * cv.r) << " 0 0 " << sweep << " "
    << fmt(cv.px(b.x)) << " " << fmt(cv.py(b.y));
  return d.str();
}

void emit_path(std::ostringstream& os, const Canvas& cv, const char* cls,
               const HPoint& a, const HPoint& b, double width,
               const char* color) {
  os << "  <path class=\"" << cls << "\" d=\"" << edge_path(cv, to_disk(a), to_disk(b))
     << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << fmt(width)
     << "\"/>\n";
}

}  // namespace

void RenderStyle::check() const {
  if (!(radius_px > 0)) throw Error("render style: radius must be positive");
  if (translate_dist < 0) throw Error("render style: translate distance must be >= 0");
}

std::string render_svg(const GeodesicMapping& m, const RenderStyle& style) {
  style.check();
  const Complex& c = *m.complex;
  const SurfaceGroup& g = *m.group;
  Canvas cv{style.radius_px};
  double size = 2.0 * (style.radius_px + 1.0);

  std::ostringstream os;
  os.precision(10);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << size << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " "
     << size << "\">\n";
  os << "  <circle cx=\"" << fmt(cv.px(0)) << "\" cy=\"" << fmt(cv.py(0))
     << "\" r=\"" << fmt(style.radius_px)
     << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // translate copies of the mesh within the requested distance of the base
  std::vector<Isometry> copies;
  if (style.translate_dist > 0) {
    std::vector<Isometry> frontier{Isometry()};
    copies.push_back(Isometry());
    auto seen = [&](const Isometry& cand) {
      for (const auto& t : copies)
        if ((t.m - cand.m).cwiseAbs().maxCoeff() < 1e-6) return true;
      return false;
    };
    while (!frontier.empty()) {
      std::vector<Isometry> next;
      for (const auto& f : frontier)
        for (int tok = -2 * g.genus(); tok <= 2 * g.genus(); ++tok) {
          if (tok == 0) continue;
          Isometry cand = project(compose(f, g.generator(tok)));
          if (dist(apply(cand, g.base()), g.base()) > style.translate_dist) continue;
          if (seen(cand)) continue;
          copies.push_back(cand);
          next.push_back(cand);
        }
      frontier = std::move(next);
    }
    for (size_t t = 1; t < copies.size(); ++t) {
      for (int e = 0; e < c.edge_count(); ++e) {
        const auto& uv = c.edges()[size_t(e)];
        HPoint a = apply(copies[t], m.lifts[size_t(uv[0])]);
        HPoint b = apply(copies[t], apply(m.labels.at(2 * e).iso, m.lifts[size_t(uv[1])]));
        emit_path(os, cv, "translate", a, b, 0.5 * style.stroke_width, "#9999bb");
      }
    }
  }

  for (int e = 0; e < c.edge_count(); ++e) {
    const auto& uv = c.edges()[size_t(e)];
    HPoint b = apply(m.labels.at(2 * e).iso, m.lifts[size_t(uv[1])]);
    emit_path(os, cv, "edge", m.lifts[size_t(uv[0])], b, style.stroke_width, "#1a1a88");
  }

  if (style.draw_polygon) {
    const auto& poly = g.polygon();
    for (int k = 0; k < g.sides(); ++k)
      emit_path(os, cv, "polygon", poly[size_t(k)], poly[size_t((k + 1) % g.sides())],
                1.5 * style.stroke_width, "#cc2222");
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hyptutte
