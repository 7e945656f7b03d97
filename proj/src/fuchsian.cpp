#include "hyptutte/fuchsian.hpp"

#include <cctype>
#include <cmath>

namespace hyptutte {

namespace {

using LVec = Eigen::Matrix<long double, 3, 1>;
using LMat = Eigen::Matrix<long double, 3, 3>;

const long double kPi = std::acos(-1.0L);

LMat lrot(long double th) {
  LMat m = LMat::Identity();
  long double c = std::cos(th), s = std::sin(th);
  m(0, 0) = c;
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = c;
  return m;
}

LMat lrot_about(const LVec& x, long double phi) {
  LMat cross;
  cross << 0, -x[2], x[1], x[2], 0, -x[0], -x[1], x[0], 0;
  LMat j = LMat::Identity();
  j(2, 2) = -1.0L;
  LMat k = j * cross;
  return LMat::Identity() + std::sin(phi) * k + (1.0L - std::cos(phi)) * (k * k);
}

LMat linv(const LMat& g) {
  LMat j = LMat::Identity();
  j(2, 2) = -1.0L;
  return j * g.transpose() * j;
}

}  // namespace

Word word_inverse(const Word& w) {
  Word out;
  out.t.reserve(w.t.size());
  for (auto it = w.t.rbegin(); it != w.t.rend(); ++it) out.t.push_back(-*it);
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  for (int tok : b.t) {
    if (!out.t.empty() && out.t.back() == -tok)
      out.t.pop_back();
    else
      out.t.push_back(tok);
  }
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.t.empty()) return "e";
  std::string s;
  for (int tok : w.t) {
    int k = std::abs(tok) - 1;  // 0-based over a1,b1,a2,b2,...
    char letter = (k % 2 == 0) ? 'a' : 'b';
    if (tok < 0) letter = char(std::toupper(letter));
    s += letter;
    s += std::to_string(k / 2 + 1);
  }
  return s;
}

Word word_from_string(const std::string& s, int genus) {
  Word w;
  if (s == "e") return w;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i++];
    bool inv = std::isupper(static_cast<unsigned char>(c));
    char letter = char(std::tolower(static_cast<unsigned char>(c)));
    if (letter != 'a' && letter != 'b')
      throw ParseError("bad generator letter in word: " + s);
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ParseError("missing generator index in word: " + s);
    int idx = std::stoi(s.substr(i, j - i));
    if (idx < 1 || idx > genus) throw ParseError("generator index out of range: " + s);
    i = j;
    int tok = 2 * (idx - 1) + (letter == 'b' ? 2 : 1);
    w.t.push_back(inv ? -tok : tok);
  }
  return w;
}

SurfaceGroup SurfaceGroup::regular(int genus) {
  if (genus < 2) throw GenusTooSmallError("regular_group: genus must be >= 2");
  SurfaceGroup g;
  g.genus_ = genus;
  g.base_ = origin();
  const int n = 4 * genus;
  const long double R = std::acosh(1.0L / (std::tan(kPi / n) * std::tan(kPi / n)));
  const long double rA = std::acosh(1.0L / std::tan(kPi / n));  // apothem
  g.circumradius_ = double(R);

  auto theta = [&](int j) { return 2.0L * kPi * j / n; };
  for (int k = 0; k < n; ++k) {
    LVec v;
    v << std::sinh(R) * std::cos(theta(k)), std::sinh(R) * std::sin(theta(k)),
        std::cosh(R);
    g.polygon_.push_back(HPoint(v.cast<double>()));
    LVec m;
    m << std::sinh(rA) * std::cos(theta(k) + kPi / n),
        std::sinh(rA) * std::sin(theta(k) + kPi / n), std::cosh(rA);
    g.midpoints_.push_back(HPoint(m.cast<double>()));
  }

  // Core: rotation by the corner angle -2pi/n about the vertex on the x-axis.
  LVec vx;
  vx << std::sinh(R), 0.0L, std::cosh(R);
  const LMat core = lrot_about(vx, -2.0L * kPi / n);

  // a_{m+1} maps side 4m+2 onto side 4m; b_{m+1} maps side 4m+1 onto 4m+3.
  // Pairing with target side k, source side k' is Rot(th_k) core Rot(-th_{k'+1}).
  for (int m = 0; m < genus; ++m) {
    LMat a = lrot(theta(4 * m)) * core * lrot(-theta(4 * m + 3));
    LMat b = lrot(theta(4 * m + 3)) * core * lrot(-theta(4 * m + 2));
    g.base_generators_.push_back(Isometry(a.cast<double>()));
    g.base_generators_.push_back(Isometry(b.cast<double>()));
    g.generators_.push_back(Isometry(a.cast<double>()));
    g.generators_.push_back(Isometry(b.cast<double>()));
    g.generators_.push_back(Isometry(linv(a).cast<double>()));
    g.generators_.push_back(Isometry(linv(b).cast<double>()));
    g.pairing_.push_back({4 * m + 2, 4 * m});          // a
    g.pairing_.push_back({4 * m + 1, 4 * m + 3});      // b
    g.pairing_.push_back({4 * m, 4 * m + 2});          // a^-1
    g.pairing_.push_back({4 * m + 3, 4 * m + 1});      // b^-1
  }
  return g;
}

const Isometry& SurfaceGroup::generator(int signed_token) const {
  int k = std::abs(signed_token) - 1;
  int m = k / 2, which = k % 2;
  int idx = 4 * m + which + (signed_token < 0 ? 2 : 0);
  return generators_[size_t(idx)];
}

std::pair<int, int> SurfaceGroup::pairing_sides(int list_index) const {
  return pairing_[size_t(list_index)];
}

Isometry SurfaceGroup::eval(const Word& w) const {
  LMat p = LMat::Identity();
  for (int tok : w.t) {
    const Isometry& g = base_generators_[size_t(std::abs(tok) - 1)];
    LMat m = g.m.cast<long double>();
    p = p * (tok > 0 ? m : linv(m));
  }
  Isometry out(p.cast<double>());
  return w.t.size() > 2 ? project(out) : out;
}

double SurfaceGroup::relator_residual() const {
  LMat p = LMat::Identity();
  for (int m = 0; m < genus_; ++m) {
    LMat a = base_generators_[size_t(2 * m)].m.cast<long double>();
    LMat b = base_generators_[size_t(2 * m + 1)].m.cast<long double>();
    p = p * a * b * linv(a) * linv(b);
  }
  return double((p - LMat::Identity()).cwiseAbs().maxCoeff());
}

double SurfaceGroup::corner_angle_sum() const {
  const int n = sides();
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    const HPoint& v = polygon_[size_t(k)];
    s += angle(log_map(v, polygon_[size_t((k + 1) % n)]),
               log_map(v, polygon_[size_t((k + n - 1) % n)]));
  }
  return s;
}

SurfaceGroup SurfaceGroup::with_generator(int list_index, const Isometry& g) const {
  SurfaceGroup out = *this;
  out.generators_[size_t(list_index)] = g;
  return out;
}

ReduceResult reduce(const SurfaceGroup& group, const HPoint& p) {
  ReduceResult res{p, Isometry(), Word{}};
  double d = dist(res.q, group.base());
  const int ng = 2 * group.genus();
  for (;;) {
    int best = 0;
    double best_d = d;
    HPoint best_q;
    for (int tok = -ng; tok <= ng; ++tok) {
      if (tok == 0) continue;
      HPoint cand = apply(group.generator(tok), res.q);
      double cd = dist(cand, group.base());
      if (cd < best_d - 1e-13) {
        best_d = cd;
        best = tok;
        best_q = cand;
      }
    }
    if (best == 0) break;
    res.q = best_q;
    d = best_d;
    res.word = word_concat(Word{{best}}, res.word);
  }
  res.g = group.eval(res.word);
  return res;
}

SidePairingReport side_pairing_check(const SurfaceGroup& group) {
  SidePairingReport rep;
  const int n = group.sides();
  for (int idx = 0; idx < n; ++idx) {
    auto [src, tgt] = group.pairing_sides(idx);
    const Isometry& g = group.generators()[size_t(idx)];
    // g maps source side (corners src, src+1) onto target side reversed:
    // corner src+1 -> corner tgt, corner src -> corner tgt+1.
    const HPoint a = apply(g, group.polygon()[size_t((src + 1) % n)]);
    const HPoint b = apply(g, group.polygon()[size_t(src)]);
    double r = std::max(
        (a.c - group.polygon()[size_t(tgt)].c).cwiseAbs().maxCoeff(),
        (b.c - group.polygon()[size_t((tgt + 1) % n)].c).cwiseAbs().maxCoeff());
    rep.residual.push_back(r);
    rep.max_residual = std::max(rep.max_residual, r);
  }
  return rep;
}

}  // namespace hyptutte
