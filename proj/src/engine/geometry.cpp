#include "tessparam/engine/geometry.hpp"

#include "tessparam/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace tessparam::engine {

namespace bmp = boost::multiprecision;

Vec3& Vec3::operator+=(const Vec3& o) {
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

Vec3& Vec3::operator-=(const Vec3& o) {
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

std::strong_ordering Vec3::operator<=>(const Vec3& o) const {
  for (int i = 0; i < 3; ++i) {
    if ((*this)[i] < o[i]) return std::strong_ordering::less;
    if (o[i] < (*this)[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::array<double, 3> Vec3::approx() const {
  return {x.convert_to<double>(), y.convert_to<double>(), z.convert_to<double>()};
}

Q dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Vec3 floor(const Vec3& v) {
  return {Q(floor_rational(v.x)), Q(floor_rational(v.y)), Q(floor_rational(v.z))};
}

Vec3 frac(const Vec3& v) { return v - floor(v); }

Vec3 primitive(const Vec3& v) {
  Integer l = 1;
  for (int i = 0; i < 3; ++i) l = bmp::lcm(l, bmp::denominator(v[i]));
  Integer c[3];
  Integer g = 0;
  for (int i = 0; i < 3; ++i) {
    c[i] = bmp::numerator(v[i]) * (l / bmp::denominator(v[i]));
    g = bmp::gcd(g, c[i]);
  }
  if (g == 0) throw std::logic_error("primitive of the zero vector");
  return {Q(c[0] / g), Q(c[1] / g), Q(c[2] / g)};
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << rational_to_string(v.x) << ", " << rational_to_string(v.y) << ", "
            << rational_to_string(v.z) << ')';
}

namespace {

int sgn(const Q& q) { return q.sign(); }

// Counter-clockwise order of coplanar points around `normal`.
std::vector<int> order_around(const std::vector<Vec3>& pts, std::vector<int> idx, const Vec3& normal) {
  Vec3 c;
  for (int i : idx) c += pts[i];
  c = Q(1, static_cast<long>(idx.size())) * c;
  Vec3 u = pts[idx[0]] - c;
  Vec3 w = cross(normal, u);
  struct Key {
    Q a, b;
  };
  std::map<int, Key> keys;
  for (int i : idx) keys[i] = {dot(pts[i] - c, u), dot(pts[i] - c, w)};
  auto half = [](const Key& k) { return (k.b < 0 || (k.b == 0 && k.a < 0)) ? 1 : 0; };
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    const Key& p = keys[i];
    const Key& q = keys[j];
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return p.a * q.b - p.b * q.a > 0;
  });
  return idx;
}

double norm1(const std::array<double, 3>& v) { return std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]); }

}  // namespace

ConvexPolytope ConvexPolytope::hull(std::vector<Vec3> pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw NonConvexCell("a cell needs at least four apices");
  {
    std::vector<Vec3> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw NonConvexCell("repeated apex in cell");
  }

  ConvexPolytope poly;
  std::vector<std::vector<char>> on_plane;
  auto known = [&](int i, int j, int k) {
    for (const auto& s : on_plane)
      if (s[i] && s[j] && s[k]) return true;
    return false;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (known(i, j, k)) continue;
        Vec3 nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (nrm.is_zero()) continue;
        nrm = primitive(nrm);
        Q d = dot(nrm, pts[i]);
        bool pos = false, neg = false;
        std::vector<char> zero(n, 0);
        for (int m = 0; m < n && !(pos && neg); ++m) {
          int s = sgn(dot(nrm, pts[m]) - d);
          if (s > 0) pos = true;
          else if (s < 0) neg = true;
          else zero[m] = 1;
        }
        if (pos && neg) continue;
        if (!pos && !neg) throw NonConvexCell("cell apices are coplanar");
        if (pos) {
          nrm = -nrm;
          d = -d;
        }
        std::vector<int> idx;
        for (int m = 0; m < n; ++m)
          if (zero[m]) idx.push_back(m);
        poly.facets_.push_back({nrm, d, order_around(pts, idx, nrm)});
        on_plane.push_back(std::move(zero));
      }
    }
  }

  std::vector<int> uses(n, 0);
  for (const auto& f : poly.facets_) {
    const auto& c = f.corners;
    const size_t m = c.size();
    for (size_t a = 0; a < m; ++a) {
      const Vec3& p = pts[c[a]];
      const Vec3& q = pts[c[(a + 1) % m]];
      const Vec3& r = pts[c[(a + 2) % m]];
      if (sgn(dot(cross(q - p, r - q), f.normal)) <= 0) {
        std::ostringstream msg;
        msg << "point " << q << " is not an apex of its cell";
        throw NonConvexCell(msg.str());
      }
      ++uses[c[a]];
    }
  }
  for (int m = 0; m < n; ++m) {
    if (uses[m] < 3) {
      std::ostringstream msg;
      msg << "point " << pts[m] << " is not an apex of its cell";
      throw NonConvexCell(msg.str());
    }
  }

  std::map<std::pair<int, int>, std::vector<int>> sides;
  for (int f = 0; f < static_cast<int>(poly.facets_.size()); ++f) {
    const auto& c = poly.facets_[f].corners;
    for (size_t a = 0; a < c.size(); ++a) {
      int u = c[a], v = c[(a + 1) % c.size()];
      sides[{std::min(u, v), std::max(u, v)}].push_back(f);
    }
  }
  for (const auto& [key, fs] : sides) {
    if (fs.size() != 2) throw NonConvexCell("cell boundary is not a closed surface");
    poly.ridges_.push_back({key.first, key.second, fs[0], fs[1]});
  }
  poly.apices_ = std::move(pts);
  poly.finish();
  return poly;
}

ConvexPolytope ConvexPolytope::from_halfspaces(const std::vector<std::array<Q, 4>>& hs) {
  const int m = static_cast<int>(hs.size());
  std::set<Vec3> points;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        Vec3 a{hs[i][0], hs[i][1], hs[i][2]};
        Vec3 b{hs[j][0], hs[j][1], hs[j][2]};
        Vec3 c{hs[k][0], hs[k][1], hs[k][2]};
        Vec3 bc = cross(b, c);
        Q det = dot(a, bc);
        if (det == 0) continue;
        // Cramer's rule for the three bounding planes.
        Vec3 p = Q(1) / det * (hs[i][3] * bc + hs[j][3] * cross(c, a) + hs[k][3] * cross(a, b));
        bool inside = true;
        for (const auto& h : hs) {
          if (h[0] * p.x + h[1] * p.y + h[2] * p.z > h[3]) {
            inside = false;
            break;
          }
        }
        if (inside) points.insert(p);
      }
    }
  }
  return hull({points.begin(), points.end()});
}

void ConvexPolytope::finish() {
  center_ = Vec3{};
  lo_ = hi_ = apices_.front();
  for (const auto& p : apices_) {
    center_ += p;
    for (int i = 0; i < 3; ++i) {
      if (p[i] < lo_[i]) lo_[i] = p[i];
      if (hi_[i] < p[i]) hi_[i] = p[i];
    }
  }
  center_ = Q(1, static_cast<long>(apices_.size())) * center_;
  volume_ = 0;
  approx_planes_.clear();
  for (const auto& f : facets_) {
    const auto& c = f.corners;
    for (size_t a = 1; a + 1 < c.size(); ++a) {
      Vec3 p = apices_[c[0]] - center_, q = apices_[c[a]] - center_, r = apices_[c[a + 1]] - center_;
      volume_ += dot(p, cross(q, r));
    }
    auto n = f.normal.approx();
    approx_planes_.push_back({n[0], n[1], n[2], f.offset.convert_to<double>()});
  }
  volume_ /= 6;
}

std::vector<Vec3> ConvexPolytope::facet_polygon(int f) const {
  std::vector<Vec3> out;
  for (int i : facets_[f].corners) out.push_back(apices_[i]);
  return out;
}

Location ConvexPolytope::locate(const Vec3& p) const {
  auto pa = p.approx();
  double scale = norm1(pa) + 1;
  for (const auto& h : approx_planes_) {
    double s = h[0] * pa[0] + h[1] * pa[1] + h[2] * pa[2] - h[3];
    double tol = 1e-9 * ((std::abs(h[0]) + std::abs(h[1]) + std::abs(h[2])) * scale + std::abs(h[3]));
    if (s > tol) return {};
  }
  std::vector<int> zero;
  for (int f = 0; f < static_cast<int>(facets_.size()); ++f) {
    int s = sgn(dot(facets_[f].normal, p) - facets_[f].offset);
    if (s > 0) return {};
    if (s == 0) zero.push_back(f);
  }
  if (zero.empty()) return {Where::interior, -1};
  if (zero.size() == 1) return {Where::facet, zero[0]};
  if (zero.size() == 2) {
    for (int r = 0; r < static_cast<int>(ridges_.size()); ++r) {
      const Ridge& rg = ridges_[r];
      if ((rg.left == zero[0] && rg.right == zero[1]) || (rg.left == zero[1] && rg.right == zero[0]))
        return {Where::ridge, r};
    }
    throw std::logic_error("point on two facets but no common ridge");
  }
  for (int a = 0; a < static_cast<int>(apices_.size()); ++a)
    if (apices_[a] == p) return {Where::apex, a};
  throw std::logic_error("point on three facets is not an apex");
}

ConvexPolytope ConvexPolytope::translated(const Vec3& t) const {
  ConvexPolytope out = *this;
  for (auto& p : out.apices_) p += t;
  for (auto& f : out.facets_) f.offset += dot(f.normal, t);
  out.center_ += t;
  out.lo_ += t;
  out.hi_ += t;
  auto ta = t.approx();
  for (auto& h : out.approx_planes_) h[3] += h[0] * ta[0] + h[1] * ta[1] + h[2] * ta[2];
  return out;
}

namespace {

struct Interval {
  Q lo, hi;
};

Interval project(const ConvexPolytope& c, const Vec3& axis) {
  Interval iv{dot(axis, c.apices()[0]), dot(axis, c.apices()[0])};
  for (const auto& p : c.apices()) {
    Q v = dot(axis, p);
    if (v < iv.lo) iv.lo = v;
    if (iv.hi < v) iv.hi = v;
  }
  return iv;
}

std::pair<double, double> project_approx(const std::vector<std::array<double, 3>>& pts, const std::array<double, 3>& a) {
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& p : pts) {
    double v = a[0] * p[0] + a[1] * p[1] + a[2] * p[2];
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

// 1: separated (possibly touching), 0: projections overlap.
bool separates(const ConvexPolytope& a, const ConvexPolytope& b, const std::vector<std::array<double, 3>>& pa,
               const std::vector<std::array<double, 3>>& pb, const Vec3& axis) {
  auto ax = axis.approx();
  auto [alo, ahi] = project_approx(pa, ax);
  auto [blo, bhi] = project_approx(pb, ax);
  double tol = 1e-9 * norm1(ax) * (1 + std::max({std::abs(alo), std::abs(ahi), std::abs(blo), std::abs(bhi)}));
  if (blo - ahi > tol || alo - bhi > tol) return true;
  if (blo - ahi < -tol && alo - bhi < -tol) return false;
  Interval ia = project(a, axis), ib = project(b, axis);
  return ia.hi <= ib.lo || ib.hi <= ia.lo;
}

}  // namespace

bool interiors_overlap(const ConvexPolytope& a, const ConvexPolytope& b) {
  std::vector<std::array<double, 3>> pa, pb;
  for (const auto& p : a.apices()) pa.push_back(p.approx());
  for (const auto& p : b.apices()) pb.push_back(p.approx());
  for (const auto& f : a.facets())
    if (separates(a, b, pa, pb, f.normal)) return false;
  for (const auto& f : b.facets())
    if (separates(a, b, pa, pb, f.normal)) return false;
  std::set<Vec3> tried;
  for (const auto& r : a.ridges()) {
    Vec3 da = a.apices()[r.b] - a.apices()[r.a];
    for (const auto& s : b.ridges()) {
      Vec3 axis = cross(da, b.apices()[s.b] - b.apices()[s.a]);
      if (axis.is_zero()) continue;
      axis = primitive(axis);
      if (!tried.insert(axis).second || tried.count(-axis)) continue;
      if (separates(a, b, pa, pb, axis)) return false;
    }
  }
  return true;
}

std::vector<Vec3> clip_polygon(const std::vector<Vec3>& subject, const std::vector<Vec3>& clipper,
                               const Vec3& normal) {
  std::vector<Vec3> poly = subject;
  const size_t m = clipper.size();
  for (size_t e = 0; e < m && !poly.empty(); ++e) {
    const Vec3& u = clipper[e];
    Vec3 inward = cross(normal, clipper[(e + 1) % m] - u);
    std::vector<Vec3> out;
    const size_t k = poly.size();
    for (size_t i = 0; i < k; ++i) {
      const Vec3& p = poly[i];
      const Vec3& q = poly[(i + 1) % k];
      Q sp = dot(inward, p - u), sq = dot(inward, q - u);
      if (sp >= 0) out.push_back(p);
      if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) out.push_back(p + (sp / (sp - sq)) * (q - p));
    }
    poly = std::move(out);
  }
  // Drop repeated and collinear points.
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < poly.size(); ++i) {
      const Vec3& p = poly[(i + poly.size() - 1) % poly.size()];
      const Vec3& q = poly[i];
      const Vec3& r = poly[(i + 1) % poly.size()];
      if (q == p || cross(q - p, r - q).is_zero()) {
        poly.erase(poly.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  if (poly.size() < 3) poly.clear();
  return poly;
}

Vec3 area_vector(const std::vector<Vec3>& polygon) {
  Vec3 a;
  for (size_t i = 0; i < polygon.size(); ++i) a += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
  return a;
}

bool on_segment(const Vec3& p, const Vec3& a, const Vec3& b) {
  Vec3 d = b - a, v = p - a;
  if (!cross(v, d).is_zero()) return false;
  Q t = dot(v, d);
  return t >= 0 && t <= dot(d, d);
}

}  // namespace tessparam::engine
