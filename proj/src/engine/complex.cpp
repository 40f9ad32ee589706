#include "tessparam/engine/complex.hpp"

#include "tessparam/errors.hpp"
#include "tessparam/feasibility.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tessparam::engine {

namespace {

std::string describe(const Vec3& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Q midpoint_coord(const Q& a, const Q& b) { return (a + b) / 2; }

Vec3 midpoint(const Vec3& a, const Vec3& b) {
  return {midpoint_coord(a.x, b.x), midpoint_coord(a.y, b.y), midpoint_coord(a.z, b.z)};
}

// Integer translations t with box(cell) meeting box(other) + t, per axis.
std::array<std::pair<long, long>, 3> translation_range(const Vec3& lo, const Vec3& hi, const Vec3& olo,
                                                       const Vec3& ohi) {
  std::array<std::pair<long, long>, 3> r;
  for (int k = 0; k < 3; ++k) {
    r[k] = {ceil_rational(lo[k] - ohi[k]).convert_to<long>(), floor_rational(hi[k] - olo[k]).convert_to<long>()};
  }
  return r;
}

template <class F>
void for_each_translation(const std::array<std::pair<long, long>, 3>& r, F&& f) {
  for (long a = r[0].first; a <= r[0].second; ++a)
    for (long b = r[1].first; b <= r[1].second; ++b)
      for (long c = r[2].first; c <= r[2].second; ++c) f(Vec3{Q(a), Q(b), Q(c)});
}

bool lex_positive(const Vec3& t) { return t > Vec3{Q(0), Q(0), Q(0)}; }

}  // namespace

PeriodicComplex PeriodicComplex::load(const FundamentalDomain& domain) {
  PeriodicComplex cx;
  cx.domain_ = domain;
  cx.volume_ = lattice_volume(domain.lattice);
  if (cx.volume_ == 0) throw NotATessellation("lattice vectors are linearly dependent");
  if (domain.cells.empty()) throw NotATessellation("domain has no cells");

  // (1) cells and their face lattices, in lattice coordinates
  Q total = 0;
  for (const auto& cell : domain.cells) {
    std::vector<Vec3> pts;
    for (const auto& p : cell) pts.push_back(to_lattice(domain.lattice, p));
    CellRecord rec{ConvexPolytope::hull(std::move(pts)), {}, {}, 0};
    total += rec.shape.volume();
    cx.cells_.push_back(std::move(rec));
  }
  if (total != 1) {
    throw NotATessellation("cell volumes add up to " + rational_to_string(total) +
                           " lattice cells instead of 1");
  }
  const int nc = static_cast<int>(cx.cells_.size());

  // (2) neighbouring pairs, overlap certification and plates
  for (int i = 0; i < nc; ++i) {
    const ConvexPolytope& ci = cx.cells_[i].shape;
    for (int j = i; j < nc; ++j) {
      const ConvexPolytope& cj = cx.cells_[j].shape;
      for_each_translation(translation_range(ci.lo(), ci.hi(), cj.lo(), cj.hi()), [&](const Vec3& t) {
        if (i == j && !lex_positive(t)) return;
        ConvexPolytope other = cj.translated(t);
        if (interiors_overlap(ci, other)) {
          throw NotATessellation("cells " + std::to_string(i) + " and " + std::to_string(j) + " shifted by " +
                                 describe(t) + " overlap");
        }
        for (int f = 0; f < static_cast<int>(ci.facets().size()); ++f) {
          const Facet& ff = ci.facets()[f];
          for (int g = 0; g < static_cast<int>(other.facets().size()); ++g) {
            const Facet& fg = other.facets()[g];
            if (!(fg.normal == -ff.normal) || fg.offset != -ff.offset) continue;
            std::vector<Vec3> theirs = other.facet_polygon(g);
            std::reverse(theirs.begin(), theirs.end());
            std::vector<Vec3> poly = clip_polygon(ci.facet_polygon(f), theirs, ff.normal);
            if (!poly.empty()) cx.plates_.push_back({i, j, t, ff.normal, std::move(poly), {}, {}, {}, {}});
          }
        }
      });
    }
  }

  // (3) vertex classes: cell apices and plate corners modulo the lattice
  std::map<Vec3, int> vertex_id;
  auto add_vertex = [&](const Vec3& p) {
    Vec3 key = frac(p);
    if (vertex_id.emplace(key, static_cast<int>(cx.vertices_.size())).second) cx.vertices_.push_back({key});
  };
  for (const auto& c : cx.cells_)
    for (const auto& p : c.shape.apices()) add_vertex(p);
  for (const auto& pl : cx.plates_) {
    for (const auto& p : pl.corners) {
      add_vertex(p);
      const ConvexPolytope& a = cx.cells_[pl.cell].shape;
      const ConvexPolytope& b = cx.cells_[pl.other].shape;
      if (a.locate(p).where != Where::apex && b.locate(p - pl.shift).where != Where::apex)
        cx.non_apex_corners_.push_back("plate corner " + describe(p) + " between cells " +
                                       std::to_string(pl.cell) + " and " + std::to_string(pl.other));
    }
  }

  // (4) which vertex instances each closed cell holds
  for (auto& c : cx.cells_) {
    for (int v = 0; v < static_cast<int>(cx.vertices_.size()); ++v) {
      const Vec3& p = cx.vertices_[v].position;
      for_each_translation(translation_range(c.shape.lo(), c.shape.hi(), p, p), [&](const Vec3& t) {
        Vec3 q = p + t;
        Location loc = c.shape.locate(q);
        if (loc.where == Where::outside) return;
        if (loc.where == Where::interior)
          throw NotATessellation("vertex " + describe(q) + " lies inside a cell");
        c.vertices.push_back({v, q, loc});
      });
    }
  }

  // (5) edges: cell ridges split at every vertex on them
  std::map<Vec3, int> edge_id;
  for (auto& c : cx.cells_) {
    for (int r = 0; r < static_cast<int>(c.shape.ridges().size()); ++r) {
      const Ridge& rg = c.shape.ridges()[r];
      const Vec3& a = c.shape.apices()[rg.a];
      Vec3 dir = c.shape.apices()[rg.b] - a;
      std::vector<std::pair<Q, const CellVertex*>> on;
      for (const auto& cv : c.vertices) {
        bool hit = (cv.location.where == Where::ridge && cv.location.index == r) ||
                   (cv.location.where == Where::apex && (cv.location.index == rg.a || cv.location.index == rg.b));
        if (hit) on.emplace_back(dot(cv.position - a, dir), &cv);
      }
      std::sort(on.begin(), on.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (size_t k = 0; k + 1 < on.size(); ++k) {
        const CellVertex& u = *on[k].second;
        const CellVertex& w = *on[k + 1].second;
        Vec3 m = midpoint(u.position, w.position);
        Vec3 shift = floor(m);
        if (edge_id.emplace(m - shift, static_cast<int>(cx.edges_.size())).second)
          cx.edges_.push_back({u.vertex, w.vertex, u.position - shift, w.position - shift, false, 0});
      }
    }
  }

  // (6) plate boundaries, pi-edges and per-cell edge sets
  std::vector<std::set<Vec3>> cell_edges(nc);
  for (auto& pl : cx.plates_) {
    CellRecord& a = cx.cells_[pl.cell];
    const ConvexPolytope& b = cx.cells_[pl.other].shape;
    const size_t m = pl.corners.size();
    for (size_t k = 0; k < m; ++k) {
      const Vec3& u = pl.corners[k];
      const Vec3& w = pl.corners[(k + 1) % m];
      Vec3 dir = w - u;
      std::vector<std::pair<Q, const CellVertex*>> on;
      for (const auto& cv : a.vertices) {
        if (cv.position == w) continue;
        if (on_segment(cv.position, u, w)) on.emplace_back(dot(cv.position - u, dir), &cv);
      }
      std::sort(on.begin(), on.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (const auto& [key, cv] : on) {
        pl.boundary.push_back(cv->vertex);
        pl.boundary_points.push_back(cv->position);
        pl.boundary_is_corner.push_back(cv->position == u ? 1 : 0);
      }
    }
    // nothing may sit inside the plate
    Q level = dot(pl.normal, pl.corners[0]);
    for (const auto& cv : a.vertices) {
      if (dot(pl.normal, cv.position) != level) continue;
      bool strictly_inside = true;
      for (size_t k = 0; k < m && strictly_inside; ++k) {
        Vec3 inward = cross(pl.normal, pl.corners[(k + 1) % m] - pl.corners[k]);
        if (dot(inward, cv.position - pl.corners[k]) <= 0) strictly_inside = false;
      }
      if (strictly_inside) cx.plate_interior_.push_back("vertex " + describe(cv.position) + " inside a plate");
    }
    const size_t nb = pl.boundary_points.size();
    for (size_t k = 0; k < nb; ++k) {
      Vec3 mid = midpoint(pl.boundary_points[k], pl.boundary_points[(k + 1) % nb]);
      auto it = edge_id.find(frac(mid));
      if (it == edge_id.end()) {
        throw NotATessellation("plate side piece at " + describe(mid) + " is not covered by cell ridges");
      }
      EdgeRecord& e = cx.edges_[it->second];
      pl.edges.push_back(it->second);
      ++e.plates;
      if (a.shape.locate(mid).where == Where::facet || b.locate(mid - pl.shift).where == Where::facet) e.pi = true;
      cell_edges[pl.cell].insert(mid);
      cell_edges[pl.other].insert(mid - pl.shift);
    }
    ++a.plate_count;
    ++cx.cells_[pl.other].plate_count;
  }
  for (int i = 0; i < nc; ++i) cx.cells_[i].edge_midpoints.assign(cell_edges[i].begin(), cell_edges[i].end());
  return cx;
}

std::vector<VertexStats> vertex_stats(const PeriodicComplex& cx) {
  std::vector<VertexStats> out(cx.vertices().size());
  for (size_t v = 0; v < out.size(); ++v) {
    out[v].vertex = static_cast<int>(v);
    out[v].position = cx.vertices()[v].position;
  }
  for (const auto& e : cx.edges()) {
    for (int v : {e.from, e.to}) {
      ++out[v].edges;
      if (e.pi) ++out[v].pi_edges;
    }
  }
  for (const auto& c : cx.cells()) {
    for (const auto& cv : c.vertices) {
      if (cv.location.where == Where::facet) out[cv.vertex].hemi = 1;
      if (cv.location.where == Where::ridge) ++out[cv.vertex].ridge_interiors;
    }
  }
  for (const auto& pl : cx.plates())
    for (size_t k = 0; k < pl.boundary.size(); ++k)
      if (!pl.boundary_is_corner[k]) ++out[pl.boundary[k]].side_interiors;
  return out;
}

MeasuredParams measure(const PeriodicComplex& cx) {
  MeasuredParams m;
  ElementCounts& n = m.counts;
  n.vertices = static_cast<long>(cx.vertices().size());
  n.edges = static_cast<long>(cx.edges().size());
  n.plates = static_cast<long>(cx.plates().size());
  n.cells = static_cast<long>(cx.cells().size());

  long vz = 0, ez = 0, pz = 0, vp = 0, ridge_in = 0, side_in = 0;
  for (const auto& c : cx.cells()) {
    vz += static_cast<long>(c.vertices.size());
    ez += static_cast<long>(c.edge_midpoints.size());
    pz += c.plate_count;
    n.apices += static_cast<long>(c.shape.apices().size());
    n.ridges += static_cast<long>(c.shape.ridges().size());
    n.facets += static_cast<long>(c.shape.facets().size());
    for (const auto& f : c.shape.facets()) n.facet_sides += static_cast<long>(f.corners.size());
  }
  for (const auto& pl : cx.plates()) {
    vp += static_cast<long>(pl.boundary.size());
    n.plate_sides += static_cast<long>(pl.corners.size());
  }
  for (const auto& e : cx.edges())
    if (e.pi) ++n.pi_edges;
  for (const auto& s : vertex_stats(cx)) {
    n.hemi_vertices += s.hemi;
    ridge_in += s.ridge_interiors;
    side_in += s.side_interiors;
  }

  Scalar vol(cx.volume());
  m.volume = vol;
  const Scalar V(n.vertices), E(n.edges), P(n.plates), Z(n.cells);
  DerivedSummary& s = m.summary;
  TessParams& p = s.params;
  p.lambda_V = V / vol;
  p.mu_VE = 2 * E / V;
  p.mu_EP = Scalar(vp) / E;
  p.mu_PV = Scalar(vp) / P;
  p.xi = Scalar(n.pi_edges) / E;
  p.kappa = Scalar(n.hemi_vertices) / V;
  p.psi = Scalar(ridge_in) / V;
  p.tau = Scalar(side_in) / V;

  s.lambda_V = p.lambda_V;
  s.lambda_E = E / vol;
  s.lambda_P = P / vol;
  s.lambda_Z = Z / vol;
  const Scalar count[4] = {V, E, P, Z};
  // incidence totals between classes
  Scalar inc[4][4];
  inc[kV][kE] = 2 * E;
  inc[kV][kP] = Scalar(vp);
  inc[kV][kZ] = Scalar(vz);
  inc[kE][kP] = Scalar(vp);
  inc[kE][kZ] = Scalar(ez);
  inc[kP][kZ] = Scalar(pz);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (x == y) s.adjacency[x][y] = 1;
      else s.adjacency[x][y] = (x < y ? inc[x][y] : inc[y][x]) / count[x];
    }
  }
  s.mu_VE_pi = 2 * Scalar(n.pi_edges) / V;
  s.nu0 = Scalar(n.apices) / Z;
  s.nu1 = Scalar(n.ridges) / Z;
  s.nu2 = Scalar(n.facets) / Z;
  s.nu_FS = Scalar(n.facet_sides) / Scalar(n.facets);
  s.nu_PS = Scalar(n.plate_sides) / P;
  s.lambda_Z2 = Scalar(n.facets) / vol;
  s.lambda_Z1 = Scalar(n.ridges) / vol;
  s.lambda_Z0 = Scalar(n.apices) / vol;
  s.lambda_Z2_sides = Scalar(n.facet_sides) / vol;
  s.lambda_P_sides = Scalar(n.plate_sides) / vol;
  return m;
}

std::vector<std::string> summary_mismatches(const DerivedSummary& a, const DerivedSummary& b) {
  std::vector<std::string> out;
  auto cmp = [&](const std::string& name, const Scalar& x, const Scalar& y) {
    if (!(x == y)) out.push_back(name + ": " + x.to_string() + " vs " + y.to_string());
  };
  cmp("lambda_V", a.lambda_V, b.lambda_V);
  cmp("lambda_E", a.lambda_E, b.lambda_E);
  cmp("lambda_P", a.lambda_P, b.lambda_P);
  cmp("lambda_Z", a.lambda_Z, b.lambda_Z);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      cmp(std::string("mu_") + primitive_letter(x) + primitive_letter(y), a.adjacency[x][y], b.adjacency[x][y]);
  cmp("mu_VE_pi", a.mu_VE_pi, b.mu_VE_pi);
  cmp("nu0", a.nu0, b.nu0);
  cmp("nu1", a.nu1, b.nu1);
  cmp("nu2", a.nu2, b.nu2);
  cmp("nu_facet_sides", a.nu_FS, b.nu_FS);
  cmp("nu_plate_sides", a.nu_PS, b.nu_PS);
  cmp("lambda_Z2", a.lambda_Z2, b.lambda_Z2);
  cmp("lambda_Z1", a.lambda_Z1, b.lambda_Z1);
  cmp("lambda_Z0", a.lambda_Z0, b.lambda_Z0);
  cmp("lambda_Z2_sides", a.lambda_Z2_sides, b.lambda_Z2_sides);
  cmp("lambda_P_sides", a.lambda_P_sides, b.lambda_P_sides);
  return out;
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.ok) out.push_back(c.name + ": " + c.detail);
  return out;
}

ValidationReport validate(const PeriodicComplex& cx) {
  ValidationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size() && i < 5; ++i) s += (i ? "; " : "") + v[i];
    if (v.size() > 5) s += "; ... (" + std::to_string(v.size()) + " in total)";
    return s;
  };

  add("partition", true, "cells are convex, interior-disjoint and fill the period");
  add("plate_interiors", cx.plate_interior_vertices().empty(), join(cx.plate_interior_vertices()));
  add("plate_corners_are_apices", cx.non_apex_plate_corners().empty(), join(cx.non_apex_plate_corners()));

  std::vector<std::string> low_degree, low_plates, side_excess, pi_bound;
  auto stats = vertex_stats(cx);
  for (const auto& s : stats) {
    std::string where = describe(s.position);
    if (s.edges < 4) low_degree.push_back(where + " has " + std::to_string(s.edges) + " edges");
    if (s.side_interiors > s.ridge_interiors) side_excess.push_back(where);
    if (s.pi_edges < 2 * (s.ridge_interiors - s.side_interiors) + 3 * s.hemi) pi_bound.push_back(where);
  }
  for (const auto& e : cx.edges())
    if (e.plates < 3) low_plates.push_back(describe(e.a) + "-" + describe(e.b));
  add("vertex_degree", low_degree.empty(), join(low_degree));
  add("edge_plates", low_plates.empty(), join(low_plates));
  add("side_interiors_within_ridge_interiors", side_excess.empty(), join(side_excess));
  add("pi_edges_at_vertex", pi_bound.empty(), join(pi_bound));

  MeasuredParams m = measure(cx);
  for (const auto& r : check_identities(m.summary).residuals)
    add("measured_" + r.name, r.residual.is_zero(), r.residual.is_zero() ? "" : r.residual.to_string());
  try {
    auto diff = summary_mismatches(m.summary, derive(m.params()));
    add("derived_closure", diff.empty(), join(diff));
  } catch (const Error& e) {
    add("derived_closure", false, e.what());
  }
  FeasibilityReport fr = classify(m.params());
  std::vector<std::string> violated;
  for (BoundName b : fr.violations()) violated.push_back(to_string(b));
  add("feasible", fr.feasible, join(violated));
  return rep;
}

}  // namespace tessparam::engine
