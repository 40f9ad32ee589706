#include "tessparam/feasibility.hpp"

#include "tessparam/errors.hpp"

#include <algorithm>
#include <random>

namespace tessparam {

namespace {

struct NameEntry {
  BoundName name;
  const char* text;
};

constexpr NameEntry kNames[] = {
    {BoundName::VE_min, "VE_min"},
    {BoundName::EP_min, "EP_min"},
    {BoundName::EP_ftf_max, "EP_ftf_max"},
    {BoundName::PV_min, "PV_min"},
    {BoundName::PV_nonftf_lower, "PV_nonftf_lower"},
    {BoundName::PV_upper, "PV_upper"},
    {BoundName::PSI_min, "PSI_min"},
    {BoundName::PSI_max_R1, "PSI_max_R1"},
    {BoundName::PSI_max_R2, "PSI_max_R2"},
    {BoundName::TAU_lower_pt, "TAU_lower_pt"},
    {BoundName::TAU_lower_shift, "TAU_lower_shift"},
    {BoundName::TAU_lower_curve, "TAU_lower_curve"},
    {BoundName::TAU_upper_psi, "TAU_upper_psi"},
    {BoundName::TAU_upper_nuPS, "TAU_upper_nuPS"},
    {BoundName::KAPPA_max_K, "KAPPA_max_K"},
    {BoundName::XI_lower_L1, "XI_lower_L1"},
    {BoundName::XI_lower_L2, "XI_lower_L2"},
    {BoundName::XI_upper_U1, "XI_upper_U1"},
    {BoundName::XI_upper_U2, "XI_upper_U2"},
    {BoundName::XI_upper_U3, "XI_upper_U3"},
    {BoundName::XI_positive, "XI_positive"},
};

// Quantities shared by several bounds.
struct Terms {
  Scalar ve, ep, pv;
  Scalar s;      // 1 - 2/ve
  Scalar curve;  // 6(1 - 2/ve)
  Scalar r1, r2, crossover, K;
  Scalar tau_curve;  // lower tau bound from the curve term, minus psi/2
  Scalar tau_sides;  // upper tau bound from the plate-side term
  bool ok = false;   // denominators are nonzero
};

Terms terms_of(const Scalar& ve, const Scalar& ep, const Scalar& pv) {
  Terms t;
  t.ve = ve;
  t.ep = ep;
  t.pv = pv;
  t.s = 1 - Scalar(2) / ve;
  t.curve = 6 * t.s;
  Scalar half_ve_ep = ve * ep / 2;
  t.r1 = ve - 2 + half_ve_ep * (1 - Scalar(4) / pv);
  t.r2 = ve / 4 + half_ve_ep * (1 - Scalar(3) / pv);
  t.ok = ve != 2 && 3 * ve != 8;
  if (3 * ve != 8) t.crossover = 2 * ve * ep / (3 * ve - 8);
  t.K = t.r1;
  t.tau_curve = (ve / 4) * (ep - t.curve);
  t.tau_sides = half_ve_ep * (1 - Scalar(3) / pv);
  return t;
}

BoundStatus status_of(const Scalar& actual, const Scalar& value, BoundSense sense, bool strict) {
  auto cmp = actual <=> value;
  if (cmp == 0) return strict ? BoundStatus::violated : BoundStatus::boundary;
  bool inside = sense == BoundSense::lower ? cmp > 0 : cmp < 0;
  return inside ? BoundStatus::satisfied : BoundStatus::violated;
}

std::vector<Point2> dedupe_ring(std::vector<Point2> pts) {
  std::vector<Point2> out;
  for (auto& p : pts)
    if (out.empty() || out.back() != p) out.push_back(std::move(p));
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

// Polygon given counter-clockwise; keeps its vertices in order.
std::vector<Point2> clip_by_convex(std::vector<Point2> poly, const std::vector<Point2>& ccw) {
  for (std::size_t i = 0; i < ccw.size() && !poly.empty(); ++i) {
    const Point2& p = ccw[i];
    const Point2& q = ccw[(i + 1) % ccw.size()];
    // left of p->q: (qx-px)(y-py) - (qy-py)(x-px) >= 0
    Scalar dx = q.first - p.first, dy = q.second - p.second;
    poly = plane::clip(poly, dy, -dx, dy * p.first - dx * p.second);
  }
  return poly;
}

RegionPolyline make_polyline(std::string label, Zone zone, std::string x_axis, std::string y_axis,
                             const std::vector<Point2>& ring, const std::vector<EdgeFlag>& flags,
                             int resolution, bool closed = true) {
  RegionPolyline out;
  out.label = std::move(label);
  out.zone = zone;
  out.x_axis = std::move(x_axis);
  out.y_axis = std::move(y_axis);
  int per_edge = std::max(1, resolution - 1);
  std::size_t edges = closed ? ring.size() : ring.size() - 1;
  if (ring.size() == 1) edges = 0;
  for (std::size_t i = 0; i < edges; ++i) {
    const Point2& p = ring[i];
    const Point2& q = ring[(i + 1) % ring.size()];
    for (int k = 0; k < per_edge; ++k) {
      Scalar u = Scalar::ratio(k, per_edge);
      out.points.emplace_back(p.first + (q.first - p.first) * u, p.second + (q.second - p.second) * u);
      out.segment_flags.push_back(flags[i]);
    }
  }
  if (!ring.empty()) out.points.push_back(closed || ring.size() == 1 ? ring.front() : ring.back());
  return out;
}

}  // namespace

const char* to_string(BoundName n) {
  for (const auto& e : kNames)
    if (e.name == n) return e.text;
  return "?";
}

const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::satisfied: return "satisfied";
    case BoundStatus::boundary: return "boundary";
    case BoundStatus::violated: return "violated";
    default: return "inapplicable";
  }
}

const char* to_string(Regime r) {
  return r == Regime::facet_to_facet ? "facet_to_facet" : "non_facet_to_facet";
}

const char* to_string(RegionShape s) {
  switch (s) {
    case RegionShape::empty: return "empty";
    case RegionShape::point: return "point";
    case RegionShape::segment: return "segment";
    default: return "two_dimensional";
  }
}

const char* to_string(Zone z) {
  switch (z) {
    case Zone::facet_to_facet: return "facet_to_facet";
    case Zone::non_facet_to_facet: return "non_facet_to_facet";
    default: return "both";
  }
}

std::optional<BoundName> bound_from_string(const std::string& name) {
  for (const auto& e : kNames)
    if (name == e.text) return e.name;
  return std::nullopt;
}

std::vector<BoundName> all_bound_names() {
  std::vector<BoundName> out;
  for (const auto& e : kNames) out.push_back(e.name);
  return out;
}

const Bound& FeasibilityReport::bound(BoundName n) const {
  for (const auto& b : bounds)
    if (b.name == n) return b;
  throw std::out_of_range(std::string("bound not present: ") + to_string(n));
}

std::vector<BoundName> FeasibilityReport::boundary_flags() const {
  std::vector<BoundName> out;
  for (const auto& b : bounds)
    if (b.status == BoundStatus::boundary) out.push_back(b.name);
  return out;
}

std::vector<BoundName> FeasibilityReport::violations() const {
  std::vector<BoundName> out;
  for (const auto& b : bounds)
    if (b.status == BoundStatus::violated) out.push_back(b.name);
  return out;
}

Scalar fundamental_curve(const Scalar& mu_VE) { return 6 * (1 - Scalar(2) / mu_VE); }

FeasibilityReport classify(const TessParams& p) {
  if (p.mu_VE.sign() <= 0 || p.mu_EP.sign() <= 0 || p.mu_PV.sign() <= 0)
    throw InvalidParams("mean values mu_VE, mu_EP, mu_PV must be positive");
  FeasibilityReport rep;
  rep.regime = p.xi.is_zero() ? Regime::facet_to_facet : Regime::non_facet_to_facet;
  bool ftf = rep.regime == Regime::facet_to_facet;
  Terms t = terms_of(p.mu_VE, p.mu_EP, p.mu_PV);

  auto add = [&](BoundName name, const char* subject, BoundSense sense, Scalar value, bool strict,
                 const Scalar& actual, bool applicable) {
    Bound b{name, subject, sense, std::move(value), strict, BoundStatus::inapplicable};
    if (applicable) b.status = status_of(actual, b.value, sense, strict);
    rep.bounds.push_back(std::move(b));
  };
  using S = BoundSense;
  const Scalar& ve = p.mu_VE;
  const Scalar& ep = p.mu_EP;
  const Scalar& pv = p.mu_PV;
  Scalar ve_ep = ve * ep;

  add(BoundName::VE_min, "mu_VE", S::lower, 4, false, ve, true);
  add(BoundName::EP_min, "mu_EP", S::lower, 3, false, ep, true);
  add(BoundName::EP_ftf_max, "mu_EP", S::upper, t.curve, false, ep, ftf);
  add(BoundName::PV_min, "mu_PV", S::lower, 3, false, pv, true);
  if (t.ok) {
    add(BoundName::PV_nonftf_lower, "mu_PV", S::lower, ve_ep / (2 * (ve - 2)), true, pv,
        !ftf && ep >= t.curve);
    add(BoundName::PV_upper, "mu_PV", S::upper, ve_ep / (ve - 2), true, pv, true);
  } else {
    // Degenerate denominators only occur with mu_VE < 4, already a violation.
    add(BoundName::PV_nonftf_lower, "mu_PV", S::lower, 0, true, pv, false);
    add(BoundName::PV_upper, "mu_PV", S::upper, 0, true, pv, false);
  }

  bool interior = !ftf;
  add(BoundName::PSI_min, "psi", S::lower, 0, false, p.psi, interior);
  bool r1_side = t.ok && pv <= t.crossover;
  bool r2_side = t.ok && pv >= t.crossover;
  add(BoundName::PSI_max_R1, "psi", S::upper, t.r1, false, p.psi, interior && r1_side);
  add(BoundName::PSI_max_R2, "psi", S::upper, t.r2, false, p.psi, interior && r2_side);

  add(BoundName::TAU_lower_pt, "tau", S::lower, 0, false, p.tau, interior);
  add(BoundName::TAU_lower_shift, "tau", S::lower, p.psi - ve / 2, false, p.tau, interior);
  add(BoundName::TAU_lower_curve, "tau", S::lower, p.psi / 2 + t.tau_curve, false, p.tau, interior);
  add(BoundName::TAU_upper_psi, "tau", S::upper, p.psi, false, p.tau, interior);
  add(BoundName::TAU_upper_nuPS, "tau", S::upper, t.tau_sides, false, p.tau, interior);

  Scalar K = t.K - p.psi;
  add(BoundName::KAPPA_max_K, "kappa", S::upper, min(Scalar(1), K), false, p.kappa, interior);

  Scalar L1 = (2 * (p.psi - p.tau) + 3 * p.kappa) / ve;
  Scalar L2 = (4 * p.psi + 6 * p.kappa) / ve - 2 * ep * (1 - Scalar(3) / pv);
  Scalar U1 = t.curve + ep * (1 - Scalar(6) / pv) - 2 * p.psi / ve;
  Scalar U2 = 4 * t.s - 2 * ep / pv + 2 * p.kappa / ve;
  Scalar U3 = 3 - ep / 2 + (p.psi - 6 + 3 * p.kappa) / ve;
  add(BoundName::XI_lower_L1, "xi", S::lower, L1, false, p.xi, interior);
  add(BoundName::XI_lower_L2, "xi", S::lower, L2, false, p.xi, interior);
  add(BoundName::XI_upper_U1, "xi", S::upper, U1, false, p.xi, interior);
  add(BoundName::XI_upper_U2, "xi", S::upper, U2, false, p.xi, interior);
  add(BoundName::XI_upper_U3, "xi", S::upper, min(Scalar(1), U3), false, p.xi, interior);
  add(BoundName::XI_positive, "xi", S::lower, 0, true, p.xi, interior);

  rep.feasible = true;
  for (const auto& b : rep.bounds)
    if (b.status == BoundStatus::violated) rep.feasible = false;
  // Interior parameters must vanish in the facet-to-facet regime.
  if (ftf && !(p.kappa.is_zero() && p.psi.is_zero() && p.tau.is_zero())) rep.feasible = false;
  if (p.kappa.sign() < 0 || p.psi.sign() < 0 || p.tau.sign() < 0 || p.xi.sign() < 0) rep.feasible = false;
  return rep;
}

bool cyclic_feasible(const CyclicParams& c) {
  if (c.mu_VE < 4 || c.mu_EP < 3 || c.mu_PV < 3) return false;
  Scalar ve_ep = c.mu_VE * c.mu_EP;
  if (c.mu_PV >= ve_ep / (c.mu_VE - 2)) return false;
  if (c.mu_EP >= fundamental_curve(c.mu_VE) && c.mu_PV <= ve_ep / (2 * (c.mu_VE - 2))) {
    // On the curve itself the facet-to-facet branch still admits the triple.
    return c.mu_EP == fundamental_curve(c.mu_VE);
  }
  return true;
}

PsiInterval psi_interval(const CyclicParams& c) {
  if (!cyclic_feasible(c)) throw InfeasibleCyclic("cyclic parameters violate the cyclic bounds");
  Terms t = terms_of(c.mu_VE, c.mu_EP, c.mu_PV);
  PsiInterval out;
  out.lower = 0;
  out.r1 = t.r1;
  out.r2 = t.r2;
  out.crossover = t.crossover;
  out.branch = c.mu_PV <= t.crossover ? PsiBranch::R1 : PsiBranch::R2;
  out.upper = min(t.r1, t.r2);
  return out;
}

TauInterval tau_interval(const CyclicParams& c, const Scalar& psi) {
  PsiInterval pi = psi_interval(c);
  if (psi < pi.lower || psi > pi.upper)
    throw InfeasibleUpstream("psi = " + psi.to_string() + " lies outside [0, " + pi.upper.to_string() + "]");
  Terms t = terms_of(c.mu_VE, c.mu_EP, c.mu_PV);
  TauInterval out;
  out.lower = max(max(Scalar(0), psi - c.mu_VE / 2), psi / 2 + t.tau_curve);
  out.upper = min(psi, t.tau_sides);
  return out;
}

std::pair<Scalar, Scalar> KappaXiRegion::xi_bounds(const Scalar& kappa) const {
  Scalar lo = max(max(Scalar(0), L1.at(kappa)), L2.at(kappa));
  Scalar hi = min(min(Scalar(1), U3.at(kappa)), min(U1.at(kappa), U2.at(kappa)));
  return {lo, hi};
}

bool KappaXiRegion::contains(const Scalar& kappa, const Scalar& xi) const {
  if (kappa.sign() < 0 || kappa > kappa_max || xi.sign() <= 0) return false;
  auto [lo, hi] = xi_bounds(kappa);
  return lo <= xi && xi <= hi;
}

KappaXiRegion kappa_xi_region(const CyclicParams& c, const Scalar& psi, const Scalar& tau) {
  if (!cyclic_feasible(c)) throw InfeasibleUpstream("cyclic parameters violate the cyclic bounds");
  PsiInterval pi = psi_interval(c);
  if (psi.sign() < 0 || psi > pi.upper)
    throw InfeasibleUpstream("psi = " + psi.to_string() + " lies outside [0, " + pi.upper.to_string() + "]");
  Terms t = terms_of(c.mu_VE, c.mu_EP, c.mu_PV);
  if (tau.sign() < 0 || tau < psi - c.mu_VE / 2 || tau > psi || tau > t.tau_sides)
    throw InfeasibleUpstream("tau = " + tau.to_string() + " violates its basic bounds");

  const Scalar& ve = c.mu_VE;
  const Scalar& ep = c.mu_EP;
  const Scalar& pv = c.mu_PV;
  KappaXiRegion r;
  r.K = t.K - psi;
  r.kappa_max = min(Scalar(1), r.K);
  r.L1 = {2 * (psi - tau) / ve, Scalar(3) / ve};
  r.L2 = {4 * psi / ve - 2 * ep * (1 - Scalar(3) / pv), Scalar(6) / ve};
  r.U1 = {t.curve + ep * (1 - Scalar(6) / pv) - 2 * psi / ve, Scalar(0)};
  r.U2 = {4 * t.s - 2 * ep / pv, Scalar(2) / ve};
  r.U3 = {3 - ep / 2 + (psi - 6) / ve, Scalar(3) / ve};
  r.concurrency = {r.K, r.U1.at(r.K)};

  if (r.kappa_max.sign() < 0) return r;
  std::vector<Point2> poly = {{0, 0}, {r.kappa_max, 0}, {r.kappa_max, 1}, {0, 1}};
  // lower lines: slope*k - xi <= -intercept; upper: -slope*k + xi <= intercept
  for (const KappaLine* l : {&r.L1, &r.L2}) poly = plane::clip(poly, l->slope, -1, -l->intercept);
  for (const KappaLine* l : {&r.U1, &r.U2, &r.U3}) poly = plane::clip(poly, -l->slope, 1, l->intercept);
  poly = dedupe_ring(poly);

  bool above_axis = std::any_of(poly.begin(), poly.end(), [](const Point2& q) { return q.second.sign() > 0; });
  if (poly.empty() || !above_axis) {
    r.shape = RegionShape::empty;
    return r;
  }
  r.polygon = poly;
  if (poly.size() == 1) r.shape = RegionShape::point;
  else if (plane::twice_area(poly).is_zero()) r.shape = RegionShape::segment;
  else r.shape = RegionShape::two_dimensional;
  Scalar lo = poly.front().first, hi = poly.front().first;
  for (const auto& q : poly) {
    lo = min(lo, q.first);
    hi = max(hi, q.first);
  }
  r.kappa_range = std::make_pair(lo, hi);
  return r;
}

std::vector<RegionPolyline> region_pv_ep(const Scalar& mu_VE, int resolution, const Scalar& ep_ceiling) {
  if (mu_VE < 4) throw InvalidParams("mu_VE must be at least 4");
  Scalar s = 1 - Scalar(2) / mu_VE;
  Scalar c = 6 * s;
  const Scalar& h = ep_ceiling;
  std::vector<RegionPolyline> out;

  using F = EdgeFlag;
  {
    std::vector<Point2> ring = {{3, 3}, {Scalar(3) / s, 3}, {6, c}, {3, c}};
    std::vector<F> flags = {F::closed, F::open, F::closed, F::closed};
    if (c == 3) {  // mu_VE = 4: the zone degenerates to a segment
      ring = {{3, 3}, {6, 3}};
      flags = {F::closed, F::closed};
    }
    out.push_back(make_polyline("cyclic_region", Zone::both, "mu_PV", "mu_EP", ring, flags, resolution));
  }
  if (h > c) {
    std::vector<Point2> ring = {{3, c}, {6, c}, {h / s, h}, {h / (2 * s), h}};
    std::vector<F> flags = {F::open, F::open, F::clip, F::open};
    out.push_back(
        make_polyline("non_ftf_region", Zone::non_facet_to_facet, "mu_PV", "mu_EP", ring, flags, resolution));
  }
  {
    // mu_PV equals the psi crossover along this line.
    Scalar slope = (3 * mu_VE - 8) / (2 * mu_VE);
    Scalar top = max(h, c);
    std::vector<Point2> hull = {{3, 3}, {Scalar(3) / s, 3}, {top / s, top}, {top / (2 * s), top}, {3, c}};
    hull = dedupe_ring(hull);
    std::vector<Point2> seg = {{Scalar(0), Scalar(0)}, {top / slope, top}};
    seg = dedupe_ring(clip_by_convex(seg, hull));
    if (!seg.empty()) {
      std::vector<F> flags(seg.size(), F::clip);
      out.push_back(make_polyline("psi_branch_divider", Zone::non_facet_to_facet, "mu_PV", "mu_EP", seg, flags,
                                  resolution, false));
    }
  }
  return out;
}

RegionPolyline region_psi_tau(const CyclicParams& c, int resolution) {
  PsiInterval pi = psi_interval(c);
  Terms t = terms_of(c.mu_VE, c.mu_EP, c.mu_PV);
  const Scalar& r = pi.upper;
  std::vector<Point2> poly = {{0, 0}, {r, 0}, {r, r}, {0, r}};
  poly = plane::clip(poly, 1, -1, c.mu_VE / 2);       // tau >= psi - ve/2
  poly = plane::clip(poly, Scalar::ratio(1, 2), -1, -t.tau_curve);  // tau >= psi/2 + curve term
  poly = plane::clip(poly, -1, 1, 0);                 // tau <= psi
  poly = plane::clip(poly, 0, 1, t.tau_sides);        // tau <= plate-side term
  poly = dedupe_ring(poly);
  std::vector<EdgeFlag> flags(poly.size(), EdgeFlag::closed);
  return make_polyline("psi_tau_region", Zone::non_facet_to_facet, "psi", "tau", poly, flags, resolution);
}

RegionPolyline region_kappa_xi(const CyclicParams& c, const Scalar& psi, const Scalar& tau, int resolution) {
  KappaXiRegion r = kappa_xi_region(c, psi, tau);
  std::vector<EdgeFlag> flags;
  for (std::size_t i = 0; i < r.polygon.size(); ++i) {
    const Point2& p = r.polygon[i];
    const Point2& q = r.polygon[(i + 1) % r.polygon.size()];
    flags.push_back(p.second.is_zero() && q.second.is_zero() ? EdgeFlag::open : EdgeFlag::closed);
  }
  auto out = make_polyline("kappa_xi_region", Zone::non_facet_to_facet, "kappa", "xi", r.polygon, flags,
                           resolution);
  return out;
}

// ---------------------------------------------------------------------------
// Sampling.

namespace {

constexpr int kGrid = 64;

class GridSampler {
 public:
  explicit GridSampler(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int percent) { return integer(0, 99) < percent; }

  /// Grid point in [lo, hi]; open ends exclude the endpoints.
  Scalar between(const Scalar& lo, const Scalar& hi, bool lo_open = false, bool hi_open = false) {
    int a = lo_open ? 1 : 0;
    int b = hi_open ? kGrid - 1 : kGrid;
    return lo + (hi - lo) * Scalar::ratio(integer(a, b), kGrid);
  }

 private:
  std::mt19937_64 rng_;
};

// Cyclic triple; facet-to-facet tuples stay below the fundamental curve.
CyclicParams draw_cyclic(GridSampler& g, bool ftf) {
  Scalar ve = 4 + Scalar::ratio(g.integer(0, 48), 6);
  Scalar s = 1 - Scalar(2) / ve;
  Scalar curve = 6 * s;
  Scalar ep = ftf ? g.between(3, curve) : g.between(3, curve + 3);
  Scalar upper = ep / s;
  Scalar pv;
  if (ep >= curve && !ftf) {
    Scalar lower = ep / (2 * s);
    pv = lower < 3 ? g.between(3, upper, false, true) : g.between(lower, upper, true, true);
  } else {
    pv = g.between(3, upper, false, true);
  }
  return {ve, ep, pv};
}

}  // namespace

std::vector<TessParams> sample_feasible(std::size_t count, std::uint64_t seed) {
  GridSampler g(seed);
  std::vector<TessParams> out;
  while (out.size() < count) {
    bool ftf = g.chance(20);
    CyclicParams c = draw_cyclic(g, ftf);
    TessParams p;
    p.mu_VE = c.mu_VE;
    p.mu_EP = c.mu_EP;
    p.mu_PV = c.mu_PV;
    if (!ftf) {
      RegionPolyline pt = region_psi_tau(c, 2);
      if (pt.points.empty()) continue;
      Scalar lo = pt.points.front().first, hi = lo;
      for (const auto& q : pt.points) {
        lo = min(lo, q.first);
        hi = max(hi, q.first);
      }
      p.psi = g.between(lo, hi);
      TauInterval ti = tau_interval(c, p.psi);
      if (ti.empty()) continue;
      p.tau = g.between(ti.lower, ti.upper);
      KappaXiRegion r = kappa_xi_region(c, p.psi, p.tau);
      if (r.shape == RegionShape::empty) continue;
      p.kappa = g.between(r.kappa_range->first, r.kappa_range->second);
      auto [xlo, xhi] = r.xi_bounds(p.kappa);
      if (xhi < xlo || xhi.sign() <= 0) continue;
      p.xi = g.between(xlo, xhi, xlo.is_zero(), false);
    }
    if (!classify(p).feasible) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<TessParams> sample_cyclic(std::size_t count, std::uint64_t seed) {
  GridSampler g(seed);
  std::vector<TessParams> out;
  while (out.size() < count) {
    CyclicParams c = draw_cyclic(g, false);
    if (!cyclic_feasible(c)) continue;
    TessParams p;
    p.mu_VE = c.mu_VE;
    p.mu_EP = c.mu_EP;
    p.mu_PV = c.mu_PV;
    out.push_back(std::move(p));
  }
  return out;
}

namespace plane {

std::vector<Point2> clip(const std::vector<Point2>& poly, const Scalar& a, const Scalar& b, const Scalar& c) {
  std::vector<Point2> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  auto value = [&](const Point2& p) { return a * p.first + b * p.second - c; };
  if (n == 1) {
    if (value(poly[0]).sign() <= 0) out.push_back(poly[0]);
    return out;
  }
  std::vector<Scalar> vals;
  vals.reserve(n);
  for (const auto& p : poly) vals.push_back(value(p));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    const Point2& p = poly[i];
    const Point2& q = poly[j];
    int sp = vals[i].sign(), sq = vals[j].sign();
    if (sp <= 0) out.push_back(p);
    if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) {
      Scalar u = vals[i] / (vals[i] - vals[j]);
      out.emplace_back(p.first + (q.first - p.first) * u, p.second + (q.second - p.second) * u);
    }
  }
  return dedupe_ring(out);
}

Scalar twice_area(const std::vector<Point2>& poly) {
  Scalar acc;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % poly.size()];
    acc += p.first * q.second - q.first * p.second;
  }
  return acc;
}

}  // namespace plane

}  // namespace tessparam
