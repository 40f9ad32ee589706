#include "tessparam/transforms.hpp"

#include "tessparam/errors.hpp"

namespace tessparam {

namespace {

BoundStatus lower_status(const Scalar& actual, const Scalar& bound) {
  auto c = actual <=> bound;
  return c > 0 ? BoundStatus::satisfied : (c == 0 ? BoundStatus::boundary : BoundStatus::violated);
}

BoundStatus upper_status(const Scalar& actual, const Scalar& bound) {
  auto c = actual <=> bound;
  return c < 0 ? BoundStatus::satisfied : (c == 0 ? BoundStatus::boundary : BoundStatus::violated);
}

void require_valid(const PlanarParams& planar) {
  PlanarReport rep = planar_validate(planar);
  if (rep.feasible) return;
  std::string msg = "planar parameters violate:";
  for (const auto& b : rep.bounds)
    if (b.status == BoundStatus::violated) msg += " " + b.name;
  throw InvalidPlanar(msg);
}

}  // namespace

PlanarReport planar_validate(const PlanarParams& planar) {
  PlanarReport rep;
  auto add = [&](std::string name, Scalar value, BoundStatus status) {
    if (status == BoundStatus::violated) rep.feasible = false;
    rep.bounds.push_back({std::move(name), std::move(value), status});
  };
  add("lambda_V_positive", 0,
      planar.lambda_V.sign() > 0 ? BoundStatus::satisfied : BoundStatus::violated);
  add("VE_min", 3, lower_status(planar.mu_VE, 3));
  Scalar ve_max = 6 - 2 * planar.phi;
  add("VE_max", ve_max, upper_status(planar.mu_VE, ve_max));
  add("phi_min", 0, lower_status(planar.phi, 0));
  add("phi_max", 1, upper_status(planar.phi, 1));
  if (planar.mu_EVpi) add("EVpi_min", 0, lower_status(*planar.mu_EVpi, 0));
  if (planar.mu_VE2) {
    Scalar sq = planar.mu_VE * planar.mu_VE;
    add("second_moment_min", sq, lower_status(*planar.mu_VE2, sq));
  }
  return rep;
}

TessParams stratum(const PlanarParams& planar) {
  require_valid(planar);
  const Scalar& ve = planar.mu_VE;
  TessParams p;
  p.lambda_V = planar.lambda_V;
  p.mu_VE = ve + 2;
  p.mu_EP = 6 * ve / (ve + 2);
  p.mu_PV = 3 * ve / (ve - 1);
  p.xi = 2 * planar.phi / (ve + 2);
  p.kappa = 0;
  p.psi = 2 * planar.phi;
  p.tau = planar.phi;
  return p;
}

TessParams column(const PlanarParams& planar) {
  if (!planar.mu_EVpi || !planar.mu_VE2)
    throw InvalidPlanar("column construction needs mu_EVpi and the second moment mu_VE2");
  require_valid(planar);
  const Scalar& ve = planar.mu_VE;
  const Scalar& phi = planar.phi;
  const Scalar& evpi = *planar.mu_EVpi;
  const Scalar& m2 = *planar.mu_VE2;
  TessParams p;
  p.lambda_V = planar.lambda_V * ve;
  p.mu_VE = 4;
  p.mu_EP = (3 * ve + m2) / (2 * ve);
  p.mu_PV = 2 * (3 * ve + m2) / (3 * ve - 2);
  p.xi = Scalar::ratio(1, 2) + evpi / 4;
  p.kappa = evpi / 2 - phi / ve;
  p.psi = (m2 + 3 * phi) / ve - 1 - evpi / 2;
  p.tau = (m2 + phi) / ve - 2;
  for (const auto* v : {&p.kappa, &p.psi, &p.tau}) {
    if (v->sign() < 0) {
      throw NegativeInterior("column construction gives a negative interior parameter (" + v->to_string() +
                             "); the planar inputs are inconsistent");
    }
  }
  return p;
}

TessParams central_point(const TessParams& in) {
  DerivedSummary d = derive(in);
  const Scalar& ve = in.mu_VE;
  const Scalar& ep = in.mu_EP;
  const Scalar& pv = in.mu_PV;
  const Scalar& xi = in.xi;
  const Scalar& ka = in.kappa;
  const Scalar& ps = in.psi;
  const Scalar& ta = in.tau;
  Scalar ve_ep = ve * ep;
  Scalar cell_den = ve_ep - pv * (ve - 4);
  Scalar plates_num = 4 * ve_ep - 3 * ve * xi - 4 * ps;

  TessParams out;
  out.lambda_V = d.lambda_V + d.lambda_Z;
  out.mu_VE = 2 * pv * (ve - 4 - ve_ep + 2 * ka + 2 * ps) / (pv * (ve - 4) - ve_ep);
  out.mu_EP = plates_num / (4 - ve + ve_ep - 2 * ka - 2 * ps);
  out.mu_PV = pv * plates_num / (ve_ep * (pv + 1) - pv * (ve * xi + 2 * ps));
  out.xi = ve * xi / (ve * (ep - 1) + 4 - 2 * ka - 2 * ps);
  out.kappa = 2 * pv * ka / cell_den;
  out.psi = 4 * pv * ps / cell_den;
  out.tau = 2 * pv * (ta + ps) / cell_den;
  return out;
}

std::vector<TessParams> iterate_central_point(const TessParams& start, int steps) {
  std::vector<TessParams> out;
  TessParams cur = start;
  for (int i = 0; i < steps; ++i) {
    cur = central_point(cur);
    out.push_back(cur);
  }
  return out;
}

TessParams mixture(const std::vector<MixtureComponent>& components) {
  if (components.empty()) throw InvalidShares("a mixture needs at least one component");
  Scalar total;
  for (const auto& c : components) {
    if (c.share.sign() < 0 || c.share > 1) throw InvalidShares("share " + c.share.to_string() + " outside [0, 1]");
    total += c.share;
  }
  if (total != 1) throw InvalidShares("shares sum to " + total.to_string() + ", not 1");

  Scalar lv, le, lp;
  Scalar ve, ep, pv, xi, ka, ps, ta;
  for (const auto& c : components) {
    DerivedSummary d = derive(c.params);
    Scalar wv = c.share * d.lambda_V, we = c.share * d.lambda_E, wp = c.share * d.lambda_P;
    lv += wv;
    le += we;
    lp += wp;
    ve += wv * c.params.mu_VE;
    ka += wv * c.params.kappa;
    ps += wv * c.params.psi;
    ta += wv * c.params.tau;
    ep += we * c.params.mu_EP;
    xi += we * c.params.xi;
    pv += wp * c.params.mu_PV;
  }
  TessParams out;
  out.lambda_V = lv;
  out.mu_VE = ve / lv;
  out.mu_EP = ep / le;
  out.mu_PV = pv / lp;
  out.xi = xi / le;
  out.kappa = ka / lv;
  out.psi = ps / lv;
  out.tau = ta / lv;
  return out;
}

MixtureCurve mixture_curve(const TessParams& p1, const TessParams& p2) {
  MixtureCurve c;
  const Scalar &v1 = p1.mu_VE, &v2 = p2.mu_VE, &e1 = p1.mu_EP, &e2 = p2.mu_EP;
  c.ep_low = min(e1, e2);
  c.ep_high = max(e1, e2);
  if (v1 == v2) {
    c.vertical = true;
    c.single_point = e1 == e2;
    c.mu_VE = v1;
    return c;
  }
  c.A = (e1 * v1 - e2 * v2) / (v1 - v2);
  c.B = (e1 - e2) * v1 * v2 / (v1 - v2);
  return c;
}

}  // namespace tessparam
