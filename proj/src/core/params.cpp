#include "tessparam/params.hpp"

#include "tessparam/errors.hpp"

namespace tessparam {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParams(what);
}

}  // namespace

void validate_params(const TessParams& p) {
  require(p.lambda_V > 0, "lambda_V must be positive");
  require(p.mu_VE > 0, "mu_VE must be positive");
  require(p.mu_EP > 0, "mu_EP must be positive");
  require(p.mu_PV > 0, "mu_PV must be positive");
  require(p.xi.sign() >= 0, "xi must be non-negative");
  require(p.kappa.sign() >= 0, "kappa must be non-negative");
  require(p.psi.sign() >= 0, "psi must be non-negative");
  require(p.tau.sign() >= 0, "tau must be non-negative");
  if (p.xi.is_zero()) {
    require(p.kappa.is_zero() && p.psi.is_zero() && p.tau.is_zero(),
            "facet-to-facet parameters (xi = 0) need kappa = psi = tau = 0");
  }
}

const char* primitive_letter(int k) {
  static const char* letters[] = {"V", "E", "P", "Z"};
  return letters[k];
}

Scalar DerivedSummary::lambda(int k) const {
  switch (k) {
    case kV: return lambda_V;
    case kE: return lambda_E;
    case kP: return lambda_P;
    default: return lambda_Z;
  }
}

Scalar f_eval(const TessParams& p, const Scalar& x) {
  return p.mu_VE * p.mu_EP - x * (p.mu_VE - 2);
}

DerivedSummary derive(const TessParams& p) {
  validate_params(p);
  const Scalar& ve = p.mu_VE;
  const Scalar& ep = p.mu_EP;
  const Scalar& pv = p.mu_PV;
  Scalar f_pv = f_eval(p, pv);
  if (f_pv.sign() <= 0) {
    throw DegenerateCellIntensity("f(mu_PV) = " + f_pv.to_string() +
                                  " is not positive; the cell intensity would vanish");
  }
  Scalar f_2 = f_eval(p, 2);
  Scalar ve_ep = ve * ep;

  DerivedSummary s;
  s.params = p;
  s.lambda_V = p.lambda_V;
  s.lambda_E = p.lambda_V * ve / 2;
  s.lambda_P = p.lambda_V * ve_ep / (2 * pv);
  s.lambda_Z = p.lambda_V * f_pv / (2 * pv);

  auto& a = s.adjacency;
  for (int k = 0; k < 4; ++k) a[k][k] = 1;
  a[kV][kE] = ve;
  a[kV][kP] = ve_ep / 2;
  a[kV][kZ] = f_2 / 2;
  a[kE][kV] = 2;
  a[kE][kP] = ep;
  a[kE][kZ] = ep;
  a[kP][kV] = pv;
  a[kP][kE] = pv;
  a[kP][kZ] = 2;
  a[kZ][kV] = pv * f_2 / f_pv;
  a[kZ][kE] = ve_ep * pv / f_pv;
  a[kZ][kP] = 2 * ve_ep / f_pv;

  s.mu_VE_pi = p.xi * ve;
  s.nu0 = a[kZ][kV] - pv * 2 * (p.kappa + p.psi) / f_pv;
  s.nu1 = a[kZ][kE] - pv * (p.xi * ve + 2 * p.psi) / f_pv;
  s.nu2 = a[kZ][kP] - pv * (p.xi * ve - 2 * p.kappa) / f_pv;

  Scalar facets_num = 2 * ve_ep - pv * (p.xi * ve - 2 * p.kappa);
  Scalar sides_num = ve * (ep - p.xi) - 2 * p.psi;
  s.nu_FS = 2 * pv * sides_num / facets_num;
  s.nu_PS = pv * (1 - 2 * p.tau / ve_ep);

  s.lambda_Z2 = p.lambda_V * facets_num / (2 * pv);
  s.lambda_Z1 = p.lambda_V * sides_num / 2;
  s.lambda_Z0 = p.lambda_V * (f_2 / 2 - p.kappa - p.psi);
  s.lambda_Z2_sides = p.lambda_V * sides_num;
  s.lambda_P_sides = p.lambda_V * (ve_ep - 2 * p.tau) / 2;
  return s;
}

bool IdentityReport::ok() const {
  for (const auto& r : residuals)
    if (!r.residual.is_zero()) return false;
  return true;
}

std::vector<std::string> IdentityReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : residuals)
    if (!r.residual.is_zero()) out.push_back(r.name + " (residual " + r.residual.to_string() + ")");
  return out;
}

IdentityReport check_identities(const DerivedSummary& s) {
  IdentityReport rep;
  auto add = [&](std::string name, Scalar r) { rep.residuals.push_back({std::move(name), std::move(r)}); };
  const auto& a = s.adjacency;

  add("euler_intensities", s.lambda_V - s.lambda_E + s.lambda_P - s.lambda_Z);
  add("euler_vertex_row", a[kV][kE] - a[kV][kP] + a[kV][kZ] - 2);
  add("euler_cell_row", a[kZ][kV] - a[kZ][kE] + a[kZ][kP] - 2);
  for (int x = 0; x < 4; ++x) {
    for (int y = x + 1; y < 4; ++y) {
      add(std::string("symmetry_") + primitive_letter(x) + primitive_letter(y),
          s.lambda(x) * a[x][y] - s.lambda(y) * a[y][x]);
    }
  }
  add("euler_cell_boundary", s.nu0 - s.nu1 + s.nu2 - 2);
  add("pi_edge_share", s.lambda_V * s.mu_VE_pi - 2 * s.lambda_E * s.params.xi);
  add("facet_side_count", s.nu_FS * s.lambda_Z2 - s.lambda_Z2_sides);
  add("plate_side_count", s.nu_PS * s.lambda_P - s.lambda_P_sides);
  add("facets_per_cell", s.nu2 * s.lambda_Z - s.lambda_Z2);
  add("ridges_per_cell", s.nu1 * s.lambda_Z - s.lambda_Z1);
  add("apices_per_cell", s.nu0 * s.lambda_Z - s.lambda_Z0);
  if (s.params.is_facet_to_facet()) {
    add("ftf_apices", s.nu0 - a[kZ][kV]);
    add("ftf_ridges", s.nu1 - a[kZ][kE]);
    add("ftf_facets", s.nu2 - a[kZ][kP]);
  }
  return rep;
}

}  // namespace tessparam
