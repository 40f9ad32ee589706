#pragma once

#include "tessparam/scalar.hpp"

#include <array>
#include <string>
#include <vector>

namespace tessparam {

/// Seven mean-value parameters of a normal stationary tessellation plus
/// the vertex intensity. Interior parameters (xi, kappa, psi, tau) vanish
/// for facet-to-facet tessellations.
struct TessParams {
  Scalar lambda_V{1};
  Scalar mu_VE;  // edges per vertex
  Scalar mu_EP;  // plates per edge
  Scalar mu_PV;  // vertices per plate
  Scalar xi;     // share of edges lying inside a facet
  Scalar kappa;  // hemi-vertex density per vertex
  Scalar psi;    // facet-interior vertex count per vertex
  Scalar tau;    // plate-interior boundary vertex count per vertex

  bool is_facet_to_facet() const { return xi.is_zero(); }
  bool operator==(const TessParams&) const = default;
};

/// The cyclic part (mu_VE, mu_EP, mu_PV) on its own.
struct CyclicParams {
  Scalar mu_VE;
  Scalar mu_EP;
  Scalar mu_PV;

  static CyclicParams of(const TessParams& p) { return {p.mu_VE, p.mu_EP, p.mu_PV}; }
};

/// Throws InvalidParams if a value is out of its basic domain.
void validate_params(const TessParams& p);

enum Primitive { kV = 0, kE = 1, kP = 2, kZ = 3 };
const char* primitive_letter(int k);

/// Everything that follows from a TessParams by the closed-form relations.
struct DerivedSummary {
  TessParams params;
  Scalar lambda_V, lambda_E, lambda_P, lambda_Z;
  /// adjacency[X][Y]: mean number of Y-elements adjacent to a typical X.
  std::array<std::array<Scalar, 4>, 4> adjacency;
  Scalar mu_VE_pi;  // pi-edges per vertex
  Scalar nu0, nu1, nu2;  // facet vertices, facet sides, facets per cell
  Scalar nu_FS;          // sides per facet
  Scalar nu_PS;          // sides per plate
  Scalar lambda_Z2, lambda_Z1, lambda_Z0;  // facets, ridges, apices
  Scalar lambda_Z2_sides;                  // facet sides
  Scalar lambda_P_sides;                   // plate sides

  Scalar lambda(int k) const;
};

/// f(x) = mu_VE * mu_EP - x * (mu_VE - 2); f(mu_PV) is proportional to
/// the cell intensity, f(2) to 2 mu_VZ.
Scalar f_eval(const TessParams& p, const Scalar& x);

/// Throws InvalidParams or DegenerateCellIntensity.
DerivedSummary derive(const TessParams& p);

struct IdentityResidual {
  std::string name;
  Scalar residual;
};

struct IdentityReport {
  std::vector<IdentityResidual> residuals;
  bool ok() const;
  std::vector<std::string> failures() const;
};

IdentityReport check_identities(const DerivedSummary& s);

}  // namespace tessparam
