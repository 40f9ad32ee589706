#pragma once

#include "tessparam/feasibility.hpp"
#include "tessparam/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tessparam {

/// Mean values of a planar normal tessellation.
struct PlanarParams {
  Scalar lambda_V{1};
  Scalar mu_VE;                   // edges per vertex
  Scalar phi;                     // share of vertices lying inside a cell side
  std::optional<Scalar> mu_EVpi;  // such vertices per edge
  std::optional<Scalar> mu_VE2;   // second moment of the vertex degree
};

struct PlanarBound {
  std::string name;
  Scalar value;
  BoundStatus status;
};

struct PlanarReport {
  std::vector<PlanarBound> bounds;
  bool feasible = true;
};

PlanarReport planar_validate(const PlanarParams& planar);

/// Planar tessellations stacked in unit-depth layers.
TessParams stratum(const PlanarParams& planar);
/// Planar cells extruded to columns and cut at independent heights.
TessParams column(const PlanarParams& planar);
/// Every cell split into pyramids over its facets from one inner point.
TessParams central_point(const TessParams& input);
std::vector<TessParams> iterate_central_point(const TessParams& start, int steps);

struct MixtureComponent {
  TessParams params;
  Scalar share;
};

TessParams mixture(const std::vector<MixtureComponent>& components);

/// Curve mu_EP = A - B/mu_VE traced by mixtures of two tuples.
struct MixtureCurve {
  bool vertical = false;      // equal mu_VE
  bool single_point = false;  // identical (mu_VE, mu_EP)
  Scalar A, B;
  Scalar mu_VE;  // set for the vertical and single-point cases
  Scalar ep_low, ep_high;

  Scalar ep_at(const Scalar& mu_VE) const { return A - B / mu_VE; }
};

MixtureCurve mixture_curve(const TessParams& p1, const TessParams& p2);

}  // namespace tessparam
