#pragma once

#include "tessparam/params.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tessparam {

enum class BoundName {
  VE_min,
  EP_min,
  EP_ftf_max,
  PV_min,
  PV_nonftf_lower,
  PV_upper,
  PSI_min,
  PSI_max_R1,
  PSI_max_R2,
  TAU_lower_pt,
  TAU_lower_shift,
  TAU_lower_curve,
  TAU_upper_psi,
  TAU_upper_nuPS,
  KAPPA_max_K,
  XI_lower_L1,
  XI_lower_L2,
  XI_upper_U1,
  XI_upper_U2,
  XI_upper_U3,
  XI_positive,
};

enum class BoundStatus { satisfied, boundary, violated, inapplicable };
enum class BoundSense { lower, upper };
enum class Regime { facet_to_facet, non_facet_to_facet };

const char* to_string(BoundName n);
const char* to_string(BoundStatus s);
const char* to_string(Regime r);
std::optional<BoundName> bound_from_string(const std::string& name);
std::vector<BoundName> all_bound_names();

struct Bound {
  BoundName name;
  std::string subject;  // parameter the bound constrains
  BoundSense sense;
  Scalar value;
  bool strict = false;
  BoundStatus status = BoundStatus::inapplicable;
};

struct FeasibilityReport {
  Regime regime = Regime::facet_to_facet;
  std::vector<Bound> bounds;
  bool feasible = false;

  const Bound& bound(BoundName n) const;
  std::vector<BoundName> boundary_flags() const;
  std::vector<BoundName> violations() const;
};

/// Evaluates every inequality against a parameter tuple. Throws
/// InvalidParams only for non-positive mean values.
FeasibilityReport classify(const TessParams& p);

/// Upper bound of mu_EP for facet-to-facet tessellations, 6(1 - 2/mu_VE).
Scalar fundamental_curve(const Scalar& mu_VE);

/// True when (mu_VE, mu_EP, mu_PV) satisfies the cyclic inequalities of
/// some normal tessellation (facet-to-facet or not).
bool cyclic_feasible(const CyclicParams& c);

enum class PsiBranch { R1, R2 };

struct PsiInterval {
  Scalar lower;       // always 0
  Scalar upper;       // min(R1, R2)
  PsiBranch branch;   // which expression is the minimum
  Scalar crossover;   // mu_PV where R1 = R2
  Scalar r1, r2;
};

PsiInterval psi_interval(const CyclicParams& c);

struct TauInterval {
  Scalar lower;  // max(0, psi - mu_VE/2, curve term)
  Scalar upper;  // min(psi, plate-side term)
  bool empty() const { return upper < lower; }
};

TauInterval tau_interval(const CyclicParams& c, const Scalar& psi);

/// xi as an affine function of kappa.
struct KappaLine {
  Scalar intercept;
  Scalar slope;
  Scalar at(const Scalar& kappa) const { return intercept + slope * kappa; }
};

enum class RegionShape { empty, point, segment, two_dimensional };
const char* to_string(RegionShape s);

using Point2 = std::pair<Scalar, Scalar>;

struct KappaXiRegion {
  Scalar K;          // kappa upper bound before capping at 1
  Scalar kappa_max;  // min(1, K)
  KappaLine L1, L2, U1, U2, U3;
  Point2 concurrency;  // common point of the five lines
  RegionShape shape = RegionShape::empty;
  /// Closed hull of the feasible set; the xi = 0 edge is excluded.
  std::vector<Point2> polygon;
  std::optional<std::pair<Scalar, Scalar>> kappa_range;

  /// Admissible xi values for a given kappa: (lower, upper] when lower = 0.
  std::pair<Scalar, Scalar> xi_bounds(const Scalar& kappa) const;
  bool contains(const Scalar& kappa, const Scalar& xi) const;
};

/// Throws InfeasibleUpstream if the cyclic part, psi, or the basic tau
/// bounds fail. A tau below the curve term just yields an empty region.
KappaXiRegion kappa_xi_region(const CyclicParams& c, const Scalar& psi, const Scalar& tau);

enum class EdgeFlag { closed = 0, open = 1, clip = 2 };
enum class Zone { facet_to_facet, non_facet_to_facet, both };
const char* to_string(Zone z);

struct RegionPolyline {
  std::string label;
  std::string x_axis, y_axis;
  Zone zone = Zone::both;
  /// Closed ring: the last point repeats the first.
  std::vector<Point2> points;
  /// Flag of the segment from points[i] to points[i+1].
  std::vector<EdgeFlag> segment_flags;
};

/// Feasible (mu_PV, mu_EP) region at fixed mu_VE, mu_EP capped at `ep_ceiling`.
std::vector<RegionPolyline> region_pv_ep(const Scalar& mu_VE, int resolution,
                                         const Scalar& ep_ceiling = Scalar(12));
/// Feasible (psi, tau) region for fixed cyclic parameters.
RegionPolyline region_psi_tau(const CyclicParams& c, int resolution);
/// Feasible (kappa, xi) region for fixed cyclic parameters, psi and tau.
RegionPolyline region_kappa_xi(const CyclicParams& c, const Scalar& psi, const Scalar& tau,
                               int resolution);

/// Deterministic random feasible tuples with rational entries.
std::vector<TessParams> sample_feasible(std::size_t count, std::uint64_t seed);
/// Deterministic random cyclic triples admitted by some normal
/// tessellation; interior parameters are left at zero.
std::vector<TessParams> sample_cyclic(std::size_t count, std::uint64_t seed);

/// Convex polygon clipping helpers over exact scalars.
namespace plane {
/// Keeps points with a*x + b*y <= c.
std::vector<Point2> clip(const std::vector<Point2>& poly, const Scalar& a, const Scalar& b,
                         const Scalar& c);
Scalar twice_area(const std::vector<Point2>& poly);
}  // namespace plane

}  // namespace tessparam
