#include <doctest.h>

#include "tessparam/catalog.hpp"
#include "tessparam/errors.hpp"
#include "tessparam/feasibility.hpp"

#include <algorithm>

using namespace tessparam;

namespace {

TessParams tuple(Scalar ve, Scalar ep, Scalar pv, Scalar xi = 0, Scalar kappa = 0, Scalar psi = 0,
                 Scalar tau = 0) {
  TessParams p;
  p.mu_VE = ve;
  p.mu_EP = ep;
  p.mu_PV = pv;
  p.xi = xi;
  p.kappa = kappa;
  p.psi = psi;
  p.tau = tau;
  return p;
}

bool has(const std::vector<BoundName>& v, BoundName n) { return std::find(v.begin(), v.end(), n) != v.end(); }

Scalar q(long long a, long long b = 1) { return Scalar::ratio(a, b); }

}  // namespace

TEST_SUITE("feasibility") {
  TEST_CASE("Poisson-Voronoi sits on the facet-to-facet curve") {
    FeasibilityReport r = classify(catalog_get("ex01_poisson_voronoi").params());
    CHECK(r.feasible);
    CHECK(r.regime == Regime::facet_to_facet);
    CHECK(r.bound(BoundName::EP_ftf_max).status == BoundStatus::boundary);
    CHECK(r.bound(BoundName::PSI_max_R1).status == BoundStatus::inapplicable);
  }

  TEST_CASE("parallel pyramids sit on the plate-corner minimum") {
    FeasibilityReport r = classify(catalog_get("ex16_parallel_pyramids").params());
    CHECK(r.feasible);
    CHECK(r.regime == Regime::non_facet_to_facet);
    CHECK(r.bound(BoundName::PV_min).status == BoundStatus::boundary);
    CHECK(r.bound(BoundName::PV_nonftf_lower).status == BoundStatus::inapplicable);
    CHECK(r.bound(BoundName::EP_ftf_max).status == BoundStatus::inapplicable);
  }

  TEST_CASE("STIT bound statuses") {
    FeasibilityReport r = classify(catalog_get("ex04_stit").params());
    CHECK(r.feasible);
    CHECK(r.bound(BoundName::XI_upper_U3).status == BoundStatus::boundary);
    CHECK(r.bound(BoundName::XI_upper_U3).value == 1);
    CHECK(r.bound(BoundName::PSI_max_R1).value == q(10, 3));
    CHECK(r.bound(BoundName::PSI_max_R2).status == BoundStatus::inapplicable);
    CHECK(r.bound(BoundName::KAPPA_max_K).value == 1);
    CHECK(r.bound(BoundName::XI_lower_L1).value == q(5, 6));
    CHECK(r.bound(BoundName::XI_lower_L2).value == q(1, 2));
    CHECK(r.bound(BoundName::TAU_lower_curve).value == 1);
    CHECK(r.bound(BoundName::TAU_upper_nuPS).value == q(5, 2));
    CHECK(r.bounds.size() == all_bound_names().size());
  }

  TEST_CASE("strict bounds reject equality") {
    // mu_PV at the upper limit mu_VE mu_EP / (mu_VE - 2) = 4.
    FeasibilityReport r = classify(tuple(8, 3, 4));
    CHECK_FALSE(r.feasible);
    CHECK(r.bound(BoundName::PV_upper).status == BoundStatus::violated);
    FeasibilityReport xi0 = classify(tuple(4, 3, q(36, 7), 0, 0, 0, 0));
    CHECK(xi0.regime == Regime::facet_to_facet);
  }

  TEST_CASE("violations are reported, not thrown") {
    FeasibilityReport r = classify(tuple(3, 2, 2));
    CHECK_FALSE(r.feasible);
    CHECK(has(r.violations(), BoundName::VE_min));
    CHECK(has(r.violations(), BoundName::EP_min));
    CHECK(has(r.violations(), BoundName::PV_min));
    CHECK_THROWS_AS(classify(tuple(0, 3, 3)), InvalidParams);
    FeasibilityReport above = classify(tuple(4, 4, 5));
    CHECK(has(above.violations(), BoundName::EP_ftf_max));
  }

  TEST_CASE("psi branches meet at the crossover") {
    CyclicParams c{6, 5, 0};
    c.mu_PV = 2 * c.mu_VE * c.mu_EP / (3 * c.mu_VE - 8);
    PsiInterval pi = psi_interval(c);
    CHECK(pi.crossover == c.mu_PV);
    CHECK(pi.r1 == pi.r2);
    CHECK_THROWS_AS(psi_interval({4, 3, 7}), InfeasibleCyclic);
  }

  TEST_CASE("tau interval for STIT") {
    TauInterval t = tau_interval({4, 3, q(36, 7)}, 2);
    CHECK(t.lower == 1);
    CHECK(t.upper == 2);
    CHECK_THROWS_AS(tau_interval({4, 3, q(36, 7)}, 4), InfeasibleUpstream);
  }

  TEST_CASE("null zone of the kappa-xi plane") {
    KappaXiRegion r = kappa_xi_region({q(24, 5), q(19, 5), q(7, 2)}, 0, 0);
    CHECK(r.shape == RegionShape::empty);
    CHECK_FALSE(r.kappa_range.has_value());
  }

  TEST_CASE("Divided Delaunay region is a single point") {
    TessParams p = catalog_get("ex08_divided_delaunay").params();
    KappaXiRegion r = kappa_xi_region(CyclicParams::of(p), p.psi, p.tau);
    REQUIRE(r.shape == RegionShape::point);
    CHECK(r.polygon.front().first == 0);
    CHECK(r.polygon.front().second == Scalar::parse("64*pi^2/(35+112*pi^2)"));
    CHECK(r.contains(p.kappa, p.xi));
  }

  TEST_CASE("region concurrency point") {
    KappaXiRegion r = kappa_xi_region({4, 3, q(36, 7)}, 2, q(4, 3));
    CHECK(r.shape == RegionShape::two_dimensional);
    const Scalar& k = r.concurrency.first;
    CHECK(r.U1.at(k) == r.U2.at(k));
    CHECK(r.U1.at(k) == r.U3.at(k));
    CHECK(r.U1.at(k) == r.L2.at(k));
    CHECK(r.contains(q(2, 3), 1));
    CHECK_FALSE(r.contains(q(2, 3), q(1, 2)));
    CHECK_THROWS_AS(kappa_xi_region({4, 3, q(36, 7)}, 5, 0), InfeasibleUpstream);
  }

  TEST_CASE("pv-ep region at mu_VE = 8") {
    auto rings = region_pv_ep(8, 2);
    REQUIRE(rings.size() == 3);
    const auto& both = rings[0];
    CHECK(both.zone == Zone::both);
    std::vector<Point2> expect = {{3, 3}, {4, 3}, {6, q(9, 2)}, {3, q(9, 2)}, {3, 3}};
    CHECK(both.points == expect);
    CHECK(both.segment_flags[1] == EdgeFlag::open);
    const auto& upper = rings[1];
    std::vector<Point2> expect_upper = {{3, q(9, 2)}, {6, q(9, 2)}, {16, 12}, {8, 12}, {3, q(9, 2)}};
    CHECK(upper.points == expect_upper);
    CHECK(upper.segment_flags[2] == EdgeFlag::clip);
    const auto& divider = rings[2];
    // the divider has slope 1 at mu_VE = 8
    for (const auto& pt : divider.points) CHECK(pt.second == pt.first);
    auto dense = region_pv_ep(8, 256);
    CHECK(dense[0].points.size() == 4 * 255 + 1);
    CHECK(dense[0].points.back() == dense[0].points.front());
  }

  TEST_CASE("pv-ep region degenerates at mu_VE = 4") {
    auto rings = region_pv_ep(4, 2);
    std::vector<Point2> expect = {{3, 3}, {6, 3}, {3, 3}};
    CHECK(rings[0].points == expect);
  }

  TEST_CASE("psi-tau polygon for STIT contains the STIT point") {
    RegionPolyline r = region_psi_tau({4, 3, q(36, 7)}, 2);
    CHECK(r.points.front() == r.points.back());
    Scalar area = plane::twice_area({r.points.begin(), r.points.end() - 1});
    CHECK(area > 0);
    // inside all half-planes
    TauInterval t = tau_interval({4, 3, q(36, 7)}, 2);
    CHECK(t.lower <= q(4, 3));
    CHECK(q(4, 3) <= t.upper);
  }

  TEST_CASE("sampling is deterministic and feasible") {
    auto a = sample_feasible(60, 3);
    auto b = sample_feasible(60, 3);
    auto c = sample_feasible(60, 4);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    int ftf = 0;
    for (const auto& p : a) {
      CHECK(classify(p).feasible);
      CHECK(p.mu_VE.is_rational());
      if (p.is_facet_to_facet()) ++ftf;
    }
    CHECK(ftf > 0);
    CHECK(ftf < 60);
  }

  TEST_CASE("tau is positive above the curve") {
    for (const auto& p : sample_feasible(400, 21)) {
      if (!p.xi.is_zero() && p.mu_EP > fundamental_curve(p.mu_VE)) CHECK(p.tau.sign() > 0);
    }
  }

  TEST_CASE("bound names round-trip") {
    for (BoundName n : all_bound_names()) CHECK(bound_from_string(to_string(n)) == n);
    CHECK_FALSE(bound_from_string("nope").has_value());
  }
}
