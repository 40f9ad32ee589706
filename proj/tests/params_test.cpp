#include <doctest.h>

#include "tessparam/errors.hpp"
#include "tessparam/feasibility.hpp"
#include "tessparam/params.hpp"
#include "tessparam/params_io.hpp"

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

}  // namespace

TEST_SUITE("params") {
  TEST_CASE("cubic lattice adjacency") {
    // One vertex, three edges, three squares and one cube per lattice cell.
    DerivedSummary s = derive(tuple(6, 4, 4));
    CHECK(s.lambda_E == 3);
    CHECK(s.lambda_P == 3);
    CHECK(s.lambda_Z == 1);
    const int expected[4][4] = {{1, 6, 12, 8}, {2, 1, 4, 4}, {4, 4, 1, 2}, {8, 12, 6, 1}};
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) CHECK(s.adjacency[x][y] == expected[x][y]);
    CHECK(s.nu0 == 8);
    CHECK(s.nu1 == 12);
    CHECK(s.nu2 == 6);
    CHECK(s.nu_FS == 4);
    CHECK(s.nu_PS == 4);
    CHECK(s.lambda_Z2 == 6);
    CHECK(s.lambda_Z1 == 12);
    CHECK(s.lambda_Z0 == 8);
    CHECK(s.lambda_Z2_sides == 24);
    CHECK(s.lambda_P_sides == 12);
    CHECK(check_identities(s).ok());
  }

  TEST_CASE("scaling the vertex intensity scales every intensity") {
    TessParams p = tuple(6, 4, 4);
    p.lambda_V = Scalar::ratio(5, 2);
    DerivedSummary s = derive(p);
    CHECK(s.lambda_Z == Scalar::ratio(5, 2));
    CHECK(s.lambda_E == Scalar::ratio(15, 2));
    CHECK(s.adjacency[kZ][kV] == 8);
  }

  TEST_CASE("Poisson-Voronoi faces per cell") {
    // Classical value 2 + 48 pi^2 / 35 for the mean face count of the typical cell.
    DerivedSummary s = derive(tuple(4, 3, Scalar::parse("144*pi^2/(24*pi^2+35)")));
    Scalar faces = 2 + 48 * Scalar::pi_squared() / 35;
    CHECK(s.adjacency[kZ][kP] == faces);
    CHECK(s.adjacency[kZ][kE] == 3 * (faces - 2));
    CHECK(s.adjacency[kZ][kV] == 2 * (faces - 2));
    CHECK(check_identities(s).ok());
  }

  TEST_CASE("STIT cells look like Poisson polyhedra") {
    // Typical STIT cell: 8 apices, 12 ridges, 6 facets on average.
    DerivedSummary s = derive(tuple(4, 3, Scalar::ratio(36, 7), 1, Scalar::ratio(2, 3), 2, Scalar::ratio(4, 3)));
    CHECK(s.nu0 == 8);
    CHECK(s.nu1 == 12);
    CHECK(s.nu2 == 6);
    CHECK(s.adjacency[kZ][kV] == 24);
    CHECK(s.mu_VE_pi == 4);
    CHECK(check_identities(s).ok());
  }

  TEST_CASE("f evaluation") {
    TessParams p = tuple(6, 4, 4);
    CHECK(f_eval(p, 2) == 16);
    CHECK(f_eval(p, 4) == 8);
    CHECK(f_eval(p, 6) == 0);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(derive(tuple(6, 4, 6)), DegenerateCellIntensity);
    CHECK_THROWS_AS(derive(tuple(6, 4, 7)), DegenerateCellIntensity);
    CHECK_THROWS_AS(derive(tuple(6, -4, 4)), InvalidParams);
    CHECK_THROWS_AS(derive(tuple(6, 4, 4, 0, 0, 1, 0)), InvalidParams);
    CHECK_THROWS_AS(derive(tuple(6, 4, 4, Scalar::ratio(1, 2), -1)), InvalidParams);
    TessParams p = tuple(6, 4, 4);
    p.lambda_V = 0;
    CHECK_THROWS_AS(derive(p), InvalidParams);
  }

  TEST_CASE("identities hold on sampled tuples") {
    for (const auto& p : sample_feasible(300, 11)) {
      IdentityReport r = check_identities(derive(p));
      CHECK_MESSAGE(r.ok(), r.failures().front());
    }
  }

  TEST_CASE("a perturbed summary is caught") {
    DerivedSummary s = derive(tuple(6, 4, 4));
    s.adjacency[kZ][kE] += 1;
    IdentityReport r = check_identities(s);
    CHECK_FALSE(r.ok());
    CHECK(r.failures().size() >= 2);
  }
}

TEST_SUITE("params") {
  TEST_CASE("inline assignments with short keys") {
    ParamInput in = params_from_assignments("ve=4,ep=3,pv=36/7,xi=1,kappa=2/3,psi=2,tau=4/3");
    CHECK(in.complete());
    CHECK(in.params == tuple(4, 3, Scalar::ratio(36, 7), 1, Scalar::ratio(2, 3), 2, Scalar::ratio(4, 3)));
    ParamInput partial = params_from_assignments("mu_VE=6,mu_EP=4,mu_PV=4");
    CHECK_FALSE(partial.complete());
    CHECK(partial.params.xi.is_zero());
    CHECK_THROWS_AS(params_from_assignments("ve=4,mu_VE=5,ep=3,pv=4"), ParseError);
    CHECK_THROWS_AS(params_from_assignments("ve=4,ep=3"), ParseError);
    CHECK_THROWS_AS(params_from_assignments("ve=4,ep=3,pv=4,sigma=1"), ParseError);
    CHECK_THROWS_AS(params_from_assignments("ve=4,ep=3,pv"), ParseError);
  }

  TEST_CASE("parameter files round-trip and accept every scalar encoding") {
    TessParams p = tuple(4, 3, Scalar::linear_fraction(0, 144, 35, 24), 1, 0, 0, 0);
    p.kappa = Scalar::ratio(1, 3);
    p.lambda_V = Scalar::ratio(5, 2);
    CHECK(params_from_json(params_to_json(p)).params == p);
    ParamInput in = params_from_json(
        R"({"params": {"mu_VE": 4.5, "mu_EP": {"exact": "3"}, "mu_PV": {"a": 0, "b": 144, "c": 35, "d": 24}}})");
    CHECK(in.params.mu_VE == Scalar::ratio(9, 2));
    CHECK(in.params.mu_PV == Scalar::linear_fraction(0, 144, 35, 24));
    CHECK_THROWS_AS(params_from_json("[1, 2]"), ParseError);
    CHECK_THROWS_AS(params_from_json(R"({"mu_VE": 4, "mu_EP": 3, "mu_PV": {"a": 1}})"), ParseError);
    CHECK_THROWS_AS(params_from_json("{"), ParseError);
  }
}
