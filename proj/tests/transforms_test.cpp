#include <doctest.h>

#include "tessparam/catalog.hpp"
#include "tessparam/errors.hpp"
#include "tessparam/feasibility.hpp"
#include "tessparam/transforms.hpp"

#include <random>

using namespace tessparam;

namespace {

Scalar q(long long a, long long b = 1) { return Scalar::ratio(a, b); }

PlanarParams planar(Scalar ve, Scalar phi, std::optional<Scalar> evpi = std::nullopt,
                    std::optional<Scalar> m2 = std::nullopt) {
  PlanarParams p;
  p.mu_VE = ve;
  p.phi = phi;
  p.mu_EVpi = evpi;
  p.mu_VE2 = m2;
  return p;
}

bool same_tuple(const TessParams& a, const TessParams& b) {
  return a.mu_VE == b.mu_VE && a.mu_EP == b.mu_EP && a.mu_PV == b.mu_PV && a.xi == b.xi && a.kappa == b.kappa &&
         a.psi == b.psi && a.tau == b.tau;
}

TessParams entry(const char* id) { return catalog_get(id).params(); }

// Planar tuples with consistent pi-vertex counts: each pi-vertex has three edges.
std::vector<PlanarParams> sample_planar(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<PlanarParams> out;
  while (static_cast<int>(out.size()) < count) {
    Scalar phi = q(std::uniform_int_distribution<int>(0, 12)(rng), 12);
    Scalar top = 6 - 2 * phi;
    Scalar ve = 3 + (top - 3) * q(std::uniform_int_distribution<int>(0, 24)(rng), 24);
    Scalar m2 = ve * ve + q(std::uniform_int_distribution<int>(0, 40)(rng), 8);
    out.push_back(planar(ve, phi, 6 * phi / ve, m2));
  }
  return out;
}

}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("stratum goldens") {
    CHECK(same_tuple(stratum(planar(3, 0)), entry("ex09a_stratum_voronoi")));
    CHECK(same_tuple(stratum(planar(6, 0)), entry("ex09b_stratum_delaunay")));
    CHECK(same_tuple(stratum(planar(4, 0)), entry("ex09c_stratum_superposition")));
    CHECK(same_tuple(stratum(planar(3, 1)), entry("ex09d_stratum_stit")));
    CHECK_THROWS_AS(stratum(planar(5, 1)), InvalidPlanar);
  }

  TEST_CASE("column goldens") {
    CHECK(same_tuple(column(planar(4, 0, 0, 16)), entry("ex06b_quadrilateral_prisms")));
    CHECK(same_tuple(column(planar(q(10, 3), 0, 0, q(34, 3))), entry("ex06c_cairo_prisms")));
    TessParams n8 = column(planar(q(66, 17), q(16, 17), q(16, 11), q(664, 17)));
    CHECK(n8.mu_EP == q(431, 66));
    CHECK(n8.mu_VE == 4);
    CHECK(n8.lambda_V == q(66, 17));
    CHECK_THROWS_AS(column(planar(4, 0)), InvalidPlanar);
    CHECK_THROWS_AS(column(planar(4, 0, 0, 15)), InvalidPlanar);
    // pi-vertices without any pi-edges are inconsistent
    CHECK_THROWS_AS(column(planar(4, q(1, 2), 0, 16)), NegativeInterior);
  }

  TEST_CASE("central point goldens") {
    CHECK(same_tuple(central_point(entry("ex05_cubic_lattice")), entry("ex10d_central_cubic")));
    CHECK(same_tuple(central_point(entry("ex04_stit")), entry("ex10c_central_stit")));
    CHECK(same_tuple(central_point(entry("ex06a_triangular_prisms")), entry("ex10e_central_triangular_prisms")));
    CHECK(same_tuple(central_point(entry("ex01_poisson_voronoi")), entry("ex10a_central_voronoi")));
    TessParams cubic = central_point(entry("ex05_cubic_lattice"));
    CHECK(cubic.lambda_V == 2);
  }

  TEST_CASE("central point of a simplicial tessellation stays on the curve") {
    TessParams d = central_point(entry("ex02_poisson_delaunay"));
    CHECK(d.mu_PV == 3);
    CHECK(d.mu_EP == fundamental_curve(d.mu_VE));
    CHECK(d.mu_EP == Scalar::parse("576*pi^2/(5*(7+24*pi^2))"));
  }

  TEST_CASE("central point keeps the regime") {
    for (const auto& p : sample_feasible(100, 5)) {
      TessParams c = central_point(p);
      CHECK(c.is_facet_to_facet() == p.is_facet_to_facet());
      CHECK(classify(c).feasible);
    }
  }

  TEST_CASE("iterates approach (8, 9/2)") {
    auto it = iterate_central_point(entry("ex06a_triangular_prisms"), 6);
    REQUIRE(it.size() == 6);
    CHECK(same_tuple(it[0], entry("ex10e_central_triangular_prisms")));
    auto dist2 = [](const TessParams& p) {
      Scalar dx = p.mu_VE - 8, dy = p.mu_EP - q(9, 2);
      return dx * dx + dy * dy;
    };
    Scalar prev = dist2(entry("ex06a_triangular_prisms"));
    for (const auto& p : it) {
      CHECK(dist2(p) < prev);
      prev = dist2(p);
    }
  }

  TEST_CASE("planar validation") {
    PlanarReport stit = planar_validate(planar(3, 1));
    CHECK(stit.feasible);
    PlanarReport hex = planar_validate(planar(6, 0));
    CHECK(hex.feasible);
    bool boundary = false;
    for (const auto& b : hex.bounds)
      if (b.name == "VE_max") boundary = b.status == BoundStatus::boundary;
    CHECK(boundary);
    CHECK_FALSE(planar_validate(planar(5, 1)).feasible);
    CHECK_FALSE(planar_validate(planar(4, 0, 0, 10)).feasible);
  }

  TEST_CASE("planar constructions land in the feasible region") {
    for (const auto& pl : sample_planar(200, 9)) {
      TessParams s = stratum(pl);
      CHECK(s.mu_EP == fundamental_curve(s.mu_VE));
      CHECK(s.mu_VE >= 5);
      CHECK(s.mu_VE <= 8 - s.psi);
      CHECK(s.is_facet_to_facet() == pl.phi.is_zero());
      CHECK(classify(s).feasible);
      TessParams c = column(pl);
      CHECK(c.mu_VE == 4);
      CHECK(c.xi >= q(1, 2));
      CHECK(classify(c).feasible);
    }
  }

  TEST_CASE("mixture with one component is the identity") {
    TessParams p = entry("ex04_stit");
    p.lambda_V = 3;
    CHECK(mixture({{p, 1}}) == p);
  }

  TEST_CASE("mixture of Delaunay and the prism central-point model") {
    TessParams d = entry("ex02_poisson_delaunay");
    TessParams e = entry("ex10e_central_triangular_prisms");
    TessParams m = mixture({{d, q(4, 5)}, {e, q(1, 5)}});
    // equal vertex intensities: mu_VE averages with the shares,
    // mu_EP with share * mu_VE
    Scalar ve = q(4, 5) * d.mu_VE + q(1, 5) * 6;
    Scalar ep = (q(4, 5) * d.mu_VE * d.mu_EP + q(1, 5) * 6 * q(23, 4)) / ve;
    CHECK(m.mu_VE == ve);
    CHECK(m.mu_EP == ep);
    CHECK(m.lambda_V == 1);
    MixtureCurve curve = mixture_curve(d, e);
    CHECK(curve.ep_at(m.mu_VE) == m.mu_EP);
    CHECK(same_tuple(m, entry("ex13b_mixture")));
    CHECK(classify(m).feasible);
  }

  TEST_CASE("mixture share errors") {
    TessParams p = entry("ex05_cubic_lattice");
    CHECK_THROWS_AS(mixture({}), InvalidShares);
    CHECK_THROWS_AS(mixture({{p, q(1, 2)}, {p, q(1, 3)}}), InvalidShares);
    CHECK_THROWS_AS(mixture({{p, q(3, 2)}, {p, q(-1, 2)}}), InvalidShares);
  }

  TEST_CASE("mixture curves") {
    MixtureCurve c = mixture_curve(entry("ex01_poisson_voronoi"), entry("ex09b_stratum_delaunay"));
    CHECK(c.A == 6);
    CHECK(c.B == 12);
    TessParams p7 = entry("ex07_divided_cube"), p8 = entry("ex08_divided_delaunay");
    MixtureCurve d = mixture_curve(p8, p7);
    CHECK(d.ep_at(p7.mu_VE) == p7.mu_EP);
    CHECK(d.ep_at(p8.mu_VE) == p8.mu_EP);
    MixtureCurve v = mixture_curve(entry("ex06a_triangular_prisms"), entry("ex06b_quadrilateral_prisms"));
    CHECK(v.vertical);
    CHECK_FALSE(v.single_point);
    CHECK(v.ep_low == q(7, 2));
    MixtureCurve s = mixture_curve(p7, p7);
    CHECK(s.single_point);
  }

  TEST_CASE("mixtures of feasible tuples stay feasible") {
    auto pool = sample_feasible(80, 17);
    std::mt19937 rng(2);
    for (int i = 0; i + 1 < static_cast<int>(pool.size()); i += 2) {
      TessParams a = pool[i], b = pool[i + 1];
      a.lambda_V = q(std::uniform_int_distribution<int>(1, 5)(rng));
      Scalar share = q(std::uniform_int_distribution<int>(0, 10)(rng), 10);
      TessParams m = mixture({{a, share}, {b, 1 - share}});
      CHECK(classify(m).feasible);
    }
  }
}
