#include <doctest.h>

#include "tessparam/catalog.hpp"
#include "tessparam/errors.hpp"
#include "tessparam/feasibility.hpp"

#include <set>

using namespace tessparam;

TEST_SUITE("catalog") {
  TEST_CASE("verification passes") {
    CatalogReport r = verify_catalog();
    for (const auto& f : r.failures) MESSAGE(f.id << ": " << f.check << " " << f.detail);
    CHECK(r.ok());
    CHECK(r.entries == catalog_ids().size());
    CHECK(r.checks > 100);
  }

  TEST_CASE("stored values") {
    TessParams stit = catalog_get("ex04_stit").params();
    CHECK(stit.mu_VE == 4);
    CHECK(stit.mu_PV == Scalar::ratio(36, 7));
    CHECK(stit.kappa == Scalar::ratio(2, 3));
    CatalogEntry dd = catalog_get("ex08_divided_delaunay");
    CHECK(dd.mu_VE->to_double() == doctest::Approx(6.50).epsilon(0.001));
    CHECK(dd.mu_EP->to_double() == doctest::Approx(4.38).epsilon(0.001));
    CHECK(dd.mu_PV->to_double() == doctest::Approx(3.96).epsilon(0.002));
    CHECK(dd.xi->to_double() == doctest::Approx(0.55).epsilon(0.01));
    CHECK(dd.tau->to_double() == doctest::Approx(3.22).epsilon(0.002));
    CHECK(catalog_get("ex14_column_n8").mu_EP == Scalar::ratio(431, 66));
  }

  TEST_CASE("families follow their closed forms") {
    CatalogEntry s = catalog_get("ex11_spoke_cube(k=2,n=0)");
    CHECK(s.mu_VE == Scalar::ratio(2 * 22, 4));
    CHECK(s.generator_id == "spoke_cube(k=2,n=0)");
    CatalogEntry big = catalog_get("ex11_spoke_cube(k=100,n=100)");
    CHECK(classify(big.params()).feasible);
    CHECK(*big.mu_EP < fundamental_curve(*big.mu_VE));
    CatalogEntry c = catalog_get("ex12_core_prism_cube(k=3,n=3)");
    CHECK(*c.mu_EP == fundamental_curve(*c.mu_VE));
    CHECK(c.extra.size() == 3);
  }

  TEST_CASE("partial entries") {
    CatalogEntry e = catalog_get("ex18b_cut_rhombic_dodecahedra");
    CHECK_FALSE(e.fully_specified());
    CHECK(e.mu_VE == Scalar(8));
    CHECK_THROWS_AS(e.params(), std::logic_error);
  }

  TEST_CASE("ids") {
    auto ids = catalog_ids();
    std::set<std::string> unique(ids.begin(), ids.end());
    CHECK(unique.size() == ids.size());
    CHECK(unique.count("ex01_poisson_voronoi"));
    CHECK(unique.count("ex17_stratum_prisms"));
    CHECK_THROWS_AS(catalog_get("ex99"), UnknownEntry);
    CHECK_THROWS_AS(catalog_get("ex11_spoke_cube(k=-1,n=0)"), UnknownEntry);
  }

  TEST_CASE("regimes match stored flags") {
    for (const auto& id : catalog_ids()) {
      CatalogEntry e = catalog_get(id);
      if (!e.fully_specified()) continue;
      TessParams p = e.params();
      CHECK_MESSAGE(p.is_facet_to_facet() == e.ftf, id);
      if (e.ftf) CHECK(p.mu_EP <= fundamental_curve(p.mu_VE));
    }
  }
}
