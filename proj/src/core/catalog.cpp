#include "tessparam/catalog.hpp"

#include "tessparam/errors.hpp"
#include "tessparam/feasibility.hpp"
#include "tessparam/transforms.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <stdexcept>

namespace tessparam {

namespace {

Scalar q(long long p, long long d = 1) { return Scalar::ratio(p, d); }
Scalar expr(const char* text) { return Scalar::parse(text); }

CatalogEntry make(std::string id, std::string title, bool ftf, std::string provenance) {
  CatalogEntry e;
  e.id = std::move(id);
  e.title = std::move(title);
  e.ftf = ftf;
  e.provenance = std::move(provenance);
  return e;
}

void set_cyclic(CatalogEntry& e, Scalar ve, Scalar ep, Scalar pv) {
  e.mu_VE = std::move(ve);
  e.mu_EP = std::move(ep);
  e.mu_PV = std::move(pv);
  if (e.ftf) e.xi = e.kappa = e.psi = e.tau = Scalar(0);
}

void set_interior(CatalogEntry& e, Scalar xi, Scalar kappa, Scalar psi, Scalar tau) {
  e.xi = std::move(xi);
  e.kappa = std::move(kappa);
  e.psi = std::move(psi);
  e.tau = std::move(tau);
}

void set_all(CatalogEntry& e, const TessParams& p) {
  e.lambda_V = p.lambda_V;
  set_cyclic(e, p.mu_VE, p.mu_EP, p.mu_PV);
  set_interior(e, p.xi, p.kappa, p.psi, p.tau);
}

PlanarParams planar(Scalar ve, Scalar phi, Scalar evpi = 0, std::optional<Scalar> m2 = std::nullopt) {
  PlanarParams p;
  p.mu_VE = std::move(ve);
  p.phi = std::move(phi);
  p.mu_EVpi = std::move(evpi);
  p.mu_VE2 = std::move(m2);
  return p;
}

// Planar staircase tessellation behind ex14, indexed by n.
PlanarParams staircase_planar(int n) {
  PlanarParams p;
  p.mu_VE = q(2 * (4 * n + 1), 2 * n + 1);
  p.phi = q(2 * n, 2 * n + 1);
  p.mu_EVpi = q(6 * n, 4 * n + 1);
  p.mu_VE2 = q(2 * (4LL * n * n + 9 * n + 4), 2 * n + 1);
  return p;
}

std::vector<CatalogEntry> build_static() {
  std::vector<CatalogEntry> out;
  auto add = [&](CatalogEntry e) { out.push_back(std::move(e)); };

  {
    auto e = make("ex01_poisson_voronoi", "Poisson-Voronoi tessellation", true, "Example 1");
    set_cyclic(e, 4, 3, expr("144*pi^2/(24*pi^2+35)"));
    e.on_fundamental_curve = true;
    add(e);
  }
  {
    auto e = make("ex02_poisson_delaunay", "Poisson-Delaunay tessellation", true, "Example 2");
    set_cyclic(e, expr("2+48*pi^2/35"), expr("144*pi^2/(24*pi^2+35)"), 3);
    e.notes = "mu_VE is also quoted as approximately 15.5; the exact form is stored";
    add(e);
  }
  {
    auto e = make("ex03_poisson_planes", "Poisson plane tessellation", true, "Example 3");
    set_cyclic(e, 6, 4, 4);
    e.notes = "mu_PV = 4 holds for the Poisson plane process";
    add(e);
  }
  {
    auto e = make("ex04_stit", "STIT tessellation", false, "Example 4");
    set_cyclic(e, 4, 3, q(36, 7));
    set_interior(e, 1, q(2, 3), 2, q(4, 3));
    e.on_fundamental_curve = true;
    add(e);
  }
  {
    auto e = make("ex05_cubic_lattice", "Cubes packed in a lattice", true, "Example 5");
    set_cyclic(e, 6, 4, 4);
    e.generator_id = "cubic_lattice";
    add(e);
  }
  struct ColumnCase {
    const char* id;
    const char* title;
    PlanarParams base;
    Scalar ep, pv, psi, tau;
    const char* generator;
  };
  const ColumnCase columns[] = {
      {"ex06a_triangular_prisms", "Triangular prisms in columns", planar(6, 0, 0, Scalar(36)), q(9, 2), q(27, 4), 5,
       4, "prism_columns(base=triangle)"},
      {"ex06b_quadrilateral_prisms", "Quadrilateral prisms in columns", planar(4, 0, 0, Scalar(16)), q(7, 2),
       q(28, 5), 3, 2, "prism_columns(base=square)"},
      {"ex06c_cairo_prisms", "Cairo pentagonal prisms in columns", planar(q(10, 3), 0, 0, q(34, 3)), q(16, 5),
       q(16, 3), q(12, 5), q(7, 5), nullptr},
      {"ex06d_hexagonal_prisms", "Hexagonal prisms in columns", planar(3, 0, 0, Scalar(9)), 3, q(36, 7), 2, 1,
       "prism_columns(base=hexagon)"},
  };
  for (const auto& c : columns) {
    auto e = make(c.id, c.title, false, "Example 6");
    set_cyclic(e, 4, c.ep, c.pv);
    set_interior(e, q(1, 2), 0, c.psi, c.tau);
    if (c.generator) e.generator_id = c.generator;
    e.on_fundamental_curve = e.id == "ex06d_hexagonal_prisms";
    PlanarParams base = c.base;
    e.recipe = "column of planar (mu_VE'=" + base.mu_VE.to_string() + ", second moment " +
               base.mu_VE2->to_string() + ")";
    e.reproduce = [base] { return column(base); };
    add(e);
  }
  {
    auto e = make("ex07_divided_cube", "Cubes divided into three pyramids", true, "Example 7");
    set_cyclic(e, 8, 4, q(16, 5));
    e.generator_id = "divided_cube";
    e.notes = "published values; the block construction itself measures (11, 48/11, 16/5)";
    add(e);
  }
  {
    auto e = make("ex08_divided_delaunay", "Divided Delaunay tessellation", false, "Example 8");
    set_cyclic(e, expr("14*(5+16*pi^2)/(35+32*pi^2)"),
               expr("72*pi^2*(175+176*pi^2)/(7*(5+16*pi^2)*(35+24*pi^2))"),
               expr("9*(175+176*pi^2)/(16*(35+24*pi^2))"));
    set_interior(e, expr("64*pi^2/(7*(5+16*pi^2))"), 0,
                 expr("8*pi^2*(35+528*pi^2)/((35+24*pi^2)*(35+32*pi^2))"),
                 expr("32*pi^2*(102*pi^2-35)/((35+24*pi^2)*(35+32*pi^2))"));
    add(e);
  }
  struct StratumCase {
    const char* id;
    const char* title;
    PlanarParams base;
  };
  const StratumCase strata[] = {
      {"ex09a_stratum_voronoi", "Stratum of the planar Poisson-Voronoi", planar(3, 0)},
      {"ex09b_stratum_delaunay", "Stratum of the planar Poisson-Delaunay", planar(6, 0)},
      {"ex09c_stratum_superposition", "Stratum of the Voronoi-Delaunay superposition", planar(4, 0)},
      {"ex09d_stratum_stit", "Stratum of the planar STIT", planar(3, 1)},
  };
  const TessParams stratum_values[] = {
      {1, 5, q(18, 5), q(9, 2), 0, 0, 0, 0},
      {1, 8, q(9, 2), q(18, 5), 0, 0, 0, 0},
      {1, 6, 4, 4, 0, 0, 0, 0},
      {1, 5, q(18, 5), q(9, 2), q(2, 5), 0, 2, 1},
  };
  for (int i = 0; i < 4; ++i) {
    const auto& s = strata[i];
    auto e = make(s.id, s.title, stratum_values[i].xi.is_zero(), "Example 9");
    set_all(e, stratum_values[i]);
    e.on_fundamental_curve = true;
    PlanarParams base = s.base;
    e.recipe = "stratum of planar (mu_VE'=" + base.mu_VE.to_string() + ", phi=" + base.phi.to_string() + ")";
    e.reproduce = [base] { return stratum(base); };
    add(e);
  }
  {
    auto e = make("ex10a_central_voronoi", "Central-point model of the Poisson-Voronoi", true, "Example 10(a)");
    set_cyclic(e, expr("288*pi^2/(35+24*pi^2)"), 4, expr("576*pi^2/(7*(5+24*pi^2))"));
    e.notes = "interior values follow from the facet-to-facet start";
    e.recipe = "central point of ex01_poisson_voronoi";
    e.reproduce = [] { return central_point(catalog_get("ex01_poisson_voronoi").params()); };
    add(e);
  }
  {
    auto e = make("ex10b_central_delaunay", "Central-point model of the Poisson-Delaunay", true, "Example 10(b)");
    set_cyclic(e, expr("10*(7+24*pi^2)/(35+24*pi^2)"), expr("576*pi^2/(5*(7+24*pi^2))"), 3);
    e.notes =
        "mu_EP is the value of the central-point map; the printed form 576pi^2/(7(5+24pi^2)) "
        "repeats mu_PV of 10(a) and would put this simplicial model off the fundamental curve";
    e.on_fundamental_curve = true;
    e.recipe = "central point of ex02_poisson_delaunay";
    e.reproduce = [] { return central_point(catalog_get("ex02_poisson_delaunay").params()); };
    add(e);
  }
  {
    auto e = make("ex10c_central_stit", "Central-point model of STIT", false, "Example 10(c)");
    set_cyclic(e, q(40, 7), q(21, 5), q(84, 19));
    set_interior(e, q(3, 5), q(4, 7), q(24, 7), q(20, 7));
    e.recipe = "central point of ex04_stit";
    e.reproduce = [] { return central_point(catalog_get("ex04_stit").params()); };
    add(e);
  }
  {
    auto e = make("ex10d_central_cubic", "Central-point model of the cubic lattice", true, "Example 10(d)");
    set_cyclic(e, 11, q(48, 11), q(16, 5));
    e.generator_id = "central_point(cubic_lattice)";
    e.recipe = "central point of ex05_cubic_lattice";
    e.reproduce = [] { return central_point(catalog_get("ex05_cubic_lattice").params()); };
    add(e);
  }
  {
    auto e = make("ex10e_central_triangular_prisms", "Central-point model of the triangular prisms", false,
                  "Example 10(e)");
    set_cyclic(e, 6, q(23, 4), q(69, 13));
    set_interior(e, q(1, 4), 0, q(15, 2), q(27, 4));
    e.recipe = "central point of ex06a_triangular_prisms";
    e.reproduce = [] { return central_point(catalog_get("ex06a_triangular_prisms").params()); };
    add(e);
  }
  auto local = [&](const std::string& id) {
    for (const auto& e : out)
      if (e.id == id) return e.params();
    throw std::logic_error("catalog is missing " + id);
  };
  for (const char* variant : {"a", "b"}) {
    bool doubled = std::string(variant) == "a";
    auto mix = [doubled](const TessParams& delaunay, TessParams prisms) {
      if (doubled) prisms.lambda_V = 2;
      return mixture({{delaunay, q(4, 5)}, {prisms, q(1, 5)}});
    };
    auto e = make(std::string("ex13") + variant + "_mixture", "Mixture of ex02 (share 4/5) and ex10e", false,
                  "Example 13");
    set_all(e, mix(local("ex02_poisson_delaunay"), local("ex10e_central_triangular_prisms")));
    auto recipe = [mix] {
      return mix(catalog_get("ex02_poisson_delaunay").params(),
                 catalog_get("ex10e_central_triangular_prisms").params());
    };
    e.notes = doubled ? "vertex intensity of the ex10e component is twice that of ex02"
                      : "both components have equal vertex intensity";
    e.recipe = "mixture of ex02_poisson_delaunay and ex10e_central_triangular_prisms";
    e.reproduce = recipe;
    add(e);
  }
  {
    PlanarParams base = staircase_planar(8);
    auto e = make("ex14_column_n8", "Column tessellation over the n = 8 planar example", false, "Example 14");
    set_all(e, column(base));
    e.notes = "mu_EP = 431/66";
    e.recipe = "column of the n = 8 planar tessellation";
    e.reproduce = [base] { return column(base); };
    add(e);
  }
  {
    auto e = make("ex15_split_prisms", "Cubes split into prisms by alternating diagonal planes", false,
                  "Example 15");
    set_cyclic(e, 10, 4, q(10, 3));
    set_interior(e, q(2, 5), 0, 0, 0);
    e.generator_id = "split_prism";
    add(e);
  }
  {
    auto e = make("ex16_parallel_pyramids", "Cubes split into three pyramids with parallel diagonals", false,
                  "Example 16");
    set_cyclic(e, 14, q(27, 7), 3);
    set_interior(e, q(3, 7), 0, 0, 0);
    e.generator_id = "parallel_pyramids";
    add(e);
  }
  {
    auto e = make("ex17_stratum_prisms", "Strata of triangular prisms, every second one subdivided", false,
                  "Example 17");
    set_cyclic(e, q(22, 3), q(42, 11), q(7, 2));
    set_interior(e, q(6, 11), q(2, 3), 0, 0);
    e.generator_id = "stratum_prism";
    add(e);
  }
  struct Partial {
    const char* id;
    const char* title;
    Scalar ve;
    bool ftf;
  };
  const Partial partials[] = {
      {"ex18a_rhombic_dodecahedra", "Rhombic dodecahedron tiling", q(16, 3), true},
      {"ex18b_cut_rhombic_dodecahedra", "Rhombic dodecahedra cut into smaller cells", 8, false},
      {"ex18c_cut_rhombic_dodecahedra", "Rhombic dodecahedra cut into smaller cells", 10, false},
  };
  for (const auto& p : partials) {
    auto e = make(p.id, p.title, p.ftf, "Example 18");
    e.mu_VE = p.ve;
    e.mu_EP = 3;
    e.notes = "only (mu_VE, mu_EP) is known";
    add(e);
  }
  return out;
}

const std::vector<CatalogEntry>& static_entries() {
  static const std::vector<CatalogEntry> entries = build_static();
  return entries;
}

const char* kSpokeId = "ex11_spoke_cube";
const char* kCoreId = "ex12_core_prism_cube";

std::string family_id(const char* base, int k, int n) {
  return std::string(base) + "(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
}

}  // namespace

bool CatalogEntry::fully_specified() const {
  return mu_VE && mu_EP && mu_PV && xi && kappa && psi && tau;
}

TessParams CatalogEntry::params() const {
  if (!fully_specified()) throw std::logic_error("catalog entry " + id + " is only partially specified");
  return {lambda_V, *mu_VE, *mu_EP, *mu_PV, *xi, *kappa, *psi, *tau};
}

CatalogEntry spoke_cube_entry(int k, int n) {
  if (k < 0 || n < 0) throw UnknownEntry("spoke cube parameters must be non-negative");
  auto e = make(family_id(kSpokeId, k, n), "Cube with a subdivided central spoke", true, "Example 11");
  long long K = k, N = n;
  long long vertices = 2 + K + 2 * N;
  long long edges_num = 12 + 5 * K + 12 * N + 4 * K * N;
  set_cyclic(e, q(2 * edges_num, vertices), q(8 * (7 + 3 * K) * (1 + N), edges_num),
             q(4 * (7 + 3 * K), 9 + 4 * K));
  e.extra = {{"mu_VP", q(8 * (7 + 3 * K) * (1 + N), vertices)}, {"mu_VZ", q(4 * (9 + 4 * K) * (1 + N), vertices)}};
  e.generator_id = "spoke_cube(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
  return e;
}

CatalogEntry core_prism_cube_entry(int k, int n) {
  if (k < 0 || n < 0) throw UnknownEntry("core prism parameters must be non-negative");
  auto e = make(family_id(kCoreId, k, n), "Cube around a stacked prism core", true, "Example 12");
  long long K = k, N = n;
  long long a = 15 + 8 * K + 16 * N + 8 * K * N;
  long long b = 5 + 4 * K + 6 * N + 4 * K * N;
  long long c = 15 + 5 * K + 14 * N + 4 * K * N;
  long long d = 5 + K + 4 * N;
  long long m = (5 + 2 * K) * (1 + N);
  set_cyclic(e, q(2 * a, b), q(12 * m, a), q(12 * m, c));
  e.extra = {{"mu_ZV", q(8 * m, d)}, {"mu_ZE", q(12 * m, d)}, {"mu_ZP", q(2 * c, d)}};
  e.on_fundamental_curve = true;
  e.generator_id = "core_prism_cube(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
  return e;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& e : static_entries()) ids.push_back(e.id);
  for (auto [k, n] : {std::pair{0, 0}, {2, 0}, {2, 1}}) ids.push_back(family_id(kSpokeId, k, n));
  for (auto [k, n] : {std::pair{0, 0}, {3, 3}}) ids.push_back(family_id(kCoreId, k, n));
  std::sort(ids.begin(), ids.end());
  return ids;
}

CatalogEntry catalog_get(const std::string& id) {
  for (const auto& e : static_entries())
    if (e.id == id) return e;
  static const std::regex family(R"((ex11_spoke_cube|ex12_core_prism_cube)\(k=(\d+),n=(\d+)\))");
  std::smatch m;
  if (std::regex_match(id, m, family)) {
    int k = std::stoi(m[2]), n = std::stoi(m[3]);
    return m[1] == kSpokeId ? spoke_cube_entry(k, n) : core_prism_cube_entry(k, n);
  }
  throw UnknownEntry("unknown catalog entry '" + id + "'");
}

CatalogReport verify_catalog() {
  CatalogReport rep;
  auto check = [&](const CatalogEntry& e, const std::string& name, bool ok, const std::string& detail = "") {
    ++rep.checks;
    if (!ok) rep.failures.push_back({e.id, name, detail});
  };
  for (const auto& id : catalog_ids()) {
    CatalogEntry e = catalog_get(id);
    ++rep.entries;
    Scalar curve = fundamental_curve(*e.mu_VE);
    check(e, "cyclic_minimums", *e.mu_VE >= 4 && *e.mu_EP >= 3);
    if (e.ftf) check(e, "ftf_below_curve", *e.mu_EP <= curve);
    if (!e.fully_specified()) continue;

    TessParams p = e.params();
    FeasibilityReport f = classify(p);
    std::string viol;
    for (auto b : f.violations()) viol += std::string(" ") + to_string(b);
    check(e, "feasible", f.feasible, viol);
    check(e, "regime", (f.regime == Regime::facet_to_facet) == e.ftf);
    if (e.ftf) check(e, "ftf_interior_zero", p.kappa.is_zero() && p.psi.is_zero() && p.tau.is_zero());
    if (e.on_fundamental_curve) check(e, "on_fundamental_curve", p.mu_EP == curve);
    if (!e.ftf && p.mu_EP > curve) check(e, "tau_positive_above_curve", p.tau.sign() > 0);

    DerivedSummary d = derive(p);
    IdentityReport ids = check_identities(d);
    std::string bad;
    for (const auto& s : ids.failures()) bad += " " + s;
    check(e, "identities", ids.ok(), bad);

    static const std::map<std::string, std::pair<int, int>> cells = {
        {"mu_VP", {kV, kP}}, {"mu_VZ", {kV, kZ}}, {"mu_ZV", {kZ, kV}}, {"mu_ZE", {kZ, kE}}, {"mu_ZP", {kZ, kP}}};
    for (const auto& [name, value] : e.extra) {
      auto [x, y] = cells.at(name);
      check(e, "closed_form_" + name, d.adjacency[x][y] == value,
            d.adjacency[x][y].to_string() + " vs " + value.to_string());
    }
    if (e.reproduce) {
      TessParams r = e.reproduce();
      bool same = r.mu_VE == p.mu_VE && r.mu_EP == p.mu_EP && r.mu_PV == p.mu_PV && r.xi == p.xi &&
                  r.kappa == p.kappa && r.psi == p.psi && r.tau == p.tau;
      check(e, "reproduced_by_" + e.recipe, same);
    }
  }
  return rep;
}

}  // namespace tessparam
