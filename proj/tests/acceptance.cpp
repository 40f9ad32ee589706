// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--expect-red N[,N...]]
// The exit status is 0 when the failing criteria are exactly the expected
// ones, so a known red item stays visible without hiding regressions.

#include "tessparam/catalog.hpp"
#include "tessparam/engine/complex.hpp"
#include "tessparam/engine/generators.hpp"
#include "tessparam/feasibility.hpp"
#include "tessparam/transforms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace tessparam;
using namespace tessparam::engine;

namespace {

using Problems = std::vector<std::string>;

Scalar q(long long a, long long b = 1) { return Scalar::ratio(a, b); }

std::string tuple_text(const TessParams& p) {
  return "(" + p.mu_VE.to_string() + ", " + p.mu_EP.to_string() + ", " + p.mu_PV.to_string() + ", " +
         p.xi.to_string() + ", " + p.kappa.to_string() + ", " + p.psi.to_string() + ", " + p.tau.to_string() + ")";
}

bool same_tuple(const TessParams& a, const TessParams& b) {
  return a.mu_VE == b.mu_VE && a.mu_EP == b.mu_EP && a.mu_PV == b.mu_PV && a.xi == b.xi && a.kappa == b.kappa &&
         a.psi == b.psi && a.tau == b.tau;
}

TessParams tuple(Scalar ve, Scalar ep, Scalar pv) {
  TessParams p;
  p.mu_VE = ve;
  p.mu_EP = ep;
  p.mu_PV = pv;
  return p;
}

PlanarParams planar(Scalar ve, Scalar phi, std::optional<Scalar> evpi = std::nullopt,
                    std::optional<Scalar> m2 = std::nullopt) {
  PlanarParams p;
  p.mu_VE = ve;
  p.phi = phi;
  p.mu_EVpi = evpi;
  p.mu_VE2 = m2;
  return p;
}

Scalar extra(const CatalogEntry& e, const std::string& name) {
  for (const auto& [k, v] : e.extra)
    if (k == name) return v;
  throw std::logic_error("entry " + e.id + " has no " + name);
}

MeasuredParams measured(const std::string& generator) {
  return measure(PeriodicComplex::load(generate(generator)));
}

struct Linked {
  const char* generator;
  const char* entry;
};

const Linked kOracleGenerators[] = {
    {"cubic_lattice", "ex05_cubic_lattice"},
    {"divided_cube", "ex07_divided_cube"},
    {"parallel_pyramids", "ex16_parallel_pyramids"},
    {"split_prism", "ex15_split_prisms"},
    {"prism_columns(base=square)", "ex06b_quadrilateral_prisms"},
    {"prism_columns(base=triangle)", "ex06a_triangular_prisms"},
    {"stratum_prism", "ex17_stratum_prisms"},
};

const std::pair<int, int> kSpokeCases[] = {{0, 0}, {2, 0}, {2, 1}};

std::vector<std::string> all_generators() {
  std::vector<std::string> ids;
  for (const auto& g : kOracleGenerators) ids.push_back(g.generator);
  for (auto [k, n] : kSpokeCases) ids.push_back("spoke_cube(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")");
  ids.push_back("core_prism_cube(k=3,n=3)");
  ids.push_back("prism_columns(base=hexagon)");
  ids.push_back("split_prism(aligned)");
  ids.push_back("central_point(cubic_lattice)");
  ids.push_back("central_point(prism_columns(base=triangle))");
  return ids;
}

// ------------------------------------------------------------------ 1

Problems table_algebra() {
  Problems out;
  DerivedSummary s = derive(tuple(6, 4, 4));
  auto expect = [&](const char* name, const Scalar& got, const Scalar& want) {
    if (got != want) out.push_back(std::string(name) + " = " + got.to_string() + ", expected " + want.to_string());
  };
  expect("lambda_E", s.lambda_E, 3);
  expect("lambda_P", s.lambda_P, 3);
  expect("lambda_Z", s.lambda_Z, 1);
  expect("mu_ZV", s.adjacency[kZ][kV], 8);
  expect("mu_ZE", s.adjacency[kZ][kE], 12);
  expect("mu_ZP", s.adjacency[kZ][kP], 6);
  for (const auto& p : sample_feasible(10000, 11)) {
    DerivedSummary d = derive(p);
    IdentityReport ids = check_identities(d);
    for (const auto& f : ids.failures()) out.push_back(tuple_text(p) + ": identity " + f);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        if (d.lambda(x) * d.adjacency[x][y] != d.lambda(y) * d.adjacency[y][x])
          out.push_back(tuple_text(p) + ": symmetry fails for " + primitive_letter(x) + primitive_letter(y));
    if (out.size() > 10) break;
  }
  return out;
}

// ------------------------------------------------------------------ 2

Problems catalog_feasibility() {
  Problems out;
  int checked = 0;
  for (const auto& id : catalog_ids()) {
    if (id.rfind("ex18", 0) == 0) continue;
    CatalogEntry e = catalog_get(id);
    if (!e.fully_specified()) continue;
    ++checked;
    FeasibilityReport r = classify(e.params());
    if (!r.feasible) {
      std::string names;
      for (auto v : r.violations()) names += std::string(" ") + to_string(v);
      out.push_back(id + " violates" + names);
    }
  }
  auto flagged = [](const std::string& id, BoundName b) {
    auto flags = classify(catalog_get(id).params()).boundary_flags();
    return std::find(flags.begin(), flags.end(), b) != flags.end();
  };
  if (!flagged("ex01_poisson_voronoi", BoundName::EP_ftf_max))
    out.push_back("ex01 is not reported on the fundamental curve");
  if (!flagged("ex16_parallel_pyramids", BoundName::PV_min)) out.push_back("ex16 is not reported on mu_PV = 3");
  if (checked < 20) out.push_back("only " + std::to_string(checked) + " fully specified entries");
  return out;
}

// ------------------------------------------------------------------ 3

Problems transform_goldens() {
  Problems out;
  auto expect = [&](const std::string& what, const TessParams& got, const std::string& entry) {
    TessParams want = catalog_get(entry).params();
    if (!same_tuple(got, want)) out.push_back(what + " = " + tuple_text(got) + ", " + entry + " = " + tuple_text(want));
  };
  expect("stratum(3, 0)", stratum(planar(3, 0)), "ex09a_stratum_voronoi");
  expect("stratum(3, 1)", stratum(planar(3, 1)), "ex09d_stratum_stit");
  expect("column(square)", column(planar(4, 0, Scalar(0), Scalar(16))), "ex06b_quadrilateral_prisms");
  expect("column(cairo)", column(planar(q(10, 3), 0, Scalar(0), q(34, 3))), "ex06c_cairo_prisms");
  TessParams staircase = column(planar(q(66, 17), q(16, 17), q(48, 33), q(664, 17)));
  if (staircase.mu_EP != q(431, 66)) out.push_back("column(n = 8) mu_EP = " + staircase.mu_EP.to_string());
  expect("central_point(cubic)", central_point(tuple(6, 4, 4)), "ex10d_central_cubic");
  expect("central_point(stit)", central_point(catalog_get("ex04_stit").params()), "ex10c_central_stit");
  expect("central_point(ex06a)", central_point(catalog_get("ex06a_triangular_prisms").params()),
         "ex10e_central_triangular_prisms");
  return out;
}

// ------------------------------------------------------------------ 4

Problems mixture_closure() {
  Problems out;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> num(1, 400), small(1, 9);
  auto on_curve = [&] {
    Scalar ve = Scalar(4) + q(num(rng), small(rng));
    Scalar ep = Scalar(6) - Scalar(12) / ve;
    Scalar pv_hi = ve * ep / (ve - Scalar(2));
    Scalar pv = Scalar(3) + (pv_hi - Scalar(3)) * q(num(rng), 401);
    TessParams p = tuple(ve, ep, pv);
    p.lambda_V = q(num(rng), small(rng));
    return p;
  };
  for (int i = 0; i < 100; ++i) {
    TessParams a = on_curve(), b = on_curve();
    Scalar share = q(num(rng), 401);
    TessParams m = mixture({{a, share}, {b, Scalar(1) - share}});
    if (m.mu_EP != Scalar(6) - Scalar(12) / m.mu_VE) out.push_back("mixture leaves the curve: " + tuple_text(m));
    MixtureCurve c = mixture_curve(a, b);
    if (!c.single_point && !c.vertical && (c.A != Scalar(6) || c.B != Scalar(12)))
      out.push_back("mixture_curve gives (" + c.A.to_string() + ", " + c.B.to_string() + ")");
  }
  return out;
}

// ------------------------------------------------------------------ 5

Problems central_iteration() {
  Problems out;
  TessParams cur = catalog_get("ex06a_triangular_prisms").params();
  auto dist = [](const TessParams& p) {
    Scalar dv = p.mu_VE - Scalar(8), de = p.mu_EP - q(9, 2);
    return dv * dv + de * de;
  };
  auto steps = iterate_central_point(cur, 6);
  // mu_VE overshoots 8 on the way, so only the distance is monotone
  Scalar prev = dist(cur);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Scalar d = dist(steps[i]);
    if (!(d < prev)) out.push_back("step " + std::to_string(i + 1) + " does not move closer");
    prev = d;
  }
  if (steps.size() != 6) out.push_back("expected six iterates");
  return out;
}

// ------------------------------------------------------------------ 6

Problems engine_oracles() {
  Problems out;
  for (const auto& g : kOracleGenerators) {
    TessParams got = measured(g.generator).params();
    TessParams want = catalog_get(g.entry).params();
    if (!same_tuple(got, want))
      out.push_back(std::string(g.generator) + " measures " + tuple_text(got) + ", " + g.entry + " states " +
                    tuple_text(want));
  }
  for (auto [k, n] : kSpokeCases) {
    CatalogEntry e = spoke_cube_entry(k, n);
    MeasuredParams m = measured(*e.generator_id);
    const auto& a = m.summary.adjacency;
    if (!same_tuple(m.params(), e.params()) || a[kV][kP] != extra(e, "mu_VP") || a[kV][kZ] != extra(e, "mu_VZ"))
      out.push_back(*e.generator_id + " measures " + tuple_text(m.params()));
  }
  CatalogEntry core = core_prism_cube_entry(3, 3);
  MeasuredParams m = measured(*core.generator_id);
  const auto& a = m.summary.adjacency;
  if (a[kZ][kV] != extra(core, "mu_ZV") || a[kZ][kE] != extra(core, "mu_ZE") || a[kZ][kP] != extra(core, "mu_ZP"))
    out.push_back("core_prism_cube(3, 3) cell adjacencies differ");
  return out;
}

// ------------------------------------------------------------------ 7

Problems derived_closure() {
  Problems out;
  std::vector<std::string> ids;
  for (const auto& g : kOracleGenerators) ids.push_back(g.generator);
  for (auto [k, n] : kSpokeCases) ids.push_back(*spoke_cube_entry(k, n).generator_id);
  ids.push_back(*core_prism_cube_entry(3, 3).generator_id);
  for (const auto& id : ids) {
    MeasuredParams m = measured(id);
    for (const auto& f : summary_mismatches(m.summary, derive(m.params()))) out.push_back(id + ": " + f);
  }
  DerivedSummary sq = measured("prism_columns(base=square)").summary;
  if (sq.nu0 != Scalar(8) || sq.nu1 != Scalar(12) || sq.nu2 != Scalar(6) || sq.nu_FS != Scalar(4) ||
      sq.nu_PS != Scalar(4))
    out.push_back("square columns face means differ from 8, 12, 6, 4, 4");
  return out;
}

// ------------------------------------------------------------------ 8

Problems vertex_invariants() {
  Problems out;
  for (const auto& id : all_generators()) {
    PeriodicComplex cx = PeriodicComplex::load(generate(id));
    TessParams p = measure(cx).params();
    long hemi = 0, ridge = 0, side = 0;
    auto stats = vertex_stats(cx);
    for (const auto& s : stats) {
      if (s.side_interiors > s.ridge_interiors)
        out.push_back(id + ": vertex " + std::to_string(s.vertex) + " has more side than ridge interiors");
      if (s.pi_edges < 2 * (s.ridge_interiors - s.side_interiors) + 3 * s.hemi)
        out.push_back(id + ": vertex " + std::to_string(s.vertex) + " has too few pi-edges");
      hemi += s.hemi;
      ridge += s.ridge_interiors;
      side += s.side_interiors;
    }
    Scalar n(static_cast<long>(stats.size()));
    if (Scalar(hemi) / n != p.kappa || Scalar(ridge) / n != p.psi || Scalar(side) / n != p.tau)
      out.push_back(id + ": vertex means differ from kappa, psi, tau");
  }
  return out;
}

// ------------------------------------------------------------------ 9

Problems bound_structure() {
  Problems out;
  auto note = [&](const TessParams& p, const std::string& what) {
    if (out.size() < 10) out.push_back(tuple_text(p) + ": " + what);
  };
  for (const auto& p : sample_feasible(10000, 9)) {
    CyclicParams c = CyclicParams::of(p);
    KappaXiRegion r = kappa_xi_region(c, p.psi, p.tau);
    for (const Scalar& k : {Scalar(0), r.kappa_max}) {
      if (r.U1.at(k) < r.U3.at(k)) note(p, "U1 < U3");
      if (r.U2.at(k) < r.U3.at(k)) note(p, "U2 < U3");
      if (r.L2.at(k) > r.U3.at(k)) note(p, "L2 > U3");
    }
    const Scalar& K = r.K;
    Scalar xi_c = r.U1.at(K);
    if (r.concurrency != Point2{K, xi_c} || r.U2.at(K) != xi_c || r.U3.at(K) != xi_c || r.L2.at(K) != xi_c)
      note(p, "lines do not concur");
    if (p.mu_EP > fundamental_curve(p.mu_VE) && p.xi.sign() > 0 && p.tau.sign() <= 0) note(p, "tau = 0 above the curve");
    Scalar cross = Scalar(2) * p.mu_VE * p.mu_EP / (Scalar(3) * p.mu_VE - Scalar(8));
    CyclicParams at_cross{p.mu_VE, p.mu_EP, cross};
    PsiInterval psi = psi_interval(c);
    if (psi.crossover != cross) note(p, "crossover misplaced");
    if (cyclic_feasible(at_cross)) {
      PsiInterval pc = psi_interval(at_cross);
      if (pc.r1 != pc.r2) note(p, "R1 != R2 at the crossover");
    }
  }
  return out;
}

// ------------------------------------------------------------------ 10

Problems null_zone() {
  Problems out;
  KappaXiRegion fig = kappa_xi_region({q(24, 5), q(19, 5), q(7, 2)}, 0, 0);
  if (fig.shape != RegionShape::empty) out.push_back(std::string("null-zone inputs give ") + to_string(fig.shape));
  CatalogEntry dd = catalog_get("ex08_divided_delaunay");
  TessParams p = dd.params();
  KappaXiRegion r = kappa_xi_region(CyclicParams::of(p), p.psi, p.tau);
  Scalar want = Scalar::parse("64*pi^2/(35+112*pi^2)");
  if (r.shape != RegionShape::point || r.polygon.empty()) {
    out.push_back(std::string("divided Delaunay region is ") + to_string(r.shape));
  } else {
    const auto& [k, x] = r.polygon.front();
    double rel = std::abs(x.to_double() - want.to_double()) / want.to_double();
    if (!k.is_zero() || rel > 1e-12) out.push_back("point (" + k.to_string() + ", " + x.to_string() + ")");
  }
  return out;
}

// ------------------------------------------------------------------ 11

Problems psi_tau_nonempty() {
  Problems out;
  for (const auto& p : sample_cyclic(10000, 13)) {
    CyclicParams c = CyclicParams::of(p);
    RegionPolyline poly = region_psi_tau(c, 2);
    if (poly.points.empty()) out.push_back(tuple_text(p) + ": empty (psi, tau) polygon");
    PsiInterval psi = psi_interval(c);
    if (tau_interval(c, psi.upper).empty()) out.push_back(tuple_text(p) + ": empty tau interval at psi max");
    if (out.size() > 10) break;
  }
  return out;
}

// ------------------------------------------------------------------ 12

std::array<Vec3, 3> random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> axis(0, 2), num(-3, 3), den(1, 4);
  std::array<std::array<Q, 3>, 3> m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  for (int step = 0; step < 4; ++step) {
    int i = axis(rng), j = (i + 1 + axis(rng) % 2) % 3;
    Q c(num(rng), den(rng));
    for (int col = 0; col < 3; ++col) m[i][col] += c * m[j][col];  // row shear keeps det = 1
  }
  if (num(rng) < 0) std::swap(m[0], m[1]);  // det = -1
  std::array<Vec3, 3> rows;
  for (int i = 0; i < 3; ++i) rows[i] = {m[i][0], m[i][1], m[i][2]};
  return rows;
}

Problems invariance() {
  Problems out;
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 7);
  for (const auto& id : all_generators()) {
    FundamentalDomain d = generate(id);
    DerivedSummary base = measure(PeriodicComplex::load(d)).summary;
    std::vector<std::pair<std::string, FundamentalDomain>> variants;
    variants.emplace_back("doubled", replicate(d, {2, 2, 2}));
    for (int t = 0; t < 2; ++t) {
      Vec3 shift{Q(num(rng), den(rng)), Q(num(rng), den(rng)), Q(num(rng), den(rng))};
      variants.emplace_back("affine " + std::to_string(t), affine(d, random_unimodular(rng), shift));
    }
    variants.emplace_back("rebased", rebase(d, {{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}}));
    for (const auto& [name, v] : variants) {
      try {
        for (const auto& f : summary_mismatches(measure(PeriodicComplex::load(v)).summary, base))
          out.push_back(id + " " + name + ": " + f);
      } catch (const std::exception& e) {
        out.push_back(id + " " + name + ": " + e.what());
      }
    }
  }
  return out;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Problems()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_red;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--expect-red" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) expected_red.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--expect-red N[,N...]]\n";
      return 2;
    }
  }

  const Criterion criteria[] = {
      {1, "closed-form algebra and identities on sampled tuples", table_algebra},
      {2, "catalog entries are feasible with the expected boundary flags", catalog_feasibility},
      {3, "stratum, column and central-point goldens", transform_goldens},
      {4, "mixtures stay on mu_EP = 6 - 12/mu_VE", mixture_closure},
      {5, "central-point iteration approaches (8, 9/2)", central_iteration},
      {6, "measured generators match their catalog values", engine_oracles},
      {7, "derived face statistics match on measured complexes", derived_closure},
      {8, "per-vertex inequalities and vertex means", vertex_invariants},
      {9, "bound-system structure on sampled tuples", bound_structure},
      {10, "empty and single-point (kappa, xi) regions", null_zone},
      {11, "(psi, tau) region never empty on sampled cyclic triples", psi_tau_nonempty},
      {12, "measured values survive doubling and unimodular maps", invariance},
  };

  std::set<int> red;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Problems problems;
    try {
      problems = c.run();
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!problems.empty()) red.insert(c.number);
    std::cout << (problems.empty() ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " ("
              << std::fixed;
    std::cout.precision(1);
    std::cout << secs << " s)\n";
    for (const auto& p : problems) std::cout << "      " << p << '\n';
  }
  std::cout << (12 - red.size()) << "/12 criteria pass\n";
  if (red != expected_red) {
    std::cout << "failing set differs from the expected one\n";
    return 1;
  }
  return 0;
}
