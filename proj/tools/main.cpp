#include "report.hpp"

#include "tessparam/catalog.hpp"
#include "tessparam/engine/complex.hpp"
#include "tessparam/engine/generators.hpp"
#include "tessparam/errors.hpp"
#include "tessparam/feasibility.hpp"
#include "tessparam/params_io.hpp"
#include "tessparam/transforms.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tessparam::cli {
namespace {

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kInvalid = 2;
constexpr int kValidation = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Source {
  std::string params, file, catalog;

  void attach(CLI::App* app) {
    app->add_option("--params", params, "inline values, e.g. mu_VE=4,mu_EP=3,mu_PV=36/7");
    app->add_option("--file", file, "JSON parameter file");
    app->add_option("--catalog", catalog, "catalog entry id");
  }

  ParamInput load() const {
    int given = !params.empty() + !file.empty() + !catalog.empty();
    if (given != 1) throw UsageError("give exactly one of --params, --file, --catalog");
    if (!params.empty()) return params_from_assignments(params);
    if (!file.empty()) return params_from_json(read_file(file));
    CatalogEntry e = catalog_get(catalog);
    ParamInput in;
    in.params.lambda_V = e.lambda_V;
    const std::pair<const char*, const std::optional<Scalar>*> fields[] = {
        {"mu_VE", &e.mu_VE}, {"mu_EP", &e.mu_EP}, {"mu_PV", &e.mu_PV}, {"xi", &e.xi},
        {"kappa", &e.kappa}, {"psi", &e.psi},     {"tau", &e.tau}};
    for (const auto& [name, value] : fields) {
      if (!*value) continue;
      param_field(in.params, name) = **value;
      in.supplied.push_back(name);
    }
    for (const char* k : {"mu_VE", "mu_EP", "mu_PV"})
      if (!in.has(k)) throw UsageError("catalog entry " + e.id + " has no value for " + k);
    return in;
  }

  /// Missing interior values read as zero, except for partial catalog entries.
  TessParams full() const {
    ParamInput in = load();
    if (!catalog.empty() && !in.complete())
      throw UsageError("catalog entry " + catalog + " gives only part of the seven-tuple");
    return in.params;
  }
};

void add_params(Report& r, const std::string& section, const TessParams& p) {
  Row& row = r.record(section);
  for (const auto& n : param_names()) put(row, n, r.number(param_field(p, n)));
}

void add_summary(Report& r, const DerivedSummary& s) {
  add_params(r, "params", s.params);
  Row& lam = r.record("intensities");
  put(lam, "lambda_V", r.number(s.lambda_V));
  put(lam, "lambda_E", r.number(s.lambda_E));
  put(lam, "lambda_P", r.number(s.lambda_P));
  put(lam, "lambda_Z", r.number(s.lambda_Z));
  Row& adj = r.record("adjacency");
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      put(adj, std::string("mu_") + primitive_letter(x) + primitive_letter(y), r.number(s.adjacency[x][y]));
  Row& faces = r.record("faces");
  put(faces, "mu_VE_pi", r.number(s.mu_VE_pi));
  put(faces, "nu0", r.number(s.nu0));
  put(faces, "nu1", r.number(s.nu1));
  put(faces, "nu2", r.number(s.nu2));
  put(faces, "nu_FS", r.number(s.nu_FS));
  put(faces, "nu_PS", r.number(s.nu_PS));
  put(faces, "lambda_Z2", r.number(s.lambda_Z2));
  put(faces, "lambda_Z1", r.number(s.lambda_Z1));
  put(faces, "lambda_Z0", r.number(s.lambda_Z0));
  put(faces, "lambda_Z2_sides", r.number(s.lambda_Z2_sides));
  put(faces, "lambda_P_sides", r.number(s.lambda_P_sides));
}

void add_polyline(Report& r, const RegionPolyline& line) {
  Row& head = r.append("polylines");
  put(head, "label", Report::text(line.label));
  put(head, "x_axis", Report::text(line.x_axis));
  put(head, "y_axis", Report::text(line.y_axis));
  put(head, "zone", Report::text(to_string(line.zone)));
  put(head, "points", Report::text(std::to_string(line.points.size())));
  for (std::size_t i = 0; i < line.points.size(); ++i) {
    Row& pt = r.append("points");
    put(pt, "polyline", Report::text(line.label));
    put(pt, "index", Report::text(std::to_string(i)));
    put(pt, "x", r.number(line.points[i].first));
    put(pt, "y", r.number(line.points[i].second));
    const char* flag = "";
    if (i < line.segment_flags.size()) {
      switch (line.segment_flags[i]) {
        case EdgeFlag::closed: flag = "closed"; break;
        case EdgeFlag::open: flag = "open"; break;
        case EdgeFlag::clip: flag = "clip"; break;
      }
    }
    put(pt, "next_segment", Report::text(flag));
  }
}

// ---------------------------------------------------------------- commands

int run_derive(Report& r, const Source& src) {
  DerivedSummary s = derive(src.full());
  add_summary(r, s);
  IdentityReport ids = check_identities(s);
  Row& row = r.record("identities");
  for (const auto& res : ids.residuals) put(row, res.name, r.number(res.residual));
  return ids.ok() ? kOk : kValidation;
}

int run_check(Report& r, const Source& src) {
  TessParams p = src.full();
  FeasibilityReport rep = classify(p);
  add_params(r, "params", p);
  Row& head = r.record("report");
  put(head, "regime", Report::text(to_string(rep.regime)));
  put(head, "feasible", Report::text(rep.feasible ? "true" : "false"));
  for (const auto& b : rep.bounds) {
    Row& row = r.append("bounds");
    put(row, "name", Report::text(to_string(b.name)));
    put(row, "subject", Report::text(b.subject));
    put(row, "sense", Report::text(b.sense == BoundSense::lower ? "lower" : "upper"));
    put(row, "strict", Report::text(b.strict ? "true" : "false"));
    put(row, "value", r.number(b.value));
    put(row, "status", Report::text(to_string(b.status)));
  }
  return rep.feasible ? kOk : kInfeasible;
}

struct RegionOptions {
  std::string type;
  std::string ve;
  std::string ceiling = "12";
  int resolution = 64;
  Source src;
};

int run_region(Report& r, const RegionOptions& o) {
  if (o.resolution < 1) throw UsageError("--resolution must be positive");
  Row& head = r.record("region");
  put(head, "type", Report::text(o.type));
  put(head, "resolution", Report::text(std::to_string(o.resolution)));
  if (o.type == "pv-ep") {
    if (o.ve.empty()) throw UsageError("pv-ep regions need --ve");
    Scalar ve = Scalar::parse(o.ve);
    Scalar ceiling = Scalar::parse(o.ceiling);
    put(head, "mu_VE", r.number(ve));
    put(head, "ep_ceiling", r.number(ceiling));
    for (const auto& line : region_pv_ep(ve, o.resolution, ceiling)) add_polyline(r, line);
    return kOk;
  }
  ParamInput in = o.src.load();
  CyclicParams c = CyclicParams::of(in.params);
  put(head, "mu_VE", r.number(c.mu_VE));
  put(head, "mu_EP", r.number(c.mu_EP));
  put(head, "mu_PV", r.number(c.mu_PV));
  if (o.type == "psi-tau") {
    PsiInterval psi = psi_interval(c);
    put(head, "psi_max", r.number(psi.upper));
    put(head, "psi_branch", Report::text(psi.branch == PsiBranch::R1 ? "R1" : "R2"));
    add_polyline(r, region_psi_tau(c, o.resolution));
    return kOk;
  }
  if (o.type == "kappa-xi") {
    if (!in.has("psi") || !in.has("tau")) throw UsageError("kappa-xi regions need psi and tau");
    const Scalar& psi = in.params.psi;
    const Scalar& tau = in.params.tau;
    KappaXiRegion k = kappa_xi_region(c, psi, tau);
    put(head, "psi", r.number(psi));
    put(head, "tau", r.number(tau));
    put(head, "K", r.number(k.K));
    put(head, "kappa_max", r.number(k.kappa_max));
    put(head, "shape", Report::text(to_string(k.shape)));
    put(head, "concurrency_kappa", r.number(k.concurrency.first));
    put(head, "concurrency_xi", r.number(k.concurrency.second));
    for (const auto& [x, y] : k.polygon) {
      Row& v = r.append("vertices");
      put(v, "kappa", r.number(x));
      put(v, "xi", r.number(y));
    }
    add_polyline(r, region_kappa_xi(c, psi, tau, o.resolution));
    return kOk;
  }
  throw UsageError("unknown region type \"" + o.type + "\" (pv-ep, psi-tau, kappa-xi)");
}

struct TransformOptions {
  std::string kind;
  std::string planar;
  int iterate = 1;
  std::vector<std::string> components;
  Source src;
};

PlanarParams parse_planar(const std::string& text) {
  PlanarParams p;
  bool ve = false, phi = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value in --planar, got \"" + item + "\"");
    std::string key = item.substr(0, eq);
    Scalar v = Scalar::parse(item.substr(eq + 1));
    if (key == "mu_VE") {
      p.mu_VE = v;
      ve = true;
    } else if (key == "phi") {
      p.phi = v;
      phi = true;
    } else if (key == "mu_EVpi") {
      p.mu_EVpi = v;
    } else if (key == "mu_VE2") {
      p.mu_VE2 = v;
    } else if (key == "lambda_V") {
      p.lambda_V = v;
    } else {
      throw UsageError("unknown planar parameter \"" + key + "\"");
    }
  }
  if (!ve || !phi) throw UsageError("--planar needs mu_VE and phi");
  return p;
}

TessParams component_params(const std::string& source) {
  std::ifstream probe(source);
  if (probe) return params_from_json(read_file(source)).params;
  Source s;
  s.catalog = source;
  return s.full();
}

int run_transform(Report& r, const TransformOptions& o) {
  Row& head = r.record("transform");
  put(head, "kind", Report::text(o.kind));
  if (o.kind == "stratum" || o.kind == "column") {
    if (o.planar.empty()) throw UsageError(o.kind + " needs --planar");
    PlanarParams planar = parse_planar(o.planar);
    PlanarReport rep = planar_validate(planar);
    for (const auto& b : rep.bounds) {
      Row& row = r.append("planar_bounds");
      put(row, "name", Report::text(b.name));
      put(row, "value", r.number(b.value));
      put(row, "status", Report::text(to_string(b.status)));
    }
    add_summary(r, derive(o.kind == "stratum" ? stratum(planar) : column(planar)));
    return kOk;
  }
  if (o.kind == "central-point") {
    if (o.iterate < 1) throw UsageError("--iterate must be at least 1");
    TessParams start = o.src.full();
    std::vector<TessParams> steps = iterate_central_point(start, o.iterate);
    put(head, "iterations", Report::text(std::to_string(o.iterate)));
    add_params(r, "input", start);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      Row& row = r.append("iterates");
      put(row, "step", Report::text(std::to_string(i)));
      for (const auto& n : param_names()) put(row, n, r.number(param_field(steps[i], n)));
    }
    add_summary(r, derive(steps.back()));
    return kOk;
  }
  if (o.kind == "mixture") {
    if (o.components.empty()) throw UsageError("mixture needs --component SOURCE@SHARE");
    std::vector<MixtureComponent> parts;
    for (const auto& c : o.components) {
      auto at = c.rfind('@');
      if (at == std::string::npos) throw UsageError("component \"" + c + "\" lacks @SHARE");
      parts.push_back({component_params(c.substr(0, at)), Scalar::parse(c.substr(at + 1))});
      Row& row = r.append("components");
      put(row, "source", Report::text(c.substr(0, at)));
      put(row, "share", r.number(parts.back().share));
    }
    add_summary(r, derive(mixture(parts)));
    return kOk;
  }
  throw UsageError("unknown transform \"" + o.kind + "\" (stratum, column, central-point, mixture)");
}

void add_entry(Report& r, const CatalogEntry& e) {
  Row& head = r.record("entry");
  put(head, "id", Report::text(e.id));
  put(head, "title", Report::text(e.title));
  put(head, "ftf", Report::text(e.ftf ? "true" : "false"));
  put(head, "on_fundamental_curve", Report::text(e.on_fundamental_curve ? "true" : "false"));
  put(head, "fully_specified", Report::text(e.fully_specified() ? "true" : "false"));
  put(head, "generator_id", Report::text(e.generator_id.value_or("")));
  put(head, "provenance", Report::text(e.provenance));
  put(head, "recipe", Report::text(e.recipe));
  put(head, "notes", Report::text(e.notes));
  Row& p = r.record("params");
  put(p, "lambda_V", r.number(e.lambda_V));
  const std::pair<const char*, const std::optional<Scalar>*> fields[] = {
      {"mu_VE", &e.mu_VE}, {"mu_EP", &e.mu_EP}, {"mu_PV", &e.mu_PV}, {"xi", &e.xi},
      {"kappa", &e.kappa}, {"psi", &e.psi},     {"tau", &e.tau}};
  for (const auto& [name, value] : fields)
    if (*value) put(p, name, r.number(**value));
  if (!e.extra.empty()) {
    Row& x = r.record("extra");
    for (const auto& [k, v] : e.extra) put(x, k, r.number(v));
  }
}

int run_catalog(Report& r, const std::string& action, const std::string& id) {
  if (action == "list") {
    for (const auto& i : catalog_ids()) {
      CatalogEntry e = catalog_get(i);
      Row& row = r.append("entries");
      put(row, "id", Report::text(e.id));
      put(row, "title", Report::text(e.title));
      put(row, "ftf", Report::text(e.ftf ? "true" : "false"));
      put(row, "fully_specified", Report::text(e.fully_specified() ? "true" : "false"));
      put(row, "generator_id", Report::text(e.generator_id.value_or("")));
    }
    return kOk;
  }
  if (action == "show") {
    if (id.empty()) throw UsageError("catalog show needs an entry id");
    add_entry(r, catalog_get(id));
    return kOk;
  }
  if (action == "verify") {
    CatalogReport rep = verify_catalog();
    Row& head = r.record("verify");
    put(head, "entries", Report::text(std::to_string(rep.entries)));
    put(head, "checks", Report::text(std::to_string(rep.checks)));
    put(head, "failures", Report::text(std::to_string(rep.failures.size())));
    for (const auto& f : rep.failures) {
      Row& row = r.append("failures");
      put(row, "id", Report::text(f.id));
      put(row, "check", Report::text(f.check));
      put(row, "detail", Report::text(f.detail));
    }
    return rep.ok() ? kOk : kValidation;
  }
  throw UsageError("unknown catalog action \"" + action + "\" (list, show, verify)");
}

struct DomainOptions {
  std::string generator, domain, obj;
  std::vector<int> replicate;
  bool validate = false;

  void attach(CLI::App* app) {
    app->add_option("--generator", generator, "built-in generator id");
    app->add_option("--domain", domain, "JSON domain file");
    app->add_option("--replicate", replicate, "copies along each lattice vector")->expected(3)->delimiter(',');
  }

  engine::FundamentalDomain load() const {
    if (generator.empty() == domain.empty()) throw UsageError("give exactly one of --generator, --domain");
    engine::FundamentalDomain d =
        generator.empty() ? engine::domain_from_json(read_file(domain)) : engine::generate(generator);
    if (!replicate.empty()) {
      for (int c : replicate)
        if (c < 1) throw UsageError("--replicate counts must be positive");
      d = engine::replicate(d, {replicate[0], replicate[1], replicate[2]});
    }
    return d;
  }
};

int run_measure(Report& r, const DomainOptions& o) {
  engine::FundamentalDomain d = o.load();
  if (!o.obj.empty()) {
    std::ofstream out(o.obj, std::ios::binary);
    if (!out) throw UsageError("cannot write " + o.obj);
    out << engine::domain_to_obj(d);
  }
  engine::PeriodicComplex cx = engine::PeriodicComplex::load(d);
  engine::MeasuredParams m = engine::measure(cx);
  Row& counts = r.record("counts");
  const auto& c = m.counts;
  const std::pair<const char*, long> items[] = {
      {"vertices", c.vertices},     {"edges", c.edges},       {"plates", c.plates},
      {"cells", c.cells},           {"pi_edges", c.pi_edges}, {"hemi_vertices", c.hemi_vertices},
      {"apices", c.apices},         {"ridges", c.ridges},     {"facets", c.facets},
      {"facet_sides", c.facet_sides}, {"plate_sides", c.plate_sides}};
  for (const auto& [k, v] : items) put(counts, k, Report::text(std::to_string(v)));
  put(counts, "period_volume", r.number(m.volume));
  add_summary(r, m.summary);
  if (!o.validate) return kOk;
  engine::ValidationReport rep = engine::validate(cx);
  for (const auto& chk : rep.checks) {
    Row& row = r.append("validation");
    put(row, "check", Report::text(chk.name));
    put(row, "ok", Report::text(chk.ok ? "true" : "false"));
    put(row, "detail", Report::text(chk.detail));
  }
  return rep.ok() ? kOk : kValidation;
}

int run_stats(Report& r, const DomainOptions& o) {
  engine::PeriodicComplex cx = engine::PeriodicComplex::load(o.load());
  auto stats = engine::vertex_stats(cx);
  long hemi = 0, ridge = 0, side = 0, pi = 0;
  for (const auto& s : stats) {
    Row& row = r.append("vertices");
    put(row, "vertex", Report::text(std::to_string(s.vertex)));
    put(row, "x", r.number(Scalar(s.position.x)));
    put(row, "y", r.number(Scalar(s.position.y)));
    put(row, "z", r.number(Scalar(s.position.z)));
    put(row, "edges", Report::text(std::to_string(s.edges)));
    put(row, "pi_edges", Report::text(std::to_string(s.pi_edges)));
    put(row, "hemi", Report::text(std::to_string(s.hemi)));
    put(row, "ridge_interiors", Report::text(std::to_string(s.ridge_interiors)));
    put(row, "side_interiors", Report::text(std::to_string(s.side_interiors)));
    hemi += s.hemi;
    ridge += s.ridge_interiors;
    side += s.side_interiors;
    pi += s.pi_edges;
  }
  Scalar n(static_cast<long>(stats.size()));
  Row& mean = r.record("means");
  put(mean, "vertices", Report::text(std::to_string(stats.size())));
  put(mean, "kappa", r.number(Scalar(hemi) / n));
  put(mean, "psi", r.number(Scalar(ridge) / n));
  put(mean, "tau", r.number(Scalar(side) / n));
  put(mean, "mu_VE_pi", r.number(Scalar(pi) / n));
  return kOk;
}

int run_sample(Report& r, std::size_t count, std::uint64_t seed, bool cyclic) {
  auto samples = cyclic ? sample_cyclic(count, seed) : sample_feasible(count, seed);
  Row& head = r.record("sample");
  put(head, "count", Report::text(std::to_string(count)));
  put(head, "seed", Report::text(std::to_string(seed)));
  put(head, "kind", Report::text(cyclic ? "cyclic" : "feasible"));
  for (const auto& p : samples) {
    Row& row = r.append("tuples");
    for (const auto& n : param_names()) put(row, n, r.number(param_field(p, n)));
  }
  return kOk;
}

int default_precision() {
  const char* env = std::getenv("TESSPARAM_PRECISION");
  if (!env || !*env) return 50;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("TESSPARAM_PRECISION is not an integer: ") + env);
}

int run(int argc, char** argv) {
  CLI::App app{"Mean-value parameters of spatial tessellations"};
  app.name("tessparam");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::optional<int> precision;
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--precision", precision, "decimal digits of evaluated values (default 50, at least 15)");

  Source derive_src, check_src;
  auto* derive_cmd = app.add_subcommand("derive", "all quantities that follow from a seven-tuple");
  derive_src.attach(derive_cmd);
  auto* check_cmd = app.add_subcommand("check", "evaluate every feasibility bound");
  check_src.attach(check_cmd);

  RegionOptions region;
  auto* region_cmd = app.add_subcommand("region", "polylines of feasible regions");
  region_cmd->add_option("--type", region.type, "pv-ep, psi-tau or kappa-xi")->required();
  region_cmd->add_option("--ve", region.ve, "mu_VE for pv-ep");
  region_cmd->add_option("--ceiling", region.ceiling, "mu_EP cap for unbounded zones");
  region_cmd->add_option("--resolution", region.resolution, "points per curved edge");
  region.src.attach(region_cmd);

  TransformOptions transform;
  auto* transform_cmd = app.add_subcommand("transform", "derived tessellations");
  transform_cmd->add_option("--kind", transform.kind, "stratum, column, central-point or mixture")->required();
  transform_cmd->add_option("--planar", transform.planar, "planar values, e.g. mu_VE=3,phi=0");
  transform_cmd->add_option("--iterate", transform.iterate, "central-point steps");
  transform_cmd->add_option("--component", transform.components, "SOURCE@SHARE, SOURCE a catalog id or file");
  transform.src.attach(transform_cmd);

  std::string catalog_action, catalog_id;
  auto* catalog_cmd = app.add_subcommand("catalog", "worked examples");
  catalog_cmd->add_option("action", catalog_action, "list, show or verify")->required();
  catalog_cmd->add_option("id", catalog_id, "entry id for show");

  DomainOptions measure_opts, stats_opts;
  auto* measure_cmd = app.add_subcommand("measure", "mean values of a periodic cell complex");
  measure_opts.attach(measure_cmd);
  measure_cmd->add_option("--obj", measure_opts.obj, "also write the cells as OBJ");
  measure_cmd->add_flag("--validate", measure_opts.validate, "run the structural checks");
  auto* stats_cmd = app.add_subcommand("stats", "per-vertex statistics of a periodic cell complex");
  stats_opts.attach(stats_cmd);

  std::size_t count = 10;
  std::uint64_t seed = 1;
  bool cyclic = false;
  auto* sample_cmd = app.add_subcommand("sample", "seeded random feasible tuples");
  sample_cmd->add_option("--count", count, "number of tuples");
  sample_cmd->add_option("--seed", seed, "random seed");
  sample_cmd->add_flag("--cyclic", cyclic, "sample cyclic triples only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "tessparam: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    int digits = precision ? *precision : default_precision();
    if (digits < 15) throw UsageError("precision must be at least 15 digits");
    CLI::App* cmd = app.get_subcommands().front();
    Report report(cmd->get_name(), digits);
    int status = kOk;
    if (cmd == derive_cmd) status = run_derive(report, derive_src);
    if (cmd == check_cmd) status = run_check(report, check_src);
    if (cmd == region_cmd) status = run_region(report, region);
    if (cmd == transform_cmd) status = run_transform(report, transform);
    if (cmd == catalog_cmd) status = run_catalog(report, catalog_action, catalog_id);
    if (cmd == measure_cmd) status = run_measure(report, measure_opts);
    if (cmd == stats_cmd) status = run_stats(report, stats_opts);
    if (cmd == sample_cmd) status = run_sample(report, count, seed, cyclic);
    if (format == "csv")
      report.write_csv(std::cout);
    else
      report.write_json(std::cout);
    return status;
  } catch (const NotATessellation& e) {
    std::cerr << "tessparam: not a tessellation: " << e.what() << '\n';
    return kValidation;
  } catch (const NonConvexCell& e) {
    std::cerr << "tessparam: non-convex cell: " << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    std::cerr << "tessparam: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "tessparam: internal error: " << e.what() << '\n';
    return kValidation;
  }
}

}  // namespace
}  // namespace tessparam::cli

int main(int argc, char** argv) { return tessparam::cli::run(argc, argv); }
