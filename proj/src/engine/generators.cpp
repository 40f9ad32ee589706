#include "tessparam/engine/generators.hpp"

#include "tessparam/errors.hpp"

#include <map>
#include <regex>

namespace tessparam::engine {

namespace {

Vec3 v3(const Q& x, const Q& y, const Q& z) { return {x, y, z}; }

Lattice unit_lattice(const Q& sx = 1, const Q& sy = 1, const Q& sz = 1) {
  return {v3(sx, 0, 0), v3(0, sy, 0), v3(0, 0, sz)};
}

std::vector<Vec3> box(const Vec3& lo, const Vec3& hi) {
  std::vector<Vec3> out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) out.push_back(v3(a ? hi.x : lo.x, b ? hi.y : lo.y, c ? hi.z : lo.z));
  return out;
}

struct Point2 {
  Q x, y;
  bool operator==(const Point2&) const = default;
};

std::vector<Vec3> prism(const std::vector<Point2>& base, const Q& z0, const Q& z1) {
  std::vector<Vec3> out;
  for (const auto& p : base) out.push_back(v3(p.x, p.y, z0));
  for (const auto& p : base) out.push_back(v3(p.x, p.y, z1));
  return out;
}

// Points around the unit square, counter-clockwise from the origin, with
// `per_side` points on each side (corners included once).
std::vector<Point2> square_ring(int per_side) {
  std::vector<Point2> out;
  const Q step(1, per_side);
  for (int i = 0; i < per_side; ++i) out.push_back({step * i, 0});
  for (int i = 0; i < per_side; ++i) out.push_back({1, step * i});
  for (int i = 0; i < per_side; ++i) out.push_back({1 - step * i, 1});
  for (int i = 0; i < per_side; ++i) out.push_back({0, 1 - step * i});
  return out;
}

struct PlanarTiling {
  Point2 u, v;  // period vectors
  std::vector<std::vector<Point2>> tiles;
};

PlanarTiling planar_tiling(PrismBase base) {
  PlanarTiling t;
  switch (base) {
    case PrismBase::square:
      t.u = {2, 0};
      t.v = {0, 2};
      for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 2; ++a) t.tiles.push_back({{a, b}, {a + 1, b}, {a + 1, b + 1}, {a, b + 1}});
      break;
    case PrismBase::triangle:
      t.u = {2, 0};
      t.v = {0, 2};
      for (int b = 0; b < 2; ++b) {
        for (int a = 0; a < 2; ++a) {
          t.tiles.push_back({{a, b}, {a + 1, b}, {a + 1, b + 1}});
          t.tiles.push_back({{a, b}, {a + 1, b + 1}, {a, b + 1}});
        }
      }
      break;
    case PrismBase::hexagon: {
      // Affine image of the regular hexagon tiling; three tiles per period
      // so the three hexagons at every vertex are distinct columns.
      t.u = {0, 3};
      t.v = {3, 6};
      const std::vector<Point2> hex = {{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}};
      for (int a = 0; a < 3; ++a) {
        std::vector<Point2> tile;
        for (const auto& p : hex) tile.push_back({p.x + a, p.y + 2 * a});
        t.tiles.push_back(tile);
      }
      break;
    }
  }
  return t;
}

}  // namespace

FundamentalDomain cubic_lattice() {
  FundamentalDomain d;
  d.lattice = unit_lattice();
  d.cells.push_back(box(v3(0, 0, 0), v3(1, 1, 1)));
  d.metadata["generator"] = "cubic_lattice";
  return d;
}

FundamentalDomain divided_cube() {
  FundamentalDomain d;
  d.lattice = unit_lattice(2, 2, 2);
  const Vec3 centre = v3(1, 1, 1);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        Vec3 lo = v3(a, b, c), hi = v3(a + 1, b + 1, c + 1);
        for (int axis = 0; axis < 3; ++axis) {
          // the face on this axis that avoids the centre
          Q level = centre[axis] == lo[axis] ? hi[axis] : lo[axis];
          std::vector<Vec3> cell;
          for (const auto& p : box(lo, hi))
            if (p[axis] == level) cell.push_back(p);
          cell.push_back(centre);
          d.cells.push_back(std::move(cell));
        }
      }
    }
  }
  d.metadata["generator"] = "divided_cube";
  return d;
}

FundamentalDomain parallel_pyramids() {
  FundamentalDomain d;
  d.lattice = unit_lattice();
  const Vec3 top = v3(1, 1, 1);
  for (int axis = 0; axis < 3; ++axis) {
    std::vector<Vec3> cell;
    for (const auto& p : box(v3(0, 0, 0), top))
      if (p[axis] == 0) cell.push_back(p);
    cell.push_back(top);
    d.cells.push_back(std::move(cell));
  }
  d.metadata["generator"] = "parallel_pyramids";
  return d;
}

FundamentalDomain split_prism(bool aligned) {
  FundamentalDomain d;
  d.lattice = unit_lattice(2, 2, 2);
  const std::vector<Point2> lower = {{0, 0}, {1, 0}, {1, 1}}, upper = {{0, 0}, {1, 1}, {0, 1}};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        bool through_vertical_edges = aligned || (a + b + c) % 2 == 0;
        for (const auto* tri : {&lower, &upper}) {
          std::vector<Vec3> cell;
          for (const auto& p : *tri) {
            for (int s = 0; s < 2; ++s) {
              // orientation A cuts along x = y, orientation B along y = z
              cell.push_back(through_vertical_edges ? v3(a + p.x, b + p.y, c + s) : v3(a + s, b + p.x, c + p.y));
            }
          }
          d.cells.push_back(std::move(cell));
        }
      }
    }
  }
  d.metadata["generator"] = aligned ? "split_prism(aligned)" : "split_prism";
  return d;
}

FundamentalDomain prism_columns(PrismBase base, const std::optional<std::vector<Q>>& offsets) {
  PlanarTiling t = planar_tiling(base);
  const size_t n = t.tiles.size();
  std::vector<Q> off;
  if (offsets) {
    if (offsets->size() != n)
      throw InvalidGeneratorParams("expected " + std::to_string(n) + " column offsets, got " +
                                   std::to_string(offsets->size()));
    off = *offsets;
  } else {
    for (size_t i = 0; i < n; ++i) off.push_back(Q(static_cast<long>(i), static_cast<long>(n)));
  }
  // Columns meeting along a vertical line must be cut at different heights.
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      for (int a = -1; a <= 1; ++a) {
        for (int b = -1; b <= 1; ++b) {
          if (i == j && a == 0 && b == 0) continue;
          Q dx = t.u.x * a + t.v.x * b, dy = t.u.y * a + t.v.y * b;
          bool share = false;
          for (const auto& p : t.tiles[i])
            for (const auto& q : t.tiles[j])
              if (p.x == q.x + dx && p.y == q.y + dy) share = true;
          Q gap = off[i] - off[j];
          if (share && gap == Q(floor_rational(gap))) {
            throw InvalidGeneratorParams("columns " + std::to_string(i) + " and " + std::to_string(j) +
                                         " share a vertical line and have the same offset");
          }
        }
      }
    }
  }
  FundamentalDomain d;
  d.lattice = {v3(t.u.x, t.u.y, 0), v3(t.v.x, t.v.y, 0), v3(0, 0, 1)};
  for (size_t i = 0; i < n; ++i) d.cells.push_back(prism(t.tiles[i], off[i], off[i] + 1));
  const char* names[] = {"triangle", "square", "hexagon"};
  d.metadata["generator"] = std::string("prism_columns(base=") + names[static_cast<int>(base)] + ")";
  return d;
}

FundamentalDomain stratum_prism() {
  FundamentalDomain d;
  d.lattice = unit_lattice(1, 1, 2);
  const std::vector<std::vector<Point2>> tris = {{{0, 0}, {1, 0}, {1, 1}}, {{0, 0}, {1, 1}, {0, 1}}};
  for (const auto& tri : tris) {
    d.cells.push_back(prism(tri, 0, 1));
    Point2 g{(tri[0].x + tri[1].x + tri[2].x) / 3, (tri[0].y + tri[1].y + tri[2].y) / 3};
    for (int k = 0; k < 3; ++k) d.cells.push_back(prism({g, tri[k], tri[(k + 1) % 3]}, 1, 2));
  }
  d.metadata["generator"] = "stratum_prism";
  return d;
}

FundamentalDomain spoke_cube(int k, int n) {
  if (k < 0 || n < 0) throw InvalidGeneratorParams("spoke_cube needs k, n >= 0");
  FundamentalDomain d;
  d.lattice = unit_lattice();
  std::vector<Point2> ring = square_ring(n + 1);
  const size_t m = ring.size();
  auto spoke = [&](int j) { return v3(Q(1, 2), Q(1, 2), Q(j, k + 1)); };
  for (size_t i = 0; i < m; ++i) {
    const Point2& p = ring[i];
    const Point2& q = ring[(i + 1) % m];
    // fan of tetrahedra from the bottom side to the spoke pieces
    for (int j = 0; j <= k; ++j) d.cells.push_back({v3(p.x, p.y, 0), v3(q.x, q.y, 0), spoke(j), spoke(j + 1)});
    // pyramid from the top centre over the vertical strip above this side
    d.cells.push_back({v3(p.x, p.y, 0), v3(q.x, q.y, 0), v3(p.x, p.y, 1), v3(q.x, q.y, 1), spoke(k + 1)});
  }
  d.metadata["generator"] = "spoke_cube(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
  return d;
}

FundamentalDomain core_prism_cube(int k, int n) {
  if (k < 0 || n < 0) throw InvalidGeneratorParams("core_prism_cube needs k, n >= 0");
  FundamentalDomain d;
  d.lattice = unit_lattice();
  std::vector<Point2> ring = square_ring(n + 1);
  const size_t m = ring.size();
  const Q half(1, 2);
  // Core polygon: the ring pulled towards the axis by 1 / (1 + r^2), which
  // makes every ring point a strict corner.
  std::vector<Point2> core;
  for (const auto& p : ring) {
    Q dx = p.x - half, dy = p.y - half;
    Q h = 1 / (1 + dx * dx + dy * dy);
    core.push_back({h * dx, h * dy});
  }
  // Radii shrink towards the middle level, so the outer cells stay convex.
  auto level = [&](int j) {
    Q s = Q(j, k + 1) - half;
    return std::pair<Q, Q>{Q(j, k + 1), half + s * s};
  };
  auto core_point = [&](size_t i, int j) {
    auto [z, rho] = level(j);
    return v3(half + rho * core[i].x, half + rho * core[i].y, z);
  };
  for (int j = 0; j <= k; ++j) {
    std::vector<Vec3> cell;
    for (size_t i = 0; i < m; ++i) {
      cell.push_back(core_point(i, j));
      cell.push_back(core_point(i, j + 1));
    }
    d.cells.push_back(std::move(cell));
  }
  for (size_t i = 0; i < m; ++i) {
    size_t i2 = (i + 1) % m;
    std::vector<Vec3> cell = {v3(ring[i].x, ring[i].y, 0), v3(ring[i2].x, ring[i2].y, 0), v3(ring[i].x, ring[i].y, 1),
                              v3(ring[i2].x, ring[i2].y, 1)};
    for (int j = 0; j <= k + 1; ++j) {
      cell.push_back(core_point(i, j));
      cell.push_back(core_point(i2, j));
    }
    d.cells.push_back(std::move(cell));
  }
  d.metadata["generator"] = "core_prism_cube(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
  return d;
}

namespace {

int int_arg(const std::map<std::string, std::string>& args, const std::string& key) {
  auto it = args.find(key);
  if (it == args.end()) throw InvalidGeneratorParams("missing parameter " + key);
  try {
    size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    throw InvalidGeneratorParams("parameter " + key + " must be an integer");
  }
}

std::map<std::string, std::string> parse_args(const std::string& text) {
  std::map<std::string, std::string> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    size_t eq = item.find('=');
    if (eq == std::string::npos) out[item] = "";
    else out[item.substr(0, eq)] = item.substr(eq + 1);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void expect_keys(const std::map<std::string, std::string>& args, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : args) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw InvalidGeneratorParams("unknown generator parameter '" + k + "'");
  }
}

}  // namespace

FundamentalDomain generate(const std::string& raw) {
  std::string id;
  for (char c : raw)
    if (c != ' ') id += c;
  static const std::regex call(R"(([a-z_]+)(?:\((.*)\))?)");
  std::smatch m;
  if (!std::regex_match(id, m, call)) throw InvalidGeneratorParams("malformed generator id '" + raw + "'");
  const std::string name = m[1];
  const std::string inner = m[2];
  if (name == "central_point") {
    if (inner.empty()) throw InvalidGeneratorParams("central_point needs an inner generator");
    return central_point_subdivision(generate(inner));
  }
  auto args = parse_args(inner);
  if (name == "cubic_lattice" && args.empty()) return cubic_lattice();
  if (name == "divided_cube" && args.empty()) return divided_cube();
  if (name == "parallel_pyramids" && args.empty()) return parallel_pyramids();
  if (name == "stratum_prism" && args.empty()) return stratum_prism();
  if (name == "split_prism") {
    expect_keys(args, {"aligned"});
    return split_prism(args.count("aligned") > 0);
  }
  if (name == "prism_columns") {
    expect_keys(args, {"base", "offsets"});
    std::string base = args.count("base") ? args["base"] : "square";
    PrismBase b;
    if (base == "square") b = PrismBase::square;
    else if (base == "triangle") b = PrismBase::triangle;
    else if (base == "hexagon") b = PrismBase::hexagon;
    else throw InvalidGeneratorParams("unknown prism base '" + base + "'");
    std::optional<std::vector<Q>> offsets;
    if (args.count("offsets")) {
      offsets.emplace();
      std::string list = args["offsets"];
      size_t start = 0;
      while (true) {
        size_t colon = list.find(':', start);
        try {
          offsets->push_back(parse_rational(list.substr(start, colon == std::string::npos ? std::string::npos
                                                                                          : colon - start)));
        } catch (const ParseError& e) {
          throw InvalidGeneratorParams(std::string("bad offset: ") + e.what());
        }
        if (colon == std::string::npos) break;
        start = colon + 1;
      }
    }
    return prism_columns(b, offsets);
  }
  if (name == "spoke_cube" || name == "core_prism_cube") {
    expect_keys(args, {"k", "n"});
    int k = int_arg(args, "k"), n = int_arg(args, "n");
    return name == "spoke_cube" ? spoke_cube(k, n) : core_prism_cube(k, n);
  }
  throw InvalidGeneratorParams("unknown generator '" + raw + "'");
}

std::vector<std::string> generator_ids() {
  return {"cubic_lattice",
          "divided_cube",
          "parallel_pyramids",
          "split_prism",
          "split_prism(aligned)",
          "prism_columns(base=square|triangle|hexagon[,offsets=a:b:...])",
          "stratum_prism",
          "spoke_cube(k=K,n=N)",
          "core_prism_cube(k=K,n=N)",
          "central_point(GENERATOR)"};
}

}  // namespace tessparam::engine
