#include "tessparam/engine/domain.hpp"

#include "tessparam/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace tessparam::engine {

using json = nlohmann::ordered_json;

Q lattice_volume(const Lattice& l) {
  Q det = dot(l[0], cross(l[1], l[2]));
  return det < 0 ? Q(-det) : det;
}

Vec3 to_lattice(const Lattice& l, const Vec3& p) {
  Q det = dot(l[0], cross(l[1], l[2]));
  return {dot(p, cross(l[1], l[2])) / det, dot(l[0], cross(p, l[2])) / det, dot(l[0], cross(l[1], p)) / det};
}

namespace {

Q read_number(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Q(v.get<long long>());
  if (v.is_number()) return parse_rational(v.dump());
  throw ParseError("expected a number, got " + v.dump());
}

Vec3 read_point(const json& v) {
  if (!v.is_array() || v.size() != 3) throw ParseError("expected a coordinate triple, got " + v.dump());
  return {read_number(v[0]), read_number(v[1]), read_number(v[2])};
}

json write_point(const Vec3& p) {
  return json::array({rational_to_string(p.x), rational_to_string(p.y), rational_to_string(p.z)});
}

}  // namespace

FundamentalDomain domain_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("domain file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("lattice") || !doc.contains("cells"))
    throw ParseError("domain file needs \"lattice\" and \"cells\"");
  FundamentalDomain d;
  const json& lat = doc["lattice"];
  if (!lat.is_array() || lat.size() != 3) throw ParseError("\"lattice\" must hold three vectors");
  for (int i = 0; i < 3; ++i) d.lattice[i] = read_point(lat[i]);
  if (lattice_volume(d.lattice) == 0) throw ParseError("lattice vectors are linearly dependent");
  if (!doc["cells"].is_array() || doc["cells"].empty()) throw ParseError("\"cells\" must be a non-empty list");
  for (const json& c : doc["cells"]) {
    if (c.is_object()) {
      if (!c.contains("halfspaces")) throw ParseError("cell object needs \"halfspaces\"");
      std::vector<std::array<Q, 4>> hs;
      for (const json& h : c["halfspaces"]) {
        if (!h.is_array() || h.size() != 4) throw ParseError("half-space must be [a, b, c, d]");
        hs.push_back({read_number(h[0]), read_number(h[1]), read_number(h[2]), read_number(h[3])});
      }
      d.cells.push_back(ConvexPolytope::from_halfspaces(hs).apices());
    } else if (c.is_array()) {
      std::vector<Vec3> pts;
      for (const json& p : c) pts.push_back(read_point(p));
      d.cells.push_back(std::move(pts));
    } else {
      throw ParseError("cell must be a point list or a half-space object");
    }
  }
  if (doc.contains("metadata") && doc["metadata"].is_object()) {
    for (const auto& [k, v] : doc["metadata"].items()) d.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  return d;
}

std::string domain_to_json(const FundamentalDomain& d) {
  json doc;
  doc["lattice"] = json::array();
  for (const auto& v : d.lattice) doc["lattice"].push_back(write_point(v));
  doc["cells"] = json::array();
  for (const auto& c : d.cells) {
    json cell = json::array();
    for (const auto& p : c) cell.push_back(write_point(p));
    doc["cells"].push_back(std::move(cell));
  }
  if (!d.metadata.empty()) {
    doc["metadata"] = json::object();
    for (const auto& [k, v] : d.metadata) doc["metadata"][k] = v;
  }
  return doc.dump(2) + "\n";
}

std::string domain_to_obj(const FundamentalDomain& d) {
  std::ostringstream os;
  os << "# fundamental domain, " << d.cells.size() << " cells\n";
  for (int i = 0; i < 3; ++i) os << "# lattice " << d.lattice[i] << "\n";
  int base = 1;
  for (size_t c = 0; c < d.cells.size(); ++c) {
    ConvexPolytope poly = ConvexPolytope::hull(d.cells[c]);
    os << "o cell" << c << "\n";
    for (const auto& p : poly.apices()) {
      os << "v " << Scalar(p.x).to_decimal(17) << ' ' << Scalar(p.y).to_decimal(17) << ' '
         << Scalar(p.z).to_decimal(17) << "\n";
      os << "# exact " << p << "\n";
    }
    for (const auto& f : poly.facets()) {
      os << 'f';
      for (int k : f.corners) os << ' ' << base + k;
      os << "\n";
    }
    base += static_cast<int>(poly.apices().size());
  }
  return os.str();
}

FundamentalDomain replicate(const FundamentalDomain& d, std::array<int, 3> counts) {
  for (int c : counts)
    if (c < 1) throw InvalidGeneratorParams("replication counts must be positive");
  FundamentalDomain out;
  out.metadata = d.metadata;
  for (int i = 0; i < 3; ++i) out.lattice[i] = Q(counts[i]) * d.lattice[i];
  for (int a = 0; a < counts[0]; ++a) {
    for (int b = 0; b < counts[1]; ++b) {
      for (int c = 0; c < counts[2]; ++c) {
        Vec3 t = Q(a) * d.lattice[0] + Q(b) * d.lattice[1] + Q(c) * d.lattice[2];
        for (const auto& cell : d.cells) {
          std::vector<Vec3> moved;
          for (const auto& p : cell) moved.push_back(p + t);
          out.cells.push_back(std::move(moved));
        }
      }
    }
  }
  return out;
}

FundamentalDomain affine(const FundamentalDomain& d, const std::array<Vec3, 3>& rows, const Vec3& shift) {
  if (dot(rows[0], cross(rows[1], rows[2])) == 0) throw InvalidGeneratorParams("affine map is singular");
  auto apply = [&](const Vec3& p) { return Vec3{dot(rows[0], p), dot(rows[1], p), dot(rows[2], p)}; };
  FundamentalDomain out;
  out.metadata = d.metadata;
  for (int i = 0; i < 3; ++i) out.lattice[i] = apply(d.lattice[i]);
  for (const auto& cell : d.cells) {
    std::vector<Vec3> moved;
    for (const auto& p : cell) moved.push_back(apply(p) + shift);
    out.cells.push_back(std::move(moved));
  }
  return out;
}

FundamentalDomain rebase(const FundamentalDomain& d, const IntMatrix& u) {
  long long det = 0;
  for (int j = 0; j < 3; ++j) {
    long long minor = static_cast<long long>(u[1][(j + 1) % 3]) * u[2][(j + 2) % 3] -
                      static_cast<long long>(u[1][(j + 2) % 3]) * u[2][(j + 1) % 3];
    det += u[0][j] * minor;
  }
  if (det != 1 && det != -1) throw InvalidGeneratorParams("basis change must be unimodular");
  FundamentalDomain out = d;
  for (int i = 0; i < 3; ++i)
    out.lattice[i] = Q(u[i][0]) * d.lattice[0] + Q(u[i][1]) * d.lattice[1] + Q(u[i][2]) * d.lattice[2];
  return out;
}

FundamentalDomain central_point_subdivision(const FundamentalDomain& d) {
  FundamentalDomain out;
  out.lattice = d.lattice;
  out.metadata = d.metadata;
  for (const auto& cell : d.cells) {
    ConvexPolytope poly = ConvexPolytope::hull(cell);
    for (int f = 0; f < static_cast<int>(poly.facets().size()); ++f) {
      std::vector<Vec3> pyramid = poly.facet_polygon(f);
      pyramid.push_back(poly.center());
      out.cells.push_back(std::move(pyramid));
    }
  }
  return out;
}

}  // namespace tessparam::engine
