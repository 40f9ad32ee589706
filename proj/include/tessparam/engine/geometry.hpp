#pragma once

#include "tessparam/scalar.hpp"

#include <array>
#include <compare>
#include <iosfwd>
#include <vector>

namespace tessparam::engine {

using Q = Rational;

struct Vec3 {
  Q x, y, z;

  Vec3() = default;
  Vec3(Q a, Q b, Q c) : x(std::move(a)), y(std::move(b)), z(std::move(c)) {}

  const Q& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Q& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3& operator+=(const Vec3& o);
  Vec3& operator-=(const Vec3& o);
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator*(const Q& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }

  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
  std::strong_ordering operator<=>(const Vec3& o) const;

  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
  std::array<double, 3> approx() const;
};

Q dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
/// Componentwise fractional part, each coordinate in [0, 1).
Vec3 frac(const Vec3& v);
/// Componentwise floor.
Vec3 floor(const Vec3& v);
/// Scales a nonzero vector to the primitive integer vector with the same direction.
Vec3 primitive(const Vec3& v);
std::ostream& operator<<(std::ostream& os, const Vec3& v);

/// A facet of a convex polytope: outward primitive normal, offset
/// (normal . x = offset on the facet), and corner indices in
/// counter-clockwise order seen from outside.
struct Facet {
  Vec3 normal;
  Q offset;
  std::vector<int> corners;
};

struct Ridge {
  int a, b;            // apex indices
  int left, right;     // the two facets meeting at the ridge
};

enum class Where { outside, interior, facet, ridge, apex };

struct Location {
  Where where = Where::outside;
  int index = -1;  // facet, ridge or apex index
};

/// Bounded convex polyhedron with its full face lattice.
class ConvexPolytope {
 public:
  /// Every point must be an apex of the hull. Throws NonConvexCell otherwise
  /// or if the points do not span three dimensions.
  static ConvexPolytope hull(std::vector<Vec3> points);
  /// Half-spaces a x + b y + c z <= d given as {a, b, c, d}.
  static ConvexPolytope from_halfspaces(const std::vector<std::array<Q, 4>>& halfspaces);

  const std::vector<Vec3>& apices() const { return apices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Ridge>& ridges() const { return ridges_; }
  const Q& volume() const { return volume_; }
  /// Mean of the apices; an interior point.
  const Vec3& center() const { return center_; }
  const Vec3& lo() const { return lo_; }
  const Vec3& hi() const { return hi_; }
  std::vector<Vec3> facet_polygon(int f) const;

  Location locate(const Vec3& p) const;
  bool contains(const Vec3& p) const { return locate(p).where != Where::outside; }

  ConvexPolytope translated(const Vec3& t) const;

 private:
  void finish();

  std::vector<Vec3> apices_;
  std::vector<Facet> facets_;
  std::vector<Ridge> ridges_;
  std::vector<std::array<double, 4>> approx_planes_;
  Q volume_;
  Vec3 center_, lo_, hi_;
};

/// Interiors overlap test for two convex polytopes (separating-axis theorem
/// over facet normals and ridge cross products).
bool interiors_overlap(const ConvexPolytope& a, const ConvexPolytope& b);

/// Intersection of two convex polygons lying in the plane with the given
/// normal; both counter-clockwise around it. Collinear points are dropped.
std::vector<Vec3> clip_polygon(const std::vector<Vec3>& subject, const std::vector<Vec3>& clipper,
                               const Vec3& normal);

/// Twice the area vector of a planar polygon.
Vec3 area_vector(const std::vector<Vec3>& polygon);

/// True if p lies on the closed segment [a, b].
bool on_segment(const Vec3& p, const Vec3& a, const Vec3& b);

}  // namespace tessparam::engine
