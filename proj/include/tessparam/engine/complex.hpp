#pragma once

#include "tessparam/engine/domain.hpp"
#include "tessparam/params.hpp"

#include <string>
#include <vector>

namespace tessparam::engine {

/// A vertex seen from one cell: its class and position in the cell's frame.
struct CellVertex {
  int vertex;
  Vec3 position;
  Location location;
};

struct CellRecord {
  ConvexPolytope shape;  // lattice coordinates
  std::vector<CellVertex> vertices;
  std::vector<Vec3> edge_midpoints;  // edges contained in the closed cell
  int plate_count = 0;
};

struct VertexRecord {
  Vec3 position;  // representative in [0, 1)^3, lattice coordinates
};

struct EdgeRecord {
  int from, to;
  Vec3 a, b;  // representative with midpoint in [0, 1)^3
  bool pi = false;
  int plates = 0;
};

/// z ∩ (z' + shift) for two canonical cells; geometry in the frame of `cell`.
struct PlateRecord {
  int cell, other;
  Vec3 shift;
  Vec3 normal;  // outward for `cell`
  std::vector<Vec3> corners;
  std::vector<int> boundary;             // vertices on the boundary, in order
  std::vector<Vec3> boundary_points;
  std::vector<char> boundary_is_corner;
  std::vector<int> edges;                // boundary_points[k] -> boundary_points[k+1]
};

/// Cell complex of a lattice-periodic tessellation modulo its lattice.
/// Built once; read-only afterwards.
class PeriodicComplex {
 public:
  /// Throws NotATessellation or NonConvexCell.
  static PeriodicComplex load(const FundamentalDomain& domain);

  const FundamentalDomain& domain() const { return domain_; }
  /// Euclidean volume of one period.
  const Q& volume() const { return volume_; }
  const std::vector<CellRecord>& cells() const { return cells_; }
  const std::vector<VertexRecord>& vertices() const { return vertices_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const std::vector<PlateRecord>& plates() const { return plates_; }

  /// Vertices found in the relative interior of a plate (never expected).
  const std::vector<std::string>& plate_interior_vertices() const { return plate_interior_; }
  /// Plate corners that are not an apex of either adjacent cell.
  const std::vector<std::string>& non_apex_plate_corners() const { return non_apex_corners_; }

 private:
  FundamentalDomain domain_;
  Q volume_;
  std::vector<CellRecord> cells_;
  std::vector<VertexRecord> vertices_;
  std::vector<EdgeRecord> edges_;
  std::vector<PlateRecord> plates_;
  std::vector<std::string> plate_interior_;
  std::vector<std::string> non_apex_corners_;
};

struct ElementCounts {
  long vertices = 0, edges = 0, plates = 0, cells = 0;
  long pi_edges = 0, hemi_vertices = 0;
  long apices = 0, ridges = 0, facets = 0, facet_sides = 0, plate_sides = 0;
};

/// Measured intensities, adjacencies and face statistics, laid out like
/// the closed-form summary so the two compare field by field.
struct MeasuredParams {
  DerivedSummary summary;
  ElementCounts counts;
  Scalar volume;

  const TessParams& params() const { return summary.params; }
};

MeasuredParams measure(const PeriodicComplex& complex);

struct VertexStats {
  int vertex;
  Vec3 position;
  int edges = 0;          // m_E
  int pi_edges = 0;       // emanating edges lying inside a facet
  int hemi = 0;           // 1 if inside some facet
  int ridge_interiors = 0;  // (cell, ridge) pairs with the vertex inside the ridge
  int side_interiors = 0;   // (plate, side) pairs with the vertex inside the side
};

std::vector<VertexStats> vertex_stats(const PeriodicComplex& complex);

/// Names of summary fields where the two disagree.
std::vector<std::string> summary_mismatches(const DerivedSummary& measured, const DerivedSummary& predicted);

struct ValidationCheck {
  std::string name;
  bool ok;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  std::vector<std::string> failures() const;
};

ValidationReport validate(const PeriodicComplex& complex);

}  // namespace tessparam::engine
