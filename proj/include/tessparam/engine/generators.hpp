#pragma once

#include "tessparam/engine/domain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tessparam::engine {

enum class PrismBase { triangle, square, hexagon };

FundamentalDomain cubic_lattice();
/// 2x2x2 block of cubes, each cut into three pyramids with apex at the
/// block centre.
FundamentalDomain divided_cube();
/// Unit cube cut into three pyramids around its main diagonal.
FundamentalDomain parallel_pyramids();
/// Cubes halved by a diagonal plate. The default alternates the plate
/// orientation with the parity of the cube; `aligned` uses one orientation.
FundamentalDomain split_prism(bool aligned = false);
/// Vertical prism columns over a planar tiling, each column shifted by its
/// own offset. Offsets default to i/K over the K columns of the supercell.
/// Throws InvalidGeneratorParams if two columns sharing a vertical line
/// have equal offsets.
FundamentalDomain prism_columns(PrismBase base, const std::optional<std::vector<Q>>& offsets = std::nullopt);
/// Layers of triangular prisms; every second layer has each prism cut into
/// three from the centroid of its triangle.
FundamentalDomain stratum_prism();
/// Cube with a central spoke split into k + 1 edges and n extra vertices on
/// each side of the top and bottom squares.
FundamentalDomain spoke_cube(int k, int n);
/// Cube around a core of k + 1 stacked prisms over 4(n + 1)-gons.
FundamentalDomain core_prism_cube(int k, int n);

/// Builds a domain from a generator id such as "cubic_lattice",
/// "prism_columns(base=square)", "split_prism(aligned)" or
/// "spoke_cube(k=2,n=1)". Throws InvalidGeneratorParams.
FundamentalDomain generate(const std::string& id);
/// Identifiers accepted by generate, with placeholders for parameters.
std::vector<std::string> generator_ids();

}  // namespace tessparam::engine
