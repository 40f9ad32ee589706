#pragma once

#include "tessparam/engine/geometry.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace tessparam::engine {

using Lattice = std::array<Vec3, 3>;
using IntMatrix = std::array<std::array<int, 3>, 3>;

/// One period of a lattice-periodic tessellation: the translation vectors
/// and the cells, each given by its apices in Cartesian coordinates.
struct FundamentalDomain {
  Lattice lattice;
  std::vector<std::vector<Vec3>> cells;
  std::map<std::string, std::string> metadata;
};

Q lattice_volume(const Lattice& lattice);
/// Coordinates of p with respect to the lattice basis.
Vec3 to_lattice(const Lattice& lattice, const Vec3& p);

/// Reads the JSON domain format: {"lattice": [[x, y, z] x3], "cells": [...]}.
/// A cell is either a list of apex triples or {"halfspaces": [[a, b, c, d], ...]}
/// meaning a x + b y + c z <= d. Numbers may be JSON numbers or exact strings.
/// Throws ParseError.
FundamentalDomain domain_from_json(const std::string& text);
std::string domain_to_json(const FundamentalDomain& d);
/// Plain-text OBJ geometry of the domain's cells, one object per cell,
/// with the exact coordinates repeated in comments.
std::string domain_to_obj(const FundamentalDomain& d);

/// Tiles counts[i] copies along each lattice vector into a larger domain.
FundamentalDomain replicate(const FundamentalDomain& d, std::array<int, 3> counts);
/// Applies x -> A x + shift to every point and lattice vector. A is given
/// by rows and must be invertible.
FundamentalDomain affine(const FundamentalDomain& d, const std::array<Vec3, 3>& rows, const Vec3& shift);
/// Replaces the lattice basis by unimodular integer combinations of it.
FundamentalDomain rebase(const FundamentalDomain& d, const IntMatrix& u);
/// Splits every cell into pyramids over its facets with apex at the cell's
/// apex mean.
FundamentalDomain central_point_subdivision(const FundamentalDomain& d);

}  // namespace tessparam::engine
