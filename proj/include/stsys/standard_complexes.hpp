#pragma once

#include "stsys/cell_complex.hpp"

#include <string>
#include <utility>
#include <vector>

/// Named constructors for the complexes used throughout the library and
/// its tests. Vertex weights are always 1.
namespace stsys::library {

/// A single vertex.
WeightedCellComplex point();

/// Simplicial circle on k >= 3 vertices; edge i joins vertex i and i+1 mod k.
WeightedCellComplex circle(int k, const Rational& edge_weight = 1);

/// Cubical circle on k >= 1 vertices (a loop when k = 1, a digon when k = 2).
WeightedCellComplex cubical_circle(int k, const Rational& edge_weight = 1);

/// Boundary of the (n+1)-simplex; all positive-dimensional cells get `weight`.
WeightedCellComplex sphere(int n, const Rational& weight = 1);

/// Boundary of the (n+1)-cube with unit weights.
WeightedCellComplex cubical_sphere(int n, const Rational& weight = 1);

/// k × k grid torus, the product of two cubical circles with the given edge length.
WeightedCellComplex flat_torus(int k, const Rational& edge_length = 1);

/// Minimal 6-vertex triangulation of the real projective plane.
WeightedCellComplex rp2();

/// 9-vertex triangulation of the torus (3 × 3 grid, diagonals added).
WeightedCellComplex torus9();

/// Triangulated dim-torus on a periodic k^dim grid, each cube cut into dim!
/// simplices along monotone lattice paths (k >= 3 keeps vertex sets distinct).
WeightedCellComplex simplicial_torus(int dim, int k = 3);

/// General 1-complex; multi-edges and loops are allowed. Edge e runs
/// from edges[e].first to edges[e].second.
WeightedCellComplex graph(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<Rational>& edge_weights);

/// Names accepted by `by_name`: point, circle, cubical-circle, sphere,
/// cubical-sphere, flat-torus, rp2, torus9, simplicial-torus.
std::vector<std::string> names();

/// Builds a library complex from its name and integer/rational arguments,
/// e.g. ("circle", {"3"}) or ("flat-torus", {"4", "1/4"}).
WeightedCellComplex by_name(const std::string& name, const std::vector<std::string>& args);

}  // namespace stsys::library
