#pragma once

// Dirichlet-Voronoi cells of point sites and the relative density of a disk
// inside its cell.

#include <span>
#include <vector>

#include "hypack/hgeom.hpp"
#include "hypack/point_index.hpp"
#include "hypack/sampling.hpp"

namespace hypack {

struct VoronoiCell {
    HPoint site;
    GeodesicPolygon polygon;
    std::vector<HPoint> neighbor_sites;
};

/// Cell of sites[i]: the intersection of the half-planes bounded by the
/// perpendicular bisectors to every other site within search_radius.
/// Throws UnboundedCellError when the cell is not closed off by those sites.
VoronoiCell dirichlet_cell(std::span<const HPoint> sites, std::size_t i, double search_radius);
VoronoiCell dirichlet_cell(const PointIndex& sites, std::size_t i, double search_radius);

/// ball_area(rho) / area(cell); the disk of radius rho about the site must lie
/// inside the cell.
double cell_relative_density(const VoronoiCell& cell, double rho);

/// Fraction of window samples lying in exactly one cell.
double partition_audit(std::span<const VoronoiCell> cells, const BallSpec& window, const SamplePlan& plan);

}  // namespace hypack
