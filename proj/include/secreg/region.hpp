#pragma once

#include <span>
#include <vector>

#include "secreg/rates.hpp"

namespace secreg {

struct RegionVertex {
    double r1_bits = 0.0;
    double r2_bits = 0.0;
};

/// Convex achievable region in the (R1, R2) plane. Vertices run clockwise
/// from the origin: up the R2 axis, across the Pareto frontier, down to
/// (max R1, 0), so the R1 coordinates are non-decreasing.
struct RateRegion {
    std::vector<RegionVertex> hull_vertices;

    double max_r1() const noexcept;
    double max_r2() const noexcept;

    /// True when (r1, r2) lies inside or on the hull, with tol acting as a
    /// Euclidean distance slack on each edge.
    bool contains(double r1, double r2, double tol = 1e-9) const;
};

/// Convex hull of the given rate points together with the anchors (0,0),
/// (max R1, 0) and (0, max R2). Points closer than 1e-12 are merged; an
/// empty input yields the origin-only region. Coordinates must be finite
/// and nonnegative.
RateRegion convex_hull_region(std::span<const RegionVertex> points);
RateRegion convex_hull_region(std::span<const RatePoint> points);

/// True when every vertex of inner lies inside outer within tol.
bool contains_region(const RateRegion& outer, const RateRegion& inner, double tol = 1e-9);

} // namespace secreg
