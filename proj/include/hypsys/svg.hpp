#pragma once

#include <string>

#include "hypsys/models.hpp"

// Static SVG figures in the disk model (half-plane data mapped through the
// standard Cayley transform). Presentational only.

namespace hypsys::svg {

// Fundamental polygon, its dual around the diameter vertex, the diameter
// itself and the candidate closed geodesic.
void write_polygon_figure(models::ModelKind kind, int genus, const std::string& path);

// Ball of radius h centered at H together with its nearby translates,
// showing the tangency picture. P1 and P2 only.
void write_ball_figure(models::ModelKind kind, int genus, const std::string& path);

}  // namespace hypsys::svg
