#ifndef BPSWF_TOOLS_GRID_HPP
#define BPSWF_TOOLS_GRID_HPP

#include "bpswf/vec3.hpp"

#include <string>
#include <vector>

namespace bpswf::cli {

enum class GridKind { slice_z, slice_y, ball3d, sphere_shell };

/// Parsed form of "kind:AxB[xC][@offset]".
///   slice-z:64x64@0.2   x, y over [-1, 1] on the plane z = 0.2
///   slice-y:64x64       x, z over [-1, 1] on the plane y = 0
///   ball3d:16x16x16     x, y, z over [-1, 1]
///   sphere-shell:32x64@0.9   theta (midpoints) x phi on the sphere of radius 0.9
struct FieldGridSpec {
    GridKind kind = GridKind::slice_z;
    std::vector<int> resolution;
    double offset = 0.0;
};

FieldGridSpec parse_grid(const std::string &text);

struct GridPoints {
    std::vector<Vec3> points;
    std::size_t outside = 0; // dropped, |x| > 1
    std::size_t on_axis = 0; // dropped, x = y = 0 (vector fields only)
};

/// Points in lexicographic grid-index order, last index fastest.
GridPoints generate_grid(const FieldGridSpec &spec, bool drop_axis);

} // namespace bpswf::cli

#endif
