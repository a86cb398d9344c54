#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mink/norms.hpp"
#include "mink/triangle.hpp"

namespace mink {

struct SceneOptions {
    std::uint64_t seed = 42;
    int trials = 1000;
    int discretization = kDefaultVertexBudget;
    double tol_exact = kExactTol;
    double tol_opt = kOptTol;
    double area_unit = 1.0; // scales the symplectic form; applied as a
                            // coordinate change by sqrt(area_unit)
    int ngon = 4;           // zenodorus target
    int partitions = 8;     // kepler partition count
};

// Parsed scene: one norm, named bodies, options. Immutable after parsing.
struct Scene {
    NormSpec norm;
    std::string norm_descriptor; // canonical JSON echo of the norm
    std::map<std::string, ConvexPolygon> polygons;
    std::map<std::string, Triangle> triangles;
    std::map<std::string, std::vector<Point2>> point_sets;
    SceneOptions options;

    const ConvexPolygon& polygon(const std::string& name) const;
    const Triangle& triangle(const std::string& name) const;
    const std::vector<Point2>& points(const std::string& name) const;
    // First body of the kind, for commands run without an explicit name.
    const ConvexPolygon& first_polygon() const;
    const Triangle& first_triangle() const;
};

// Parses and validates scene JSON. Malformed JSON raises validation_error
// with line/column diagnostics; invalid content raises validation_error with
// the offending path.
Scene parse_scene(const std::string& json_text);
Scene load_scene_file(const std::string& path);

} // namespace mink
