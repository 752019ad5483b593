#pragma once

// Serialisation of packings, density curves and Voronoi cells, and an SVG
// renderer working directly in half-plane coordinates.

#include <string>
#include <vector>

#include "json.hpp"

#include "hypack/density.hpp"
#include "hypack/packings.hpp"
#include "hypack/voronoi.hpp"

namespace hypack {

inline constexpr const char* kSchemaVersion = "hypack/1";
inline constexpr const char* kCsvHeader = "radius,fraction,std_error,samples,method";

/// {schema, model: "uhp", kind, params, window, bodies: [{H, K, R}]}; region
/// kinds carry a "region" descriptor and no bodies.
nlohmann::json packing_to_json(const Packing& p, const BallSpec& window);
/// Brick family document: region descriptor plus the bricks meeting the window.
nlohmann::json bricks_to_json(double offset, double width, const BallSpec& window);
/// Euclidean even-annulus document for the disk of radius 2^k.
nlohmann::json annulus_to_json(int k);

/// Throws DomainError when the document does not follow the schema.
void validate_packing_json(const nlohmann::json& doc);

std::vector<HDisk> bodies_from_json(const nlohmann::json& doc);

/// Rebuilds a hyperbolic packing from its kind and parameters: stripe (W),
/// halfspace, boroczky (rho), tight (m).
Packing packing_from_params(const std::string& kind, const std::map<std::string, double>& params);
Packing packing_from_json(const nlohmann::json& doc);

std::string curve_to_csv(const DensityCurve& curve);

/// {site: {x, y}, vertices: [{x, y}, ...]}
nlohmann::json cell_to_json(const VoronoiCell& cell);

struct SvgOptions {
    bool log_y = false;
    bool brick_layer = false;
    double brick_offset = 0.0;
    double brick_width = 1.6487212707001282;  // e^{1/2}
    double width_px = 800.0;
};

/// Renders a packing document, optionally with Voronoi cells on top.
std::string render_svg(const nlohmann::json& doc, const SvgOptions& opts,
                       const std::vector<nlohmann::json>& cells = {});

}  // namespace hypack
