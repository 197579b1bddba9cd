#pragma once

#include <string>

#include "latfam/width.hpp"

namespace latfam::io {

// Standalone SVG: lattice dots over the bounding box, the polygon outline,
// every adjoint-chain polygon nested inside, and one bundle of level lines
// h(x) = c per optimal direction. Fixed 24-unit lattice pitch. The report
// must come from solve() on the same polygon. Throws DegeneratePolygon for
// dim <= 1 and IoError when the file cannot be written.
std::string render_svg(const geom::LatticePolygon& g, const width::WidthReport& report);
void emit_svg(const geom::LatticePolygon& g, const width::WidthReport& report,
              const std::string& path);

}  // namespace latfam::io
