#pragma once

#include <string>
#include <vector>

#include "latfam/picard.hpp"
#include "latfam/polygon.hpp"
#include "latfam/toric.hpp"

namespace latfam::io {

// Input files are JSON documents. Coordinates are validated against the
// ingestion bound |v| <= 10^6. All failures raise IoError.
//
//   polygon:   { "points":    [[x, y], ...] }          (order irrelevant)
//   embedding: { "exponents": [[a, b], ...] }
//   surface:   { "parametric_degree": d,
//                "multiplicities": [m_1, ...],
//                "labels": ["..."] (optional) }

geom::LatticePolygon parse_polygon(const std::string& text);
toric::MonomialEmbedding parse_embedding(const std::string& text);
picard::SurfaceModel parse_surface(const std::string& text);

geom::LatticePolygon read_polygon_file(const std::string& path);
toric::MonomialEmbedding read_embedding_file(const std::string& path);
picard::SurfaceModel read_surface_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace latfam::io
