#include "latfam/formats.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace latfam::io {

namespace {

using nlohmann::json;

constexpr std::int64_t kCoordinateBound = 1000000;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) fail(Errc::IoError, "input is not valid JSON");
  if (!doc.is_object()) fail(Errc::IoError, "input must be a JSON object");
  return doc;
}

std::int64_t checked_int(const json& v, const char* what) {
  if (!v.is_number_integer()) fail(Errc::IoError, std::string(what) + " must be an integer");
  std::int64_t x = v.get<std::int64_t>();
  if (x < -kCoordinateBound || x > kCoordinateBound)
    fail(Errc::IoError, std::string(what) + " exceeds the coordinate bound 10^6");
  return x;
}

std::vector<std::pair<std::int64_t, std::int64_t>> pair_list(const json& doc, const char* key) {
  if (!doc.contains(key)) fail(Errc::IoError, std::string("missing \"") + key + "\" field");
  const json& arr = doc[key];
  if (!arr.is_array()) fail(Errc::IoError, std::string("\"") + key + "\" must be an array");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  out.reserve(arr.size());
  for (const json& item : arr) {
    if (!item.is_array() || item.size() != 2)
      fail(Errc::IoError, std::string("entries of \"") + key + "\" must be [x, y] pairs");
    out.emplace_back(checked_int(item[0], key), checked_int(item[1], key));
  }
  return out;
}

}  // namespace

geom::LatticePolygon parse_polygon(const std::string& text) {
  json doc = parse_json(text);
  auto pairs = pair_list(doc, "points");
  if (pairs.empty()) fail(Errc::IoError, "\"points\" must not be empty");
  std::vector<geom::LatticePoint> pts;
  pts.reserve(pairs.size());
  for (const auto& [x, y] : pairs) pts.push_back({x, y});
  return geom::convex_hull(pts);
}

toric::MonomialEmbedding parse_embedding(const std::string& text) {
  json doc = parse_json(text);
  toric::MonomialEmbedding emb;
  emb.exponents = pair_list(doc, "exponents");
  if (emb.exponents.empty()) fail(Errc::IoError, "\"exponents\" must not be empty");
  return emb;
}

picard::SurfaceModel parse_surface(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.contains("parametric_degree"))
    fail(Errc::IoError, "missing \"parametric_degree\" field");
  std::int64_t degree = checked_int(doc["parametric_degree"], "parametric_degree");
  if (!doc.contains("multiplicities")) fail(Errc::IoError, "missing \"multiplicities\" field");
  const json& arr = doc["multiplicities"];
  if (!arr.is_array()) fail(Errc::IoError, "\"multiplicities\" must be an array");
  std::vector<std::int64_t> mults;
  mults.reserve(arr.size());
  for (const json& item : arr) mults.push_back(checked_int(item, "multiplicities"));
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& larr = doc["labels"];
    if (!larr.is_array()) fail(Errc::IoError, "\"labels\" must be an array of strings");
    for (const json& item : larr) {
      if (!item.is_string()) fail(Errc::IoError, "\"labels\" must be an array of strings");
      labels.push_back(item.get<std::string>());
    }
    if (labels.size() != mults.size())
      fail(Errc::IoError, "\"labels\" length must match \"multiplicities\"");
  }
  return picard::surface_from_basepoints(degree, mults, std::move(labels));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

geom::LatticePolygon read_polygon_file(const std::string& path) {
  return parse_polygon(read_file(path));
}

toric::MonomialEmbedding read_embedding_file(const std::string& path) {
  return parse_embedding(read_file(path));
}

picard::SurfaceModel read_surface_file(const std::string& path) {
  return parse_surface(read_file(path));
}

}  // namespace latfam::io
