#include "latfam/report.hpp"

#include <sstream>

#include "json.hpp"
#include "latfam/errors.hpp"
#include "latfam/picard.hpp"

namespace latfam::io {

namespace {

using nlohmann::json;

std::string viewangle_str(const std::array<std::int64_t, 2>& h) {
  return "(" + std::to_string(h[0]) + "," + std::to_string(h[1]) + ")";
}

std::string divisor_str(std::int64_t l, const std::vector<std::int64_t>& e,
                        const std::vector<std::string>& labels) {
  return picard::divisor_to_string({l, e}, labels);
}

std::string int_list(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string family_line(const ToricFamilyDoc& f) {
  return "h = " + viewangle_str(f.h) + ": degree " + std::to_string(f.degree) + ", e = " +
         int_list(f.e) + ", map = " + f.map;
}

// ---- text ------------------------------------------------------------------

std::string text_of(const WidthDoc& d) {
  std::ostringstream out;
  if (d.finite) {
    out << "v = " << d.v << ", S = {";
    for (std::size_t i = 0; i < d.optimal.size(); ++i) {
      if (i) out << ",";
      out << viewangle_str(d.optimal[i]);
    }
    out << "}\n";
  } else {
    out << "v = 0, S infinite";
    if (!d.optimal.empty()) out << " (representative: " << viewangle_str(d.optimal[0]) << ")";
    out << "\n";
  }
  if (d.oracle_agreement) out << "oracle: " << (*d.oracle_agreement ? "agreed" : "DISAGREED") << "\n";
  if (d.trace) {
    out << "trace:\n";
    for (std::size_t i = 0; i < d.trace->size(); ++i) {
      const TraceRow& row = (*d.trace)[i];
      out << "  [" << i << "] " << row.label << " ";
      for (const auto& v : row.vertices) out << " (" << v[0] << "," << v[1] << ")";
      out << "\n";
    }
  }
  return out.str();
}

std::string text_of(const ToricDirectionDoc& d) { return family_line(d.family) + "\n"; }

std::string text_of(const ToricOptimalDoc& d) {
  std::ostringstream out;
  out << "v = " << d.v << "\n";
  for (const auto& f : d.families) out << family_line(f) << "\n";
  return out.str();
}

std::string text_of(const SurfaceDoc& d) {
  std::ostringstream out;
  if (d.chain) {
    out << "chain:\n";
    for (std::size_t i = 0; i < d.chain->size(); ++i) {
      const SurfaceChainRow& row = (*d.chain)[i];
      out << "  [" << i << "] " << row.label << "  n=" << row.e.size()
          << "  D = " << divisor_str(row.l, row.e, d.labels);
      if (!row.contracted.empty()) {
        out << "  (contracted";
        for (const auto& name : row.contracted) out << " " << name;
        out << ")";
      }
      out << "\n";
    }
  }
  out << "v = " << d.v << "\n";
  if (d.families.empty()) {
    out << "families: not enumerated (" << d.terminal << ")\n";
  } else {
    for (const auto& f : d.families)
      out << "family: " << divisor_str(f.l, f.e, d.labels) << (f.tight ? " (tight)" : "") << "\n";
  }
  out << "terminal: " << d.terminal << "\n";
  return out.str();
}

std::string text_of(const PlotDoc& d) { return "wrote " + d.output + "\n"; }

// ---- machine ---------------------------------------------------------------

json to_json(const WidthDoc& d) {
  json j;
  j["verb"] = "width";
  j["v"] = d.v;
  j["finite"] = d.finite;
  j["optimal"] = d.optimal;
  if (d.trace) {
    json rows = json::array();
    for (const TraceRow& t : *d.trace) rows.push_back({{"case", t.label}, {"vertices", t.vertices}});
    j["trace"] = rows;
  }
  if (d.oracle_agreement) j["oracle_agreement"] = *d.oracle_agreement;
  return j;
}

json to_json(const ToricFamilyDoc& f) {
  return {{"h", f.h}, {"degree", f.degree}, {"e", f.e}, {"map", f.map}};
}

json to_json(const ToricDirectionDoc& d) {
  json j = to_json(d.family);
  j["verb"] = "toric";
  j["mode"] = "direction";
  return j;
}

json to_json(const ToricOptimalDoc& d) {
  json j;
  j["verb"] = "toric";
  j["mode"] = "optimal";
  j["v"] = d.v;
  json fams = json::array();
  for (const auto& f : d.families) fams.push_back(to_json(f));
  j["families"] = fams;
  return j;
}

json to_json(const SurfaceDoc& d) {
  json j;
  j["verb"] = "surface";
  j["v"] = d.v;
  j["terminal"] = d.terminal;
  j["families_complete"] = d.families_complete;
  j["labels"] = d.labels;
  json fams = json::array();
  for (const auto& f : d.families) fams.push_back({{"l", f.l}, {"e", f.e}, {"tight", f.tight}});
  j["families"] = fams;
  if (d.chain) {
    json rows = json::array();
    for (const SurfaceChainRow& r : *d.chain)
      rows.push_back({{"case", r.label}, {"l", r.l}, {"e", r.e}, {"contracted", r.contracted}});
    j["chain"] = rows;
  }
  return j;
}

json to_json(const PlotDoc& d) { return {{"verb", "plot"}, {"output", d.output}}; }

template <typename T>
std::vector<T> vec_of(const json& j) {
  return j.get<std::vector<T>>();
}

WidthDoc width_from_json(const json& j) {
  WidthDoc d;
  d.v = j.at("v").get<std::int64_t>();
  d.finite = j.at("finite").get<bool>();
  d.optimal = j.at("optimal").get<std::vector<std::array<std::int64_t, 2>>>();
  if (j.contains("trace")) {
    std::vector<TraceRow> rows;
    for (const json& r : j.at("trace"))
      rows.push_back({r.at("case").get<std::string>(),
                      r.at("vertices").get<std::vector<std::array<std::int64_t, 2>>>()});
    d.trace = std::move(rows);
  }
  if (j.contains("oracle_agreement")) d.oracle_agreement = j.at("oracle_agreement").get<bool>();
  return d;
}

ToricFamilyDoc toric_family_from_json(const json& j) {
  ToricFamilyDoc f;
  f.h = j.at("h").get<std::array<std::int64_t, 2>>();
  f.degree = j.at("degree").get<std::int64_t>();
  f.e = vec_of<std::int64_t>(j.at("e"));
  f.map = j.at("map").get<std::string>();
  return f;
}

SurfaceDoc surface_from_json(const json& j) {
  SurfaceDoc d;
  d.v = j.at("v").get<std::int64_t>();
  d.terminal = j.at("terminal").get<std::string>();
  d.families_complete = j.at("families_complete").get<bool>();
  d.labels = vec_of<std::string>(j.at("labels"));
  for (const json& f : j.at("families"))
    d.families.push_back({f.at("l").get<std::int64_t>(), vec_of<std::int64_t>(f.at("e")),
                          f.at("tight").get<bool>()});
  if (j.contains("chain")) {
    std::vector<SurfaceChainRow> rows;
    for (const json& r : j.at("chain"))
      rows.push_back({r.at("case").get<std::string>(), r.at("l").get<std::int64_t>(),
                      vec_of<std::int64_t>(r.at("e")), vec_of<std::string>(r.at("contracted"))});
    d.chain = std::move(rows);
  }
  return d;
}

}  // namespace

std::string render_text(const Report& report) {
  return std::visit([](const auto& doc) { return text_of(doc); }, report);
}

std::string render_machine(const Report& report) {
  json j = std::visit([](const auto& doc) { return to_json(doc); }, report);
  return j.dump(2) + "\n";
}

Report parse_machine(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object() || !j.contains("verb"))
    fail(Errc::IoError, "not a machine report");
  const std::string verb = j.at("verb").get<std::string>();
  if (verb == "width") return width_from_json(j);
  if (verb == "toric") {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "direction") return ToricDirectionDoc{toric_family_from_json(j)};
    ToricOptimalDoc d;
    d.v = j.at("v").get<std::int64_t>();
    for (const json& f : j.at("families")) d.families.push_back(toric_family_from_json(f));
    return d;
  }
  if (verb == "surface") return surface_from_json(j);
  if (verb == "plot") return PlotDoc{j.at("output").get<std::string>()};
  fail(Errc::IoError, "unknown report verb: " + verb);
}

}  // namespace latfam::io
