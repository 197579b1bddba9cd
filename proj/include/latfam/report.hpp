#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace latfam::io {

// Serializable mirrors of the solver results. Machine rendering is canonical
// JSON (sorted keys, sorted sets) and round-trips through parse_machine.

struct TraceRow {
  std::string label;
  std::vector<std::array<std::int64_t, 2>> vertices;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct WidthDoc {
  std::int64_t v = 0;
  bool finite = true;
  std::vector<std::array<std::int64_t, 2>> optimal;  // sorted (m, n)
  std::optional<std::vector<TraceRow>> trace;
  std::optional<bool> oracle_agreement;

  friend bool operator==(const WidthDoc&, const WidthDoc&) = default;
};

struct ToricFamilyDoc {
  std::array<std::int64_t, 2> h{0, 0};
  std::int64_t degree = 0;
  std::vector<std::int64_t> e;
  std::string map;

  friend bool operator==(const ToricFamilyDoc&, const ToricFamilyDoc&) = default;
};

struct ToricDirectionDoc {
  ToricFamilyDoc family;

  friend bool operator==(const ToricDirectionDoc&, const ToricDirectionDoc&) = default;
};

struct ToricOptimalDoc {
  std::int64_t v = 0;
  std::vector<ToricFamilyDoc> families;  // sorted by h

  friend bool operator==(const ToricOptimalDoc&, const ToricOptimalDoc&) = default;
};

struct SurfaceFamilyDoc {
  std::int64_t l = 0;
  std::vector<std::int64_t> e;
  bool tight = false;

  friend bool operator==(const SurfaceFamilyDoc&, const SurfaceFamilyDoc&) = default;
};

struct SurfaceChainRow {
  std::string label;
  std::int64_t l = 0;
  std::vector<std::int64_t> e;
  std::vector<std::string> contracted;

  friend bool operator==(const SurfaceChainRow&, const SurfaceChainRow&) = default;
};

struct SurfaceDoc {
  std::int64_t v = 0;
  std::string terminal;
  std::vector<SurfaceFamilyDoc> families;
  bool families_complete = true;
  std::vector<std::string> labels;
  std::optional<std::vector<SurfaceChainRow>> chain;

  friend bool operator==(const SurfaceDoc&, const SurfaceDoc&) = default;
};

struct PlotDoc {
  std::string output;

  friend bool operator==(const PlotDoc&, const PlotDoc&) = default;
};

using Report = std::variant<WidthDoc, ToricDirectionDoc, ToricOptimalDoc, SurfaceDoc, PlotDoc>;

std::string render_text(const Report& report);
std::string render_machine(const Report& report);
Report parse_machine(const std::string& text);

}  // namespace latfam::io
