#include "latfam/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "latfam/formats.hpp"
#include "latfam/picard.hpp"
#include "latfam/report.hpp"
#include "latfam/svg.hpp"
#include "latfam/toric.hpp"
#include "latfam/width.hpp"

namespace latfam::io {

namespace {

WidthDoc width_doc_of(const width::WidthReport& rep, bool with_trace) {
  WidthDoc d;
  d.v = rep.width;
  d.finite = rep.finite;
  for (const auto& h : rep.optimal) d.optimal.push_back({h.m, h.n});
  std::sort(d.optimal.begin(), d.optimal.end());
  if (with_trace) {
    std::vector<TraceRow> rows;
    for (const auto& entry : rep.trace) {
      TraceRow row;
      row.label = width::case_label_name(entry.label);
      for (const auto& v : entry.polygon.vertices()) row.vertices.push_back({v.x, v.y});
      rows.push_back(std::move(row));
    }
    d.trace = std::move(rows);
  }
  return d;
}

ToricFamilyDoc toric_family_doc_of(const toric::FibrationDescriptor& desc) {
  ToricFamilyDoc f;
  f.h = {desc.h.m, desc.h.n};
  f.degree = desc.degree;
  f.e = desc.e;
  f.map = toric::fibration_map_string(desc.e);
  return f;
}

SurfaceDoc surface_doc_of(const picard::ChainReport& rep,
                          const std::vector<std::string>& labels, bool with_chain) {
  SurfaceDoc d;
  d.v = rep.v;
  d.terminal = picard::terminal_kind_name(rep.terminal_kind);
  d.families_complete = rep.families_complete;
  d.labels = labels;
  for (const auto& fam : rep.optimal_families)
    d.families.push_back({fam.cls.l, fam.cls.e, fam.tight});
  if (with_chain) {
    std::vector<SurfaceChainRow> rows;
    for (const auto& step : rep.steps)
      rows.push_back({picard::case_b_name(step.label), step.model.d.l, step.model.d.e,
                      step.contracted_labels});
    d.chain = std::move(rows);
  }
  return d;
}

void print_report(const Report& rep, bool machine, std::ostream& out) {
  out << (machine ? render_machine(rep) : render_text(rep));
}

int run_width(const std::string& path, bool machine, bool oracle, bool trace, std::ostream& out) {
  geom::LatticePolygon g = read_polygon_file(path);
  width::WidthReport rep = width::solve(g);
  WidthDoc d = width_doc_of(rep, trace);
  if (oracle) {
    width::WidthReport brute = width::solve_bruteforce(g);
    if (brute.width != rep.width || brute.optimal != rep.optimal)
      fail(Errc::OracleMismatch, "solve and solve_bruteforce disagree on " + path);
    d.oracle_agreement = true;
  }
  print_report(d, machine, out);
  return 0;
}

int run_toric(const std::string& path, bool machine, bool optimal, const std::string& direction,
              std::ostream& out) {
  toric::MonomialEmbedding emb = read_embedding_file(path);
  if (optimal) {
    toric::OptimalToricFamilies fams = toric::optimal_toric_families(emb);
    ToricOptimalDoc d;
    d.v = fams.v;
    for (const auto& desc : fams.descriptors) d.families.push_back(toric_family_doc_of(desc));
    std::sort(d.families.begin(), d.families.end(),
              [](const ToricFamilyDoc& a, const ToricFamilyDoc& b) { return a.h < b.h; });
    print_report(d, machine, out);
    return 0;
  }
  std::int64_t m = 0, n = 0;
  char comma = 0;
  std::istringstream ss(direction);
  if (!(ss >> m >> comma >> n) || comma != ',' || !ss.eof() || (m == 0 && n == 0))
    fail(Errc::IoError, "--direction expects two integers m,n (not both zero)");
  toric::FibrationDescriptor desc = toric::fibration_exponents(emb, {m, n});
  print_report(ToricDirectionDoc{toric_family_doc_of(desc)}, machine, out);
  return 0;
}

int run_surface(const std::string& path, bool machine, bool chain, std::ostream& out) {
  picard::SurfaceModel model = read_surface_file(path);
  picard::ChainReport rep = picard::solve_min_degree(model);
  print_report(surface_doc_of(rep, model.labels, chain), machine, out);
  return 0;
}

int run_plot(const std::string& path, const std::string& out_path, bool machine,
             std::ostream& out) {
  geom::LatticePolygon g = read_polygon_file(path);
  width::WidthReport rep = width::solve(g);
  emit_svg(g, rep, out_path);
  print_report(PlotDoc{out_path}, machine, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lattice width, toric fibrations and Picard adjoint chains"};
  app.require_subcommand(1);

  std::string input, direction, plot_out;
  bool machine = false, oracle = false, trace = false, optimal = false, chain = false;

  CLI::App* width_cmd = app.add_subcommand("width", "width and optimal directions of a polygon");
  width_cmd->add_option("input", input, "polygon file")->required();
  width_cmd->add_flag("--json", machine, "machine output");
  width_cmd->add_flag("--oracle", oracle, "cross-check against the brute-force solver");
  width_cmd->add_flag("--trace", trace, "include per-level case labels");

  CLI::App* toric_cmd = app.add_subcommand("toric", "fibration data of a monomial embedding");
  toric_cmd->add_option("input", input, "embedding file")->required();
  toric_cmd->add_flag("--json", machine, "machine output");
  CLI::Option* dir_opt =
      toric_cmd->add_option("--direction", direction, "single direction query m,n");
  CLI::Option* opt_opt = toric_cmd->add_flag("--optimal", optimal, "all optimal families");
  dir_opt->excludes(opt_opt);

  CLI::App* surface_cmd = app.add_subcommand("surface", "minimal family degree of a surface");
  surface_cmd->add_option("input", input, "surface file")->required();
  surface_cmd->add_flag("--json", machine, "machine output");
  surface_cmd->add_flag("--chain", chain, "print the full adjoint chain table");

  CLI::App* plot_cmd = app.add_subcommand("plot", "SVG of a polygon and its solution");
  plot_cmd->add_option("input", input, "polygon file")->required();
  plot_cmd->add_option("-o,--output", plot_out, "output SVG path")->required();
  plot_cmd->add_flag("--json", machine, "machine output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (width_cmd->parsed()) return run_width(input, machine, oracle, trace, out);
    if (toric_cmd->parsed()) {
      if (!optimal && direction.empty())
        fail(Errc::IoError, "toric needs either --optimal or --direction m,n");
      return run_toric(input, machine, optimal, direction, out);
    }
    if (surface_cmd->parsed()) return run_surface(input, machine, chain, out);
    if (plot_cmd->parsed()) return run_plot(input, plot_out, machine, out);
  } catch (const picard::ChainError& e) {
    err << "error: " << e.what() << "\n";
    if (!e.partial_steps.empty()) {
      err << "partial chain:\n";
      for (std::size_t i = 0; i < e.partial_steps.size(); ++i)
        err << "  [" << i << "] " << picard::case_b_name(e.partial_steps[i].label) << "  D = "
            << picard::divisor_to_string(e.partial_steps[i].model.d, e.partial_steps[i].model.labels)
            << "\n";
    }
    return e.code() == Errc::IoError ? 2 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::IoError ? 2 : 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace latfam::io
