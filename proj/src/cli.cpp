#include "pathsep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "pathsep/edge_systems.hpp"
#include "pathsep/error.hpp"
#include "pathsep/fault.hpp"
#include "pathsep/oracle.hpp"
#include "pathsep/profile.hpp"
#include "pathsep/random_graphs.hpp"
#include "pathsep/tree.hpp"
#include "pathsep/verify.hpp"
#include "pathsep/vertex_systems.hpp"

namespace pathsep::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::UsageError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& file, std::ostream& out) {
  if (file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(file, std::ios::binary);
  if (!f) throw Error(ErrorCode::UsageError, "cannot write '" + file + "'");
  f << text;
}

json labels_json(const Graph& g, const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(g.label(v));
  return a;
}

json system_json(const Graph& g, const PathSystem& fs) {
  json a = json::array();
  for (const Path& p : fs.paths) a.push_back(labels_json(g, p.vertices));
  return a;
}

json element_json(const Graph& g, const Element& e) {
  if (const auto* v = std::get_if<Vertex>(&e)) return g.label(*v);
  const Edge& x = std::get<Edge>(e);
  return json::array({g.label(x.u), g.label(x.v)});
}

std::string join_labels(const Graph& g, const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(g.label(vs[i]));
  }
  return s;
}

std::string fmt_double(double x) {
  std::ostringstream ss;
  ss << std::setprecision(10) << x;
  return ss.str();
}

json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

struct Options {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::string tree_file;
  std::string paths_file;
  std::string target = "edges";
  std::string output;
  std::string report;
  bool no_cover = false;
  long budget_ms = 0;
  int n = 0;
  std::optional<double> p;
  bool supercritical = false;
  bool subcritical = false;
  int trials = 1;
};

int cmd_profile(const Options& o, std::ostream& out) {
  const Tree t = parse_tree(read_file(o.tree_file));
  const TreeProfile pr = profile(t);
  if (o.format == "json") {
    json bare = json::array();
    for (const Path& p : pr.bare_paths) bare.push_back(labels_json(t, p.vertices));
    json bunches = json::array();
    for (const Bunch& b : pr.bunches) {
      bunches.push_back({{"vertices", labels_json(t, b.vertices)}, {"leaves", labels_json(t, b.leaves)}, {"size", b.size()}});
    }
    json interior = json::array();
    for (Edge e : pr.interior_edges) interior.push_back(json::array({t.label(e.u), t.label(e.v)}));
    const json doc = {{"n", pr.n},
                      {"h1", pr.h1},
                      {"h2", pr.h2},
                      {"h2star", pr.h2star},
                      {"leaves", labels_json(t, pr.leaves)},
                      {"deg2", labels_json(t, pr.deg2)},
                      {"interiorEdges", interior},
                      {"barePaths", bare},
                      {"setI", pr.set_i},
                      {"bunches", bunches},
                      {"usefulLeaves", labels_json(t, pr.useful_leaves)}};
    out << doc.dump() << '\n';
    return 0;
  }
  out << "n " << pr.n << '\n'
      << "h1 " << pr.h1 << '\n'
      << "h2 " << pr.h2 << '\n'
      << "h2star " << pr.h2star << '\n'
      << "leaves " << join_labels(t, pr.leaves) << '\n'
      << "deg2 " << join_labels(t, pr.deg2) << '\n'
      << "usefulLeaves " << join_labels(t, pr.useful_leaves) << '\n';
  for (std::size_t i = 0; i < pr.bare_paths.size(); ++i) {
    out << "barePath " << format_path(t, pr.bare_paths[i]) << (pr.in_set_i(static_cast<int>(i)) ? " I" : "") << '\n';
  }
  for (const Bunch& b : pr.bunches) out << "bunch " << join_labels(t, b.vertices) << " size " << b.size() << '\n';
  return 0;
}

std::string system_text(const Tree& t, const PathSystem& fs, const std::vector<std::string>& header) {
  std::string s;
  for (const std::string& h : header) s += "# " + h + "\n";
  return s + write_path_system(t, fs);
}

int cmd_construct_edge(const Options& o, std::ostream& out) {
  const Tree t = parse_tree(read_file(o.tree_file));
  const PathSystem fs = edge_system(t);
  if (o.format == "json") {
    emit(json{{"size", fs.size()}, {"paths", system_json(t, fs)}}.dump() + "\n", o.output, out);
  } else {
    emit(system_text(t, fs, {"size " + std::to_string(fs.size())}), o.output, out);
  }
  return 0;
}

int cmd_construct_vertex(const Options& o, std::ostream& out, std::ostream& err) {
  const Tree t = parse_tree(read_file(o.tree_file));
  if (auto w = vertex_precondition_warning(t)) err << "warning: " << *w << '\n';
  const PathSystem fs = vertex_system(t);
  const TreeProfile pr = profile(t);
  const auto sharp = sharp_value(t, TargetKind::Vertices);
  if (o.format == "json") {
    const json bounds = {{"lower", vertex_lower_bound(pr)},
                         {"upper", vertex_upper_formula(pr)},
                         {"constructedSize", fs.size()},
                         {"sharp", optional_json(sharp)}};
    emit(json{{"size", fs.size()}, {"paths", system_json(t, fs)}, {"bounds", bounds}}.dump() + "\n", o.output, out);
  } else {
    std::vector<std::string> header{"size " + std::to_string(fs.size()),
                                    "lower " + std::to_string(vertex_lower_bound(pr)),
                                    "upper " + std::to_string(vertex_upper_formula(pr))};
    if (sharp) header.push_back("sharp " + std::to_string(*sharp));
    emit(system_text(t, fs, header), o.output, out);
  }
  return 0;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const Tree t = parse_tree(read_file(o.tree_file));
  const TreeProfile pr = profile(t);
  const int edge_opt = t.order() >= 2 ? edge_optimum(t) : -1;
  const bool supported = vertex_system_supported(t);
  const auto sharp_v = sharp_value(t, TargetKind::Vertices);
  const auto sharp_vi = sharp_value(t, TargetKind::VerticesAndInteriorEdges);
  if (o.format == "json") {
    const json doc = {
        {"h1", pr.h1},
        {"h2", pr.h2},
        {"h2star", pr.h2star},
        {"edge", {{"formula", edge_formula(pr.h1, pr.h2)}, {"optimum", edge_opt >= 0 ? json(edge_opt) : json(nullptr)}}},
        {"vertex",
         {{"lower", vertex_lower_bound(pr)},
          {"upper", vertex_upper_formula(pr)},
          {"supported", supported},
          {"sharp", optional_json(sharp_v)}}},
        {"verticesAndInteriorEdges", {{"sharp", optional_json(sharp_vi)}}}};
    out << doc.dump() << '\n';
    return 0;
  }
  const auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << "h1 " << pr.h1 << '\n'
      << "h2 " << pr.h2 << '\n'
      << "h2star " << pr.h2star << '\n'
      << "edgeFormula " << edge_formula(pr.h1, pr.h2) << '\n'
      << "edgeOptimum " << (edge_opt >= 0 ? std::to_string(edge_opt) : std::string("-")) << '\n'
      << "vertexLower " << vertex_lower_bound(pr) << '\n'
      << "vertexUpper " << vertex_upper_formula(pr) << '\n'
      << "vertexSupported " << (supported ? "yes" : "no") << '\n'
      << "vertexSharp " << show(sharp_v) << '\n'
      << "verticesAndInteriorEdgesSharp " << show(sharp_vi) << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Tree t = parse_tree(read_file(o.tree_file));
  const PathSystem fs = parse_path_system(read_file(o.paths_file), t);
  const TargetSet ts = TargetSet::of(t, parse_target_kind(o.target));
  const auto sep = separates(t, fs, ts);
  const auto cov = covers(t, fs, ts);
  if (o.format == "json") {
    out << json{{"separates", sep.ok()},
                {"covers", cov.ok()},
                {"separation", describe(t, sep)},
                {"cover", describe(t, cov)}}
               .dump()
        << '\n';
  } else {
    out << describe(t, sep) << '\n' << describe(t, cov) << '\n';
  }
  return sep.ok() && cov.ok() ? 0 : 1;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Tree t = parse_tree(read_file(o.tree_file));
  const TargetSet ts = TargetSet::of(t, parse_target_kind(o.target));
  OracleOptions opt;
  opt.require_cover = !o.no_cover;
  opt.budget = std::chrono::milliseconds(o.budget_ms);
  const OracleResult r = min_separating(t, ts, opt);
  if (o.format == "json") {
    out << json{{"size", r.size},
                {"paths", system_json(t, r.system)},
                {"nodesExpanded", r.nodes_expanded},
                {"elapsed", r.elapsed_ms}}
               .dump()
        << '\n';
  } else {
    out << system_text(t, r.system,
                       {"size " + std::to_string(r.size), "nodesExpanded " + std::to_string(r.nodes_expanded),
                        "elapsed " + fmt_double(r.elapsed_ms)});
  }
  return 0;
}

int cmd_random_exp(const Options& o, std::ostream& out) {
  if (o.n < 1) throw Error(ErrorCode::UsageError, "--n must be at least 1");
  if (o.trials < 1) throw Error(ErrorCode::UsageError, "--trials must be at least 1");
  const int modes = (o.p ? 1 : 0) + (o.supercritical ? 1 : 0) + (o.subcritical ? 1 : 0);
  if (modes != 1) {
    throw Error(ErrorCode::UsageError, "give exactly one of --p, --auto-supercritical, --auto-subcritical");
  }
  ExperimentConfig cfg;
  cfg.n = o.n;
  cfg.p = o.p ? *o.p : o.supercritical ? supercritical_p(o.n) : subcritical_p(o.n);
  if (cfg.p < 0.0 || cfg.p > 1.0) throw Error(ErrorCode::UsageError, "--p must lie in [0, 1]");
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  const ExperimentStats st = run_experiment(cfg);
  if (o.format == "json") {
    json per = json::array();
    for (const TrialRecord& r : st.trials) {
      per.push_back({{"seed", r.seed}, {"success", r.success}, {"systemSize", r.system_size}, {"isolated", r.isolated}});
    }
    out << json{{"n", cfg.n},
                {"p", cfg.p},
                {"trials", cfg.trials},
                {"masterSeed", cfg.seed},
                {"perTrial", per},
                {"successRate", st.success_rate},
                {"meanIsolated", st.mean_isolated}}
               .dump()
        << '\n';
    return 0;
  }
  out << "n " << cfg.n << '\n'
      << "p " << fmt_double(cfg.p) << '\n'
      << "trials " << cfg.trials << '\n'
      << "masterSeed " << cfg.seed << '\n';
  for (const TrialRecord& r : st.trials) {
    out << "trial seed " << r.seed << " success " << (r.success ? 1 : 0) << " systemSize " << r.system_size
        << " isolated " << r.isolated << '\n';
  }
  out << "successRate " << fmt_double(st.success_rate) << '\n' << "meanIsolated " << fmt_double(st.mean_isolated) << '\n';
  return 0;
}

int cmd_localize(const Options& o, std::ostream& out) {
  const Tree t = parse_tree(read_file(o.tree_file));
  const PathSystem fs = parse_path_system(read_file(o.paths_file), t);
  const TargetSet ts = TargetSet::of(t, parse_target_kind(o.target));
  const SignatureTable table = signature_table(t, fs, ts);
  const ProbeReport report = parse_report(o.report);
  if (report.outcomes.size() != fs.size()) {
    throw Error(ErrorCode::UsageError, "report has " + std::to_string(report.outcomes.size()) + " outcomes for " +
                                           std::to_string(fs.size()) + " paths");
  }
  const Diagnosis d = decode(table, report);
  if (o.format == "json") {
    json doc = {{"diagnosis", std::string(to_string(d.kind))}, {"failedSet", d.failed}};
    if (d.element) doc["element"] = element_json(t, *d.element);
    out << doc.dump() << '\n';
    return 0;
  }
  out << to_string(d.kind);
  if (d.element) out << ' ' << format_element(t, *d.element);
  out << "\nfailedSet";
  for (int i : d.failed) out << ' ' << i;
  out << '\n';
  return 0;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const Tree t = parse_tree(read_file(o.tree_file));
  emit(emit_dot(t), o.output, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Separating path systems on trees and random graphs", "pathsep"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Master seed for randomized commands");

  std::function<int()> action;
  const auto tree_arg = [&](CLI::App* sub) { sub->add_option("tree", o.tree_file, "Edge-list tree file")->required(); };
  const auto paths_arg = [&](CLI::App* sub) {
    sub->add_option("paths", o.paths_file, "Path-system file")->required();
  };
  const auto target_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--target", o.target, "edges | vertices | v-and-interior")
                    ->check(CLI::IsMember({"edges", "vertices", "v-and-interior"}));
    if (required) opt->required();
  };
  const auto output_opt = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Write to a file"); };

  auto* profile_cmd = app.add_subcommand("profile", "Structural parameters of a tree");
  tree_arg(profile_cmd);
  profile_cmd->callback([&] { action = [&] { return cmd_profile(o, out); }; });

  auto* edge_cmd = app.add_subcommand("construct-edge", "Minimum edge-separating-covering system");
  tree_arg(edge_cmd);
  output_opt(edge_cmd);
  edge_cmd->callback([&] { action = [&] { return cmd_construct_edge(o, out); }; });

  auto* vertex_cmd = app.add_subcommand("construct-vertex", "Vertex-separating-covering system");
  tree_arg(vertex_cmd);
  output_opt(vertex_cmd);
  vertex_cmd->callback([&] { action = [&] { return cmd_construct_vertex(o, out, err); }; });

  auto* bounds_cmd = app.add_subcommand("bounds", "Edge and vertex bounds of a tree");
  tree_arg(bounds_cmd);
  bounds_cmd->callback([&] { action = [&] { return cmd_bounds(o, out); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Check a path system against a target set");
  tree_arg(verify_cmd);
  paths_arg(verify_cmd);
  target_opt(verify_cmd, true);
  verify_cmd->callback([&] { action = [&] { return cmd_verify(o, out); }; });

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum by exhaustive search");
  tree_arg(oracle_cmd);
  target_opt(oracle_cmd, true);
  oracle_cmd->add_flag("--no-cover", o.no_cover, "Separation only");
  oracle_cmd->add_option("--budget-ms", o.budget_ms, "Wall-clock budget, 0 for none")->check(CLI::NonNegativeNumber);
  oracle_cmd->callback([&] { action = [&] { return cmd_oracle(o, out); }; });

  auto* exp_cmd = app.add_subcommand("random-exp", "G(n,p) vertex-separation experiment");
  exp_cmd->add_option("--n", o.n, "Vertex count")->required();
  exp_cmd->add_option("--p", o.p, "Edge probability");
  exp_cmd->add_flag("--auto-supercritical", o.supercritical, "p = (2 ln n + 6 ln ln n) / n");
  exp_cmd->add_flag("--auto-subcritical", o.subcritical, "p = (ln n - 3 ln ln n) / n");
  exp_cmd->add_option("--trials", o.trials, "Number of trials");
  exp_cmd->callback([&] { action = [&] { return cmd_random_exp(o, out); }; });

  auto* loc_cmd = app.add_subcommand("localize", "Decode a single fault from probe outcomes");
  tree_arg(loc_cmd);
  paths_arg(loc_cmd);
  target_opt(loc_cmd, true);
  loc_cmd->add_option("--report", o.report, "One P or F per path")->required();
  loc_cmd->callback([&] { action = [&] { return cmd_localize(o, out); }; });

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of a tree");
  tree_arg(dot_cmd);
  output_opt(dot_cmd);
  dot_cmd->callback([&] { action = [&] { return cmd_export_dot(o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    err << e.name() << ": " << e.detail() << '\n';
    return e.code() == ErrorCode::UsageError ? 2 : 1;
  }
}

}  // namespace pathsep::cli
