#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cgt/cayley.hpp"
#include "cgt/ends.hpp"
#include "cgt/errors.hpp"
#include "cgt/group_spec.hpp"
#include "cgt/groups.hpp"
#include "cgt/maps.hpp"
#include "cgt/predicates.hpp"
#include "cgt/report_json.hpp"
#include "cgt/snapshot.hpp"
#include "cgt/verdict.hpp"
#include "cgt/witness.hpp"

namespace {

using cgt::Rational;
using json = cgt::report::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cgt::PreconditionError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Config {
  std::string builtin;
  std::string group_file;
  std::string snapshot_file;
  std::string domain_file;
  std::string codomain_file;
  std::string pairs_file;
  std::string format = "json";
  std::string mu = "1";
  std::vector<std::string> subsets;
  std::vector<long> r_values;
  long big_radius = 12;
  long r_max = 4;
  long ratio = 3;
  long window = 3;
  long n_max = 3;
  long margin = -1;  // command-specific default when unset
  long scale = -1;   // profile: default to the domain window scale
  long pair_budget = 1'000'000;
  long budget = -1;  // flag > env > default
};

long effective_budget(const Config& cfg) {
  if (cfg.budget >= 0) return cfg.budget;
  if (const char* env = std::getenv("CGT_VERTEX_BUDGET")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1)
      throw cgt::PreconditionError("CGT_VERTEX_BUDGET must be a positive integer, got '" +
                                   std::string(env) + "'");
    return value;
  }
  return cgt::cayley::kDefaultVertexBudget;
}

cgt::groups::GroupModel resolve_group(const Config& cfg) {
  if (cfg.builtin.empty() == cfg.group_file.empty())
    throw cgt::PreconditionError("exactly one of --builtin or --group-file is required");
  if (!cfg.builtin.empty())
    return cgt::groups::instantiate(cgt::groups::parse_builtin_expr(cfg.builtin));
  return cgt::groups::instantiate(cgt::groups::parse_spec(slurp(cfg.group_file)));
}

std::vector<long> resolved_r_values(const Config& cfg, std::vector<long> fallback) {
  return cfg.r_values.empty() ? fallback : cfg.r_values;
}

long resolved_margin(const Config& cfg, long fallback) {
  return cfg.margin < 0 ? fallback : cfg.margin;
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

// Flat deterministic text rendering: scalars as "path: value" lines, arrays
// of scalars on one line.
void emit_text_node(const std::string& path, const json& node, std::ostream& os) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      emit_text_node(path.empty() ? key : path + "." + key, value, os);
  } else if (node.is_array()) {
    const bool scalars = std::all_of(node.begin(), node.end(),
                                     [](const json& v) { return !v.is_structured(); });
    if (scalars) {
      os << path << ":";
      for (const auto& v : node) os << " " << (v.is_string() ? v.get<std::string>() : v.dump());
      os << "\n";
    } else {
      int i = 0;
      for (const auto& v : node) emit_text_node(path + "[" + std::to_string(i++) + "]", v, os);
    }
  } else {
    os << path << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
  }
}

void emit_report(const Config& cfg, const json& out) {
  if (cfg.format == "json") {
    emit(out);
  } else if (cfg.format == "text") {
    emit_text_node("", out, std::cout);
  } else {
    throw cgt::PreconditionError("unknown format '" + cfg.format + "'");
  }
}

// Snapshot for subset commands: a serialized file or a ball of a builtin.
cgt::coarse::MetricSnapshot resolve_snapshot(const Config& cfg, json& source) {
  if (!cfg.snapshot_file.empty()) {
    if (!cfg.builtin.empty() || !cfg.group_file.empty())
      throw cgt::PreconditionError("--snapshot excludes --builtin/--group-file");
    source["snapshot"] = cfg.snapshot_file;
    return cgt::coarse::parse_snapshot(slurp(cfg.snapshot_file));
  }
  cgt::groups::GroupModel group = resolve_group(cfg);
  source["group"] = group.name();
  source["R"] = cfg.big_radius;
  return cgt::coarse::snapshot_of_ball(
      cgt::cayley::ball(group, cfg.big_radius, effective_budget(cfg)));
}

int run_ball(const Config& cfg) {
  cgt::groups::GroupModel group = resolve_group(cfg);
  cgt::cayley::CayleyBall ball = cgt::cayley::ball(group, cfg.big_radius, effective_budget(cfg));
  if (cfg.format == "edge-list") {
    std::cout << cgt::cayley::export_graph(ball, cgt::cayley::GraphFormat::EdgeList);
    return 0;
  }
  if (cfg.format == "dot") {
    std::cout << cgt::cayley::export_graph(ball, cgt::cayley::GraphFormat::Dot);
    return 0;
  }
  json out;
  out["command"] = "ball";
  json summary = cgt::report::render(cgt::cayley::summarize(ball));
  for (auto& [key, value] : summary.items()) out[key] = value;
  out["exhausted"] = ball.exhausted();
  emit_report(cfg, out);
  return 0;
}

int run_ends(const Config& cfg) {
  cgt::groups::GroupModel group = resolve_group(cfg);
  cgt::ends::EndsReport report =
      cgt::ends::count_ends(group, cfg.r_max, cfg.ratio, cfg.window, effective_budget(cfg));
  json out;
  out["command"] = "ends";
  json body = cgt::report::render(report);
  for (auto& [key, value] : body.items()) out[key] = value;
  emit_report(cfg, out);
  return 0;
}

int run_diverge(const Config& cfg) {
  json out;
  out["command"] = "diverge";
  cgt::coarse::MetricSnapshot snap = resolve_snapshot(cfg, out);
  if (cfg.subsets.size() < 2)
    throw cgt::PreconditionError("diverge needs at least two --subset predicates");
  std::vector<std::vector<int>> subsets;
  std::vector<std::string> names;
  json described = json::array();
  for (std::size_t i = 0; i < cfg.subsets.size(); ++i) {
    auto pred = cgt::coarse::parse_predicate(cfg.subsets[i]);
    subsets.push_back(cgt::coarse::select_points(snap, pred));
    names.push_back("E" + std::to_string(i + 1));
    json d;
    d["name"] = names.back();
    d["expr"] = cfg.subsets[i];
    d["size"] = static_cast<long>(subsets.back().size());
    described.push_back(std::move(d));
  }
  out["subsets"] = std::move(described);
  cgt::coarse::SubsetFamily family(snap, std::move(subsets), std::move(names));
  out["report"] = cgt::report::render(
      cgt::coarse::diverge_coarsely(family, resolved_r_values(cfg, {1, 2, 3}),
                                    resolved_margin(cfg, 2)));
  emit_report(cfg, out);
  return 0;
}

int run_components(const Config& cfg) {
  json out;
  out["command"] = "components";
  cgt::coarse::MetricSnapshot snap = resolve_snapshot(cfg, out);
  if (cfg.subsets.size() != 1)
    throw cgt::PreconditionError("components needs exactly one --subset predicate");
  auto pred = cgt::coarse::parse_predicate(cfg.subsets[0]);
  std::vector<int> subset = cgt::coarse::select_points(snap, pred);
  const Rational mu = Rational::parse(cfg.mu);
  out["subset"] = cfg.subsets[0];
  out["subset_size"] = static_cast<long>(subset.size());
  out["mu"] = cgt::report::rational_json(mu);
  auto pieces = cgt::coarse::mu_components(snap, subset, mu);
  out["count"] = static_cast<long>(pieces.size());
  json rendered = json::array();
  for (const auto& piece : pieces) {
    json labels = json::array();
    for (int v : piece) labels.push_back(snap.label(v));
    rendered.push_back(std::move(labels));
  }
  out["pieces"] = std::move(rendered);
  emit_report(cfg, out);
  return 0;
}

int run_profile(const Config& cfg) {
  if (cfg.domain_file.empty() || cfg.codomain_file.empty() || cfg.pairs_file.empty())
    throw cgt::PreconditionError("profile needs --domain, --codomain and --pairs files");
  cgt::coarse::MetricSnapshot domain = cgt::coarse::parse_snapshot(slurp(cfg.domain_file));
  cgt::coarse::MetricSnapshot codomain = cgt::coarse::parse_snapshot(slurp(cfg.codomain_file));

  // pairs file: one "domain_label codomain_label" per line; labels have no
  // whitespace. '#' starts a comment line.
  std::vector<int> assignment(static_cast<std::size_t>(domain.size()), -1);
  {
    auto find_label = [](const cgt::coarse::MetricSnapshot& snap, const std::string& label,
                         const std::string& side, long line_no) {
      for (int i = 0; i < snap.size(); ++i)
        if (snap.label(i) == label) return i;
      throw cgt::PreconditionError("pairs line " + std::to_string(line_no) + ": " + side +
                                   " label '" + label + "' not found");
    };
    std::istringstream in(slurp(cfg.pairs_file));
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream row(line);
      std::string from, to, extra;
      if (!(row >> from >> to) || (row >> extra))
        throw cgt::PreconditionError("pairs line " + std::to_string(line_no) +
                                     ": expected 'domain_label codomain_label'");
      const int i = find_label(domain, from, "domain", line_no);
      assignment[static_cast<std::size_t>(i)] = find_label(codomain, to, "codomain", line_no);
    }
  }
  for (std::size_t i = 0; i < assignment.size(); ++i)
    if (assignment[i] < 0)
      throw cgt::PreconditionError("pairs file misses domain point '" +
                                   domain.label(static_cast<int>(i)) + "'");

  cgt::maps::PartialMap map(domain, codomain, std::move(assignment));
  cgt::maps::ExpansionProfile profile = cgt::maps::profile(map);
  const long scale = cfg.scale < 0 ? profile.domain_scale : cfg.scale;
  json out;
  out["command"] = "profile";
  out["profile"] = cgt::report::render(profile);
  out["flags"] = cgt::report::render(cgt::maps::classify(profile, scale));
  emit_report(cfg, out);
  return 0;
}

int run_ray(const Config& cfg) {
  cgt::groups::GroupModel group = resolve_group(cfg);
  cgt::cayley::CayleyBall ball = cgt::cayley::ball(group, cfg.big_radius, effective_budget(cfg));
  json out;
  out["command"] = "ray";
  out["group"] = group.name();
  out["R"] = cfg.big_radius;
  out["ray"] = cgt::report::render(cgt::witness::extract_ray(ball));
  emit_report(cfg, out);
  return 0;
}

int run_line(const Config& cfg) {
  cgt::groups::GroupModel group = resolve_group(cfg);
  cgt::cayley::CayleyBall ball = cgt::cayley::ball(group, cfg.big_radius, effective_budget(cfg));
  json out;
  out["command"] = "line";
  out["group"] = group.name();
  out["R"] = cfg.big_radius;
  json body = cgt::report::render(cgt::witness::geodesic_line(ball, cfg.pair_budget));
  for (auto& [key, value] : body.items()) out[key] = value;
  emit_report(cfg, out);
  return 0;
}

std::vector<std::string> ball_labels(const cgt::cayley::CayleyBall& ball) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(ball.size()));
  for (int v = 0; v < ball.size(); ++v) labels.push_back(ball.vertex_label(v));
  return labels;
}

int run_witness(const Config& cfg) {
  cgt::groups::GroupModel group = resolve_group(cfg);
  const long budget = effective_budget(cfg);
  cgt::ends::EndsReport ends = cgt::ends::count_ends(group, cfg.r_max, cfg.ratio, cfg.window,
                                                     budget);
  cgt::cayley::CayleyBall ball = cgt::cayley::ball(group, cfg.big_radius, budget);
  auto wit = cgt::witness::decomposability_witness(ball, ends, static_cast<int>(cfg.n_max),
                                                   resolved_r_values(cfg, {1, 2, 3, 4, 5}),
                                                   resolved_margin(cfg, 5));
  json out;
  out["command"] = "witness";
  out["group"] = group.name();
  out["R"] = cfg.big_radius;
  out["n_max"] = cfg.n_max;
  out["ends"] = cgt::report::render(ends);
  out["witness"] = cgt::report::render(wit, ball_labels(ball));
  emit_report(cfg, out);
  return 0;
}

int run_split(const Config& cfg) {
  cgt::groups::GroupModel group = resolve_group(cfg);
  const long budget = effective_budget(cfg);
  cgt::ends::EndsReport ends = cgt::ends::count_ends(group, cfg.r_max, cfg.ratio, cfg.window,
                                                     budget);
  cgt::cayley::CayleyBall ball = cgt::cayley::ball(group, cfg.big_radius, budget);
  auto split = cgt::witness::two_ended_split(ball, ends, resolved_r_values(cfg, {1, 2}),
                                             resolved_margin(cfg, 2));
  json out;
  out["command"] = "split";
  out["group"] = group.name();
  out["R"] = cfg.big_radius;
  out["ends"] = cgt::report::render(ends);
  out["split"] = cgt::report::render(split, ball_labels(ball));
  emit_report(cfg, out);
  return 0;
}

int run_verdict(const Config& cfg) {
  cgt::groups::GroupModel group = resolve_group(cfg);
  cgt::ends::EndsReport ends =
      cgt::ends::count_ends(group, cfg.r_max, cfg.ratio, cfg.window, effective_budget(cfg));
  cgt::verdict::CoronaVerdict verdict = cgt::verdict::classify_group(ends);
  cgt::verdict::lemma41_guard(group, verdict);
  json out;
  out["command"] = "verdict";
  out["group"] = group.name();
  out["ends"] = cgt::report::render(ends);
  out["verdict"] = cgt::report::render(verdict);
  out["guard"] = "passed";
  emit_report(cfg, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-scale coarse geometry toolkit for finitely generated groups"};
  app.require_subcommand(1);

  Config cfg;

  auto add_group_flags = [&cfg](CLI::App* cmd) {
    cmd->add_option("--builtin", cfg.builtin,
                    "builtin group expression, e.g. Z, Z2, F2, Z/5, Dinf, Heis, Z x Z/2");
    cmd->add_option("--group-file", cfg.group_file, "JSON group spec file");
  };
  auto add_budget_flag = [&cfg](CLI::App* cmd) {
    cmd->add_option("--budget", cfg.budget,
                    "vertex budget (overrides CGT_VERTEX_BUDGET; default 2000000)");
  };
  auto add_format_flag = [&cfg](CLI::App* cmd, bool graph_formats) {
    cmd->add_option("--format", cfg.format,
                    graph_formats ? "json|text|edge-list|dot" : "json|text");
  };
  auto add_snapshot_flags = [&cfg, &add_group_flags, &add_budget_flag](CLI::App* cmd) {
    add_group_flags(cmd);
    add_budget_flag(cmd);
    cmd->add_option("--snapshot", cfg.snapshot_file, "serialized snapshot file");
    cmd->add_option("--R", cfg.big_radius, "ball radius when using --builtin/--group-file");
  };

  CLI::App* ball = app.add_subcommand("ball", "enumerate a Cayley ball and summarize it");
  add_group_flags(ball);
  add_budget_flag(ball);
  add_format_flag(ball, true);
  ball->add_option("--R", cfg.big_radius, "ball radius");

  CLI::App* ends = app.add_subcommand("ends", "count ends at scale");
  add_group_flags(ends);
  add_budget_flag(ends);
  add_format_flag(ends, false);
  ends->add_option("--r-max", cfg.r_max, "largest deleted radius");
  ends->add_option("--ratio", cfg.ratio, "outer radius R = ratio*r");
  ends->add_option("--window", cfg.window, "stabilization window");

  CLI::App* diverge = app.add_subcommand("diverge", "coarse divergence of labeled subsets");
  add_snapshot_flags(diverge);
  add_format_flag(diverge, false);
  diverge->add_option("--subset", cfg.subsets,
                      "subset predicate (repeatable): all | prefix=S | coord[i]<op><int>, "
                      "terms joined with &");
  diverge->add_option("--r-values", cfg.r_values, "tested radii (default 1 2 3)");
  diverge->add_option("--margin", cfg.margin, "shell margin (default 2)");

  CLI::App* components = app.add_subcommand("components", "mu-components of a subset");
  add_snapshot_flags(components);
  add_format_flag(components, false);
  components->add_option("--subset", cfg.subsets, "subset predicate (exactly one)");
  components->add_option("--mu", cfg.mu, "chain step bound, integer or p/q");

  CLI::App* profile = app.add_subcommand("profile", "expansion profile of a labeled point map");
  add_format_flag(profile, false);
  profile->add_option("--domain", cfg.domain_file, "domain snapshot file");
  profile->add_option("--codomain", cfg.codomain_file, "codomain snapshot file");
  profile->add_option("--pairs", cfg.pairs_file, "map file: 'domain_label codomain_label' lines");
  profile->add_option("--scale", cfg.scale, "classification scale (default: domain scale)");

  CLI::App* ray = app.add_subcommand("ray", "extract a geodesic ray to the sphere");
  add_group_flags(ray);
  add_budget_flag(ray);
  add_format_flag(ray, false);
  ray->add_option("--R", cfg.big_radius, "ball radius");

  CLI::App* line = app.add_subcommand("line", "search for a geodesic line through the identity");
  add_group_flags(line);
  add_budget_flag(line);
  add_format_flag(line, false);
  line->add_option("--R", cfg.big_radius, "ball radius");
  line->add_option("--pair-budget", cfg.pair_budget, "antipodal pair budget");

  CLI::App* witness = app.add_subcommand("witness", "decomposability witness for one-ended groups");
  add_group_flags(witness);
  add_budget_flag(witness);
  add_format_flag(witness, false);
  witness->add_option("--R", cfg.big_radius, "ball radius");
  witness->add_option("--n-max", cfg.n_max, "witness levels");
  witness->add_option("--r-max", cfg.r_max, "ends premise: largest deleted radius");
  witness->add_option("--ratio", cfg.ratio, "ends premise: outer radius ratio");
  witness->add_option("--window", cfg.window, "ends premise: stabilization window");
  witness->add_option("--r-values", cfg.r_values, "divergence radii (default 1..5)");
  witness->add_option("--margin", cfg.margin, "shell margin (default 5)");

  CLI::App* split = app.add_subcommand("split", "two-ended split and line equivalence");
  add_group_flags(split);
  add_budget_flag(split);
  add_format_flag(split, false);
  split->add_option("--R", cfg.big_radius, "ball radius");
  split->add_option("--r-max", cfg.r_max, "ends premise: largest deleted radius");
  split->add_option("--ratio", cfg.ratio, "ends premise: outer radius ratio");
  split->add_option("--window", cfg.window, "ends premise: stabilization window");
  split->add_option("--r-values", cfg.r_values, "divergence radii (default 1 2)");
  split->add_option("--margin", cfg.margin, "shell margin (default 2)");

  CLI::App* verdict = app.add_subcommand("verdict", "corona classification with citations");
  add_group_flags(verdict);
  add_budget_flag(verdict);
  add_format_flag(verdict, false);
  verdict->add_option("--r-max", cfg.r_max, "largest deleted radius");
  verdict->add_option("--ratio", cfg.ratio, "outer radius R = ratio*r");
  verdict->add_option("--window", cfg.window, "stabilization window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(ball)) return run_ball(cfg);
    if (app.got_subcommand(ends)) return run_ends(cfg);
    if (app.got_subcommand(diverge)) return run_diverge(cfg);
    if (app.got_subcommand(components)) return run_components(cfg);
    if (app.got_subcommand(profile)) return run_profile(cfg);
    if (app.got_subcommand(ray)) return run_ray(cfg);
    if (app.got_subcommand(line)) return run_line(cfg);
    if (app.got_subcommand(witness)) return run_witness(cfg);
    if (app.got_subcommand(split)) return run_split(cfg);
    if (app.got_subcommand(verdict)) return run_verdict(cfg);
    throw cgt::PreconditionError("no command given");
  } catch (const cgt::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cgt::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cgt::InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
