#include "cgt/report_json.hpp"

namespace cgt::report {

namespace {

json label_list(const std::vector<int>& vertices, const std::vector<std::string>& labels) {
  json out = json::array();
  for (int v : vertices) out.push_back(labels.at(static_cast<std::size_t>(v)));
  return out;
}

json rational_list(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& q : values) out.push_back(rational_json(q));
  return out;
}

json condition_list(const std::vector<witness::ConditionCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(render(c));
  return out;
}

}  // namespace

json rational_json(const Rational& q) {
  if (q.is_integer()) return json(q.num());
  return json(q.str());
}

json render(const cayley::BallSummary& summary) {
  json out;
  out["group"] = summary.group;
  out["radius"] = summary.radius;
  out["vertices"] = summary.vertices;
  out["edges"] = summary.edges;
  out["growth"] = summary.growth;
  return out;
}

json render(const ends::EndsReport& report) {
  json out;
  out["group"] = report.group;
  out["r_max"] = report.r_max;
  out["ratio"] = report.ratio;
  out["window"] = report.window_used;
  out["budget_limited"] = report.budget_limited;
  out["exhausted"] = report.exhausted;
  json seq = json::array();
  for (const auto& e : report.sequence) {
    json row;
    row["r"] = e.r;
    row["R"] = e.big_radius;
    row["c"] = e.components;
    seq.push_back(std::move(row));
  }
  out["sequence"] = std::move(seq);
  out["classification"] = ends::classification_name(report.classification);
  out["citations"] = report.citations;
  return out;
}

json render(const coarse::DivergenceReport& report) {
  json out;
  out["scale"] = report.scale;
  out["shell_margin"] = report.shell_margin;
  out["diverges_at_scale"] = report.diverges_at_scale;
  out["fails_at"] = report.fails_at ? json(*report.fails_at) : json(nullptr);
  json entries = json::array();
  for (const auto& e : report.entries) {
    json row;
    row["r"] = e.r;
    row["intersection_size"] = e.intersection_size;
    row["bounded"] = e.bounded;
    row["radius"] = rational_json(e.radius);
    row["shell_witness"] = e.shell_witness ? json(*e.shell_witness) : json(nullptr);
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

json render(const maps::ExpansionProfile& profile) {
  json out;
  out["domain_scale"] = profile.domain_scale;
  out["codomain_scale"] = profile.codomain_scale;
  out["domain_diameter"] = rational_json(profile.domain_diameter);
  out["image_diameter"] = rational_json(profile.image_diameter);
  out["net_radius"] = rational_json(profile.net_radius);
  out["sigma"] = rational_list(profile.sigma);
  out["rho_minus"] = rational_list(profile.rho_minus);
  out["tau"] = rational_list(profile.tau);
  return out;
}

json render(const maps::MapFlags& flags) {
  json out;
  out["scale"] = flags.scale;
  out["uniformly_expansive"] = flags.uniformly_expansive;
  out["uniformly_proper"] = flags.uniformly_proper;
  out["rough"] = flags.rough;
  out["net_image"] = flags.net_image;
  out["coarse_equivalence"] = flags.coarse_equivalence;
  out["sigma_at_scale"] = rational_json(flags.sigma_at_scale);
  out["tau_defined_up_to"] = flags.tau_defined_up_to;
  out["net_radius"] = rational_json(flags.net_radius);
  return out;
}

json render(const witness::ConditionCheck& check) {
  json out;
  out["label"] = check.label;
  out["description"] = check.description;
  out["ok"] = check.ok;
  out["detail"] = check.detail;
  return out;
}

json render(const witness::RayWitness& ray) {
  json out;
  out["length"] = static_cast<long>(ray.vertices.size()) - 1;
  out["vertices"] = ray.labels;
  out["generators"] = ray.generator_ids;
  return out;
}

json render(const witness::BallFamilyWitness& family, const std::vector<std::string>& labels) {
  json out;
  out["mu"] = family.mu;
  out["tau_formula"] = family.tau_formula;
  out["tau"] = family.tau_values;
  out["centers"] = label_list(family.centers, labels);
  json sets = json::array();
  for (const auto& s : family.sets) sets.push_back(label_list(s, labels));
  out["sets"] = std::move(sets);
  out["conditions"] = condition_list(family.conditions);
  return out;
}

json render(const witness::DecompositionWitness& wit, const std::vector<std::string>& labels) {
  json out;
  out["ray"] = render(wit.ray);
  out["z_points"] = label_list(wit.z_points, labels);
  out["family"] = render(wit.family, labels);
  out["e_size"] = static_cast<long>(wit.e_set.size());
  out["e_set"] = label_list(wit.e_set, labels);
  out["conditions"] = condition_list(wit.conditions);
  out["divergence"] = render(wit.divergence);
  json interiors = json::array();
  for (const auto& b : wit.interior_balls) interiors.push_back(label_list(b, labels));
  out["interior_balls"] = std::move(interiors);
  return out;
}

json render(const witness::TwoEndedSplit& split, const std::vector<std::string>& labels) {
  json out;
  out["r_star"] = split.r_star;
  out["core"] = label_list(split.core, labels);
  out["side_sizes"] = json::array({static_cast<long>(split.sides[0].size()),
                                   static_cast<long>(split.sides[1].size())});
  json far = json::array();
  for (const auto& f : split.far_components) far.push_back(label_list(f, labels));
  out["far_components"] = std::move(far);
  json rays = json::array();
  for (const auto& r : split.rays) rays.push_back(render(r));
  out["rays"] = std::move(rays);
  out["conditions"] = condition_list(split.conditions);
  out["side_divergence"] = render(split.side_divergence);
  out["profile"] = render(split.profile);
  out["flags"] = render(split.flags);
  out["closeness_roundtrip"] = rational_json(split.closeness_roundtrip);
  return out;
}

json render(const witness::GeodesicLineResult& line) {
  json out;
  out["found"] = line.vertices.has_value();
  out["budget_exhausted"] = line.budget_exhausted;
  out["pairs_tried"] = line.pairs_tried;
  if (line.vertices) out["vertices"] = line.labels;
  return out;
}

json render(const verdict::CoronaVerdict& verdict) {
  json out;
  out["classification"] = verdict::corona_class_name(verdict.classification);
  out["premises"] = verdict.premises;
  out["citations"] = verdict.citations;
  json summands = json::array();
  for (const auto& s : verdict.summands) {
    json row;
    row["description"] = s.description;
    row["citations"] = s.citations;
    summands.push_back(std::move(row));
  }
  out["summands"] = std::move(summands);
  out["caveat"] = verdict.caveat;
  return out;
}

}  // namespace cgt::report
