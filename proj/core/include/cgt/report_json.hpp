#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "cgt/cayley.hpp"
#include "cgt/ends.hpp"
#include "cgt/maps.hpp"
#include "cgt/rational.hpp"
#include "cgt/snapshot.hpp"
#include "cgt/verdict.hpp"
#include "cgt/witness.hpp"

namespace cgt::report {

using json = nlohmann::ordered_json;

// Exact integers stay numbers; proper fractions become "p/q" strings.
json rational_json(const Rational& q);

json render(const cayley::BallSummary& summary);
json render(const ends::EndsReport& report);
json render(const coarse::DivergenceReport& report);
json render(const maps::ExpansionProfile& profile);
json render(const maps::MapFlags& flags);
json render(const witness::ConditionCheck& check);
json render(const witness::RayWitness& ray);
// labels[v] resolves ball vertex ids in witness sets.
json render(const witness::BallFamilyWitness& family, const std::vector<std::string>& labels);
json render(const witness::DecompositionWitness& wit, const std::vector<std::string>& labels);
json render(const witness::TwoEndedSplit& split, const std::vector<std::string>& labels);
json render(const witness::GeodesicLineResult& line);
json render(const verdict::CoronaVerdict& verdict);

}  // namespace cgt::report
