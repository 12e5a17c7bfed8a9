#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgt/ends.hpp"
#include "cgt/groups.hpp"
#include "cgt/maps.hpp"

namespace cgt::verdict {

enum class CoronaClass {
  EmptyCorona,
  DecomposableContinuum,
  IndecomposableNuN,
  SumTwoNuN,
  DisconnectedMany,
  Inconclusive
};

std::string corona_class_name(CoronaClass c);

struct Summand {
  std::string description;
  std::vector<std::string> citations;
};

// Classification of the Higson corona of the true (infinite) object,
// conditioned on the finite-scale premises listed; the caveat always records
// the scale the claim rests on.
struct CoronaVerdict {
  CoronaClass classification = CoronaClass::Inconclusive;
  std::vector<std::string> premises;
  std::vector<std::string> citations;
  std::vector<Summand> summands;  // two entries for SumTwoNuN
  std::string caveat;
};

// Fixed rule table over the ends classification:
//   Zero -> EmptyCorona, One -> DecomposableContinuum, Two -> SumTwoNuN,
//   ManyAtScale -> DisconnectedMany, Unstable -> Inconclusive.
CoronaVerdict classify_group(const ends::EndsReport& report);

// Structural certificates for a graph-derived snapshot: the graph metric is
// connected by construction and the degree bound certifies coarse bounded
// geometry.
struct SpacePremises {
  bool connected_graph_metric = false;
  long degree_bound = 0;
};

// Map-classification evidence: flags for a tested equivalence with an
// N-window (half line) and/or a Z-window (line).
struct SpaceEvidence {
  std::optional<maps::MapFlags> to_half_line;
  std::optional<maps::MapFlags> to_line;
};

CoronaVerdict classify_space(const SpaceEvidence& evidence, const SpacePremises& premises);

// Hard consistency check: no group may ever be classified IndecomposableNuN.
// Returns true when consistent, throws InvariantError otherwise.
bool lemma41_guard(const groups::GroupModel& group, const CoronaVerdict& verdict);

}  // namespace cgt::verdict
