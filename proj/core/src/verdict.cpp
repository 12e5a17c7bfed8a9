#include "cgt/verdict.hpp"

#include <algorithm>
#include <sstream>

#include "cgt/errors.hpp"

namespace cgt::verdict {

namespace {

std::string group_caveat(const ends::EndsReport& report) {
  std::ostringstream out;
  out << "at scale r <= " << report.r_max << " with R = " << report.ratio
      << "*r (window " << report.window_used << "); claims about the infinite object are "
      << "conditioned on this classification being stable";
  return out.str();
}

Summand nu_n_summand(const std::string& via) {
  return {"indecomposable continuum homeomorphic to the Higson corona of the half line",
          {via, "Thm 3.1"}};
}

}  // namespace

std::string corona_class_name(CoronaClass c) {
  switch (c) {
    case CoronaClass::EmptyCorona: return "EmptyCorona";
    case CoronaClass::DecomposableContinuum: return "DecomposableContinuum";
    case CoronaClass::IndecomposableNuN: return "IndecomposableNuN";
    case CoronaClass::SumTwoNuN: return "SumTwoNuN";
    case CoronaClass::DisconnectedMany: return "DisconnectedMany";
    case CoronaClass::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

CoronaVerdict classify_group(const ends::EndsReport& report) {
  CoronaVerdict v;
  v.caveat = group_caveat(report);
  {
    std::ostringstream p;
    p << "ends(" << report.group << ") = " << ends::classification_name(report.classification)
      << " over the sequence";
    for (const auto& e : report.sequence) p << " c(" << e.r << ")=" << e.components;
    v.premises.push_back(p.str());
  }
  if (report.budget_limited)
    v.premises.push_back("vertex budget cut the sequence short of r_max");

  switch (report.classification) {
    case ends::Classification::Zero:
      v.classification = CoronaClass::EmptyCorona;
      v.citations = {"bounded space has empty corona"};
      break;
    case ends::Classification::One:
      v.classification = CoronaClass::DecomposableContinuum;
      v.citations = {"Thm 4.3"};
      break;
    case ends::Classification::Two:
      v.classification = CoronaClass::SumTwoNuN;
      v.citations = {"Thm 4.5"};
      v.summands = {nu_n_summand("Thm 4.5"), nu_n_summand("Thm 4.5")};
      break;
    case ends::Classification::ManyAtScale:
      v.classification = CoronaClass::DisconnectedMany;
      v.citations = {"Prop 4.2"};
      v.premises.push_back(
          "more than two ends at scale; disconnected corona by the contrapositive");
      break;
    case ends::Classification::Unstable:
      v.classification = CoronaClass::Inconclusive;
      v.premises.push_back("ends classification did not stabilize over the window");
      break;
  }
  return v;
}

CoronaVerdict classify_space(const SpaceEvidence& evidence, const SpacePremises& premises) {
  if (!premises.connected_graph_metric)
    throw PreconditionError("space verdict: input must carry a connected graph metric");
  if (premises.degree_bound < 1)
    throw PreconditionError("space verdict: a positive degree bound is required for cbg");

  CoronaVerdict v;
  v.premises.push_back("coarsely geodesic: connected graph metric by construction");
  v.premises.push_back("coarse bounded geometry: degree bound " +
                       std::to_string(premises.degree_bound));

  const bool half = evidence.to_half_line && evidence.to_half_line->coarse_equivalence;
  const bool line = evidence.to_line && evidence.to_line->coarse_equivalence;
  if (half && line)
    throw InvariantError(
        "space verdict: evidence claims coarse equivalence to both the half line and the line");

  if (half) {
    v.classification = CoronaClass::IndecomposableNuN;
    v.citations = {"Thm 3.10", "Cor 3.11"};
    v.premises.push_back("coarse equivalence to an N-window at scale " +
                         std::to_string(evidence.to_half_line->scale));
    v.caveat = "at scale " + std::to_string(evidence.to_half_line->scale);
  } else if (line) {
    v.classification = CoronaClass::SumTwoNuN;
    v.citations = {"Thm 3.12"};
    v.summands = {nu_n_summand("Thm 3.12"), nu_n_summand("Thm 3.12")};
    v.premises.push_back("coarse equivalence to a Z-window at scale " +
                         std::to_string(evidence.to_line->scale));
    v.caveat = "at scale " + std::to_string(evidence.to_line->scale);
  } else {
    v.classification = CoronaClass::Inconclusive;
    long scale = 0;
    if (evidence.to_half_line) scale = std::max(scale, evidence.to_half_line->scale);
    if (evidence.to_line) scale = std::max(scale, evidence.to_line->scale);
    v.premises.push_back("no tested window equivalence holds; rule table has no matching row");
    v.caveat = "at scale " + std::to_string(scale);
  }
  return v;
}

bool lemma41_guard(const groups::GroupModel& group, const CoronaVerdict& verdict) {
  if (verdict.classification == CoronaClass::IndecomposableNuN)
    throw InvariantError("Lemma 4.1 guard: group " + group.name() +
                         " classified as the corona of the half line; a finitely generated "
                         "infinite group is never coarsely equivalent to the half line");
  return true;
}

}  // namespace cgt::verdict
