#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "cgt/ends.hpp"
#include "cgt/errors.hpp"
#include "cgt/groups.hpp"
#include "cgt/maps.hpp"
#include "cgt/snapshot.hpp"
#include "cgt/verdict.hpp"

using namespace cgt::verdict;
using namespace cgt::groups;
using cgt::ends::Classification;
using cgt::ends::count_ends;
using cgt::ends::EndsReport;
using cgt::InvariantError;
using cgt::PreconditionError;

namespace {

bool cites(const std::vector<std::string>& citations, const std::string& what) {
  return std::find(citations.begin(), citations.end(), what) != citations.end();
}

// Window map flags for an identity (coarse equivalence) or constant (not)
// self-map of an integer interval.
cgt::maps::MapFlags window_flags(long lo, long hi, bool equivalence) {
  cgt::coarse::MetricSnapshot w = cgt::coarse::integer_interval(lo, hi);
  std::vector<int> assignment(static_cast<std::size_t>(w.size()), 0);
  if (equivalence)
    for (int i = 0; i < w.size(); ++i) assignment[static_cast<std::size_t>(i)] = i;
  cgt::maps::PartialMap map(w, w, std::move(assignment));
  return cgt::maps::classify(cgt::maps::profile(map), w.scale());
}

}  // namespace

TEST_CASE("group verdicts follow the rule table") {
  CoronaVerdict one = classify_group(count_ends(GroupModel::free_abelian(2), 4));
  CHECK(one.classification == CoronaClass::DecomposableContinuum);
  CHECK(cites(one.citations, "Thm 4.3"));
  CHECK(one.summands.empty());
  CHECK(one.caveat.find("at scale r <= 4") != std::string::npos);
  CHECK(one.caveat.find("window") != std::string::npos);
  REQUIRE(!one.premises.empty());
  CHECK(one.premises[0].find("c(1)=1") != std::string::npos);

  CoronaVerdict two = classify_group(count_ends(GroupModel::free_abelian(1), 4));
  CHECK(two.classification == CoronaClass::SumTwoNuN);
  CHECK(cites(two.citations, "Thm 4.5"));
  REQUIRE(two.summands.size() == 2);
  for (const Summand& s : two.summands) {
    CHECK(cites(s.citations, "Thm 4.5"));
    CHECK(cites(s.citations, "Thm 3.1"));
    CHECK(s.description.find("half line") != std::string::npos);
  }

  CoronaVerdict zero = classify_group(count_ends(GroupModel::cyclic(5), 4));
  CHECK(zero.classification == CoronaClass::EmptyCorona);
  CHECK(!zero.citations.empty());

  CoronaVerdict many = classify_group(count_ends(GroupModel::free_group(2), 2));
  CHECK(many.classification == CoronaClass::DisconnectedMany);
  CHECK(cites(many.citations, "Prop 4.2"));
}

TEST_CASE("unstable reports stay inconclusive instead of throwing") {
  EndsReport shaky;
  shaky.group = "Z^2";
  shaky.r_max = 3;
  shaky.ratio = 3;
  shaky.window_used = 3;
  shaky.classification = Classification::Unstable;
  shaky.sequence = {{1, 3, 1}, {2, 6, 2}, {3, 9, 1}};
  CoronaVerdict v = classify_group(shaky);
  CHECK(v.classification == CoronaClass::Inconclusive);
  CHECK(v.citations.empty());
  bool mentions_window = false;
  for (const std::string& p : v.premises)
    mentions_window = mentions_window || p.find("stabilize") != std::string::npos;
  CHECK(mentions_window);
}

TEST_CASE("the rule table is total and injective on stable rows") {
  auto verdict_for = [](Classification c) {
    EndsReport rep;
    rep.group = "test";
    rep.r_max = 2;
    rep.ratio = 3;
    rep.window_used = 2;
    rep.classification = c;
    return classify_group(rep).classification;
  };
  CHECK(verdict_for(Classification::Zero) == CoronaClass::EmptyCorona);
  CHECK(verdict_for(Classification::One) == CoronaClass::DecomposableContinuum);
  CHECK(verdict_for(Classification::Two) == CoronaClass::SumTwoNuN);
  CHECK(verdict_for(Classification::ManyAtScale) == CoronaClass::DisconnectedMany);
  CHECK(verdict_for(Classification::Unstable) == CoronaClass::Inconclusive);
}

TEST_CASE("space verdicts need structural premises") {
  SpaceEvidence none;
  CHECK_THROWS_AS(classify_space(none, {false, 4}), PreconditionError);
  CHECK_THROWS_AS(classify_space(none, {true, 0}), PreconditionError);
  CoronaVerdict v = classify_space(none, {true, 4});
  CHECK(v.classification == CoronaClass::Inconclusive);
}

TEST_CASE("space verdicts follow the window evidence") {
  SpacePremises premises{true, 2};

  SpaceEvidence half;
  half.to_half_line = window_flags(0, 12, true);
  CoronaVerdict hv = classify_space(half, premises);
  CHECK(hv.classification == CoronaClass::IndecomposableNuN);
  CHECK(cites(hv.citations, "Cor 3.11"));
  CHECK(cites(hv.citations, "Thm 3.10"));

  SpaceEvidence line;
  line.to_line = window_flags(-12, 12, true);
  CoronaVerdict lv = classify_space(line, premises);
  CHECK(lv.classification == CoronaClass::SumTwoNuN);
  CHECK(cites(lv.citations, "Thm 3.12"));
  REQUIRE(lv.summands.size() == 2);

  // a failed equivalence is no evidence
  SpaceEvidence weak;
  weak.to_half_line = window_flags(0, 12, false);
  CHECK(classify_space(weak, premises).classification == CoronaClass::Inconclusive);

  // claiming both windows at once is inconsistent
  SpaceEvidence both;
  both.to_half_line = window_flags(0, 12, true);
  both.to_line = window_flags(-12, 12, true);
  CHECK_THROWS_AS(classify_space(both, premises), InvariantError);
}

TEST_CASE("the group route and the space route agree on the line") {
  CoronaVerdict by_group = classify_group(count_ends(GroupModel::free_abelian(1), 4));
  SpaceEvidence line;
  line.to_line = window_flags(-12, 12, true);
  CoronaVerdict by_space = classify_space(line, {true, 2});
  CHECK(by_group.classification == by_space.classification);
  CHECK(by_group.classification == CoronaClass::SumTwoNuN);
}

TEST_CASE("the guard accepts every builtin verdict and rejects a forced half line") {
  for (const GroupModel& g : {GroupModel::free_abelian(1), GroupModel::free_abelian(2),
                              GroupModel::free_group(2), GroupModel::cyclic(5)}) {
    CAPTURE(g.name());
    CHECK(lemma41_guard(g, classify_group(count_ends(g, 2))));
  }
  CoronaVerdict forced;
  forced.classification = CoronaClass::IndecomposableNuN;
  CHECK_THROWS_WITH_AS(lemma41_guard(GroupModel::free_abelian(2), forced),
                       doctest::Contains("Z^2"), InvariantError);
}

TEST_CASE("corona class names are stable strings") {
  CHECK(corona_class_name(CoronaClass::EmptyCorona) == "EmptyCorona");
  CHECK(corona_class_name(CoronaClass::DecomposableContinuum) == "DecomposableContinuum");
  CHECK(corona_class_name(CoronaClass::IndecomposableNuN) == "IndecomposableNuN");
  CHECK(corona_class_name(CoronaClass::SumTwoNuN) == "SumTwoNuN");
  CHECK(corona_class_name(CoronaClass::DisconnectedMany) == "DisconnectedMany");
  CHECK(corona_class_name(CoronaClass::Inconclusive) == "Inconclusive");
}
