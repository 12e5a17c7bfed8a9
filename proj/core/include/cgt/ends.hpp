#pragma once

#include <string>
#include <vector>

#include "cgt/cayley.hpp"
#include "cgt/groups.hpp"

namespace cgt::ends {

enum class Classification { Zero, One, Two, ManyAtScale, Unstable };

std::string classification_name(Classification c);

struct EndsEntry {
  long r = 0;
  long big_radius = 0;  // R = ratio * r
  long components = 0;  // far components of B(1,R) \ B(1,r) meeting the sphere S(R)
};

struct EndsReport {
  std::string group;
  long r_max = 0;
  long ratio = 0;
  long window_used = 0;
  bool budget_limited = false;  // some scales skipped because the ball hit the budget
  bool exhausted = false;       // the last enumerated ball ran out of elements below R
  std::vector<EndsEntry> sequence;
  Classification classification = Classification::Unstable;
  std::vector<std::string> citations;
};

// Far-component counts c(r) for r = 1..r_max with R = ratio * r, classified
// over the trailing window:
//   Zero         the group is exhausted below R at the largest scale
//   One / Two    c(r) constant at 1 / 2 across the window
//   ManyAtScale  c(r) > 2 and non-decreasing across the window
//   Unstable     anything else (including an empty sequence)
EndsReport count_ends(const groups::GroupModel& group, long r_max, long ratio = 3,
                      long window = 3, long vertex_budget = cayley::kDefaultVertexBudget);

// True when both generating sets give the same stable classification.
// Throws PreconditionError if either side is Unstable.
bool generator_invariance(const groups::GroupModel& a, const groups::GroupModel& b, long r_max,
                          long ratio = 3, long window = 3,
                          long vertex_budget = cayley::kDefaultVertexBudget);

}  // namespace cgt::ends
