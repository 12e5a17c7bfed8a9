#include "cgt/ends.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "cgt/errors.hpp"

namespace cgt::ends {

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// Components of B(1,R) \ B(1,r) that still meet the sphere S(R).
long far_components(const cayley::CayleyBall& ball, long r) {
  const int n = ball.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int v = 0; v < n; ++v) {
    if (ball.word_length(v) <= r) continue;
    for (const auto& e : ball.edges_from(v)) {
      if (ball.word_length(e.to) <= r) continue;
      int a = find_root(parent, v), b = find_root(parent, e.to);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<char> counted(n, 0);
  long count = 0;
  const long big = ball.radius();
  for (int v = 0; v < n; ++v) {
    if (ball.word_length(v) != big) continue;
    int root = find_root(parent, v);
    if (!counted[root]) {
      counted[root] = 1;
      ++count;
    }
  }
  return count;
}

}  // namespace

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::Zero: return "Zero";
    case Classification::One: return "One";
    case Classification::Two: return "Two";
    case Classification::ManyAtScale: return "ManyAtScale";
    case Classification::Unstable: return "Unstable";
  }
  return "Unstable";
}

EndsReport count_ends(const groups::GroupModel& group, long r_max, long ratio, long window,
                      long vertex_budget) {
  if (r_max < 1) throw PreconditionError("ends: r_max must be >= 1");
  if (ratio < 2) throw PreconditionError("ends: ratio must be >= 2");
  if (window < 1) throw PreconditionError("ends: window must be >= 1");

  EndsReport report;
  report.group = group.name();
  report.r_max = r_max;
  report.ratio = ratio;

  bool last_exhausted = false;
  for (long r = 1; r <= r_max; ++r) {
    const long big = ratio * r;
    std::optional<cayley::CayleyBall> ball;
    try {
      ball.emplace(cayley::ball(group, big, vertex_budget));
    } catch (const BudgetError&) {
      report.budget_limited = true;  // keep the partial sequence
      break;
    }
    last_exhausted = ball->exhausted();
    report.sequence.push_back({r, big, far_components(*ball, r)});
    if (last_exhausted) break;  // finite at scale: deeper balls repeat the group
  }
  report.exhausted = last_exhausted;

  const long have = static_cast<long>(report.sequence.size());
  report.window_used = std::min(window, have);
  if (report.exhausted) {
    report.classification = Classification::Zero;
  } else if (have == 0) {
    report.classification = Classification::Unstable;
  } else {
    const long w = report.window_used;
    bool all_one = true, all_two = true, many = true, non_decreasing = true;
    for (long i = have - w; i < have; ++i) {
      const long c = report.sequence[static_cast<std::size_t>(i)].components;
      all_one = all_one && c == 1;
      all_two = all_two && c == 2;
      many = many && c > 2;
      if (i > have - w)
        non_decreasing =
            non_decreasing && c >= report.sequence[static_cast<std::size_t>(i - 1)].components;
    }
    if (all_one)
      report.classification = Classification::One;
    else if (all_two)
      report.classification = Classification::Two;
    else if (many && non_decreasing)
      report.classification = Classification::ManyAtScale;
    else
      report.classification = Classification::Unstable;
  }

  if (report.classification == Classification::Two) report.citations = {"Lemma 4.4"};
  return report;
}

bool generator_invariance(const groups::GroupModel& a, const groups::GroupModel& b, long r_max,
                          long ratio, long window, long vertex_budget) {
  EndsReport ra = count_ends(a, r_max, ratio, window, vertex_budget);
  EndsReport rb = count_ends(b, r_max, ratio, window, vertex_budget);
  if (ra.classification == Classification::Unstable)
    throw PreconditionError("ends: classification for " + a.name() +
                            " is unstable at r_max=" + std::to_string(r_max) +
                            "; raise r_max before comparing generating sets");
  if (rb.classification == Classification::Unstable)
    throw PreconditionError("ends: classification for " + b.name() +
                            " is unstable at r_max=" + std::to_string(r_max) +
                            "; raise r_max before comparing generating sets");
  return ra.classification == rb.classification;
}

}  // namespace cgt::ends
