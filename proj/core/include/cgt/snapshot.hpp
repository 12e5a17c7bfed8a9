#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgt/cayley.hpp"
#include "cgt/rational.hpp"

namespace cgt::coarse {

// Finite labeled metric space with exact (integer or rational) distances and
// a designated base point. scale() records the radius the snapshot claims to
// represent faithfully; reports never claim anything beyond it.
// Snapshots are immutable and cheap to copy.
class MetricSnapshot {
 public:
  int size() const;
  const std::string& label(int i) const;
  int base() const;
  long scale() const;
  Rational distance(int i, int j) const;
  // All distances from point i, in point order.
  std::vector<Rational> distance_row(int i) const;
  // Pointwise distance to a subset: min over members.
  std::vector<Rational> subset_distances(const std::vector<int>& subset) const;
  bool integral() const;

  static MetricSnapshot from_matrix(std::vector<std::string> labels,
                                    std::vector<Rational> lower_triangular, int base,
                                    long scale_note);

  struct Impl;
  explicit MetricSnapshot(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

// Word metric on B(1, r) as a snapshot; distances are computed inside the
// ball and are exact because 2r <= R.
MetricSnapshot from_ball(const cayley::CayleyBall& ball, long r);

// The whole ball in its own path metric (scale = R). Deep pairs carry the
// group's word metric; pairs near the boundary may exceed it.
MetricSnapshot snapshot_of_ball(const cayley::CayleyBall& ball);

// Integer interval [lo, hi] with |i - j| distances and base 0.
MetricSnapshot integer_interval(long lo, long hi);

// Nonempty subsets of one snapshot, used as divergence inputs.
class SubsetFamily {
 public:
  SubsetFamily(MetricSnapshot snapshot, std::vector<std::vector<int>> subsets,
               std::vector<std::string> names = {});
  const MetricSnapshot& snapshot() const { return snapshot_; }
  int count() const { return static_cast<int>(subsets_.size()); }
  const std::vector<int>& subset(int i) const { return subsets_[i]; }
  const std::string& name(int i) const { return names_[i]; }

 private:
  MetricSnapshot snapshot_;
  std::vector<std::vector<int>> subsets_;
  std::vector<std::string> names_;
};

// {x : d(x, E_i) <= r}, sorted by point index.
std::vector<int> neighborhood(const SubsetFamily& family, int i, long r);

struct DivergenceEntry {
  long r = 0;
  long intersection_size = 0;
  bool bounded = false;
  Rational radius;  // max d(base, x) over the intersection; 0 when empty
  std::optional<std::string> shell_witness;
};

struct DivergenceReport {
  long scale = 0;
  long shell_margin = 0;
  std::vector<DivergenceEntry> entries;
  bool diverges_at_scale = false;
  std::optional<long> fails_at;
};

// Finite-scale divergence test: for each r the common r-neighborhood of all
// subsets must avoid the outer shell {x : d(base, x) > scale - shell_margin}.
DivergenceReport diverge_coarsely(const SubsetFamily& family, const std::vector<long>& r_values,
                                  long shell_margin);

// Partition of the subset into chains with steps <= mu; pieces are sorted by
// smallest member.
std::vector<std::vector<int>> mu_components(const MetricSnapshot& snapshot,
                                            const std::vector<int>& subset, const Rational& mu);

// Smallest radius that makes the subset an r-net: max over points of the
// distance to the subset.
Rational is_net(const MetricSnapshot& snapshot, const std::vector<int>& subset);

// Coarse coproduct: both parts keep their metric and cross distances are
// d(base_a, x) + 1 + d(base_b, y); the base point is the left base.
MetricSnapshot coproduct(const MetricSnapshot& a, const MetricSnapshot& b);

// Versioned text form: header, labeled point list, lower-triangular matrix.
std::string serialize(const MetricSnapshot& snapshot);
MetricSnapshot parse_snapshot(const std::string& text);

}  // namespace cgt::coarse
