#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgt/groups.hpp"

namespace cgt::cayley {

struct LabeledEdge {
  std::int32_t to = 0;
  std::int32_t gen = 0;
};

inline constexpr long kDefaultVertexBudget = 2'000'000;

// Metric ball around the identity in a Cayley graph. Vertices are ordered by
// (word length, discovery order), so index 0 is the identity and every radius
// prefix is itself a ball. Adjacency lists only edges between ball vertices;
// interior vertices carry exactly one out-edge per generator symbol.
class CayleyBall {
 public:
  const groups::GroupModel& group() const { return d_->group; }
  long radius() const { return d_->radius; }
  int size() const { return static_cast<int>(d_->elements.size()); }
  static constexpr int base() { return 0; }

  long word_length(int v) const { return d_->wl[v]; }
  const std::vector<LabeledEdge>& edges_from(int v) const { return d_->adj[v]; }
  const std::string& vertex_label(int v) const { return d_->labels[v]; }
  const groups::Element& vertex_element(int v) const { return d_->elements[v]; }
  std::optional<int> find(const groups::Element& e) const;

  // growth()[t] = |B(1, t)| for t = 0..radius.
  const std::vector<long>& growth() const { return d_->growth; }
  // First vertex index of word length t; size() when the sphere is empty.
  long sphere_start(long t) const;
  // True when enumeration finished below the requested radius, which proves
  // the group has no element of length radius (it is finite at this scale).
  bool exhausted() const { return d_->exhausted; }

  struct Data {
    groups::GroupModel group;
    long radius = 0;
    std::vector<groups::Element> elements;
    std::vector<std::string> labels;
    std::vector<long> wl;
    std::vector<std::vector<LabeledEdge>> adj;
    std::vector<long> growth;
    bool exhausted = false;
    std::unordered_map<groups::Element, std::int32_t, groups::ElementHash> index;
  };
  explicit CayleyBall(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

 private:
  std::shared_ptr<const Data> d_;
};

// Breadth-first enumeration of B(1, radius). Throws BudgetError when more
// than vertex_budget vertices would be enumerated.
CayleyBall ball(const groups::GroupModel& group, long radius,
                long vertex_budget = kDefaultVertexBudget);

// Exact all-pairs word metric on B(1, r), computed inside a ball of radius
// R >= 2r so that geodesics between window points never leave the ball.
class GraphMetricWindow {
 public:
  int size() const { return d_->window; }
  long radius() const { return d_->radius; }
  const CayleyBall& ball() const { return d_->ball; }
  long distance(int i, int j) const { return d_->dist[static_cast<std::size_t>(i) * d_->window + j]; }
  const std::string& label(int i) const { return d_->ball.vertex_label(i); }

  struct Data {
    CayleyBall ball;
    long radius = 0;
    int window = 0;
    std::vector<std::int32_t> dist;
  };
  explicit GraphMetricWindow(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

 private:
  std::shared_ptr<const Data> d_;
};

GraphMetricWindow window_metric(const CayleyBall& ball, long r);

// Graph distances from a source set to every ball vertex.
std::vector<std::int32_t> bfs_distances(const CayleyBall& ball, const std::vector<int>& sources);

enum class GraphFormat { EdgeList, Dot };

// Deterministic undirected export; edge-list lines are "u v generator".
std::string export_graph(const CayleyBall& ball, GraphFormat format);

struct ParsedGraph {
  struct Edge {
    std::string u, v, gen;
  };
  std::vector<std::string> vertices;  // in first-appearance order
  std::vector<Edge> edges;
};

ParsedGraph parse_edge_list(const std::string& text);

struct BallSummary {
  std::string group;
  long radius = 0;
  long vertices = 0;
  long edges = 0;
  std::vector<long> growth;
};

BallSummary summarize(const CayleyBall& ball);

}  // namespace cgt::cayley
