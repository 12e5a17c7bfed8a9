#include "cgt/cayley.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

#include "cgt/errors.hpp"

namespace cgt::cayley {

using groups::Element;
using groups::GeneratorSymbol;
using groups::GroupModel;

std::optional<int> CayleyBall::find(const Element& e) const {
  auto it = d_->index.find(e);
  if (it == d_->index.end()) return std::nullopt;
  return static_cast<int>(it->second);
}

long CayleyBall::sphere_start(long t) const {
  if (t > d_->radius) return size();
  if (t == 0) return 0;
  return d_->growth[t - 1];
}

CayleyBall ball(const GroupModel& group, long radius, long vertex_budget) {
  if (radius < 0) throw PreconditionError("ball radius must be >= 0");
  if (vertex_budget < 1) throw PreconditionError("vertex budget must be >= 1");

  std::shared_ptr<CayleyBall::Data> data(
      new CayleyBall::Data{group, radius, {}, {}, {}, {}, {}, false, {}});

  data->elements.push_back(group.identity());
  data->wl.push_back(0);
  data->index.emplace(data->elements[0], 0);

  // Layered breadth-first search; generator order fixes discovery order.
  std::size_t frontier_begin = 0;
  for (long depth = 0; depth < radius; ++depth) {
    std::size_t frontier_end = data->elements.size();
    if (frontier_begin == frontier_end) break;
    for (std::size_t v = frontier_begin; v < frontier_end; ++v) {
      for (const GeneratorSymbol& s : group.generators()) {
        Element w = group.multiply(data->elements[v], s.id);
        if (data->index.contains(w)) continue;
        if (static_cast<long>(data->elements.size()) >= vertex_budget)
          throw BudgetError("vertex budget " + std::to_string(vertex_budget) +
                            " exceeded while enumerating B(1," + std::to_string(radius) + ") of " +
                            group.name());
        data->index.emplace(w, static_cast<std::int32_t>(data->elements.size()));
        data->elements.push_back(std::move(w));
        data->wl.push_back(depth + 1);
      }
    }
    frontier_begin = frontier_end;
  }

  data->labels.reserve(data->elements.size());
  for (const Element& e : data->elements) data->labels.push_back(group.label(e));

  data->growth.assign(radius + 1, 0);
  for (long l : data->wl) ++data->growth[l];
  for (long t = 1; t <= radius; ++t) data->growth[t] += data->growth[t - 1];
  data->exhausted = radius > 0 && data->growth[radius] == data->growth[radius - 1];

  data->adj.resize(data->elements.size());
  for (std::size_t v = 0; v < data->elements.size(); ++v) {
    for (const GeneratorSymbol& s : group.generators()) {
      Element w = group.multiply(data->elements[v], s.id);
      auto it = data->index.find(w);
      if (it != data->index.end())
        data->adj[v].push_back({it->second, static_cast<std::int32_t>(s.id)});
    }
  }

  return CayleyBall(std::move(data));
}

GraphMetricWindow window_metric(const CayleyBall& ball, long r) {
  if (r < 0) throw PreconditionError("window radius must be >= 0");
  if (2 * r > ball.radius())
    throw PreconditionError("window too large relative to ball: need 2r <= R, got r = " +
                            std::to_string(r) + ", R = " + std::to_string(ball.radius()));
  auto data = std::make_shared<GraphMetricWindow::Data>(GraphMetricWindow::Data{ball, r, 0, {}});
  data->window = static_cast<int>(ball.growth()[r]);
  data->dist.assign(static_cast<std::size_t>(data->window) * data->window, -1);
  for (int i = 0; i < data->window; ++i) {
    std::vector<std::int32_t> row = bfs_distances(ball, {i});
    for (int j = 0; j < data->window; ++j) {
      if (row[j] < 0) throw InvariantError("ball is not connected");
      data->dist[static_cast<std::size_t>(i) * data->window + j] = row[j];
    }
  }
  return GraphMetricWindow(std::move(data));
}

std::vector<std::int32_t> bfs_distances(const CayleyBall& ball, const std::vector<int>& sources) {
  std::vector<std::int32_t> dist(ball.size(), -1);
  std::deque<int> queue;
  for (int s : sources) {
    if (s < 0 || s >= ball.size()) throw PreconditionError("BFS source out of range");
    if (dist[s] == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const LabeledEdge& e : ball.edges_from(v)) {
      if (dist[e.to] >= 0) continue;
      dist[e.to] = dist[v] + 1;
      queue.push_back(e.to);
    }
  }
  return dist;
}

namespace {

// Each undirected edge once: positive symbol of an inverse pair, and for
// involutions only from the smaller endpoint.
template <typename Fn>
void for_each_undirected_edge(const CayleyBall& ball, Fn&& fn) {
  const auto& gens = ball.group().generators();
  for (int v = 0; v < ball.size(); ++v) {
    for (const LabeledEdge& e : ball.edges_from(v)) {
      const GeneratorSymbol& s = gens[e.gen];
      bool emit = s.id < s.inverse_id || (s.id == s.inverse_id && v <= e.to);
      if (emit) fn(v, static_cast<int>(e.to), s);
    }
  }
}

}  // namespace

std::string export_graph(const CayleyBall& ball, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::Dot) {
    out << "graph cayley_ball {\n";
    for_each_undirected_edge(ball, [&](int u, int v, const GeneratorSymbol& s) {
      out << "  \"" << ball.vertex_label(u) << "\" -- \"" << ball.vertex_label(v)
          << "\" [label=\"" << s.label << "\"];\n";
    });
    out << "}\n";
    return out.str();
  }
  for_each_undirected_edge(ball, [&](int u, int v, const GeneratorSymbol& s) {
    out << ball.vertex_label(u) << " " << ball.vertex_label(v) << " " << s.label << "\n";
  });
  return out.str();
}

ParsedGraph parse_edge_list(const std::string& text) {
  ParsedGraph graph;
  std::unordered_map<std::string, int> seen;
  auto touch = [&](const std::string& label) {
    if (seen.emplace(label, 1).second) graph.vertices.push_back(label);
  };
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    ParsedGraph::Edge edge;
    std::string extra;
    if (!(fields >> edge.u >> edge.v >> edge.gen) || (fields >> extra))
      throw PreconditionError("edge list line " + std::to_string(line_no) +
                              " is not 'u v generator'");
    touch(edge.u);
    touch(edge.v);
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

BallSummary summarize(const CayleyBall& ball) {
  BallSummary s;
  s.group = ball.group().name();
  s.radius = ball.radius();
  s.vertices = ball.size();
  for_each_undirected_edge(ball, [&](int, int, const GeneratorSymbol&) { ++s.edges; });
  s.growth = ball.growth();
  return s;
}

}  // namespace cgt::cayley
