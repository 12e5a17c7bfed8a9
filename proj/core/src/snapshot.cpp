#include "cgt/snapshot.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "cgt/errors.hpp"

namespace cgt::coarse {

struct MetricSnapshot::Impl {
  std::vector<std::string> labels;
  int base = 0;
  long scale = 0;

  virtual ~Impl() = default;
  virtual Rational dist(int i, int j) const = 0;
  virtual bool integral() const = 0;
  // min over sources of dist; overridable for graph-backed speedups.
  virtual std::vector<Rational> subset_dist(const std::vector<int>& subset) const {
    std::vector<Rational> best(labels.size(), Rational(INT64_C(1) << 40));
    for (int e : subset) {
      for (std::size_t x = 0; x < labels.size(); ++x)
        best[x] = cgt::min(best[x], dist(e, static_cast<int>(x)));
    }
    return best;
  }
};

namespace {

std::size_t tri_index(int i, int j) {
  // requires i > j
  return static_cast<std::size_t>(i) * (i - 1) / 2 + j;
}

struct DenseImpl final : MetricSnapshot::Impl {
  std::vector<Rational> tri;

  Rational dist(int i, int j) const override {
    if (i == j) return Rational(0);
    return i > j ? tri[tri_index(i, j)] : tri[tri_index(j, i)];
  }

  bool integral() const override {
    return std::all_of(tri.begin(), tri.end(), [](const Rational& d) { return d.is_integer(); });
  }
};

struct BallImpl final : MetricSnapshot::Impl {
  cayley::CayleyBall ball;
  int count = 0;

  mutable std::mutex lock;
  mutable std::unordered_map<int, std::vector<std::int32_t>> rows;

  explicit BallImpl(cayley::CayleyBall b) : ball(std::move(b)) {}

  const std::vector<std::int32_t>& row(int i) const {
    std::scoped_lock guard(lock);
    auto it = rows.find(i);
    if (it == rows.end()) it = rows.emplace(i, cayley::bfs_distances(ball, {i})).first;
    return it->second;
  }

  Rational dist(int i, int j) const override { return Rational(row(i)[j]); }

  bool integral() const override { return true; }

  std::vector<Rational> subset_dist(const std::vector<int>& subset) const override {
    std::vector<std::int32_t> d = cayley::bfs_distances(ball, subset);
    std::vector<Rational> out;
    out.reserve(count);
    for (int x = 0; x < count; ++x) out.emplace_back(d[x]);
    return out;
  }
};

}  // namespace

int MetricSnapshot::size() const { return static_cast<int>(impl_->labels.size()); }
const std::string& MetricSnapshot::label(int i) const { return impl_->labels[i]; }
int MetricSnapshot::base() const { return impl_->base; }
long MetricSnapshot::scale() const { return impl_->scale; }

Rational MetricSnapshot::distance(int i, int j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size())
    throw PreconditionError("snapshot point index out of range");
  return impl_->dist(i, j);
}

std::vector<Rational> MetricSnapshot::distance_row(int i) const {
  if (i < 0 || i >= size()) throw PreconditionError("snapshot point index out of range");
  std::vector<Rational> out;
  out.reserve(size());
  for (int j = 0; j < size(); ++j) out.push_back(impl_->dist(i, j));
  return out;
}

std::vector<Rational> MetricSnapshot::subset_distances(const std::vector<int>& subset) const {
  if (subset.empty()) throw PreconditionError("subset is empty");
  for (int e : subset)
    if (e < 0 || e >= size()) throw PreconditionError("subset index out of range");
  return impl_->subset_dist(subset);
}

bool MetricSnapshot::integral() const { return impl_->integral(); }

MetricSnapshot MetricSnapshot::from_matrix(std::vector<std::string> labels,
                                           std::vector<Rational> lower_triangular, int base,
                                           long scale_note) {
  std::size_t n = labels.size();
  if (n == 0) throw PreconditionError("snapshot needs at least one point");
  if (lower_triangular.size() != n * (n - 1) / 2)
    throw PreconditionError("lower-triangular matrix has wrong size");
  if (base < 0 || base >= static_cast<int>(n)) throw PreconditionError("base index out of range");
  if (scale_note < 0) throw PreconditionError("scale note must be >= 0");
  for (const Rational& d : lower_triangular)
    if (d <= Rational(0)) throw PreconditionError("off-diagonal distances must be positive");
  auto impl = std::make_shared<DenseImpl>();
  impl->labels = std::move(labels);
  impl->base = base;
  impl->scale = scale_note;
  impl->tri = std::move(lower_triangular);
  return MetricSnapshot(std::move(impl));
}

MetricSnapshot from_ball(const cayley::CayleyBall& ball, long r) {
  if (r < 0) throw PreconditionError("window radius must be >= 0");
  if (2 * r > ball.radius())
    throw PreconditionError("window too large relative to ball: need 2r <= R, got r = " +
                            std::to_string(r) + ", R = " + std::to_string(ball.radius()));
  auto impl = std::make_shared<BallImpl>(ball);
  impl->count = static_cast<int>(ball.growth()[r]);
  impl->labels.reserve(impl->count);
  for (int v = 0; v < impl->count; ++v) impl->labels.push_back(ball.vertex_label(v));
  impl->base = 0;
  impl->scale = r;
  return MetricSnapshot(std::move(impl));
}

MetricSnapshot snapshot_of_ball(const cayley::CayleyBall& ball) {
  auto impl = std::make_shared<BallImpl>(ball);
  impl->count = ball.size();
  impl->labels.reserve(ball.size());
  for (int v = 0; v < ball.size(); ++v) impl->labels.push_back(ball.vertex_label(v));
  impl->base = 0;
  impl->scale = ball.radius();
  return MetricSnapshot(std::move(impl));
}

MetricSnapshot integer_interval(long lo, long hi) {
  if (lo > 0 || hi < 0) throw PreconditionError("interval must contain 0");
  long n = hi - lo + 1;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (long k = lo; k <= hi; ++k) labels.push_back(std::to_string(k));
  std::vector<Rational> tri;
  tri.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (long i = 1; i < n; ++i)
    for (long j = 0; j < i; ++j) tri.emplace_back(i - j);
  long scale = (lo == 0) ? hi : std::min(hi, -lo);
  return MetricSnapshot::from_matrix(std::move(labels), std::move(tri), static_cast<int>(-lo),
                                     scale);
}

SubsetFamily::SubsetFamily(MetricSnapshot snapshot, std::vector<std::vector<int>> subsets,
                           std::vector<std::string> names)
    : snapshot_(std::move(snapshot)), subsets_(std::move(subsets)), names_(std::move(names)) {
  if (subsets_.empty()) throw PreconditionError("subset family is empty");
  for (auto& subset : subsets_) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) throw PreconditionError("family subset is empty");
    if (subset.front() < 0 || subset.back() >= snapshot_.size())
      throw PreconditionError("family subset index out of range");
  }
  if (names_.empty())
    for (std::size_t i = 0; i < subsets_.size(); ++i)
      names_.push_back("E" + std::to_string(i + 1));
  if (names_.size() != subsets_.size())
    throw PreconditionError("subset family needs one name per subset");
}

std::vector<int> neighborhood(const SubsetFamily& family, int i, long r) {
  if (i < 0 || i >= family.count()) throw PreconditionError("subset index out of range");
  if (r < 0) throw PreconditionError("neighborhood radius must be >= 0");
  std::vector<Rational> d = family.snapshot().subset_distances(family.subset(i));
  std::vector<int> out;
  for (int x = 0; x < family.snapshot().size(); ++x)
    if (d[x] <= Rational(r)) out.push_back(x);
  return out;
}

DivergenceReport diverge_coarsely(const SubsetFamily& family, const std::vector<long>& r_values,
                                  long shell_margin) {
  const MetricSnapshot& snap = family.snapshot();
  if (r_values.empty()) throw PreconditionError("no test radii given");
  for (std::size_t i = 0; i < r_values.size(); ++i) {
    if (r_values[i] < 0) throw PreconditionError("test radii must be >= 0");
    if (i > 0 && r_values[i] <= r_values[i - 1])
      throw PreconditionError("test radii must be strictly increasing");
  }
  if (shell_margin < 0) throw PreconditionError("shell margin must be >= 0");
  if (r_values.back() + shell_margin > snap.scale())
    throw PreconditionError("max(r) + shell_margin must be <= snapshot scale " +
                            std::to_string(snap.scale()));

  std::vector<std::vector<Rational>> to_subset;
  to_subset.reserve(family.count());
  for (int i = 0; i < family.count(); ++i)
    to_subset.push_back(snap.subset_distances(family.subset(i)));
  std::vector<Rational> from_base = snap.distance_row(snap.base());
  Rational shell_beyond(snap.scale() - shell_margin);

  DivergenceReport report;
  report.scale = snap.scale();
  report.shell_margin = shell_margin;
  for (long r : r_values) {
    DivergenceEntry entry;
    entry.r = r;
    entry.bounded = true;
    for (int x = 0; x < snap.size(); ++x) {
      bool in_all = true;
      for (const auto& d : to_subset)
        if (d[x] > Rational(r)) {
          in_all = false;
          break;
        }
      if (!in_all) continue;
      ++entry.intersection_size;
      entry.radius = cgt::max(entry.radius, from_base[x]);
      if (entry.bounded && from_base[x] > shell_beyond) {
        entry.bounded = false;
        entry.shell_witness = snap.label(x);
      }
    }
    if (!entry.bounded && !report.fails_at) report.fails_at = r;
    report.entries.push_back(std::move(entry));
  }
  report.diverges_at_scale = !report.fails_at.has_value();
  return report;
}

std::vector<std::vector<int>> mu_components(const MetricSnapshot& snapshot,
                                            const std::vector<int>& subset, const Rational& mu) {
  if (mu < Rational(0)) throw PreconditionError("mu must be >= 0");
  std::vector<int> points = subset;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (int p : points)
    if (p < 0 || p >= snapshot.size()) throw PreconditionError("subset index out of range");

  std::vector<int> parent(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Rational> row = snapshot.distance_row(points[i]);
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (row[points[j]] <= mu) {
        int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  std::vector<std::vector<int>> pieces;
  std::unordered_map<int, std::size_t> piece_of;
  for (std::size_t i = 0; i < points.size(); ++i) {
    int root = find(static_cast<int>(i));
    auto it = piece_of.find(root);
    if (it == piece_of.end()) {
      piece_of.emplace(root, pieces.size());
      pieces.push_back({points[i]});
    } else {
      pieces[it->second].push_back(points[i]);
    }
  }
  return pieces;
}

Rational is_net(const MetricSnapshot& snapshot, const std::vector<int>& subset) {
  std::vector<Rational> d = snapshot.subset_distances(subset);
  Rational worst(0);
  for (const Rational& x : d) worst = cgt::max(worst, x);
  return worst;
}

MetricSnapshot coproduct(const MetricSnapshot& a, const MetricSnapshot& b) {
  int na = a.size(), nb = b.size();
  std::vector<std::string> labels;
  labels.reserve(na + nb);
  for (int i = 0; i < na; ++i) labels.push_back("L:" + a.label(i));
  for (int j = 0; j < nb; ++j) labels.push_back("R:" + b.label(j));

  std::vector<Rational> base_a = a.distance_row(a.base());
  std::vector<Rational> base_b = b.distance_row(b.base());

  std::vector<Rational> tri;
  tri.reserve(static_cast<std::size_t>(na + nb) * (na + nb - 1) / 2);
  for (int i = 1; i < na + nb; ++i) {
    std::vector<Rational> row_left;
    if (i < na) row_left = a.distance_row(i);
    else row_left = b.distance_row(i - na);
    for (int j = 0; j < i; ++j) {
      if (i < na) {
        tri.push_back(row_left[j]);
      } else if (j >= na) {
        tri.push_back(row_left[j - na]);
      } else {
        // cross-part distance through both base points
        tri.push_back(base_a[j] + Rational(1) + base_b[i - na]);
      }
    }
  }
  return MetricSnapshot::from_matrix(std::move(labels), std::move(tri), a.base(),
                                     std::min(a.scale(), b.scale()));
}

std::string serialize(const MetricSnapshot& snapshot) {
  std::ostringstream out;
  out << "cgt snapshot v1\n";
  out << "points " << snapshot.size() << "\n";
  out << "base " << snapshot.base() << "\n";
  out << "scale " << snapshot.scale() << "\n";
  for (int i = 0; i < snapshot.size(); ++i) out << snapshot.label(i) << "\n";
  for (int i = 1; i < snapshot.size(); ++i) {
    std::vector<Rational> row = snapshot.distance_row(i);
    for (int j = 0; j < i; ++j) out << (j ? " " : "") << row[j].str();
    out << "\n";
  }
  return out.str();
}

MetricSnapshot parse_snapshot(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line))
      throw PreconditionError(std::string("snapshot truncated before ") + what);
    return line;
  };
  if (next_line("header") != "cgt snapshot v1")
    throw PreconditionError("snapshot header must be 'cgt snapshot v1'");

  auto field = [&](const std::string& key) -> long {
    next_line(key.c_str());
    std::istringstream f(line);
    std::string name;
    long value = 0;
    if (!(f >> name >> value) || name != key)
      throw PreconditionError("snapshot field '" + key + "' is malformed");
    return value;
  };
  long n = field("points");
  long base = field("base");
  long scale = field("scale");
  if (n < 1) throw PreconditionError("snapshot needs at least one point");

  std::vector<std::string> labels;
  for (long i = 0; i < n; ++i) labels.push_back(next_line("labels"));

  std::vector<Rational> tri;
  for (long i = 1; i < n; ++i) {
    std::istringstream row(next_line("matrix"));
    std::string cell;
    for (long j = 0; j < i; ++j) {
      if (!(row >> cell)) throw PreconditionError("snapshot matrix row is too short");
      tri.push_back(Rational::parse(cell));
    }
    std::string extra;
    if (row >> extra) throw PreconditionError("snapshot matrix row is too long");
  }
  return MetricSnapshot::from_matrix(std::move(labels), std::move(tri), static_cast<int>(base),
                                     scale);
}

}  // namespace cgt::coarse
