#include "cgt/witness.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cgt/errors.hpp"

namespace cgt::witness {

namespace {

// extendable[v]: a monotone (word-length increasing) path from v reaches an
// admitted sphere vertex. Vertices are sorted by word length, so a reverse
// index sweep sees deeper layers first.
std::vector<char> extendable_mask(const cayley::CayleyBall& ball,
                                  const std::vector<char>& sphere_ok) {
  const int n = ball.size();
  const long big = ball.radius();
  std::vector<char> ext(n, 0);
  for (int v = n - 1; v >= 0; --v) {
    const long wl = ball.word_length(v);
    if (wl == big) {
      ext[v] = sphere_ok[v];
      continue;
    }
    for (const auto& e : ball.edges_from(v)) {
      if (ball.word_length(e.to) == wl + 1 && ext[e.to]) {
        ext[v] = 1;
        break;
      }
    }
  }
  return ext;
}

RayWitness monotone_ray(const cayley::CayleyBall& ball, const std::vector<char>& sphere_ok) {
  std::vector<char> ext = extendable_mask(ball, sphere_ok);
  if (!ext[0]) throw PreconditionError("ray: no admitted sphere vertex is reachable");
  RayWitness ray;
  ray.vertices.push_back(0);
  int cur = 0;
  for (long k = 0; k < ball.radius(); ++k) {
    bool stepped = false;
    for (const auto& e : ball.edges_from(cur)) {  // edges are in generator-id order
      if (ball.word_length(e.to) == k + 1 && ext[e.to]) {
        ray.vertices.push_back(e.to);
        ray.generator_ids.push_back(e.gen);
        cur = e.to;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw InvariantError("ray: extendable vertex has no extendable successor");
  }
  ray.labels.reserve(ray.vertices.size());
  for (int v : ray.vertices) ray.labels.push_back(ball.vertex_label(v));
  return ray;
}

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}

}  // namespace

RayWitness extract_ray(const cayley::CayleyBall& ball) {
  if (ball.exhausted())
    throw PreconditionError("ray: group exhausted below R=" + std::to_string(ball.radius()) +
                            "; the sphere S(R) is empty");
  std::vector<char> sphere_ok(ball.size(), 0);
  for (int v = 0; v < ball.size(); ++v)
    if (ball.word_length(v) == ball.radius()) sphere_ok[v] = 1;
  return monotone_ray(ball, sphere_ok);
}

Modulus identity_modulus() { return {"id", [](long t) { return t; }}; }

Modulus linear_modulus(long a, long b) {
  if (a < 0 || b < 0) throw PreconditionError("modulus: coefficients must be >= 0");
  std::ostringstream name;
  name << a << "t+" << b;
  return {name.str(), [a, b](long t) { return a * t + b; }};
}

BallFamilyWitness build_ball_family(const cayley::CayleyBall& ball,
                                    const std::vector<int>& centers, const Modulus& sigma,
                                    long r_net, int n_max) {
  if (n_max < 1) throw PreconditionError("ball family: n_max must be >= 1");
  if (r_net < 0) throw PreconditionError("ball family: r_net must be >= 0");
  if (static_cast<int>(centers.size()) < n_max)
    throw PreconditionError("ball family: need " + std::to_string(n_max) + " centers, got " +
                            std::to_string(centers.size()));
  for (long t = 0; t < n_max + r_net; ++t)
    if (sigma(t) < 0 || sigma(t + 1) < sigma(t))
      throw PreconditionError("ball family: modulus '" + sigma.name +
                              "' is not non-decreasing and non-negative at t=" + std::to_string(t));

  const long big = ball.radius();
  coarse::MetricSnapshot snap = coarse::snapshot_of_ball(ball);

  BallFamilyWitness out;
  out.mu = sigma(1) + r_net;
  {
    std::ostringstream f;
    f << "tau(t) = 2*(sigma(sigma(t + r)) + r) with sigma = " << sigma.name << ", r = " << r_net;
    out.tau_formula = f.str();
  }

  std::vector<std::vector<Rational>> center_rows;
  for (int n = 1; n <= n_max; ++n) {
    const int x = centers[static_cast<std::size_t>(n - 1)];
    if (x < 0 || x >= ball.size())
      throw PreconditionError("ball family: center index " + std::to_string(x) + " out of range");
    const long dist0 = ball.word_length(x);
    const long spacing = n + sigma(sigma(n + r_net));
    if (!(dist0 > spacing)) {
      std::ostringstream msg;
      msg << "ball family: spacing violated at n=" << n << ": d(x_" << n << ", x_0) = " << dist0
          << " <= n + sigma^2(n+r) = " << spacing;
      throw PreconditionError(msg.str());
    }
    const long reach = sigma(n + r_net) + r_net;
    if (dist0 + reach > big) {
      std::ostringstream msg;
      msg << "ball family: scale violation at n=" << n << ": d(x_0, x_" << n
          << ") + sigma(n+r) + r = " << dist0 + reach << " > R = " << big;
      throw PreconditionError(msg.str());
    }

    std::vector<Rational> row = snap.distance_row(x);
    std::vector<int> inner;
    for (int v = 0; v < snap.size(); ++v)
      if (row[v] <= Rational(sigma(n + r_net))) inner.push_back(v);
    std::vector<int> set;
    if (r_net == 0) {
      set = inner;
    } else {
      std::vector<Rational> dist = snap.subset_distances(inner);
      for (int v = 0; v < snap.size(); ++v)
        if (dist[v] <= Rational(r_net)) set.push_back(v);
    }
    out.centers.push_back(x);
    out.sets.push_back(std::move(set));
    out.tau_values.push_back(2 * (sigma(sigma(n + r_net)) + r_net));
    center_rows.push_back(std::move(row));
  }

  // (A) diam B_n <= tau(n)
  {
    std::vector<std::string> parts;
    for (int n = 1; n <= n_max; ++n) {
      const auto& set = out.sets[static_cast<std::size_t>(n - 1)];
      Rational diam(0);
      for (int m : set) {
        std::vector<Rational> row = snap.distance_row(m);
        for (int other : set) diam = max(diam, row[other]);
      }
      const long tau_n = out.tau_values[static_cast<std::size_t>(n - 1)];
      if (!(diam <= Rational(tau_n))) {
        std::ostringstream msg;
        msg << "ball family: (A) violated at n=" << n << ": diam(B_" << n << ") = " << diam.str()
            << " > tau(" << n << ") = " << tau_n;
        throw InvariantError(msg.str());
      }
      std::ostringstream p;
      p << "n=" << n << ": diam=" << diam.str() << " <= tau=" << tau_n;
      parts.push_back(p.str());
    }
    out.conditions.push_back({"A", "diam B_n <= tau(n)", true, join(parts)});
  }

  // (B) B_n is mu-connected
  {
    std::vector<std::string> parts;
    for (int n = 1; n <= n_max; ++n) {
      const auto& set = out.sets[static_cast<std::size_t>(n - 1)];
      const auto pieces = coarse::mu_components(snap, set, Rational(out.mu));
      if (pieces.size() != 1) {
        std::ostringstream msg;
        msg << "ball family: (B) violated at n=" << n << ": B_" << n << " splits into "
            << pieces.size() << " mu-pieces with mu = " << out.mu;
        throw InvariantError(msg.str());
      }
      std::ostringstream p;
      p << "n=" << n << ": pieces=1 (mu=" << out.mu << ")";
      parts.push_back(p.str());
    }
    out.conditions.push_back({"B", "B_n is mu-connected", true, join(parts)});
  }

  // (C) B(x_n, n) inside B_n
  {
    std::vector<std::string> parts;
    for (int n = 1; n <= n_max; ++n) {
      const auto& set = out.sets[static_cast<std::size_t>(n - 1)];
      const auto& row = center_rows[static_cast<std::size_t>(n - 1)];
      long members = 0;
      for (int v = 0; v < snap.size(); ++v) {
        if (!(row[v] <= Rational(n))) continue;
        ++members;
        if (!contains(set, v)) {
          std::ostringstream msg;
          msg << "ball family: (C) violated at n=" << n << ": vertex " << snap.label(v)
              << " lies in B(x_" << n << ", " << n << ") but not in B_" << n;
          throw InvariantError(msg.str());
        }
      }
      std::ostringstream p;
      p << "n=" << n << ": |B(x_n, n)| = " << members << " inside B_n";
      parts.push_back(p.str());
    }
    out.conditions.push_back({"C", "B(x_n, n) contained in B_n", true, join(parts)});
  }

  // (D) d(x_0, B_n) strictly increasing
  {
    std::vector<std::string> parts;
    long prev = -1;
    for (int n = 1; n <= n_max; ++n) {
      long dist = -1;
      for (int v : out.sets[static_cast<std::size_t>(n - 1)]) {
        const long wl = ball.word_length(v);
        if (dist < 0 || wl < dist) dist = wl;
      }
      if (n > 1 && !(dist > prev)) {
        std::ostringstream msg;
        msg << "ball family: (D) violated at n=" << n << ": d(x_0, B_" << n << ") = " << dist
            << " <= d(x_0, B_" << n - 1 << ") = " << prev;
        throw InvariantError(msg.str());
      }
      std::ostringstream p;
      p << "n=" << n << ": d(x_0, B_n) = " << dist;
      parts.push_back(p.str());
      prev = dist;
    }
    out.conditions.push_back({"D", "d(x_0, B_n) strictly increasing", true, join(parts)});
  }

  return out;
}

DecompositionWitness decomposability_witness(const cayley::CayleyBall& ball,
                                             const ends::EndsReport& ends_report, int n_max,
                                             const std::vector<long>& r_values,
                                             long shell_margin) {
  if (ends_report.classification != ends::Classification::One)
    throw PreconditionError("decomposition witness: requires ends classification One, got " +
                            ends::classification_name(ends_report.classification));
  if (n_max < 1) throw PreconditionError("decomposition witness: n_max must be >= 1");
  if (shell_margin < 0) throw PreconditionError("decomposition witness: margin must be >= 0");

  const long big = ball.radius();
  const long cap = big - shell_margin;  // keep every witness point clear of the shell

  DecompositionWitness out;
  out.ray = extract_ray(ball);
  const std::vector<int>& ray_v = out.ray.vertices;

  coarse::MetricSnapshot snap = coarse::snapshot_of_ball(ball);
  std::vector<Rational> dist_to_ray = snap.subset_distances(ray_v);

  auto tau = [](long n) { return 2 * n; };  // identity modulus, r = 0

  std::set<int> taken;
  for (int n = 1; n <= n_max; ++n) {
    int pick = -1;
    for (int v = 0; v < snap.size(); ++v) {
      if (taken.count(v)) continue;
      if (ball.word_length(v) > cap) continue;
      if (dist_to_ray[v] > Rational(3 * tau(n))) {
        pick = v;
        break;
      }
    }
    if (pick < 0) {
      std::ostringstream msg;
      msg << "decomposition witness: scale too small: no z_" << n << " with d(z, N) > 3*tau(" << n
          << ") = " << 3 * tau(n) << " inside radius " << cap;
      throw PreconditionError(msg.str());
    }
    taken.insert(pick);
    out.z_points.push_back(pick);
  }

  std::vector<std::vector<Rational>> z_rows;
  for (int z : out.z_points) z_rows.push_back(snap.distance_row(z));

  std::vector<int> centers;
  long prev_pos = 0;
  for (int n = 1; n <= n_max; ++n) {
    long pos = -1;
    for (long m = std::max(prev_pos + 2, static_cast<long>(2 * n + 1)); m + n <= cap; ++m) {
      bool ok = true;
      for (int k = 0; k < n; ++k) {
        if (!(z_rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(ray_v[m])] >
              Rational(3 * tau(n)))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        pos = m;
        break;
      }
    }
    if (pos < 0) {
      std::ostringstream msg;
      msg << "decomposition witness: scale too small: no ray point x_" << n
          << " clears d(z_k, x_n) > " << 3 * tau(n) << " with B(x_n, " << n << ") inside radius "
          << cap;
      throw PreconditionError(msg.str());
    }
    centers.push_back(ray_v[pos]);
    prev_pos = pos;
  }

  out.family = build_ball_family(ball, centers, identity_modulus(), 0, n_max);

  // E = N union all B_n
  {
    std::set<int> e(ray_v.begin(), ray_v.end());
    for (const auto& set : out.family.sets) e.insert(set.begin(), set.end());
    out.e_set.assign(e.begin(), e.end());
  }

  // (1) d(z_n, N) > 3 tau(n)
  {
    std::vector<std::string> parts;
    for (int n = 1; n <= n_max; ++n) {
      const Rational d = dist_to_ray[static_cast<std::size_t>(out.z_points[n - 1])];
      if (!(d > Rational(3 * tau(n))))
        throw InvariantError("decomposition witness: (1) violated at n=" + std::to_string(n));
      std::ostringstream p;
      p << "n=" << n << ": d(z_n, N) = " << d.str() << " > " << 3 * tau(n);
      parts.push_back(p.str());
    }
    out.conditions.push_back({"1", "d(z_n, N) > 3 tau(n)", true, join(parts)});
  }

  // (3) d(z_k, x_n) > 3 tau(n) for k <= n
  {
    std::vector<std::string> parts;
    for (int n = 1; n <= n_max; ++n) {
      Rational worst = z_rows[0][static_cast<std::size_t>(centers[n - 1])];
      for (int k = 1; k < n; ++k)
        worst = min(worst, z_rows[static_cast<std::size_t>(k)]
                                 [static_cast<std::size_t>(centers[n - 1])]);
      if (!(worst > Rational(3 * tau(n))))
        throw InvariantError("decomposition witness: (3) violated at n=" + std::to_string(n));
      std::ostringstream p;
      p << "n=" << n << ": min_k d(z_k, x_n) = " << worst.str() << " > " << 3 * tau(n);
      parts.push_back(p.str());
    }
    out.conditions.push_back({"3", "d(z_k, x_n) > 3 tau(n) for k <= n", true, join(parts)});
  }

  // (i) N meets every B_n
  {
    std::vector<std::string> parts;
    for (int n = 1; n <= n_max; ++n) {
      if (!contains(out.family.sets[static_cast<std::size_t>(n - 1)], centers[n - 1]))
        throw InvariantError("decomposition witness: (i) violated at n=" + std::to_string(n) +
                             ": x_n missing from B_n");
      std::ostringstream p;
      p << "n=" << n << ": x_n = " << snap.label(centers[n - 1]) << " in N and B_n";
      parts.push_back(p.str());
    }
    out.conditions.push_back({"i", "N meets every B_n", true, join(parts)});
  }

  // (Z, E) must diverge at scale
  {
    std::vector<int> z_sorted = out.z_points;
    std::sort(z_sorted.begin(), z_sorted.end());
    coarse::SubsetFamily family(snap, {z_sorted, out.e_set}, {"Z", "E"});
    out.divergence = coarse::diverge_coarsely(family, r_values, shell_margin);
    if (!out.divergence.diverges_at_scale) {
      std::ostringstream msg;
      msg << "decomposition witness: (Z, E) failed to diverge at r = "
          << (out.divergence.fails_at ? *out.divergence.fails_at : -1);
      throw InvariantError(msg.str());
    }
  }

  // interior certificate: B(x_n, n) inside E
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Rational> row = snap.distance_row(centers[n - 1]);
    std::vector<int> inner;
    for (int v = 0; v < snap.size(); ++v)
      if (row[v] <= Rational(n)) inner.push_back(v);
    for (int v : inner)
      if (!contains(out.e_set, v))
        throw InvariantError("decomposition witness: interior ball at n=" + std::to_string(n) +
                             " leaks out of E");
    out.interior_balls.push_back(std::move(inner));
  }

  return out;
}

TwoEndedSplit two_ended_split(const cayley::CayleyBall& ball, const ends::EndsReport& ends_report,
                              const std::vector<long>& r_values, long shell_margin) {
  if (ends_report.classification != ends::Classification::Two)
    throw PreconditionError("two-ended split: requires ends classification Two, got " +
                            ends::classification_name(ends_report.classification));
  long r_star = -1;
  for (auto it = ends_report.sequence.rbegin(); it != ends_report.sequence.rend(); ++it) {
    if (it->components != 2) break;
    r_star = it->r;
  }
  if (r_star < 0)
    throw PreconditionError("two-ended split: report marked Two but carries no trailing c=2 run");

  const long big = ball.radius();
  if (ball.exhausted() || big <= r_star)
    throw PreconditionError("two-ended split: ball radius " + std::to_string(big) +
                            " leaves no room outside the core radius " + std::to_string(r_star));

  // components of ball minus B(1, r_star)
  const int n = ball.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&parent](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (int v = 0; v < n; ++v) {
    if (ball.word_length(v) <= r_star) continue;
    for (const auto& e : ball.edges_from(v)) {
      if (ball.word_length(e.to) <= r_star) continue;
      int a = root(v), b = root(e.to);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<char> is_far_root(n, 0);
  for (int v = 0; v < n; ++v)
    if (ball.word_length(v) == big) is_far_root[root(v)] = 1;

  std::vector<int> far_roots;
  for (int v = 0; v < n; ++v)
    if (ball.word_length(v) > r_star && root(v) == v && is_far_root[v]) far_roots.push_back(v);
  if (far_roots.size() != 2)
    throw PreconditionError("two-ended split: found " + std::to_string(far_roots.size()) +
                            " far components outside radius " + std::to_string(r_star) +
                            ", expected 2; raise R or recompute the ends report");

  std::vector<int> core;
  std::vector<std::vector<int>> far(2);
  for (int v = 0; v < n; ++v) {
    if (ball.word_length(v) <= r_star) {
      core.push_back(v);
    } else {
      int rv = root(v);
      if (rv == far_roots[0])
        far[0].push_back(v);
      else if (rv == far_roots[1])
        far[1].push_back(v);
      else
        core.push_back(v);  // bounded complement component
    }
  }
  std::sort(core.begin(), core.end());

  std::vector<std::vector<int>> sides(2);
  for (int side = 0; side < 2; ++side) {
    sides[side] = core;
    sides[side].insert(sides[side].end(), far[side].begin(), far[side].end());
    std::sort(sides[side].begin(), sides[side].end());
  }

  std::vector<RayWitness> rays;
  for (int side = 0; side < 2; ++side) {
    std::vector<char> sphere_ok(n, 0);
    for (int v : far[side])
      if (ball.word_length(v) == big) sphere_ok[v] = 1;
    rays.push_back(monotone_ray(ball, sphere_ok));
  }

  coarse::MetricSnapshot snap = coarse::snapshot_of_ball(ball);

  // (3.1) delta-separation of the far components, delta = 2
  std::vector<ConditionCheck> conditions;
  {
    const Rational delta(2);
    std::vector<Rational> d1 = snap.subset_distances(far[0]);
    std::vector<Rational> d2 = snap.subset_distances(far[1]);
    long reach = -1;
    std::string witness_label;
    for (int v = 0; v < n; ++v) {
      if (d1[v] <= delta && d2[v] <= delta && ball.word_length(v) > reach) {
        reach = ball.word_length(v);
        witness_label = ball.vertex_label(v);
      }
    }
    if (reach > big - shell_margin) {
      std::ostringstream msg;
      msg << "two-ended split: (3.1) separation failed: N(A_1, 2) and N(A_2, 2) meet at "
          << witness_label << " with radius " << reach << " > R - margin = " << big - shell_margin;
      throw InvariantError(msg.str());
    }
    std::ostringstream detail;
    if (reach < 0)
      detail << "delta=2: intersection empty";
    else
      detail << "delta=2: intersection stays within radius " << reach
             << " <= R - margin = " << big - shell_margin;
    conditions.push_back(
        {"3.1", "N(A_1, delta) and N(A_2, delta) meet only near the core", true, detail.str()});
  }

  coarse::DivergenceReport side_divergence;
  {
    coarse::SubsetFamily family(snap, {sides[0], sides[1]}, {"A1'", "A2'"});
    side_divergence = coarse::diverge_coarsely(family, r_values, shell_margin);
    if (!side_divergence.diverges_at_scale)
      throw InvariantError("two-ended split: extended sides fail to diverge at scale");
  }

  // f(0) = base, f(k) = ray_1(k), f(-k) = ray_2(k)
  coarse::MetricSnapshot window = coarse::integer_interval(-big, big);
  std::vector<int> assignment(static_cast<std::size_t>(2 * big + 1), 0);
  for (long i = 0; i <= 2 * big; ++i) {
    const long k = i - big;
    if (k > 0)
      assignment[static_cast<std::size_t>(i)] = rays[0].vertices[static_cast<std::size_t>(k)];
    else if (k < 0)
      assignment[static_cast<std::size_t>(i)] = rays[1].vertices[static_cast<std::size_t>(-k)];
  }
  maps::PartialMap line_map(window, snap, std::move(assignment));

  maps::ExpansionProfile profile = maps::profile(line_map);
  maps::MapFlags flags = maps::classify(profile, big);
  if (!flags.coarse_equivalence)
    throw InvariantError(
        "two-ended split: assembled line map is not a coarse equivalence at scale R=" +
        std::to_string(big));

  // nearest-point inverse and the round trip f(g(y)) vs y
  const int points = static_cast<int>(line_map.assignment().size());
  std::vector<std::vector<Rational>> image_rows;
  image_rows.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) image_rows.push_back(snap.distance_row(line_map.apply(i)));
  std::vector<int> inverse(static_cast<std::size_t>(n), 0);
  for (int y = 0; y < n; ++y) {
    int best = 0;
    Rational best_d = image_rows[0][static_cast<std::size_t>(y)];
    for (int i = 1; i < points; ++i) {
      const Rational d = image_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(y)];
      if (d < best_d) {
        best = i;
        best_d = d;
      }
    }
    inverse[static_cast<std::size_t>(y)] = best;
  }
  std::vector<int> round_trip(static_cast<std::size_t>(n), 0);
  for (int y = 0; y < n; ++y)
    round_trip[static_cast<std::size_t>(y)] = line_map.apply(inverse[static_cast<std::size_t>(y)]);
  std::vector<int> ident(static_cast<std::size_t>(n));
  std::iota(ident.begin(), ident.end(), 0);
  Rational roundtrip_closeness =
      maps::closeness(maps::PartialMap(snap, snap, std::move(round_trip)),
                      maps::PartialMap(snap, snap, std::move(ident)));

  return TwoEndedSplit{r_star,
                       std::move(core),
                       std::move(sides),
                       std::move(far),
                       std::move(rays),
                       std::move(conditions),
                       std::move(side_divergence),
                       std::move(line_map),
                       std::move(inverse),
                       std::move(profile),
                       flags,
                       roundtrip_closeness};
}

GeodesicLineResult geodesic_line(const cayley::CayleyBall& ball, long pair_budget) {
  if (pair_budget < 1) throw PreconditionError("geodesic line: pair budget must be >= 1");
  GeodesicLineResult out;
  const long big = ball.radius();
  if (ball.exhausted()) return out;  // finite at scale: no sphere, no line
  if (big == 0) {
    out.vertices = std::vector<int>{0};
    out.labels = {ball.vertex_label(0)};
    return out;
  }

  std::vector<int> sphere;
  for (int v = 0; v < ball.size(); ++v)
    if (ball.word_length(v) == big) sphere.push_back(v);

  for (std::size_t ui = 0; ui < sphere.size(); ++ui) {
    std::vector<std::int32_t> row_u = cayley::bfs_distances(ball, {sphere[ui]});
    for (std::size_t vi = ui + 1; vi < sphere.size(); ++vi) {
      if (out.pairs_tried >= pair_budget) {
        out.budget_exhausted = true;
        return out;
      }
      ++out.pairs_tried;
      if (row_u[static_cast<std::size_t>(sphere[vi])] != 2 * big) continue;

      std::vector<std::int32_t> row_v = cayley::bfs_distances(ball, {sphere[vi]});
      auto half_toward = [&ball, big](const std::vector<std::int32_t>& row) {
        std::vector<int> half{0};
        int cur = 0;
        for (long k = 1; k <= big; ++k) {
          bool stepped = false;
          for (const auto& e : ball.edges_from(cur)) {
            if (row[static_cast<std::size_t>(e.to)] == big - k) {
              half.push_back(e.to);
              cur = e.to;
              stepped = true;
              break;
            }
          }
          if (!stepped) throw InvariantError("geodesic line: broken distance gradient");
        }
        return half;
      };
      std::vector<int> pos = half_toward(row_u);  // ends at u
      std::vector<int> neg = half_toward(row_v);  // ends at v
      std::vector<int> line(static_cast<std::size_t>(2 * big + 1));
      for (long i = 0; i <= 2 * big; ++i) {
        const long k = i - big;
        line[static_cast<std::size_t>(i)] =
            k >= 0 ? pos[static_cast<std::size_t>(k)] : neg[static_cast<std::size_t>(-k)];
      }
      out.labels.reserve(line.size());
      for (int p : line) out.labels.push_back(ball.vertex_label(p));
      out.vertices = std::move(line);
      return out;
    }
  }
  return out;
}

}  // namespace cgt::witness
