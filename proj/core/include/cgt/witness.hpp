#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cgt/cayley.hpp"
#include "cgt/ends.hpp"
#include "cgt/maps.hpp"
#include "cgt/snapshot.hpp"

namespace cgt::witness {

// One verified inequality bundle. Construction throws instead of recording a
// failure, so surviving checklists always carry ok = true plus the measured
// numbers in `detail`.
struct ConditionCheck {
  std::string label;
  std::string description;
  bool ok = false;
  std::string detail;
};

// Geodesic ray from the base to the outer sphere: word_length(p_k) = k and
// consecutive vertices adjacent. vertices[k] is p_k.
struct RayWitness {
  std::vector<int> vertices;
  std::vector<int> generator_ids;  // step k -> k+1
  std::vector<std::string> labels;
};

// Lexicographically least geodesic (by generator id at each step) from the
// base to S(R).
RayWitness extract_ray(const cayley::CayleyBall& ball);

// Non-decreasing integer modulus with a printable name.
struct Modulus {
  std::string name;
  std::function<long(long)> fn;
  long operator()(long t) const { return fn(t); }
};

Modulus identity_modulus();
Modulus linear_modulus(long a, long b);  // t -> a*t + b

// Family B_n = N(B(x_n, sigma(n + r_net)), r_net) around the given centers,
// with tau(t) = 2*(sigma(sigma(t + r_net)) + r_net) and mu = sigma(1) + r_net.
// Verified conditions:
//   (A) diam B_n <= tau(n)
//   (B) B_n is mu-connected
//   (C) B(x_n, n) is contained in B_n
//   (D) d(base, B_n) strictly increasing in n
struct BallFamilyWitness {
  std::vector<int> centers;
  std::vector<std::vector<int>> sets;
  std::vector<long> tau_values;  // tau(1) .. tau(n_max)
  std::string tau_formula;
  long mu = 0;
  std::vector<ConditionCheck> conditions;
};

BallFamilyWitness build_ball_family(const cayley::CayleyBall& ball,
                                    const std::vector<int>& centers, const Modulus& sigma,
                                    long r_net, int n_max);

// Decomposability witness: ray image N, far points Z = {z_n}, ball family
// around centers x_n picked on the ray, E = N plus all B_n. Verified:
//   (1) d(z_n, N) > 3 tau(n)
//   (3) d(z_k, x_n) > 3 tau(n) for k <= n
//   (i) N meets every B_n
// plus a divergence report for (Z, E) that must pass, and the interior
// certificate B(x_n, n) inside E for every n.
struct DecompositionWitness {
  RayWitness ray;
  std::vector<int> z_points;
  BallFamilyWitness family;
  std::vector<int> e_set;
  std::vector<ConditionCheck> conditions;
  coarse::DivergenceReport divergence;
  std::vector<std::vector<int>> interior_balls;
};

DecompositionWitness decomposability_witness(const cayley::CayleyBall& ball,
                                             const ends::EndsReport& ends_report, int n_max,
                                             const std::vector<long>& r_values = {1, 2, 3, 4, 5},
                                             long shell_margin = 5);

// Two-ended split: far components A_1, A_2 of ball minus B(1, r_star), both
// extended by the core G_0 (= B(1, r_star) plus bounded components) to the
// covering sides. Carries per-side rays, the assembled map f on the integer
// window [-R, R] (side 1 is the positive half), its profile/flags, and the
// nearest-point coarse inverse g with the measured closeness of f(g(y)) to y.
struct TwoEndedSplit {
  long r_star = 0;
  std::vector<int> core;
  std::vector<std::vector<int>> sides;        // A_1', A_2' (sorted vertex sets)
  std::vector<std::vector<int>> far_components;  // A_1, A_2 before extension
  std::vector<RayWitness> rays;
  std::vector<ConditionCheck> conditions;  // "3.1" separation
  coarse::DivergenceReport side_divergence;
  maps::PartialMap line_map;
  std::vector<int> inverse_assignment;  // g : ball -> window indices
  maps::ExpansionProfile profile;
  maps::MapFlags flags;
  Rational closeness_roundtrip;  // max d(f(g(y)), y)
};

TwoEndedSplit two_ended_split(const cayley::CayleyBall& ball, const ends::EndsReport& ends_report,
                              const std::vector<long>& r_values = {1, 2}, long shell_margin = 2);

// Bounded search for a path p_{-R} .. p_R through the base with
// d(p_i, p_j) = |i - j| exactly. Absence under the pair budget means "not
// found at scale", never "none exists".
struct GeodesicLineResult {
  std::optional<std::vector<int>> vertices;  // size 2R+1, index i <-> position i-R
  std::vector<std::string> labels;
  bool budget_exhausted = false;
  long pairs_tried = 0;
};

GeodesicLineResult geodesic_line(const cayley::CayleyBall& ball, long pair_budget = 1'000'000);

}  // namespace cgt::witness
