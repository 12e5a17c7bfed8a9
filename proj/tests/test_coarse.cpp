#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "cgt/cayley.hpp"
#include "cgt/errors.hpp"
#include "cgt/groups.hpp"
#include "cgt/predicates.hpp"
#include "cgt/snapshot.hpp"
#include "support/oracles.hpp"

using namespace cgt::coarse;
using namespace cgt::groups;
using cgt::cayley::ball;
using cgt::PreconditionError;
using cgt::Rational;

namespace {

// Window indices whose label matches the predicate text.
std::vector<int> pick(const MetricSnapshot& s, const std::string& expr) {
  return select_points(s, parse_predicate(expr));
}

}  // namespace

TEST_CASE("window snapshots have the pinned sizes") {
  CHECK(from_ball(ball(GroupModel::free_abelian(1), 10), 5).size() == 11);
  CHECK(from_ball(ball(GroupModel::free_abelian(2), 8), 4).size() == 41);
  CHECK(from_ball(ball(GroupModel::cyclic(5), 10), 5).size() == 5);
}

TEST_CASE("window snapshot distances equal the graph window metric") {
  auto b = ball(GroupModel::free_abelian(2), 5);
  MetricSnapshot s = from_ball(b, 2);
  auto w = cgt::cayley::window_metric(b, 2);
  REQUIRE(s.size() == w.size());
  for (int i = 0; i < s.size(); ++i) {
    CHECK(s.label(i) == w.label(i));
    for (int j = 0; j < s.size(); ++j) CHECK(s.distance(i, j) == Rational(w.distance(i, j)));
  }
  CHECK(s.base() == 0);
  CHECK(s.scale() == 2);
  CHECK(s.integral());
}

TEST_CASE("ball snapshots are exact on deep pairs") {
  GroupModel d = GroupModel::dihedral_infinite();
  auto b = ball(d, 6);
  MetricSnapshot s = snapshot_of_ball(b);
  CHECK(s.size() == b.size());
  CHECK(s.scale() == 6);
  for (int u = 0; u < s.size(); ++u) {
    for (int v = u; v < s.size(); ++v) {
      if (b.word_length(u) + b.word_length(v) > 6) continue;
      long expected = oracle::word_distance(d, b.vertex_element(u), b.vertex_element(v), 12);
      CHECK(s.distance(u, v) == Rational(expected));
    }
  }
}

TEST_CASE("integer intervals") {
  MetricSnapshot s = integer_interval(-10, 10);
  CHECK(s.size() == 21);
  CHECK(s.label(s.base()) == "0");
  CHECK(s.scale() == 10);
  CHECK(s.distance(0, 20) == Rational(20));
  MetricSnapshot half = integer_interval(0, 9);
  CHECK(half.size() == 10);
  CHECK(half.base() == 0);
  CHECK(half.scale() == 9);
  CHECK_THROWS_AS(integer_interval(1, 5), PreconditionError);
}

TEST_CASE("from_matrix validates its inputs") {
  CHECK_THROWS_AS(MetricSnapshot::from_matrix({}, {}, 0, 1), PreconditionError);
  CHECK_THROWS_AS(MetricSnapshot::from_matrix({"a", "b"}, {}, 0, 1), PreconditionError);
  CHECK_THROWS_AS(MetricSnapshot::from_matrix({"a", "b"}, {Rational(0)}, 0, 1),
                  PreconditionError);
  CHECK_THROWS_AS(MetricSnapshot::from_matrix({"a", "b"}, {Rational(1)}, 5, 1),
                  PreconditionError);
  CHECK_THROWS_AS(MetricSnapshot::from_matrix({"a", "b"}, {Rational(1)}, 0, -1),
                  PreconditionError);
  MetricSnapshot ok = MetricSnapshot::from_matrix({"a", "b"}, {Rational(1, 2)}, 0, 1);
  CHECK(ok.distance(0, 1) == Rational(1, 2));
  CHECK(!ok.integral());
}

TEST_CASE("neighborhoods by brute membership scan") {
  MetricSnapshot s = integer_interval(-10, 10);
  std::vector<int> origin{s.base()};
  SubsetFamily family(s, {origin});
  std::vector<int> n3 = neighborhood(family, 0, 3);
  CHECK(n3 == oracle::neighborhood(s, origin, Rational(3)));
  CHECK(n3.size() == 7);  // [-3, 3]
  CHECK(neighborhood(family, 0, 0) == origin);

  auto b2 = ball(GroupModel::free_abelian(2), 12);
  MetricSnapshot plane = from_ball(b2, 6);
  std::vector<int> axis = pick(plane, "coord[1]=0");
  SubsetFamily strip(plane, {axis});
  std::vector<int> n2 = neighborhood(strip, 0, 2);
  CHECK(n2 == oracle::neighborhood(plane, axis, Rational(2)));
  for (int p : n2) {
    std::vector<long> c = label_coordinates(plane.label(p));
    CHECK(std::abs(c[1]) <= 2);  // the horizontal strip |y| <= 2
  }
  CHECK(n2.size() == oracle::neighborhood(plane, axis, Rational(2)).size());
}

TEST_CASE("divergence of half-lines in the integer window") {
  auto b = ball(GroupModel::free_abelian(1), 20);
  MetricSnapshot s = from_ball(b, 10);
  SubsetFamily family(s, {pick(s, "coord[0]>=0"), pick(s, "coord[0]<0")});
  DivergenceReport rep = diverge_coarsely(family, {1, 2, 3, 4}, 2);
  CHECK(rep.diverges_at_scale);
  CHECK(!rep.fails_at.has_value());
  REQUIRE(rep.entries.size() == 4);
  for (const DivergenceEntry& e : rep.entries) {
    CHECK(e.bounded);
    // the common r-neighborhood is exactly [-r, r-1]
    CHECK(e.intersection_size == 2 * e.r);
    CHECK(e.radius == Rational(e.r));
  }
}

TEST_CASE("evens and odds never diverge") {
  MetricSnapshot s = from_ball(ball(GroupModel::free_abelian(1), 20), 10);
  std::vector<int> evens, odds;
  for (int i = 0; i < s.size(); ++i) {
    long value = label_coordinates(s.label(i))[0];
    (((value % 2) + 2) % 2 == 0 ? evens : odds).push_back(i);
  }
  SubsetFamily family(s, {evens, odds});
  DivergenceReport rep = diverge_coarsely(family, {1, 2}, 2);
  CHECK(!rep.diverges_at_scale);
  REQUIRE(rep.fails_at.has_value());
  CHECK(*rep.fails_at == 1);  // the 1-neighborhood of the evens is everything
  CHECK(!rep.entries[0].bounded);
  CHECK(rep.entries[0].shell_witness.has_value());
}

TEST_CASE("the two axes diverge in the plane window") {
  MetricSnapshot s = from_ball(ball(GroupModel::free_abelian(2), 16), 8);
  SubsetFamily family(s, {pick(s, "coord[1]=0"), pick(s, "coord[0]=0")});
  DivergenceReport rep = diverge_coarsely(family, {1, 2, 3}, 2);
  CHECK(rep.diverges_at_scale);
  for (const DivergenceEntry& e : rep.entries) {
    CHECK(e.bounded);
    CHECK(e.radius == Rational(2 * e.r));  // I(r) is the lozenge around 0 of radius 2r
    CHECK(e.intersection_size == (2 * e.r + 1) * (2 * e.r + 1));
  }
  // cross-check one entry against a set-intersection of brute neighborhoods
  std::vector<int> n1 = oracle::neighborhood(s, family.subset(0), Rational(2));
  std::vector<int> n2 = oracle::neighborhood(s, family.subset(1), Rational(2));
  std::vector<int> both;
  std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(), std::back_inserter(both));
  CHECK(static_cast<long>(both.size()) == rep.entries[1].intersection_size);
}

TEST_CASE("divergence parameter validation") {
  MetricSnapshot s = integer_interval(-5, 5);
  SubsetFamily family(s, {{s.base()}});
  CHECK_THROWS_AS(diverge_coarsely(family, {}, 1), PreconditionError);
  CHECK_THROWS_AS(diverge_coarsely(family, {2, 1}, 1), PreconditionError);
  CHECK_THROWS_AS(diverge_coarsely(family, {1}, -1), PreconditionError);
  CHECK_THROWS_AS(diverge_coarsely(family, {4, 5}, 2), PreconditionError);
  CHECK_THROWS_AS(SubsetFamily(s, {}), PreconditionError);
  CHECK_THROWS_AS(SubsetFamily(s, {{}}), PreconditionError);
  CHECK_THROWS_AS(SubsetFamily(s, {{99}}), PreconditionError);
}

TEST_CASE("mu components split chains exactly") {
  MetricSnapshot s = integer_interval(-10, 10);
  auto at = [&](long v) { return static_cast<int>(v + 10); };

  std::vector<int> two{at(0), at(5)};
  CHECK(mu_components(s, two, Rational(1)).size() == 2);
  CHECK(mu_components(s, two, Rational(5)).size() == 1);  // mu >= diameter keeps one piece
  CHECK(mu_components(s, two, Rational(9, 2)).size() == 2);

  std::vector<int> mixed{at(0), at(1), at(2), at(5), at(6), at(9)};
  CHECK(mu_components(s, mixed, Rational(2)).size() == 3);
  CHECK(mu_components(s, mixed, Rational(3)).size() == 1);
  CHECK(mu_components(s, mixed, Rational(5, 2)).size() == 3);

  // pieces agree with the label-propagation oracle on the evens
  std::vector<int> evens;
  for (long v = -10; v <= 10; v += 2) evens.push_back(at(v));
  for (long mu = 1; mu <= 3; ++mu) {
    auto got = mu_components(s, evens, Rational(mu));
    auto want = oracle::chain_pieces(s, evens, Rational(mu));
    CHECK(got == want);
  }
}

TEST_CASE("any cayley ball is one-connected at mu = 1") {
  for (const GroupModel& g : {GroupModel::free_abelian(2), GroupModel::dihedral_infinite()}) {
    CAPTURE(g.name());
    MetricSnapshot s = snapshot_of_ball(ball(g, 3));
    std::vector<int> everything(static_cast<std::size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) everything[static_cast<std::size_t>(i)] = i;
    CHECK(mu_components(s, everything, Rational(1)).size() == 1);
  }
}

TEST_CASE("net radii") {
  MetricSnapshot s = integer_interval(-10, 10);
  std::vector<int> evens;
  for (int i = 0; i < s.size(); i += 2) evens.push_back(i);
  CHECK(is_net(s, evens) == Rational(1));
  CHECK(is_net(s, {s.base()}) == Rational(10));
  CHECK(is_net(s, evens) == oracle::net_radius(s, evens));

  MetricSnapshot plane = from_ball(ball(GroupModel::free_abelian(2), 12), 6);
  std::vector<int> axis = pick(plane, "coord[1]=0");
  CHECK(is_net(plane, axis) == Rational(6));
  CHECK(is_net(plane, axis) == oracle::net_radius(plane, axis));
}

TEST_CASE("coproduct routes cross distances through the base points") {
  MetricSnapshot y = integer_interval(-4, 4);
  MetricSnapshot z = from_ball(ball(GroupModel::free_abelian(2), 6), 3);
  MetricSnapshot c = coproduct(y, z);
  CHECK(c.size() == y.size() + z.size());
  CHECK(c.base() == y.base());
  CHECK(c.label(0) == "L:-4");
  CHECK(c.label(y.size()) == "R:" + z.label(0));

  // d(a, b) = d_Y(y0, a) + 1 + d_Z(z0, b) for a left, b right
  int a = 6;  // label "2" in Y, two steps from the base
  REQUIRE(y.distance(y.base(), a) == Rational(2));
  int b = -1;
  for (int j = 0; j < z.size(); ++j) {
    if (z.distance(z.base(), j) == Rational(3)) {
      b = j;
      break;
    }
  }
  REQUIRE(b >= 0);
  CHECK(c.distance(a, y.size() + b) == Rational(6));
  // the two base points sit at distance one
  CHECK(c.distance(y.base(), y.size() + z.base()) == Rational(1));
  // parts keep their own metric
  CHECK(c.distance(0, 8) == y.distance(0, 8));
  CHECK(c.distance(y.size(), y.size() + 5) == z.distance(0, 5));
}

TEST_CASE("coproducts satisfy the metric axioms exactly") {
  MetricSnapshot tiny =
      MetricSnapshot::from_matrix({"p", "q", "s"}, {Rational(1, 2), Rational(2), Rational(5, 2)},
                                  0, 2);
  MetricSnapshot c = coproduct(tiny, integer_interval(0, 5));
  CHECK(c.size() == 9);
  CHECK(oracle::triangle_violation(c) == "");
}

TEST_CASE("snapshot text form round-trips exactly") {
  MetricSnapshot fractional = MetricSnapshot::from_matrix(
      {"p", "q", "s"}, {Rational(1, 2), Rational(2), Rational(5, 2)}, 1, 7);
  for (const MetricSnapshot& s :
       {fractional, integer_interval(-3, 3),
        from_ball(ball(GroupModel::dihedral_infinite(), 4), 2)}) {
    MetricSnapshot back = parse_snapshot(serialize(s));
    REQUIRE(back.size() == s.size());
    CHECK(back.base() == s.base());
    CHECK(back.scale() == s.scale());
    for (int i = 0; i < s.size(); ++i) {
      CHECK(back.label(i) == s.label(i));
      for (int j = 0; j < s.size(); ++j) CHECK(back.distance(i, j) == s.distance(i, j));
    }
  }
  CHECK_THROWS_AS(parse_snapshot("bogus"), PreconditionError);
  CHECK_THROWS_AS(parse_snapshot("cgt snapshot v1\npoints 2\nbase 0\n"), PreconditionError);
}

TEST_CASE("predicates parse, match and select") {
  CHECK(label_coordinates("(3,-2)") == std::vector<long>{3, -2});
  CHECK(label_coordinates("abA").empty());
  CHECK(label_coordinates("-7") == std::vector<long>{-7});
  CHECK(label_coordinates("(0,+)") == std::vector<long>{0});

  PointPredicate all = parse_predicate("all");
  CHECK(all.matches("(1,2)"));
  CHECK(parse_predicate("prefix=(1,").matches("(1,5)"));
  CHECK(!parse_predicate("prefix=(1,").matches("(2,1)"));
  PointPredicate joint = parse_predicate("coord[0]>0 & coord[1]<=2");
  CHECK(joint.matches("(3,2)"));
  CHECK(!joint.matches("(0,2)"));
  CHECK(!joint.matches("(3,5)"));
  CHECK(parse_predicate("coord[0] >= -3").matches("-3"));
  CHECK(!parse_predicate("coord[0]!=4").matches("4"));
  // a missing coordinate never matches
  CHECK(!parse_predicate("coord[2]=5").matches("(1,2)"));
  CHECK(!parse_predicate("coord[0]>0").matches("abA"));

  MetricSnapshot plane = from_ball(ball(GroupModel::free_abelian(2), 6), 3);
  std::vector<int> positive_axis = pick(plane, "coord[1]=0 & coord[0]>0");
  CHECK(positive_axis.size() == 3);
  for (std::size_t i = 1; i < positive_axis.size(); ++i)
    CHECK(positive_axis[i - 1] < positive_axis[i]);
  CHECK(pick(plane, "all").size() == 25);

  CHECK_THROWS_AS(parse_predicate(""), PreconditionError);
  CHECK_THROWS_AS(parse_predicate("coord["), PreconditionError);
  CHECK_THROWS_AS(parse_predicate("coord[0]~3"), PreconditionError);
  CHECK_THROWS_AS(parse_predicate("coord[0]>"), PreconditionError);
  CHECK_THROWS_AS(parse_predicate("prefix="), PreconditionError);
  CHECK_THROWS_AS(parse_predicate("bogus"), PreconditionError);
  CHECK_THROWS_AS(parse_predicate("all & "), PreconditionError);
}

TEST_CASE("rationals parse and print") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(5, 2).floor() == 2);
  CHECK(Rational(-5, 2).floor() == -3);
  CHECK(Rational(5, 2).ceil() == 3);
  CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
  CHECK_THROWS_AS(Rational::parse("x"), PreconditionError);
}
