#include <doctest.h>

#include <fstream>
#include <string>
#include <vector>

#include "cgt/cayley.hpp"
#include "cgt/group_spec.hpp"
#include "cgt/groups.hpp"
#include "cgt/snapshot.hpp"
#include "support/run_cli.hpp"
#include "support/schema_check.hpp"

using schema::json;

namespace {

const json& schema_definitions() {
  static const json defs = [] {
    std::ifstream in(CGT_SCHEMA_PATH);
    REQUIRE(in.good());
    return json::parse(in).at("definitions");
  }();
  return defs;
}

// Runs the tool, requires success, and validates the payload against the
// schema entry for its "command" field.
json run_checked(const std::string& args) {
  cli::Result r = cli::run(args);
  CAPTURE(args);
  REQUIRE(r.exit_code == 0);
  json out = json::parse(r.out);
  const std::string command = out.at("command").get<std::string>();
  const std::string problem = schema::validate(out, schema_definitions().at(command));
  CHECK_MESSAGE(problem.empty(), problem);
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

bool contains(const json& array, const std::string& value) {
  for (const auto& item : array)
    if (item.is_string() && item.get<std::string>() == value) return true;
  return false;
}

}  // namespace

TEST_CASE("cli: every command emits schema-conforming json") {
  run_checked("ball --builtin Z2 --R 3");
  run_checked("ends --builtin Dinf --r-max 3");
  run_checked("diverge --builtin Z --R 6 --subset 'coord[0]>=1' --subset 'coord[0]<=-1'");
  run_checked("components --builtin Z --R 5 --subset all --mu 1");
  run_checked("ray --builtin F2 --R 3");
  run_checked("line --builtin Z2 --R 4");
  run_checked("witness --builtin Z2 --R 30 --n-max 2");
  run_checked("split --builtin Z --R 10");
  run_checked("verdict --builtin Heis --r-max 4");

  // profile needs its three input files on disk.
  write_file("cli_profile_domain.snap", cgt::coarse::serialize(cgt::coarse::integer_interval(0, 4)));
  write_file("cli_profile_codomain.snap",
             cgt::coarse::serialize(cgt::coarse::integer_interval(0, 8)));
  std::string pairs;
  for (int k = 0; k <= 4; ++k)
    pairs += std::to_string(k) + " " + std::to_string(2 * k) + "\n";
  write_file("cli_profile_pairs.txt", "# doubling\n" + pairs);
  json profile = run_checked(
      "profile --domain cli_profile_domain.snap --codomain cli_profile_codomain.snap "
      "--pairs cli_profile_pairs.txt");
  CHECK(profile["flags"]["coarse_equivalence"] == json(true));
}

TEST_CASE("cli: schema checker rejects tampered output") {
  json out = json::parse(cli::run("ball --builtin Z --R 2").out);
  const json& sch = schema_definitions().at("ball");
  CHECK(schema::validate(out, sch).empty());

  json missing = out;
  missing.erase("growth");
  CHECK_FALSE(schema::validate(missing, sch).empty());

  json wrong_type = out;
  wrong_type["radius"] = "2";
  CHECK_FALSE(schema::validate(wrong_type, sch).empty());

  json extra = out;
  extra["surprise"] = 1;
  CHECK_FALSE(schema::validate(extra, sch).empty());
}

TEST_CASE("cli: ball pins and graph formats") {
  json out = run_checked("ball --builtin Z --R 3");
  CHECK(out["group"] == json("Z"));
  CHECK(out["vertices"] == json(7));
  CHECK(out["edges"] == json(6));
  CHECK(out["growth"] == json::array({1, 3, 5, 7}));
  CHECK(out["exhausted"] == json(false));

  json finite = run_checked("ball --builtin Z/5 --R 10");
  CHECK(finite["vertices"] == json(5));
  CHECK(finite["exhausted"] == json(true));

  cli::Result edges = cli::run("ball --builtin F2 --R 2 --format edge-list");
  REQUIRE(edges.exit_code == 0);
  cgt::cayley::ParsedGraph pg = cgt::cayley::parse_edge_list(edges.out);
  CHECK(pg.vertices.size() == 17);
  CHECK(pg.edges.size() == 16);

  cli::Result dot = cli::run("ball --builtin Z/3 --R 1 --format dot");
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.out.rfind("graph cayley_ball {", 0) == 0);
  CHECK(dot.out.find("}\n") != std::string::npos);
}

TEST_CASE("cli: ends table for the plane") {
  json out = run_checked("ends --builtin Z2 --r-max 3");
  CHECK(out["classification"] == json("One"));
  REQUIRE(out["sequence"].size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const json& row = out["sequence"][i];
    CHECK(row["r"] == json(i + 1));
    CHECK(row["R"] == json(3 * (i + 1)));
    CHECK(row["c"] == json(1));
  }
  CHECK(out["citations"].empty());
}

TEST_CASE("cli: verdict citations per family") {
  json z = run_checked("verdict --builtin Z --r-max 3");
  CHECK(z["ends"]["classification"] == json("Two"));
  CHECK(z["verdict"]["classification"] == json("SumTwoNuN"));
  CHECK(contains(z["verdict"]["citations"], "Thm 4.5"));
  REQUIRE(z["verdict"]["summands"].size() == 2);
  for (const auto& summand : z["verdict"]["summands"])
    CHECK(contains(summand["citations"], "Thm 3.1"));
  CHECK(z["guard"] == json("passed"));

  json plane = run_checked("verdict --builtin Z2 --r-max 3");
  CHECK(plane["verdict"]["classification"] == json("DecomposableContinuum"));
  CHECK(contains(plane["verdict"]["citations"], "Thm 4.3"));
  CHECK(plane["verdict"]["caveat"].get<std::string>().find("scale") != std::string::npos);

  json finite = run_checked("verdict --builtin Z/5 --r-max 2");
  CHECK(finite["verdict"]["classification"] == json("EmptyCorona"));

  json free = run_checked("verdict --builtin F2 --r-max 2");
  CHECK(free["verdict"]["classification"] == json("DisconnectedMany"));
  CHECK(contains(free["verdict"]["citations"], "Prop 4.2"));
}

TEST_CASE("cli: text format emits flat deterministic lines") {
  cli::Result r = cli::run("ends --builtin Z --r-max 2 --format text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("command: ends\n") != std::string::npos);
  CHECK(r.out.find("classification: Two\n") != std::string::npos);
  CHECK(r.out.find("sequence[0].r: 1\n") != std::string::npos);
  CHECK(r.out.find("sequence[1].c: 2\n") != std::string::npos);
  CHECK(r.out.find("citations: Lemma 4.4\n") != std::string::npos);

  cli::Result v = cli::run("verdict --builtin Z/5 --r-max 2 --format text");
  REQUIRE(v.exit_code == 0);
  CHECK(v.out.find("verdict.classification: EmptyCorona\n") != std::string::npos);
  CHECK(v.out.find("guard: passed\n") != std::string::npos);
}

TEST_CASE("cli: repeated runs are byte-identical") {
  const std::vector<std::string> cases = {
      "ball --builtin Z2 --R 3",
      "ball --builtin F2 --R 2 --format dot",
      "ball --builtin F2 --R 2 --format edge-list",
      "ends --builtin Dinf --r-max 3",
      "ends --builtin Z --r-max 3 --format text",
      "diverge --builtin Z --R 6 --subset 'coord[0]>=1' --subset 'coord[0]<=-1'",
      "components --builtin Z --R 5 --subset all --mu 1",
      "ray --builtin Z2 --R 4",
      "line --builtin Z2 --R 4",
      "verdict --builtin Z/6 --r-max 2",
  };
  for (const auto& args : cases) {
    CAPTURE(args);
    cli::Result first = cli::run(args);
    cli::Result second = cli::run(args);
    REQUIRE(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("cli: exit codes distinguish failure kinds") {
  // precondition violations -> 1, with nothing on stdout
  for (const std::string& args : {
           std::string("ray --builtin Z/5 --R 10"),
           std::string("ball --builtin Q"),
           std::string("witness --builtin Z --R 16 --n-max 1"),
           std::string("split --builtin Z2 --R 10"),
           std::string("ends --r-max 2"),
           std::string("ball --builtin Z --group-file nowhere.json"),
           std::string("ball --builtin Z --format yaml"),
           std::string("diverge --builtin Z --R 6 --subset all"),
           std::string("components --builtin Z --R 5 --subset all --mu=-1"),
       }) {
    CAPTURE(args);
    cli::Result r = cli::run(args);
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
  }

  // budget exhaustion -> 2
  CHECK(cli::run("ball --builtin Z2 --R 40 --budget 100").exit_code == 2);
  CHECK(cli::run("ends --builtin F2 --r-max 4 --budget 30").exit_code == 0);  // partial report

  // argument parse errors -> 1
  CHECK(cli::run("frobnicate").exit_code == 1);
  CHECK(cli::run("ball --builtin Z --no-such-flag").exit_code == 1);
}

TEST_CASE("cli: vertex budget environment variable") {
  CHECK(cli::run("ball --builtin Z2 --R 40", "CGT_VERTEX_BUDGET=100 ").exit_code == 2);
  CHECK(cli::run("ball --builtin Z --R 1", "CGT_VERTEX_BUDGET=nope ").exit_code == 1);
  // explicit flag wins over the environment
  CHECK(cli::run("ball --builtin Z --R 3 --budget 1000", "CGT_VERTEX_BUDGET=2 ").exit_code == 0);
}

TEST_CASE("cli: group spec files and snapshot files") {
  const auto spec = cgt::groups::parse_builtin_expr("Z^2");
  write_file("cli_group.json", cgt::groups::to_text(spec));
  json out = run_checked("ball --group-file cli_group.json --R 2");
  CHECK(out["group"] == json("Z^2"));
  CHECK(out["vertices"] == json(13));

  write_file("cli_interval.snap", cgt::coarse::serialize(cgt::coarse::integer_interval(-3, 3)));
  json comp = run_checked("components --snapshot cli_interval.snap --subset all --mu 1");
  CHECK(comp["snapshot"] == json("cli_interval.snap"));
  CHECK(comp["subset_size"] == json(7));
  CHECK(comp["count"] == json(1));

  json div = run_checked(
      "diverge --snapshot cli_interval.snap --subset 'coord[0]>=1' --subset 'coord[0]<=-1' "
      "--r-values 1 --margin 0");
  CHECK(div["report"]["entries"].size() == 1);

  // --snapshot and --builtin are mutually exclusive
  CHECK(cli::run("components --snapshot cli_interval.snap --builtin Z --subset all").exit_code ==
        1);
}

TEST_CASE("cli: line search reports and witness payload") {
  json line = run_checked("line --builtin Z --R 5");
  CHECK(line["found"] == json(true));
  REQUIRE(line.contains("vertices"));
  CHECK(line["vertices"].size() == 11);

  json none = run_checked("line --builtin Z/7 --R 4");
  CHECK(none["found"] == json(false));
  CHECK(none["budget_exhausted"] == json(false));
  CHECK_FALSE(none.contains("vertices"));

  json wit = run_checked("witness --builtin Z2 --R 30 --n-max 2");
  CHECK(wit["ends"]["classification"] == json("One"));
  CHECK(wit["witness"]["z_points"].size() == 2);
  CHECK(wit["witness"]["family"]["sets"].size() == 2);
  for (const auto& condition : wit["witness"]["conditions"]) CHECK(condition["ok"] == json(true));
  CHECK(wit["witness"]["divergence"]["diverges_at_scale"] == json(true));
}
