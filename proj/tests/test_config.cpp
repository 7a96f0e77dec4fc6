#include <doctest.h>

#include <string>

#include "scatterbound/config.hpp"

using namespace scatterbound;

namespace {

const char* kBarrier = R"({
  "potential": {"kind": "square_barrier", "height": 1.0, "width": 1.0, "center": 0.0},
  "comparison": {"kind": "free", "level": 0.0},
  "energies": {"min": 1.5, "max": 3.0, "count": 4},
  "solver": {"rel_tol": 1e-10, "abs_tol": 1e-12},
  "quad_tol": 1e-11,
  "output": {"path": "rows.csv", "format": "json"}
})";

}  // namespace

TEST_CASE("parse a full scenario") {
  const auto c = parse_config(kBarrier);
  CHECK(c.potential == PotentialSpec::square_barrier(1, 1));
  CHECK(c.comparison == PotentialSpec::free());
  REQUIRE(c.energy_range.has_value());
  const auto es = c.energies();
  REQUIRE(es.size() == 4);
  CHECK(es.front() == 1.5);
  CHECK(es.back() == 3.0);
  CHECK(c.solver.rel_tol == 1e-10);
  CHECK(c.solver.node_spacing == SolverSettings{}.node_spacing);
  CHECK(c.quad_tol == 1e-11);
  CHECK(c.output.path == "rows.csv");
  CHECK(c.output.format == OutputFormat::json);
}

TEST_CASE("explicit energy lists are sorted and the comparison defaults to free") {
  const auto c = parse_config(
      R"({"potential": {"kind": "step", "v_minus": 0.0, "v_plus": 0.5}, "energies": [2.0, 1.0, 1.5]})");
  CHECK(c.energies() == std::vector<double>{1.0, 1.5, 2.0});
  CHECK(c.comparison.kind() == PotentialKind::free);
}

TEST_CASE("round trip through serialization") {
  const char* texts[] = {
      kBarrier,
      R"({"potential": {"kind": "shifted", "base": {"kind": "step", "v_minus": 0, "v_plus": 0.5},
          "delta_v": {"kind": "gaussian", "height": 1, "sigma": 0.5, "center": 0.1}, "epsilon": 0.01},
          "comparison": {"kind": "step", "v_minus": 0, "v_plus": 0.5},
          "energies": [1.0, 1.2], "epsilon_ladder": [0.02, 0.01]})",
      R"({"potential": {"kind": "tabulated", "x": [-1, 0, 1], "v": [0, 1, 0], "v_minus": 0, "v_plus": 0},
          "comparison": {"kind": "delta", "strength": 0.5, "center": 0.2},
          "energies": {"min": 1.1, "max": 1.1, "count": 1}})",
  };
  for (const char* text : texts) {
    const auto c = parse_config(text);
    const auto again = parse_config(serialize_config(c));
    CHECK(again == c);
    CHECK(serialize_config(again) == serialize_config(c));
  }
}

TEST_CASE("potential round trip") {
  const auto p = PotentialSpec::shifted(PotentialSpec::square_barrier(1, 1), PotentialSpec::delta(0.3, 0.1), 2.0);
  CHECK(parse_potential(serialize_potential(p)) == p);
}

TEST_CASE("configuration errors name the offending field") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"potential": {"kind": "free"}, "energies": []})"),
                       doctest::Contains("energies"), ConfigError);
  CHECK_THROWS_WITH_AS(
      parse_config(R"({"potential": {"kind": "square_barrier", "height": 1, "width": 1, "hieght": 2}, "energies": [2]})"),
      doctest::Contains("$.potential.hieght"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"potential": {"kind": "free"}, "energies": [2], "solver": {"reltol": 1}})"),
                       doctest::Contains("reltol"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("{\n  \"potential\": {\"kind\": \"free\"},\n  \"energies\": [2,]\n}"),
                       doctest::Contains("line 3"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"potential": {"kind": "free"}, "energies": [-1]})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"potential": {"kind": "free"}, "energies": {"min": 1, "max": 2, "count": 0}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"potential": {"kind": "free"}, "energies": {"min": 2, "max": 1, "count": 3}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"potential": {"kind": "morse"}, "energies": [2]})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"potential": {"kind": "gaussian", "height": 1, "sigma": -1}, "energies": [2]})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"energies": [2]})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"potential": {"kind": "free"}, "energies": [2], "output": {"format": "xml"}})"),
                  ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/scenario.json"), ConfigError);
}
