#include <doctest.h>

#include <cstdlib>

#include "basilica/config.hpp"
#include "basilica/error.hpp"

using namespace basilica;

TEST_SUITE("config") {
  TEST_CASE("defaults") {
    const RunConfig c;
    CHECK(c.seed == 42);
    CHECK(c.format == "json");
    CHECK(c.cap("word_oracle") == 14);
    CHECK(c.cap("spectrum") == 10);
    CHECK(c.cap("schreier") == 12);
    CHECK(c.cap("embedding") == 14);
    CHECK(c.tol("spectral_match") == 1e-6);
    CHECK(c.tol("q_relative") == 1e-8);
    CHECK(c.tol("hausdorff_limit") == 0.05);
    CHECK(c.size("julia_points") == 100000);
    CHECK_NOTHROW(c.validate());
    CHECK_THROWS_AS(c.tol("missing"), InputError);
  }

  TEST_CASE("JSON round trip") {
    RunConfig c;
    c.seed = 7;
    c.output_dir = "elsewhere";
    c.tolerances["lift"] = 1e-10;
    c.level_caps["spectrum"] = 8;
    const RunConfig back = RunConfig::from_json(c.to_json());
    CHECK(back.seed == 7);
    CHECK(back.output_dir == "elsewhere");
    CHECK(back.tol("lift") == 1e-10);
    CHECK(back.cap("spectrum") == 8);
    CHECK(back.to_json() == c.to_json());
  }

  TEST_CASE("partial files keep defaults") {
    const RunConfig c = RunConfig::from_json(R"({"seed": 5, "tolerances": {"orbit": 1e-7}})");
    CHECK(c.seed == 5);
    CHECK(c.tol("orbit") == 1e-7);
    CHECK(c.tol("lift") == 1e-9);
  }

  TEST_CASE("invalid files are rejected") {
    CHECK_THROWS_AS(RunConfig::from_json("{\"colour\": 1}"), InputError);
    CHECK_THROWS_AS(RunConfig::from_json("{\"tolerances\": {\"lift\": -1}}"), InputError);
    CHECK_THROWS_AS(RunConfig::from_json("{\"tolerances\": {\"unknown\": 1}}"), InputError);
    CHECK_THROWS_AS(RunConfig::from_json("{\"level_caps\": {\"spectrum\": 40}}"), InputError);
    CHECK_THROWS_AS(RunConfig::from_json("{\"format\": \"xml\"}"), InputError);
    CHECK_THROWS_AS(RunConfig::from_json("[1, 2]"), InputError);
    CHECK_THROWS_AS(RunConfig::from_json("{"), InputError);
    CHECK_THROWS_AS(RunConfig::load("/nonexistent/config.json"), InputError);
  }

  TEST_CASE("environment override of the output directory") {
    RunConfig c;
    ::setenv(kOutputDirEnv, "/tmp/from-env", 1);
    apply_environment(c);
    ::unsetenv(kOutputDirEnv);
    CHECK(c.output_dir == "/tmp/from-env");
    RunConfig d;
    apply_environment(d);
    CHECK(d.output_dir == "out");
  }
}
