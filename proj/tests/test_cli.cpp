#include <doctest.h>

#include <cmath>

#include "mink/commands.hpp"
#include "mink/scene.hpp"

using namespace mink;

namespace {
const char* kSquareScene = R"({
  "norm": {"type": "polygon", "vertices": [[1, -1], [1, 1]]},
  "bodies": {
    "C": {"kind": "polygon", "vertices": [[-2, -2], [2, -2], [2, 2], [-2, 2]]},
    "T": {"kind": "triangle", "vertices": [[0, 0], [4, 0], [0, 4]]},
    "arc": {"kind": "points", "points": [[1, 0], [0, 1]]}
  },
  "options": {"seed": 42, "trials": 300}
})";
}

TEST_CASE("scene parsing: norm variants, bodies, options") {
    Scene s = parse_scene(kSquareScene);
    CHECK(s.norm.is_polygonal());
    CHECK(s.norm.unit_ball().size() == 4);
    CHECK(s.polygon("C").area() == doctest::Approx(16.0));
    CHECK(s.triangle("T").area() == doctest::Approx(8.0));
    CHECK(s.points("arc").size() == 2);
    CHECK(s.options.seed == 42);
    CHECK(s.options.trials == 300);

    Scene lp = parse_scene(R"({"norm": {"type": "lp", "p": 4}, "options": {"discretization": 64}})");
    CHECK(lp.norm.kind() == NormKind::Lp);
    CHECK(lp.norm.unit_ball().size() == 64);
    Scene mx = parse_scene(R"({"norm": {"type": "mixed", "p": 3}, "options": {"discretization": 64}})");
    CHECK(mx.norm.kind() == NormKind::Mixed);
    Scene eu = parse_scene(R"({"norm": {"type": "euclidean"}, "options": {"discretization": 64}})");
    CHECK(eu.norm.kind() == NormKind::Euclidean);
}

TEST_CASE("scene parsing rejects malformed and invalid input") {
    CHECK_THROWS_WITH_AS(parse_scene("{\"norm\": {\"type\": \"polygon\", \n\"vertices\": [[1,"),
                         doctest::Contains("line 2"), validation_error);
    CHECK_THROWS_AS(parse_scene(R"({"norm": {"type": "warp"}})"), validation_error);
    CHECK_THROWS_AS(parse_scene(R"({"norm": {"type": "lp", "p": 1.0}})"), validation_error);
    CHECK_THROWS_AS(parse_scene(R"({"bodies": {}})"), validation_error);
    // NaN/Inf are not valid JSON literals
    CHECK_THROWS_AS(parse_scene(R"({"norm": {"type": "polygon", "vertices": [[NaN, 0]]}})"),
                    validation_error);
}

TEST_CASE("area_unit rescales the plane as a form change") {
    // with area_unit = 4 all coordinates double, so areas scale by 4
    Scene s1 = parse_scene(kSquareScene);
    std::string scaled = std::string(kSquareScene);
    scaled.replace(scaled.find("\"seed\": 42"), 10, "\"seed\": 42, \"area_unit\": 4");
    Scene s4 = parse_scene(scaled);
    CHECK(s4.polygon("C").area() == doctest::Approx(4 * s1.polygon("C").area()));
    CHECK(s4.norm.unit_ball().area() == doctest::Approx(4 * s1.norm.unit_ball().area()));
}

TEST_CASE("radon-check command report") {
    Scene s = parse_scene(kSquareScene);
    auto out = run_command("radon-check", &s, {});
    CHECK(out.exit_code == 0);
    CHECK(out.report["command"] == "radon-check");
    CHECK(out.report["outputs"]["is_radon"] == false);
    CHECK(out.report["outputs"]["lambda"].get<double>() ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("reports are deterministic for a fixed scene and seed") {
    Scene s = parse_scene(kSquareScene);
    auto a = run_command("iso-report", &s, {});
    auto b = run_command("iso-report", &s, {});
    CHECK(a.report.dump(2) == b.report.dump(2));
    CHECK(a.svg == b.svg);
    auto c = run_command("projections", &s, {});
    auto d = run_command("projections", &s, {});
    CHECK(c.report.dump(2) == d.report.dump(2));
}

TEST_CASE("iso-report carries tolerance context for every slack") {
    Scene s = parse_scene(kSquareScene);
    auto out = run_command("iso-report", &s, {});
    REQUIRE(out.report["checks"].is_array());
    int slack_checks = 0;
    for (const auto& c : out.report["checks"]) {
        CHECK(c.contains("value"));
        CHECK(c.contains("threshold"));
        CHECK(c.contains("pass"));
        if (std::string(c["name"]).rfind("slack.", 0) == 0) ++slack_checks;
    }
    CHECK(slack_checks == 8);
    CHECK(out.report["outputs"]["inequality_slacks"]["chakerian_star"].get<double>() ==
          doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("svg output contains both the ball and the isoperimetrix paths") {
    Scene s = parse_scene(kSquareScene);
    auto out = run_command("isoperimetrix", &s, {});
    REQUIRE(!out.svg.empty());
    CHECK(out.svg.find("<svg") == 0);
    // two closed paths: the square and the diamond
    size_t first = out.svg.find("Z\"");
    REQUIRE(first != std::string::npos);
    CHECK(out.svg.find("Z\"", first + 1) != std::string::npos);
    CHECK(out.svg.find("viewBox") != std::string::npos);
}

TEST_CASE("radon-construct command reproduces the mixed ball from the straight arc") {
    Scene s = parse_scene(kSquareScene);
    auto out = run_command("radon-construct", &s, {});
    const auto& curve = out.report["outputs"]["curve"];
    CHECK(curve.size() == 6);
    for (const auto& chk : out.report["checks"]) CHECK(chk["pass"] == true);
}

TEST_CASE("proptest command runs a suite and reports per-invariant rows") {
    CliOverrides flags;
    flags.suite = "plane-core";
    flags.seed = 7;
    auto out = run_command("proptest", nullptr, flags);
    CHECK(out.exit_code == 0);
    CHECK(out.report["outputs"]["failures"] == 0);
    CHECK(out.report["outputs"]["results"].size() >= 4);
    CHECK_THROWS_AS(run_command("proptest", nullptr, CliOverrides{.suite = "nope"}),
                    validation_error);
}

TEST_CASE("unknown commands and missing bodies are validation errors") {
    Scene s = parse_scene(R"({"norm": {"type": "euclidean"}, "options": {"discretization": 64}})");
    CHECK_THROWS_AS(run_command("warp", &s, {}), validation_error);
    CHECK_THROWS_AS(run_command("triangle", &s, {}), validation_error);
    CHECK_THROWS_AS(run_command("radon-construct", &s, {}), validation_error);
}
