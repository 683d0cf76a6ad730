#include <gtest/gtest.h>

#include <cmath>

#include "springfold/fold_io.hpp"
#include "springfold/generators.hpp"
#include "springfold/json_io.hpp"
#include "springfold/svg.hpp"

using namespace springfold;

namespace {
CreasePattern sample_pattern() {
    StraightJointParams params;
    params.joint = SpringJointSpec::equal(4, 3 * kPi / 4);
    params.strip_width = 4.0;
    params.pleat_width = 1.0;
    return gen_straight_spring_joint(params);
}
}  // namespace

TEST(FoldIo, RoundTripIsByteIdentical) {
    const CreasePattern cp = sample_pattern();
    const std::string once = write_fold(cp);
    const CreasePattern back = read_fold(once);
    const std::string twice = write_fold(back);
    EXPECT_EQ(once, twice);
    ASSERT_EQ(back.vertices.size(), cp.vertices.size());
    for (std::size_t i = 0; i < cp.vertices.size(); ++i) {
        EXPECT_EQ(back.vertices[i].x, cp.vertices[i].x);
        EXPECT_EQ(back.vertices[i].y, cp.vertices[i].y);
    }
    ASSERT_EQ(back.creases.size(), cp.creases.size());
    for (std::size_t i = 0; i < cp.creases.size(); ++i) {
        EXPECT_EQ(back.creases[i].assignment, cp.creases[i].assignment);
        EXPECT_EQ(back.creases[i].v1, cp.creases[i].v1);
        EXPECT_EQ(back.creases[i].v2, cp.creases[i].v2);
    }
}

TEST(FoldIo, FoldAnglesSurviveInDegrees) {
    CreasePattern cp;
    cp.add_vertex({0, 0});
    cp.add_vertex({1, 0});
    cp.add_crease(0, 1, CreaseAssignment::Valley, 3 * kPi / 4);
    const std::string text = write_fold(cp);
    EXPECT_NE(text.find("135"), std::string::npos);
    const CreasePattern back = read_fold(text);
    EXPECT_NEAR(back.creases[0].fold_angle, 3 * kPi / 4, 1e-14);
    EXPECT_EQ(write_fold(back), text);
}

TEST(FoldIo, BorderEdgesSerializeNullAngles) {
    CreasePattern cp;
    cp.add_vertex({0, 0});
    cp.add_vertex({1, 0});
    cp.add_crease(0, 1, CreaseAssignment::Border, 0.0);
    const std::string text = write_fold(cp);
    EXPECT_NE(text.find("null"), std::string::npos);
    const CreasePattern back = read_fold(text);
    EXPECT_EQ(back.creases[0].assignment, CreaseAssignment::Border);
}

TEST(FoldIo, RejectsGarbage) {
    EXPECT_THROW(read_fold("{\"vertices_coords\": [[0,0]]}"), std::invalid_argument);
    EXPECT_THROW(read_fold("not json"), nlohmann::json::exception);
}

TEST(FoldIo, DegreeRadianStabilizer) {
    for (double rad : {kPi, -kPi, 3 * kPi / 4, 1e-7, 0.123456789, 23 * kPi / 24}) {
        const double deg = radians_to_degrees(rad);
        const double back = degrees_to_radians_stable(deg);
        EXPECT_EQ(radians_to_degrees(back), deg);
    }
}

TEST(SvgExport, DeterministicAndStyled) {
    const CreasePattern cp = sample_pattern();
    const std::string a = write_svg(cp);
    const std::string b = write_svg(cp);
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("stroke-dasharray"), std::string::npos);  // valleys dashed
    EXPECT_NE(a.find("<line"), std::string::npos);
    EXPECT_EQ(a.find("nan"), std::string::npos);
}

TEST(AngleParsing, PiExpressions) {
    EXPECT_EQ(parse_angle("pi"), kPi);
    EXPECT_NEAR(parse_angle("3pi/4"), 3 * kPi / 4, 1e-15);
    EXPECT_NEAR(parse_angle("-pi/2"), -kPi / 2, 1e-15);
    EXPECT_NEAR(parse_angle("23pi/24"), 23 * kPi / 24, 1e-15);
    EXPECT_NEAR(parse_angle("2pi"), 2 * kPi, 1e-15);
    EXPECT_EQ(parse_angle("0.75"), 0.75);
    EXPECT_EQ(parse_angle("1.5e-1"), 0.15);
    EXPECT_THROW(parse_angle(""), std::invalid_argument);
    EXPECT_THROW(parse_angle("pi/0"), std::invalid_argument);
    EXPECT_THROW(parse_angle("3pi/4garbage"), std::invalid_argument);
}

TEST(AngleParsing, RepetitionTokens) {
    const auto list = parse_angle_list({"3pi/4", "x4"});
    ASSERT_EQ(list.size(), 4u);
    for (double a : list) EXPECT_NEAR(a, 3 * kPi / 4, 1e-15);
    EXPECT_THROW(parse_angle_list({"x3"}), std::invalid_argument);
}

TEST(JsonIo, DesignProblemRoundTrip) {
    DesignProblem p;
    p.waypoints = {{0.0, 2.5, 1.0}, {1.2, 0.7, 2.0}};
    p.n = 3;
    p.tolerance = 1e-8;
    const auto doc = design_problem_to_json(p);
    const DesignProblem back = design_problem_from_json(doc);
    EXPECT_EQ(back.n, p.n);
    EXPECT_EQ(back.tolerance, p.tolerance);
    ASSERT_EQ(back.waypoints.size(), 2u);
    EXPECT_EQ(back.waypoints[1].weight, 2.0);
}

TEST(JsonIo, JointAcceptsPiStrings) {
    const auto joint = joint_from_json(nlohmann::json::parse(
        R"({"constituent_angles": ["3pi/4", "3pi/4", 2.0]})"));
    ASSERT_EQ(joint.size(), 3u);
    EXPECT_NEAR(joint.constituent_angles[0], 3 * kPi / 4, 1e-15);
    EXPECT_EQ(joint.constituent_angles[2], 2.0);
}

TEST(JsonIo, GeneratorParams) {
    const auto straight = straight_params_from_json(nlohmann::json::parse(
        R"({"joint": ["pi/2"], "strip_width": 6.0, "pleat_width": 1.5})"));
    EXPECT_EQ(straight.strip_width, 6.0);
    const auto tilted = tilted_params_from_json(nlohmann::json::parse(
        R"({"d": 0.5, "l": 1.0, "n": 3, "pleat_width": 1.0})"));
    EXPECT_EQ(tilted.n, 3u);
    const auto miura = miura_spec_from_json(nlohmann::json::parse(
        R"({"rows": 2, "cols": 3, "joint": ["23pi/24","x4"], "miura_angle": "pi/8"})"));
    EXPECT_EQ(miura.rows, 2u);
    ASSERT_EQ(miura.joint.size(), 4u);
}
