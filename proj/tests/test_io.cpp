#include "oracles.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace troplin;
using io::Json;

namespace {

std::string format_error(const std::function<void()>& body) {
    try {
        body();
    } catch (const FormatError& ex) {
        return ex.what();
    }
    return "no error";
}

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST(Json, ScalarsAndPoints) {
    EXPECT_EQ(io::scalar_from_json(Json("inf"), "x"), TropicalScalar::infinity());
    EXPECT_EQ(io::scalar_from_json(Json(3), "x"), TropicalScalar(3));
    EXPECT_EQ(io::scalar_from_json(Json("-7/4"), "x"), TropicalScalar(Rational(-7, 4)));
    EXPECT_EQ(io::rational_from_json(io::to_json(Rational(5, 6)), "x"), Rational(5, 6));
    EXPECT_THROW(io::rational_from_json(Json("inf"), "x"), FormatError);
    const Point v{0, Rational(-1, 2), 3};
    EXPECT_EQ(io::point_from_json(reparse(io::to_json(v))), v);
    EXPECT_NE(format_error([] { io::point_from_json(Json::parse(R"([0, "x"])")); }).find("point[1]"), std::string::npos);
}

TEST(Json, SubsetsMustBeIncreasingAndInRange) {
    EXPECT_EQ(io::subset_from_json(Json::parse("[1, 3]"), "s", 4), (Subset{1, 3}));
    EXPECT_THROW(io::subset_from_json(Json::parse("[3, 1]"), "s", 4), FormatError);
    EXPECT_THROW(io::subset_from_json(Json::parse("[1, 1]"), "s", 4), FormatError);
    EXPECT_THROW(io::subset_from_json(Json::parse("[0, 2]"), "s", 4), FormatError);
    EXPECT_THROW(io::subset_from_json(Json::parse("[2, 5]"), "s", 4), FormatError);
    EXPECT_THROW(io::subset_from_json(Json::parse("\"12\""), "s", 4), FormatError);
}

TEST(Json, PlueckerRoundTrip) {
    for (const auto& named : selftest_fixtures()) {
        const auto back = io::plucker_from_json(reparse(io::to_json(named.p)));
        EXPECT_EQ(back, named.p) << named.name;
        EXPECT_FALSE(back.is_validated());
    }
    PlueckerVector partial(4, 3);
    partial.set({1, 2, 3}, 0);
    EXPECT_EQ((io::plucker_from_json(io::to_json(partial))[{1, 2, 4}]), TropicalScalar::infinity());
}

TEST(Json, PlueckerErrorsNameTheField) {
    EXPECT_NE(format_error([] { io::plucker_from_json(Json::parse(R"({"m": 2, "entries": []})")); }).find("n"),
              std::string::npos);
    const auto unsorted = format_error([] {
        io::plucker_from_json(Json::parse(R"({"n": 4, "m": 2, "entries": [
            {"subset": [1, 2], "value": 0}, {"subset": [3, 2], "value": 0}]})"));
    });
    EXPECT_NE(unsorted.find("entries[1].subset"), std::string::npos) << unsorted;
    const auto duplicate = format_error([] {
        io::plucker_from_json(Json::parse(R"({"n": 4, "m": 2, "entries": [
            {"subset": [1, 2], "value": 0}, {"subset": [1, 2], "value": 1}]})"));
    });
    EXPECT_NE(duplicate.find("duplicate"), std::string::npos) << duplicate;
    const auto size = format_error([] {
        io::plucker_from_json(Json::parse(R"({"n": 4, "m": 2, "entries": [{"subset": [1, 2, 3], "value": 0}]})"));
    });
    EXPECT_NE(size.find("entries[0].subset"), std::string::npos) << size;
    const auto value = format_error([] {
        io::plucker_from_json(Json::parse(R"({"n": 4, "m": 2, "entries": [{"subset": [1, 2], "value": "abc"}]})"));
    });
    EXPECT_NE(value.find("entries[0].value"), std::string::npos) << value;
    EXPECT_THROW(io::plucker_from_json(Json::parse(R"({"n": 40, "m": 2, "entries": []})")), FormatError);
}

TEST(Json, MatroidRoundTripAndErrors) {
    for (const auto& m : {Matroid::uniform(2, 4), matroid_at(fixtures::octahedron_split(), {0, 0, 0, -5})}) {
        EXPECT_EQ(io::matroid_from_json(reparse(io::to_json(m))), m);
    }
    const auto bad = format_error([] { io::matroid_from_json(Json::parse(R"({"n": 4, "bases": [[1, 2], [3, 4]]})")); });
    EXPECT_NE(bad.find("bases"), std::string::npos) << bad;
}

TEST(Json, CircuitsRoundTrip) {
    const auto circuits = all_circuits(fixtures::snowflake());
    const auto back = io::circuits_from_json(reparse(io::to_json(circuits)));
    ASSERT_EQ(back.size(), circuits.size());
    for (std::size_t k = 0; k < back.size(); ++k) EXPECT_EQ(back[k], circuits[k].vector);
}

TEST(Json, CellsRoundTrip) {
    const auto cells = enumerate_cells(fixtures::octahedron_split());
    const auto back = io::cells_from_json(reparse(io::to_json(cells)), 4);
    ASSERT_EQ(back.size(), cells.size());
    for (std::size_t k = 0; k < back.size(); ++k) {
        EXPECT_EQ(back[k].face, cells[k].face);
        EXPECT_EQ(back[k].dim, cells[k].dim);
        EXPECT_EQ(back[k].bounded, cells[k].bounded);
        EXPECT_EQ(back[k].witness, cells[k].witness);
        EXPECT_EQ(back[k].owners, cells[k].owners);
    }
    const auto bad = format_error([] {
        io::cells_from_json(Json::parse(R"({"cells": [{"bases": [[1, 2]], "dim": 1, "bounded": 1, "witness": [0, 0, 0, 0], "owners": []}]})"), 4);
    });
    EXPECT_NE(bad.find("cells[0].bounded"), std::string::npos) << bad;
}

TEST(Json, FVectorRoundTrip) {
    const auto f = f_vector(enumerate_cells(fixtures::snowflake()), 2);
    EXPECT_EQ(io::fvector_from_json(reparse(io::to_json(f))), f);
    EXPECT_THROW(io::fvector_from_json(Json::parse(R"({"fvector": {"1": {"total": -1, "bounded": 0}}})")), FormatError);
    EXPECT_THROW(io::fvector_from_json(Json::parse(R"({"fvector": {"2": {"total": 1, "bounded": 0}}})")), FormatError);
}

TEST(Json, HeightsRoundTripAndErrors) {
    for (const auto& v : {fixtures::partial_heights(), fixtures::generic_heights_3_6()}) {
        EXPECT_EQ(io::heights_from_json(reparse(io::to_json(v))), v);
    }
    const auto ragged = format_error([] { io::heights_from_json(Json::parse(R"({"n": 4, "B": [1, 2], "V": [[0, 1], [0]]})")); });
    EXPECT_NE(ragged.find("V[1]"), std::string::npos) << ragged;
    EXPECT_THROW(io::heights_from_json(Json::parse(R"({"n": 3, "B": [1, 2, 3], "V": []})")), FormatError);
}

TEST(Json, ValidationReportListsFailures) {
    const auto report = io::to_json(validate(fixtures::broken_octahedron()));
    EXPECT_FALSE(report["valid"].get<bool>());
    EXPECT_FALSE(report["failures"].empty());
    for (const auto& f : report["failures"]) EXPECT_EQ(f["terms"].size(), 3u);
    EXPECT_TRUE(io::to_json(validate(fixtures::octahedron_split()))["valid"].get<bool>());
}

TEST(Json, TreeSummary) {
    const auto j = io::to_json(build_tree(fixtures::snowflake()));
    EXPECT_EQ(j["internal_nodes"].get<int>(), 4);
    EXPECT_FALSE(j["caterpillar"].get<bool>());
}

TEST(Json, FixtureFilesParse) {
    const std::string dir = TROPLIN_FIXTURE_DIR;
    auto load = [&](const std::string& name) {
        std::ifstream in(dir + "/" + name);
        return Json::parse(in);
    };
    EXPECT_EQ(PlueckerVector::validated(io::plucker_from_json(load("example1.json"))), fixtures::octahedron_split());
    EXPECT_EQ(io::plucker_from_json(load("example1_perturbed.json")), fixtures::broken_octahedron());
    EXPECT_EQ(PlueckerVector::validated(io::plucker_from_json(load("snowflake.json"))), fixtures::snowflake());
    EXPECT_EQ(io::plucker_from_json(load("uniform_2_4.json")), fixtures::uniform_zero(4, 2));
    EXPECT_EQ(io::heights_from_json(load("heights_3_6.json")), fixtures::generic_heights_3_6());
    EXPECT_EQ(io::heights_from_json(load("heights_partial.json")), fixtures::partial_heights());
    EXPECT_EQ(io::point_from_json(load("point_example1.json")), (Point{0, 0, 0, 0}));
}
