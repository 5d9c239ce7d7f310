#include <gtest/gtest.h>

#include "bott/errors.hpp"
#include "bott/json_io.hpp"

using namespace bott;

namespace {

const std::filesystem::path kData = BOTT_TEST_DATA_DIR;

std::string where_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ValidationError& e) {
        return e.where();
    }
    return "<no error>";
}

} // namespace

TEST(ParseTower, Files) {
    EXPECT_EQ(read_tower(kData / "h1.json"), hirzebruch_tower(1));
    EXPECT_EQ(read_tower(kData / "b3_011.json"), bott3_tower(0, 1, 1));
    const auto t = read_tower(kData / "cp2_over_cp1.json");
    EXPECT_EQ(t.stage(2).summand_exponents, (IntegerMatrix{{1}, {3}}));
}

TEST(ParseTower, BigIntegersAsStrings) {
    const auto t = parse_tower(R"({"stages":[{"fiber_dim":1,"summands":[[]]},
        {"fiber_dim":1,"summands":[["123456789012345678901234567890"]]}]})");
    EXPECT_EQ(t.stage(2).summand_exponents[0][0].str(), "123456789012345678901234567890");
    EXPECT_EQ(to_json(t)["stages"][1]["summands"][0][0], "123456789012345678901234567890");
}

TEST(ParseTower, ErrorPositions) {
    EXPECT_EQ(where_of([] { read_tower(kData / "malformed.json"); }).rfind("byte ", 0), 0u);
    EXPECT_EQ(where_of([] { read_tower(kData / "bad_shape.json"); }), "stages[0].summands");
    EXPECT_EQ(where_of([] { read_tower(kData / "bad_entry.json"); }), "stages[1].summands[0][0]");
    EXPECT_EQ(where_of([] { parse_tower(R"({"stagez": []})"); }), "");
    EXPECT_EQ(where_of([] { parse_tower(R"({"stages": [{"summands": []}]})"); }), "stages[0]");
    EXPECT_EQ(where_of([] { parse_tower(R"({"stages": [{"fiber_dim": "x", "summands": []}]})"); }),
              "stages[0].fiber_dim");
    EXPECT_EQ(where_of([] { parse_tower(R"({"stages": 3})"); }), "stages");
    EXPECT_EQ(where_of([] { read_tower(kData / "missing.json"); }), (kData / "missing.json").string());
}

TEST(ParseTower, MalformedReportsByte) {
    try {
        parse_tower("{\"stages\": [}");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.where(), "byte 13");
    }
}

TEST(ParseBundle, Files) {
    const auto e = read_bundle(kData / "trivial_bundle.json");
    EXPECT_EQ(e.base_dims(), (std::vector<std::size_t>{1, 1, 1}));
    EXPECT_EQ(e.exponents(), (IntegerMatrix{{1, 0, 0}, {-1, 0, 0}}));
    EXPECT_EQ(where_of([] { parse_bundle(R"({"base_dims": [1, 0], "exponents": [[0, 0]]})"); }), "base_dims[1]");
    EXPECT_EQ(where_of([] { parse_bundle(R"({"base_dims": [1], "exponents": [[0, 0]]})"); }), "exponents[0]");
}

TEST(ToJson, TowerRoundTrip) {
    const auto t = read_tower(kData / "cp2_over_cp1.json");
    const std::string text = dump(to_json(t));
    EXPECT_EQ(parse_tower(text), t);
    EXPECT_EQ(dump(Json::parse(text)), text);
}

TEST(ToJson, ClassFormat) {
    const auto ring = BottRing::build(hirzebruch_tower(1));
    const auto u = ring.one() - Scalar(3) * ring.generator(2) + ring.monomial({1, 1});
    const Json j = to_json(u);
    EXPECT_EQ(j.dump(), R"([{"coeff":"1","exponents":[0,0]},{"coeff":"-3","exponents":[0,1]},{"coeff":"1","exponents":[1,1]}])");
    EXPECT_EQ(class_from_json(ring, j), u);
}

TEST(ToJson, ClassFromJsonErrors) {
    const auto ring = BottRing::build(hirzebruch_tower(1));
    EXPECT_EQ(where_of([&] { class_from_json(ring, Json::parse(R"([{"exponents":[0,-1],"coeff":"1"}])")); }),
              "[0].exponents[1]");
    EXPECT_EQ(where_of([&] { class_from_json(ring, Json::parse(R"([{"exponents":[0,1],"coeff":1}])")); }),
              "[0].coeff");
    // Non-normal monomials are reduced on the way in.
    EXPECT_EQ(class_from_json(ring, Json::parse(R"([{"exponents":[0,2],"coeff":"1"}])")), -ring.monomial({1, 1}));
}

TEST(ToJson, Verdicts) {
    const auto v = classify_2stage(hirzebruch_tower(1), hirzebruch_tower(3));
    const Json j = to_json(v);
    EXPECT_EQ(j["verdict"], "DIFFEOMORPHIC");
    EXPECT_EQ(j["witness"], Json::parse("[[1,0],[-1,1]]"));
    EXPECT_EQ(j["twist"]["epsilon"], 1);
    EXPECT_EQ(j["twist"]["w"], "-1");
    EXPECT_TRUE(j["invariant"].is_null());
    EXPECT_TRUE(j["bound"].is_null());

    const Json d = to_json(classify_3stage(bott3_tower(0, 0, 0), bott3_tower(0, 1, 1)));
    EXPECT_EQ(d["verdict"], "DISTINCT");
    EXPECT_TRUE(d["witness"].is_null());
    EXPECT_EQ(d["invariant"], Json::parse(R"({"name":"p1 content","values":["0","2"]})"));
}

TEST(ToJson, ProductResult) {
    EXPECT_EQ(to_json(is_product_cohomology(hirzebruch_tower(2))),
              Json::parse(R"({"verdict":"PRODUCT","twists":[[0,0],[1,0]],"generator_change":[[1,0],[1,1]]})"));
    EXPECT_EQ(to_json(is_product_cohomology(hirzebruch_tower(1))),
              Json::parse(R"({"verdict":"DISTINCT","stage":2,"reason":"divisibility","class":"y1"})"));
}

TEST(ToJson, ZeroColumnTrace) {
    const Json j = to_json(find_zero_column(read_bundle(kData / "trivial_bundle.json")));
    EXPECT_EQ(j, Json::parse(R"({"column":2,"trace":[{"case":"II","column":2,"base_dims":[1,1,1]}]})"));
}

TEST(RingSummary, Fields) {
    const Json j = ring_summary(BottRing::build(hirzebruch_tower(1), CoefficientDomain::modular(Integer(3))));
    EXPECT_EQ(j["rank"], 4);
    EXPECT_EQ(j["graded_ranks"], Json::parse("[1,2,1]"));
    EXPECT_EQ(j["basis"], Json::parse("[[0,0],[1,0],[0,1],[1,1]]"));
    EXPECT_EQ(j["relations"], Json::parse(R"(["y1^2","y1*y2 + y2^2"])"));
    EXPECT_EQ(j["domain"], "Z/3");
}
