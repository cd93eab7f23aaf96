#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include <harmonika/io.hpp>

#include "helpers.hpp"

using namespace harmonika;
using testutil::max_abs;

TEST_CASE("complex and matrix JSON round trips") {
    Complex z(1.25, -3.5);
    REQUIRE(complex_from_json(complex_to_json(z)) == z);
    REQUIRE_THROWS_AS(complex_from_json(Json::array({1.0})), SchemaError);
    REQUIRE_THROWS_AS(complex_from_json(Json("x")), SchemaError);
    REQUIRE_THROWS_AS(complex_from_json(Json::array({1.0, "y"})), SchemaError);

    std::mt19937 rng(307);
    CMatrix m = testutil::random_matrix(3, 4, rng);
    CMatrix back = matrix_from_json(matrix_to_json(m));
    REQUIRE(back.rows() == 3);
    REQUIRE(back.cols() == 4);
    REQUIRE(max_abs(back - m) == 0.0);
    REQUIRE_THROWS_AS(matrix_from_json(Json::array()), SchemaError);
    Json ragged = Json::parse(R"([[[1,0],[0,0]],[[1,0]]])");
    REQUIRE_THROWS_AS(matrix_from_json(ragged), SchemaError);
}

TEST_CASE("algebra element JSON round trip") {
    std::mt19937 rng(311);
    GroupTable g = build_group("symmetric:3");
    AlgebraElement f = testutil::random_element(g, rng);
    Json j = element_to_json(f);
    REQUIRE(j["group"] == "symmetric:3");
    REQUIRE(j["values"].size() == 6);
    AlgebraElement back = element_from_json(j);
    REQUIRE(back.group == f.group);
    REQUIRE(max_abs(back.values - f.values) == 0.0);

    REQUIRE_THROWS_AS(element_from_json(Json::parse(R"({"group":"x"})")), SchemaError);
    REQUIRE_THROWS_AS(element_from_json(Json::parse(R"({"group":"x","values":[]})")), SchemaError);
    REQUIRE_THROWS_AS(element_from_json(Json::parse(R"({"values":[[1,0]]})")), SchemaError);
}

TEST_CASE("spectral blocks JSON round trip") {
    std::mt19937 rng(313);
    GroupTable g = build_group("symmetric:3");
    auto irreps = irreps_of(g);
    SpectralBlocks b = peter_weyl_forward(g, irreps, testutil::random_element(g, rng));
    SpectralBlocks back = blocks_from_json(blocks_to_json(b));
    REQUIRE(back.group == b.group);
    REQUIRE(back.blocks.size() == b.blocks.size());
    for (const auto& [label, blk] : b.blocks) {
        REQUIRE(back.blocks.count(label) == 1);
        REQUIRE(max_abs(back.blocks.at(label) - blk) == 0.0);
    }
    REQUIRE_THROWS_AS(blocks_from_json(Json::parse(R"({"group":"x"})")), SchemaError);
}

TEST_CASE("group and irrep JSON shapes") {
    GroupTable g = build_group("cyclic:3");
    Json jg = group_to_json(g);
    REQUIRE(jg["label"] == "cyclic:3");
    REQUIRE(jg["order"] == 3);
    REQUIRE(jg["identity"] == 0);
    REQUIRE(jg["mul"].size() == 3);
    REQUIRE(jg["mul"][1] == Json::array({1, 2, 0}));
    REQUIRE(jg["inv"] == Json::array({0, 2, 1}));

    Irrep d = irreps_of(g)[1];
    Json jd = irrep_to_json(d);
    REQUIRE(jd["dim"] == 1);
    REQUIRE(jd["matrices"].size() == 3);
    REQUIRE(max_abs(matrix_from_json(jd["matrices"]["2"]) - d.at(2)) == 0.0);
}

TEST_CASE("dual function JSON uses character tuples as keys") {
    GroupTable g = build_group("cyclic:2x3");
    DualGroup dg = dual_group(g);
    std::mt19937 rng(317);
    DualFunction f{g.label, testutil::random_element(g, rng).values};
    Json j = dual_to_json(dg, f);
    REQUIRE(j["group"] == "cyclic:2x3");
    REQUIRE(j["values"].size() == 6);
    // mixed-radix layout: index 5 = (k1,k2) = (1,2)
    REQUIRE(j["values"].contains("1,2"));
    REQUIRE(complex_from_json(j["values"]["1,2"]) == f.values[5]);
    DualFunction back = dual_from_json(dg, j);
    REQUIRE(max_abs(back.values - f.values) == 0.0);

    Json bad = j;
    bad["group"] = "cyclic:6";
    REQUIRE_THROWS_AS(dual_from_json(dg, bad), SchemaError);
    bad = j;
    bad["values"].erase("0,0");
    REQUIRE_THROWS_AS(dual_from_json(dg, bad), SchemaError);
    bad = j;
    bad["values"].erase("0,0");
    bad["values"]["0,4"] = complex_to_json(Complex(1.0, 0.0));
    REQUIRE_THROWS_AS(dual_from_json(dg, bad), SchemaError);
}

TEST_CASE("wrapped element carries a role tag") {
    GroupTable g = build_group("cyclic:2");
    Json j = wrapped_element_to_json("state", delta_element(g));
    auto it = j.begin();
    REQUIRE(it.key() == "role");
    REQUIRE(j["role"] == "state");
    AlgebraElement back = element_from_json(j);
    REQUIRE(back.group == "cyclic:2");
    REQUIRE(back.values[0] == Complex(2.0, 0.0));
}

TEST_CASE("deterministic dump is byte-stable and uses 15 significant digits") {
    Json j;
    j["b"] = 1.0 / 3.0;
    j["a"] = Json::array({Json::array({0.1, -0.0}), 7});
    j["c"] = Json::object();
    std::string s1 = dump_deterministic(j);
    std::string s2 = dump_deterministic(j);
    REQUIRE(s1 == s2);
    // insertion order preserved, floats via %.15g, -0 normalized
    REQUIRE(s1.find("\"b\"") < s1.find("\"a\""));
    REQUIRE(s1.find("0.333333333333333") != std::string::npos);
    REQUIRE(s1.find("-0") == std::string::npos);
    REQUIRE(s1.find("0.1") != std::string::npos);
    REQUIRE(s1.back() == '\n');

    // serializing the same element twice gives identical bytes
    std::mt19937 rng(331);
    GroupTable g = build_group("dihedral:4");
    AlgebraElement f = testutil::random_element(g, rng);
    REQUIRE(dump_deterministic(element_to_json(f)) == dump_deterministic(element_to_json(f)));
}

TEST_CASE("load_json_file") {
    const std::string path = "io_test_tmp.json";
    {
        std::ofstream out(path);
        out << "{\"k\": [1, 2]}";
    }
    Json j = load_json_file(path);
    REQUIRE(j["k"] == Json::array({1, 2}));
    {
        std::ofstream out(path);
        out << "{not json";
    }
    REQUIRE_THROWS_AS(load_json_file(path), SchemaError);
    std::remove(path.c_str());
    REQUIRE_THROWS_AS(load_json_file(path), SchemaError);
}
