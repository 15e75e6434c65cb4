#include <doctest.h>

#include <random>

#include "confspace/serialize.hpp"

using namespace confspace;

TEST_CASE("matrices and vectors round trip with big entries") {
    BigInt big = 1;
    for (int i = 0; i < 80; ++i)
        big *= 3;
    auto A = SparseIntMatrix::from_triplets(3, 4, {{0, 1, big}, {2, 3, BigInt(-7)}});
    const Json j = to_json(A);
    CHECK(j["rows"] == 3);
    CHECK(j["cols"] == 4);
    CHECK(matrix_from_json(Json::parse(j.dump())) == A);

    IntVector v(3);
    v << big, -big, 0;
    CHECK(vector_from_json(Json::parse(to_json(v).dump())) == v);
    CHECK_THROWS(vector_from_json(Json::parse(R"(["1x"])")));
}

TEST_CASE("group cohomology elements round trip") {
    using GC = GroupCohomologyElement;
    const auto x = GC::e(3, 2, 0) * GC::t(3, 2, 1) + GC::t(3, 2, 0).scaled(2) + GC::one(3, 2);
    const Json j = to_json(x);
    CHECK(j["p"] == 3);
    CHECK(j["k"] == 2);
    CHECK(element_from_json(Json::parse(j.dump())) == x);
    const auto y = GC::from_polynomial(euler_class_zeta(2, 3));
    CHECK(element_from_json(to_json(y)) == y);
}

TEST_CASE("integer systems round trip") {
    const auto sys = builtin_system("n4");
    const auto again = system_from_json(Json::parse(to_json(sys).dump()));
    CHECK(again.labels == sys.labels);
    CHECK(again.A == sys.A);
    CHECK(again.b == sys.b);
    CHECK(to_json(sys)["rows"].size() == 6);
}

TEST_CASE("report shapes") {
    const auto d = to_json(zp_module_descriptor({5, {5, 5, 5, 5, 4}}, 5));
    CHECK(d["free_rank"] == 4);
    CHECK(d["k_multiplicity"] == 1);
    CHECK(d["trivial_rank"] == 0);
    CHECK(d["other"].empty());

    const auto gm = to_json(config_rank_formula(3, 2));
    REQUIRE(gm.is_array());
    CHECK(gm.back()["degree"] == 2);
    CHECK(gm.back()["rank"] == 2);

    const auto sw = to_json(dual_sw_expansion(2, 2));
    CHECK(sw["m"] == 2);
    CHECK(sw["degree"] == 9);
    CHECK(sw["survivors"] == Json::parse("[[3,0]]"));

    auto h = homology(chain_complex(proper_part_complex(PartitionLattice::build(4)), Coefficients::integers()));
    const auto hj = to_json(h);
    CHECK(hj["coeff"] == "Z");
    bool found = false;
    for (const auto& deg : hj["degrees"])
        if (deg["degree"] == 1) {
            CHECK(deg["rank"] == 6);
            CHECK(deg["torsion"].empty());
            found = true;
        }
    CHECK(found);
}
