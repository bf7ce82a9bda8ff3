#include <doctest.h>

#include "ordlift/nebe.hpp"

#include <fstream>

using namespace ordlift;

namespace {
DecompFixture sl24_fixture() {
    DecompFixture fx;
    fx.group = "SL(2,4)";
    fx.p = 2;
    fx.f = 2;
    fx.ordinary = {{"1", 1, 1}, {"3a", 3, 1}, {"3b", 3, 1}, {"5", 5, 1}, {"4", 4, 1}};
    fx.columns = {0, 1, 2, 3};
    fx.rows = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}};
    return fx;
}
} // namespace

TEST_CASE("fixture validation") {
    DecompFixture fx = sl24_fixture();
    CHECK_NOTHROW(fx.validate());

    DecompFixture bad = fx;
    bad.rows[0][0] = 2;
    CHECK_THROWS(bad.validate());

    DecompFixture bad2 = fx;
    bad2.rows[4] = {1, 0, 0, 1}; // breaks |C_I| = 2^{f-|I|}
    CHECK_THROWS(bad2.validate());

    // JSON round-trip: ingest -> emit -> ingest is the identity
    auto j = fx.to_json();
    DecompFixture fx2 = DecompFixture::from_json(j);
    CHECK(fx2.rows == fx.rows);
    CHECK(fx2.columns == fx.columns);
    CHECK(fx2.ordinary.size() == fx.ordinary.size());
    CHECK(fx2.to_json() == j);
}

TEST_CASE("nebe order for SL(2,4)") {
    DecompFixture fx = sl24_fixture();
    GradedAlgebra K2(koshita_presentation(2));
    NebeResult R = nebe_order(fx, K2);
    INFO(R.report.to_json().dump(2));
    CHECK(R.report.pass());

    // the diagonal piece at {} has the beta-basis
    // {(1,1,1,1), 2(0,1,0,1), 2(0,0,1,1), 4(0,0,0,1)} over C_{} = {1,3a,3b,5}
    std::vector<std::vector<Rat>> expect_rows = {
        {1, 1, 1, 1}, {0, 2, 0, 2}, {0, 0, 2, 2}, {0, 0, 0, 4}};
    Lattice expect = hnf(2, 4, expect_rows);
    CHECK(R.order.pieces.at({0, 0}) == expect);

    // u = chi(1)/60 on the block containing {}
    CHECK(R.u.u[0].first == Rat(1) / 60);
    CHECK(R.u.u[1].first == Rat(1) / 20);
    CHECK(R.u.u[3].first == Rat(1) / 12);

    // the Steinberg vertex {0,1} carries the defect-zero piece O
    long cSt = 3; // column index of {0,1}
    CHECK(R.order.pieces.at({cSt, cSt}).D == 1);
    CHECK(R.order.pieces.at({cSt, cSt}).rows[0][0] == 1);
}

TEST_CASE("nebe order from the shipped fixture file") {
    std::ifstream in(FIXTURE_DIR "/sl2_4.json");
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    DecompFixture fx = DecompFixture::from_json(j);
    GradedAlgebra K2(koshita_presentation(2));
    CHECK(nebe_order(fx, K2).report.pass());
}
