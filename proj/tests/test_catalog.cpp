#include "doctest.h"

#include <algorithm>

#include "gyro/catalog.hpp"
#include "gyro/axioms.hpp"
#include "gyro/subalgebra.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace gyro;
using namespace gyro::catalog;

TEST_CASE("fixture names")
{
    CHECK(parse_fixture_name("K1") == 1);
    CHECK(parse_fixture_name("k12") == 12);
    CHECK_THROWS_AS(parse_fixture_name("K0"), UnknownFixture);
    CHECK_THROWS_AS(parse_fixture_name("K"), UnknownFixture);
    CHECK_THROWS_AS(parse_fixture_name("Q3"), UnknownFixture);
    CHECK_THROWS_AS(parse_fixture_name("K3x"), UnknownFixture);
}

TEST_CASE("K1 fixture")
{
    const auto f = fixture("K1");
    CHECK(f.name == "K1");
    CHECK(f.gyrogroup.order() == 8);
    CHECK(f.gyrogroup.identity() == 0);
    CHECK(f.gyrogroup.gyr(2, 4) == reference::k1_a());
    CHECK(f.gyrogroup.table() == testing::table_of(reference::kK1));
    CHECK(table_checksum(k1_table()) == table_checksum(testing::table_of(reference::kK1)));
}

TEST_CASE("K2 and K3 fixtures")
{
    const auto k2 = fixture("K2");
    CHECK(k2.gyrogroup.order() == 16);
    CHECK(k2.gyrogroup.table() == testing::table_of(reference::kK2));

    const auto k3 = fixture("K3");
    CHECK(k3.gyrogroup.order() == 32);
    CHECK(verify_axioms(k3.gyrogroup.table()).valid);
    CHECK_FALSE(k3.gyrogroup.is_degenerate());
    CHECK(fixture_doubling("K3").base().table() == k2.gyrogroup.table());
}

TEST_CASE("cap")
{
    CHECK_THROWS_AS(fixture("K3", 2), CapExceeded);
    CHECK_THROWS_AS(fixture("K7"), CapExceeded);
    CHECK_THROWS_AS(fixture_doubling("K1"), UnknownFixture);
}

TEST_CASE("checksum detects a changed entry")
{
    auto rows = reference::kK1;
    rows[6][5] = 3;
    CHECK(table_checksum(testing::table_of(rows)) != table_checksum(k1_table()));
}

TEST_CASE("golden normals")
{
    const auto k1 = golden_normals("K1");
    CHECK(k1.sets.size() == 6);
    CHECK(k1.nondegenerate == std::vector<bool>{false, false, false, false, false, true});

    const auto k2 = golden_normals("K2");
    REQUIRE(k2.sets.size() == 19);
    std::vector<std::set<int>> sets;
    for (const auto& s : k2.sets) sets.push_back(testing::as_set(s));
    auto expected_sets = testing::sets_of(reference::kK2Normals);
    auto golden_sorted = sets;
    std::sort(expected_sets.begin(), expected_sets.end());
    std::sort(golden_sorted.begin(), golden_sorted.end());
    CHECK(golden_sorted == expected_sets);
    CHECK(std::count(sets.begin(), sets.end(), std::set<int>{0, 9}) == 1);
    CHECK(std::count(sets.begin(), sets.end(), std::set<int>{0, 1, 6, 7, 10, 11, 12, 13}) == 1);

    CHECK_THROWS_AS(golden_normals("K3"), NoGoldenData);
}

TEST_CASE("golden nondegeneracy flags match induced subgyrogroups")
{
    const auto nondegenerate = testing::sets_of(reference::kK2Nondegenerate);
    for (const char* name : {"K1", "K2"}) {
        const auto golden = golden_normals(name);
        const auto g = fixture(name).gyrogroup;
        for (std::size_t i = 0; i < golden.sets.size(); ++i) {
            const auto sub = induced_subgyrogroup(g, golden.sets[i]);
            CHECK(golden.nondegenerate[i] == !sub.is_degenerate());
            const auto members = golden.sets[i].elements();
            const auto rows = oracle::restrict(oracle::to_rows(g.table()),
                                               std::vector<int>(members.begin(), members.end()));
            CHECK(golden.nondegenerate[i] == !testing::table_of(rows).is_associative());
            if (std::string(name) == "K2") {
                const bool marked =
                    std::count(nondegenerate.begin(), nondegenerate.end(), testing::as_set(golden.sets[i])) == 1;
                CHECK(golden.nondegenerate[i] == marked);
            }
        }
    }
}
