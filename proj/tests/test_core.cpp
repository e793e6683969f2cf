#include "doctest.h"

#include "gyro/axioms.hpp"
#include "gyro/gyrogroup.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace gyro;
using testing::gyrogroup_of;
using testing::table_of;

namespace {

std::vector<std::vector<int>> corrupted_k1()
{
    auto rows = reference::kK1;
    rows[6][5] = 3;
    return rows;
}

}  // namespace

TEST_CASE("K1 passes every axiom family")
{
    const auto report = verify_axioms(table_of(reference::kK1));
    CHECK(report.valid);
    CHECK(report.violations.empty());
}

TEST_CASE("Z2 is a degenerate gyrogroup with trivial gyrations")
{
    const auto report = verify_axioms(table_of({{0, 1}, {1, 0}}));
    CHECK(report.valid);
    const auto g = gyrogroup_of({{0, 1}, {1, 0}});
    CHECK(g.is_degenerate());
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) CHECK(g.gyr(a, b).is_identity());
    }
}

TEST_CASE("corrupted K1 is rejected with stable witnesses")
{
    // Entry (6,5) changed from 2 to 3. Witnesses recorded from the first run
    // and checked against the brute-force oracle below.
    const auto report = verify_axioms(table_of(corrupted_k1()));
    REQUIRE_FALSE(report.valid);
    REQUIRE(report.violations.size() == 4);
    CHECK(report.violations[0] == Violation{Axiom::GyrNotBijective, {0, 6}, 21});
    CHECK(report.violations[1] == Violation{Axiom::GyrNotAutomorphism, {2, 4, 6, 5}, 12});
    CHECK(report.violations[2] == Violation{Axiom::GyroassociativityFails, {0, 7, 2}, 14});
    CHECK(report.violations[3] == Violation{Axiom::LeftLoopFails, {0, 6}, 21});
    CHECK_FALSE(oracle::is_gyrogroup(corrupted_k1()));
    CHECK_THROWS_AS(FiniteGyrogroup::construct(table_of(corrupted_k1())), InvalidGyrogroup);
}

TEST_CASE("verifier reports structural failures in check order")
{
    SUBCASE("out of range entry stops the scan")
    {
        const CayleyTable t(2, {0, 1, 1, 2});
        const auto r = verify_axioms(t);
        REQUIRE(r.violations.size() == 1);
        CHECK(r.violations[0] == Violation{Axiom::OutOfRangeEntry, {1, 1}, 1});
    }
    SUBCASE("no left identity")
    {
        const auto r = verify_axioms(table_of({{1, 0}, {0, 0}}));
        REQUIRE(r.violations.size() == 1);
        CHECK(r.violations[0].axiom == Axiom::NoLeftIdentity);
    }
    SUBCASE("duplicate left identity is reported, leftmost kept")
    {
        // Left-zero-like table x*y = y has every element as left identity.
        const auto r = verify_axioms(table_of({{0, 1}, {0, 1}}));
        REQUIRE_FALSE(r.valid);
        REQUIRE(r.find(Axiom::DuplicateLeftIdentity) != nullptr);
        CHECK(r.find(Axiom::DuplicateLeftIdentity)->witness == std::vector<Element>{0, 1});
    }
    SUBCASE("missing left inverse")
    {
        const auto r = verify_axioms(table_of({{0, 1, 2}, {1, 1, 1}, {2, 1, 2}}));
        REQUIRE_FALSE(r.valid);
        CHECK(r.violations.back() == Violation{Axiom::MissingLeftInverse, {1}, 2});
    }
}

TEST_CASE("evaluate and left_inverse on K1 and K2")
{
    const auto k1 = gyrogroup_of(reference::kK1);
    const auto k2 = gyrogroup_of(reference::kK2);
    CHECK(k1.identity() == 0);
    CHECK(k2.identity() == 0);
    CHECK(k1.evaluate(2, 4) == 6);
    CHECK(k1.evaluate(0, 5) == 5);
    CHECK(k2.evaluate(12, 13) == 1);
    CHECK_THROWS_AS(k1.evaluate(8, 0), IndexOutOfRange);
    CHECK(k1.left_inverse(6) == 7);
    CHECK(k1.left_inverse(0) == 0);
    CHECK(k1.left_inverse(2) == 2);
    CHECK_THROWS_AS(k1.left_inverse(9), IndexOutOfRange);
}

TEST_CASE("trivial gyrogroup")
{
    const auto g = gyrogroup_of({{0}});
    CHECK(g.order() == 1);
    CHECK(g.identity() == 0);
    CHECK(g.is_degenerate());
}

TEST_CASE("identity need not be index 0")
{
    // Z2 with the identity stored at index 1.
    const auto g = gyrogroup_of({{1, 0}, {0, 1}});
    CHECK(g.identity() == 1);
    CHECK(g.left_inverse(0) == 0);
}

TEST_CASE("gyrations of K1")
{
    const auto g = gyrogroup_of(reference::kK1);
    CHECK(g.gyration(2, 4) == reference::k1_a());
    CHECK(g.gyration(2, 4)(4) == 5);
    // gyr[2,4](4) = -(2+4) + (2 + (4+4)) = 7 + 2 = 5
    CHECK(g.op(g.left_inverse(g.op(2, 4)), g.op(2, g.op(4, 4))) == 5);
    for (std::size_t b = 0; b < 8; ++b) CHECK(g.gyration(0, b).is_identity());
    CHECK(g.distinct_gyrations().size() == 2);
}

TEST_CASE("gyrator identity agrees with searched gyrations on every fixture pair")
{
    for (const auto* rows : {&reference::kK1, &reference::kK2}) {
        const auto g = gyrogroup_of(*rows);
        const auto n = g.order();
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                const auto searched = oracle::searched_gyration(*rows, static_cast<int>(a), static_cast<int>(b));
                REQUIRE(searched.has_value());
                std::vector<Element> images(searched->begin(), searched->end());
                CHECK(g.gyr(a, b) == Permutation(images));
                CHECK(g.gyration(a, b) == g.gyr(a, b));
            }
        }
    }
}

TEST_CASE("is_automorphism")
{
    const auto g = gyrogroup_of(reference::kK1);
    CHECK(g.is_automorphism(reference::k1_a()));
    CHECK(g.is_automorphism(Permutation::identity(8)));
    CHECK_FALSE(g.is_automorphism(Permutation::from_cycles(8, {{0, 1}})));
    CHECK_THROWS_AS(g.is_automorphism(Permutation::identity(4)), LengthMismatch);
}

TEST_CASE("degeneracy matches associativity")
{
    for (const auto& rows : {reference::kK1, reference::kK2, testing::cyclic(5), testing::s3()}) {
        const auto g = gyrogroup_of(rows);
        CHECK(g.is_degenerate() == g.table().is_associative());
    }
    CHECK_FALSE(gyrogroup_of(reference::kK1).is_degenerate());
    CHECK_FALSE(gyrogroup_of(reference::kK2).is_degenerate());
    CHECK(gyrogroup_of(testing::s3()).is_degenerate());
}

TEST_CASE("structural invariants of validated fixtures")
{
    for (const auto& rows : {reference::kK1, reference::kK2, testing::s3()}) {
        const auto g = gyrogroup_of(rows);
        const auto n = g.order();
        const auto e = g.identity();
        for (std::size_t a = 0; a < n; ++a) {
            CHECK(g.op(e, a) == a);
            CHECK(g.op(g.left_inverse(a), a) == e);
            CHECK(g.op(a, e) == a);
            CHECK(g.op(a, g.left_inverse(a)) == e);
            std::vector<Element> row(n), column(n);
            for (std::size_t b = 0; b < n; ++b) {
                row[b] = g.op(a, b);
                column[b] = g.op(b, a);
            }
            CHECK(Permutation::is_bijection(row));
            CHECK(Permutation::is_bijection(column));
            for (std::size_t b = 0; b < n; ++b) {
                CHECK(g.is_automorphism(g.gyr(a, b)));
                CHECK(g.gyration_id(a, b) == g.gyration_id(g.op(a, b), b));
            }
        }
    }
}

TEST_CASE("serial and parallel verification agree")
{
    for (const auto& rows : {reference::kK1, reference::kK2, corrupted_k1(), testing::s3()}) {
        const auto t = table_of(rows);
        CHECK(verify_axioms(t, Execution::serial) == verify_axioms(t, Execution::parallel));
    }
}

TEST_CASE("labels must match the order")
{
    CHECK_THROWS_AS(FiniteGyrogroup::construct(table_of({{0}}), {"a", "b"}), LengthMismatch);
    const auto g = FiniteGyrogroup::construct(table_of({{0, 1}, {1, 0}}), {"e", "x"});
    CHECK(g.label(1) == "x");
}
