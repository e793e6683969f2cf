#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/doubling.hpp"
#include "gyro/gyrogroup.hpp"
#include "gyro/subset.hpp"

namespace gyro::catalog {

class UnknownFixture : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class NoGoldenData : public Error {
public:
    using Error::Error;
};

/// Default largest fixture index: K6 has order 256.
inline constexpr unsigned kDefaultCap = 6;

struct Fixture {
    std::string name;
    FiniteGyrogroup gyrogroup;
    std::string provenance;
};

/// "K<n>" -> n; throws UnknownFixture.
unsigned parse_fixture_name(std::string_view name);

/// K1 is the embedded order-8 table; K(n) is the canonical double of K(n-1).
Fixture fixture(std::string_view name, unsigned cap = kDefaultCap);

/// K(n) for n >= 2 as the double of K(n-1), with its plus/minus structure.
DoubledGyrogroup fixture_doubling(std::string_view name, unsigned cap = kDefaultCap);

/// The embedded K1 table, checked against its stored checksum.
const CayleyTable& k1_table();

/// FNV-1a over the order and the entries in row-major order.
std::uint64_t table_checksum(const CayleyTable& table);

struct GoldenNormals {
    std::string name;
    std::vector<ElementSubset> sets;   ///< canonical order
    std::vector<bool> nondegenerate;   ///< parallel to sets
};

/// Golden normal subgyrogroups of K1 and K2; throws NoGoldenData otherwise.
GoldenNormals golden_normals(std::string_view name);

}  // namespace gyro::catalog
