#include "gyro/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace gyro::catalog {

namespace {

// The order-8 gyrogroup K(1); its gyrations are the identity and (4,5)(6,7).
constexpr Element kK1[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 3, 2, 1, 0},
    {7, 6, 5, 4, 2, 3, 0, 1},
};
constexpr std::uint64_t kK1Checksum = 0xadbc296f82ef9935ULL;

struct GoldenEntry {
    std::vector<Element> elements;
    bool nondegenerate;
};

// Reference order; nondegenerate marks the sets that are not groups.
const std::vector<GoldenEntry>& k1_golden()
{
    static const std::vector<GoldenEntry> data = {
        {{0}, false},
        {{0, 1}, false},
        {{0, 1, 2, 3}, false},
        {{0, 1, 4, 5}, false},
        {{0, 1, 6, 7}, false},
        {{0, 1, 2, 3, 4, 5, 6, 7}, true},
    };
    return data;
}

const std::vector<GoldenEntry>& k2_golden()
{
    static const std::vector<GoldenEntry> data = {
        {{0}, false},
        {{0, 1}, false},
        {{0, 1, 2, 3}, false},
        {{0, 1, 4, 5}, false},
        {{0, 1, 6, 7}, false},
        {{0, 1, 2, 3, 4, 5, 6, 7}, true},
        {{0, 8}, false},
        {{0, 9}, false},
        {{0, 1, 8, 9}, false},
        {{0, 1, 10, 11}, false},
        {{0, 1, 12, 13}, false},
        {{0, 1, 14, 15}, false},
        {{0, 1, 2, 3, 8, 9, 10, 11}, false},
        {{0, 1, 2, 3, 12, 13, 14, 15}, true},
        {{0, 1, 4, 5, 8, 9, 12, 13}, false},
        {{0, 1, 4, 5, 10, 11, 14, 15}, true},
        {{0, 1, 6, 7, 8, 9, 14, 15}, false},
        {{0, 1, 6, 7, 10, 11, 12, 13}, true},
        {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}, true},
    };
    return data;
}

}  // namespace

std::uint64_t table_checksum(const CayleyTable& table)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t v) {
        for (int i = 0; i < 2; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 0x100000001b3ULL;
        }
    };
    mix(table.order());
    for (auto x : table.entries()) mix(x);
    return h;
}

const CayleyTable& k1_table()
{
    static const CayleyTable table = [] {
        std::vector<Element> entries;
        for (const auto& row : kK1) entries.insert(entries.end(), std::begin(row), std::end(row));
        CayleyTable t(8, std::move(entries));
        if (table_checksum(t) != kK1Checksum) throw Error("embedded K1 table fails its checksum");
        return t;
    }();
    return table;
}

unsigned parse_fixture_name(std::string_view name)
{
    unsigned index = 0;
    if (name.size() < 2 || (name[0] != 'K' && name[0] != 'k')) {
        throw UnknownFixture("unknown fixture '" + std::string(name) + "' (expected K<n>)");
    }
    const auto* first = name.data() + 1;
    const auto* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc{} || ptr != last || index == 0) {
        throw UnknownFixture("unknown fixture '" + std::string(name) + "' (expected K<n>, n >= 1)");
    }
    return index;
}

Fixture fixture(std::string_view name, unsigned cap)
{
    const auto index = parse_fixture_name(name);
    if (index > cap) {
        throw CapExceeded("fixture K" + std::to_string(index) + " exceeds the cap K" + std::to_string(cap));
    }
    if (index == 1) return {"K1", FiniteGyrogroup::construct(k1_table()), "embedded order-8 table"};
    auto d = fixture_doubling(name, cap);
    return {"K" + std::to_string(index), d.whole(), "iterated doubling of K1"};
}

DoubledGyrogroup fixture_doubling(std::string_view name, unsigned cap)
{
    const auto index = parse_fixture_name(name);
    if (index > cap) {
        throw CapExceeded("fixture K" + std::to_string(index) + " exceeds the cap K" + std::to_string(cap));
    }
    if (index < 2) throw UnknownFixture("K1 is not a doubled gyrogroup");
    auto d = double_gyrogroup(FiniteGyrogroup::construct(k1_table()));
    for (unsigned k = 3; k <= index; ++k) d = double_gyrogroup(d.whole());
    return d;
}

GoldenNormals golden_normals(std::string_view name)
{
    const std::vector<GoldenEntry>* data = nullptr;
    std::size_t order = 0;
    if (name == "K1") {
        data = &k1_golden();
        order = 8;
    } else if (name == "K2") {
        data = &k2_golden();
        order = 16;
    } else {
        throw NoGoldenData("no golden normal subgyrogroups for '" + std::string(name) + "'");
    }

    std::vector<std::size_t> idx(data->size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<ElementSubset> sets;
    for (const auto& entry : *data) sets.emplace_back(order, entry.elements);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return canonical_less(sets[a], sets[b]); });

    GoldenNormals out{std::string(name), {}, {}};
    for (auto i : idx) {
        out.sets.push_back(sets[i]);
        out.nondegenerate.push_back((*data)[i].nondegenerate);
    }
    return out;
}

}  // namespace gyro::catalog
