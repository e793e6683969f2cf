#pragma once

#include <set>
#include <vector>

#include "gyro/cayley_table.hpp"
#include "gyro/gyrogroup.hpp"
#include "gyro/subset.hpp"

namespace testing {

inline gyro::CayleyTable table_of(const std::vector<std::vector<int>>& rows)
{
    std::vector<std::vector<gyro::Element>> converted;
    for (const auto& r : rows) converted.emplace_back(r.begin(), r.end());
    return gyro::CayleyTable::from_rows(converted);
}

inline gyro::FiniteGyrogroup gyrogroup_of(const std::vector<std::vector<int>>& rows)
{
    return gyro::FiniteGyrogroup::construct(table_of(rows));
}

inline gyro::ElementSubset subset(std::size_t order, const std::vector<int>& elements)
{
    gyro::ElementSubset s(order);
    for (int e : elements) s.insert(static_cast<std::size_t>(e));
    return s;
}

inline std::set<int> as_set(const gyro::ElementSubset& s)
{
    std::set<int> out;
    s.for_each([&](gyro::Element e) { out.insert(e); });
    return out;
}

inline std::vector<std::set<int>> sets_of(const std::vector<std::vector<int>>& lists)
{
    std::vector<std::set<int>> out;
    for (const auto& l : lists) out.emplace_back(l.begin(), l.end());
    return out;
}

/// Cyclic group Z_n.
inline std::vector<std::vector<int>> cyclic(int n)
{
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
    }
    return rows;
}

/// Symmetric group S3 with elements as permutations in lexicographic order.
inline std::vector<std::vector<int>> s3()
{
    const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::vector<int>> rows(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            std::vector<int> c(3);
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            for (int k = 0; k < 6; ++k) {
                if (perms[k] == c) rows[a][b] = k;
            }
        }
    }
    return rows;
}

/// rows relabelled by sigma: new(sigma a, sigma b) = sigma(old(a, b)).
inline std::vector<std::vector<int>> relabel(const std::vector<std::vector<int>>& rows,
                                             const std::vector<int>& sigma)
{
    std::vector<std::vector<int>> out(rows.size(), std::vector<int>(rows.size()));
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = 0; b < rows.size(); ++b) out[sigma[a]][sigma[b]] = sigma[rows[a][b]];
    }
    return out;
}

}  // namespace testing
