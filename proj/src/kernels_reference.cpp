#include <string>

#include "gyro/kernels.hpp"

namespace gyro::kernels::reference {

std::vector<Element> gyrator_images(const CayleyTable& table, std::span<const Element> left_inverse)
{
    const auto n = table.order();
    std::vector<Element> out;
    out.reserve(n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                out.push_back(table(left_inverse[table(a, b)], table(a, table(b, c))));
            }
        }
    }
    return out;
}

FailureScan gyroassociativity_failures(const CayleyTable& table, std::span<const Element> gyr_images)
{
    const auto n = table.order();
    FailureScan scan;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                const auto lhs = table(a, table(b, c));
                const auto rhs = table(table(a, b), gyr_images[(a * n + b) * n + c]);
                if (lhs != rhs) {
                    if (scan.count == 0) {
                        scan.first = {static_cast<Element>(a), static_cast<Element>(b),
                                      static_cast<Element>(c)};
                    }
                    ++scan.count;
                }
            }
        }
    }
    return scan;
}

std::vector<std::optional<std::pair<Element, Element>>> automorphism_failures(
    const CayleyTable& table, std::span<const Permutation> perms)
{
    const auto n = table.order();
    std::vector<std::optional<std::pair<Element, Element>>> out;
    for (const auto& p : perms) {
        std::optional<std::pair<Element, Element>> witness;
        if (p.size() == n) {
            for (std::size_t x = 0; x < n && !witness; ++x) {
                for (std::size_t y = 0; y < n && !witness; ++y) {
                    if (p(table(x, y)) != table(p(x), p(y))) {
                        witness = std::pair{static_cast<Element>(x), static_cast<Element>(y)};
                    }
                }
            }
        }
        out.push_back(witness);
    }
    return out;
}

std::vector<std::uint32_t> closed_subsets(const CayleyTable& table, Element identity)
{
    const auto n = table.order();
    if (n > kMaxScanOrder) {
        throw OrderTooLarge("full subset scan needs order <= " + std::to_string(kMaxScanOrder));
    }
    std::vector<std::uint32_t> out;
    const std::uint32_t id_bit = std::uint32_t{1} << identity;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto s = static_cast<std::uint32_t>(mask);
        if ((s & id_bit) == 0) continue;
        bool closed = true;
        for (std::size_t a = 0; a < n && closed; ++a) {
            if (((s >> a) & 1u) == 0) continue;
            for (std::size_t b = 0; b < n && closed; ++b) {
                if (((s >> b) & 1u) == 0) continue;
                closed = ((s >> table(a, b)) & 1u) != 0;
            }
        }
        if (closed) out.push_back(s);
    }
    return out;
}

std::vector<std::uint8_t> triple_coset_equal(const CayleyTable& table,
                                             std::span<const ElementSubset> subsets)
{
    const auto n = table.order();
    std::vector<std::uint8_t> flags;
    for (const auto& h : subsets) {
        bool normal = true;
        for (std::size_t a = 0; a < n && normal; ++a) {
            for (std::size_t b = 0; b < n && normal; ++b) {
                ElementSubset first(n), second(n), third(n);
                h.for_each([&](Element x) {
                    first.insert(table(a, table(x, b)));
                    second.insert(table(table(a, b), x));
                    third.insert(table(table(a, x), b));
                });
                normal = first == second && second == third;
            }
        }
        flags.push_back(normal ? 1 : 0);
    }
    return flags;
}

}  // namespace gyro::kernels::reference
