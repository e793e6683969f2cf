#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "gyro/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gyro::kernels {

namespace {

using Ptrdiff = std::ptrdiff_t;

// Chunk count for the subset scan; fixed so the merge order never depends on
// the thread count.
constexpr std::size_t kScanChunks = 256;

}  // namespace

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<Element> gyrator_images(const CayleyTable& table, std::span<const Element> left_inverse)
{
    const auto n = table.order();
    std::vector<Element> out(n * n * n);
#pragma omp parallel for schedule(static)
    for (Ptrdiff ai = 0; ai < static_cast<Ptrdiff>(n); ++ai) {
        const auto a = static_cast<std::size_t>(ai);
        const auto row_a = table.row(a);
        for (std::size_t b = 0; b < n; ++b) {
            const auto row_b = table.row(b);
            const auto row_inv = table.row(left_inverse[row_a[b]]);
            Element* dst = out.data() + (a * n + b) * n;
            for (std::size_t c = 0; c < n; ++c) dst[c] = row_inv[row_a[row_b[c]]];
        }
    }
    return out;
}

FailureScan gyroassociativity_failures(const CayleyTable& table, std::span<const Element> gyr_images)
{
    const auto n = table.order();
    std::vector<std::size_t> counts(n, 0);
    std::vector<std::array<Element, 2>> first(n);
#pragma omp parallel for schedule(static)
    for (Ptrdiff ai = 0; ai < static_cast<Ptrdiff>(n); ++ai) {
        const auto a = static_cast<std::size_t>(ai);
        const auto row_a = table.row(a);
        std::size_t count = 0;
        for (std::size_t b = 0; b < n; ++b) {
            const auto row_ab = table.row(row_a[b]);
            const auto row_b = table.row(b);
            const Element* g = gyr_images.data() + (a * n + b) * n;
            for (std::size_t c = 0; c < n; ++c) {
                if (row_a[row_b[c]] != row_ab[g[c]]) {
                    if (count == 0) first[a] = {static_cast<Element>(b), static_cast<Element>(c)};
                    ++count;
                }
            }
        }
        counts[a] = count;
    }
    FailureScan scan;
    for (std::size_t a = 0; a < n; ++a) {
        if (counts[a] != 0 && scan.count == 0) {
            scan.first = {static_cast<Element>(a), first[a][0], first[a][1]};
        }
        scan.count += counts[a];
    }
    return scan;
}

std::vector<std::optional<std::pair<Element, Element>>> automorphism_failures(
    const CayleyTable& table, std::span<const Permutation> perms)
{
    const auto n = table.order();
    std::vector<std::optional<std::pair<Element, Element>>> out(perms.size());
#pragma omp parallel for schedule(dynamic)
    for (Ptrdiff pi = 0; pi < static_cast<Ptrdiff>(perms.size()); ++pi) {
        const auto& p = perms[static_cast<std::size_t>(pi)];
        if (p.size() != n) continue;
        for (std::size_t x = 0; x < n && !out[pi]; ++x) {
            const auto row_x = table.row(x);
            const auto row_px = table.row(p(x));
            for (std::size_t y = 0; y < n; ++y) {
                if (p(row_x[y]) != row_px[p(y)]) {
                    out[pi] = std::pair{static_cast<Element>(x), static_cast<Element>(y)};
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<std::uint32_t> closed_subsets(const CayleyTable& table, Element identity)
{
    const auto n = table.order();
    if (n > kMaxScanOrder) {
        throw OrderTooLarge("full subset scan needs order <= " + std::to_string(kMaxScanOrder));
    }
    // image[a][k][byte] = mask of a + b over the b encoded by `byte` in chunk k.
    constexpr std::size_t kChunks = (kMaxScanOrder + 7) / 8;
    std::vector<std::array<std::array<std::uint32_t, 256>, kChunks>> image(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t k = 0; k < kChunks; ++k) {
            image[a][k][0] = 0;
            for (std::size_t byte = 1; byte < 256; ++byte) {
                const auto low = static_cast<std::size_t>(std::countr_zero(byte));
                const auto b = k * 8 + low;
                const std::uint32_t bit = b < n ? (std::uint32_t{1} << table(a, b)) : 0;
                image[a][k][byte] = image[a][k][byte & (byte - 1)] | bit;
            }
        }
    }

    // Enumerate the free bits (all but the identity) as a counter and splice
    // the identity bit in.
    const std::size_t free_bits = n - 1;
    const std::uint64_t total = std::uint64_t{1} << free_bits;
    const std::uint64_t chunk_span = (total + kScanChunks - 1) / kScanChunks;
    const std::uint32_t id_bit = std::uint32_t{1} << identity;
    const std::uint32_t low_mask = id_bit - 1;

    std::vector<std::vector<std::uint32_t>> found(kScanChunks);
#pragma omp parallel for schedule(dynamic)
    for (Ptrdiff ci = 0; ci < static_cast<Ptrdiff>(kScanChunks); ++ci) {
        const auto chunk = static_cast<std::uint64_t>(ci);
        const std::uint64_t begin = chunk * chunk_span;
        const std::uint64_t end = std::min(total, begin + chunk_span);
        auto& local = found[static_cast<std::size_t>(ci)];
        for (std::uint64_t free = begin; free < end; ++free) {
            const auto f = static_cast<std::uint32_t>(free);
            const std::uint32_t s = (f & low_mask) | id_bit | ((f & ~low_mask) << 1);
            bool closed = true;
            std::uint32_t rest = s;
            while (rest != 0 && closed) {
                const auto a = static_cast<std::size_t>(std::countr_zero(rest));
                rest &= rest - 1;
                const auto& img = image[a];
                std::uint32_t prod = img[0][s & 0xffu];
                if constexpr (kChunks > 1) prod |= img[1][(s >> 8) & 0xffu];
                if constexpr (kChunks > 2) prod |= img[2][(s >> 16) & 0xffu];
                closed = (prod & ~s) == 0;
            }
            if (closed) local.push_back(s);
        }
    }

    std::vector<std::uint32_t> out;
    for (const auto& chunk : found) out.insert(out.end(), chunk.begin(), chunk.end());
    // The splice preserves numeric order, so `out` is already increasing.
    return out;
}

std::vector<std::uint8_t> triple_coset_equal(const CayleyTable& table,
                                             std::span<const ElementSubset> subsets)
{
    const auto n = table.order();
    std::vector<std::uint8_t> flags(subsets.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (Ptrdiff hi = 0; hi < static_cast<Ptrdiff>(subsets.size()); ++hi) {
        const auto& h = subsets[static_cast<std::size_t>(hi)];
        const auto members = h.elements();
        // left[a] = a + H, right[b] = H + b.
        std::vector<ElementSubset> left(n, ElementSubset(n)), right(n, ElementSubset(n));
        for (std::size_t x = 0; x < n; ++x) {
            for (auto m : members) {
                left[x].insert(table(x, m));
                right[x].insert(table(m, x));
            }
        }
        bool normal = true;
        for (std::size_t a = 0; a < n && normal; ++a) {
            for (std::size_t b = 0; b < n && normal; ++b) {
                const auto& ab_h = left[table(a, b)];
                ElementSubset a_hb(n), ah_b(n);
                right[b].for_each([&](Element y) { a_hb.insert(table(a, y)); });
                left[a].for_each([&](Element x) { ah_b.insert(table(x, b)); });
                normal = a_hb == ab_h && ah_b == ab_h;
            }
        }
        flags[static_cast<std::size_t>(hi)] = normal ? 1 : 0;
    }
    return flags;
}

}  // namespace gyro::kernels
