#pragma once

// Hot loops of the library. Every kernel has an OpenMP implementation and a
// plain serial reference implementation (namespace `reference`) written as
// directly as possible; the tests check that both agree and the benchmark
// compares them. Results never depend on the number of threads.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gyro/cayley_table.hpp"
#include "gyro/permutation.hpp"
#include "gyro/subset.hpp"

namespace gyro {

enum class Execution { serial, parallel };

namespace kernels {

/// Largest order for which every subset containing the identity is scanned.
inline constexpr std::size_t kMaxScanOrder = 24;

/// Number of failing instances plus the lexicographically smallest witness.
struct FailureScan {
    std::size_t count = 0;
    std::vector<Element> first;

    bool any() const { return count != 0; }
    friend bool operator==(const FailureScan&, const FailureScan&) = default;
};

/// Gyrator images: out[(a*n + b)*n + c] = inv[a+b] + (a + (b + c)), where +
/// is the table operation and inv[x] a left inverse of x.
std::vector<Element> gyrator_images(const CayleyTable& table, std::span<const Element> left_inverse);

/// Triples (a,b,c) with a+(b+c) != (a+b)+g[a,b](c), where g are gyrator images.
FailureScan gyroassociativity_failures(const CayleyTable& table, std::span<const Element> gyr_images);

/// For each permutation, the smallest (x,y) with p(x+y) != p(x)+p(y), if any.
std::vector<std::optional<std::pair<Element, Element>>> automorphism_failures(
    const CayleyTable& table, std::span<const Permutation> perms);

/// Bit masks of all subsets that contain `identity` and are closed under the
/// operation, in increasing numeric order. Requires order <= kMaxScanOrder.
std::vector<std::uint32_t> closed_subsets(const CayleyTable& table, Element identity);

/// flags[i] = 1 iff a+(H+b), (a+b)+H and (a+H)+b coincide for all a, b, with
/// H = subsets[i].
std::vector<std::uint8_t> triple_coset_equal(const CayleyTable& table,
                                             std::span<const ElementSubset> subsets);

namespace reference {

std::vector<Element> gyrator_images(const CayleyTable& table, std::span<const Element> left_inverse);
FailureScan gyroassociativity_failures(const CayleyTable& table, std::span<const Element> gyr_images);
std::vector<std::optional<std::pair<Element, Element>>> automorphism_failures(
    const CayleyTable& table, std::span<const Permutation> perms);
std::vector<std::uint32_t> closed_subsets(const CayleyTable& table, Element identity);
std::vector<std::uint8_t> triple_coset_equal(const CayleyTable& table,
                                             std::span<const ElementSubset> subsets);

}  // namespace reference

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace kernels
}  // namespace gyro
