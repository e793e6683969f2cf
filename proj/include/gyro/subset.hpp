#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gyro/types.hpp"

namespace gyro {

/// A subset of the elements {0, ..., n-1} of a gyrogroup of order n, stored as
/// a fixed-width bit vector. Two subsets only compare equal if they live in
/// ambient sets of the same order.
class ElementSubset {
public:
    static constexpr std::size_t kWords = kMaxOrder / 64;

    ElementSubset() = default;
    explicit ElementSubset(std::size_t order);
    ElementSubset(std::size_t order, std::initializer_list<Element> elements);
    ElementSubset(std::size_t order, std::span<const Element> elements);

    static ElementSubset full(std::size_t order);
    /// Subset whose bit i is bit i of `mask`; requires order <= 64.
    static ElementSubset from_mask(std::size_t order, std::uint64_t mask);

    std::size_t order() const { return order_; }

    bool contains(std::size_t e) const
    {
        return e < order_ && ((words_[e >> 6] >> (e & 63)) & 1u) != 0;
    }
    void insert(std::size_t e);
    void erase(std::size_t e);

    std::size_t size() const
    {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    bool empty() const { return size() == 0; }

    /// Smallest element; the subset must be nonempty.
    Element min() const;
    std::vector<Element> elements() const;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                f(static_cast<Element>(w * 64 + bit));
                bits &= bits - 1;
            }
        }
    }

    std::uint64_t word(std::size_t i) const { return words_[i]; }

    bool is_subset_of(const ElementSubset& other) const;
    bool intersects(const ElementSubset& other) const;

    ElementSubset operator|(const ElementSubset& other) const;
    ElementSubset operator&(const ElementSubset& other) const;
    /// Set difference.
    ElementSubset operator-(const ElementSubset& other) const;
    ElementSubset& operator|=(const ElementSubset& other);

    friend bool operator==(const ElementSubset&, const ElementSubset&) = default;

    /// "{a,b,c}" in ascending order.
    std::string to_string() const;

private:
    void require_same_order(const ElementSubset& other) const;

    std::size_t order_ = 0;
    std::array<std::uint64_t, kWords> words_{};
};

/// Canonical output order: by size, then lexicographically on the ascending
/// element lists.
bool canonical_less(const ElementSubset& a, const ElementSubset& b);

/// Sorts canonically and removes duplicates.
void canonicalize(std::vector<ElementSubset>& sets);

struct ElementSubsetHash {
    std::size_t operator()(const ElementSubset& s) const noexcept;
};

}  // namespace gyro
