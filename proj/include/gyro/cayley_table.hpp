#pragma once

#include <span>
#include <vector>

#include "gyro/types.hpp"

namespace gyro {

/// An n x n operation table stored row-major. Entries are not range-checked on
/// construction; verify_axioms reports out-of-range entries.
class CayleyTable {
public:
    CayleyTable() = default;
    /// Throws OrderTooLarge for n == 0 or n > kMaxOrder and LengthMismatch if
    /// entries.size() != n * n.
    CayleyTable(std::size_t order, std::vector<Element> entries);

    static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows);

    std::size_t order() const { return order_; }
    Element operator()(std::size_t a, std::size_t b) const { return entries_[a * order_ + b]; }
    /// Range-checked lookup.
    Element at(std::size_t a, std::size_t b) const;

    std::span<const Element> row(std::size_t a) const
    {
        return {entries_.data() + a * order_, order_};
    }
    std::span<const Element> entries() const { return entries_; }

    bool entries_in_range() const;
    bool is_associative() const;

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

private:
    std::size_t order_ = 0;
    std::vector<Element> entries_;
};

}  // namespace gyro
