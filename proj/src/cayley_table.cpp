#include "gyro/cayley_table.hpp"

#include <string>

namespace gyro {

CayleyTable::CayleyTable(std::size_t order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries))
{
    if (order == 0 || order > kMaxOrder) {
        throw OrderTooLarge("table order " + std::to_string(order) + " outside [1, " +
                            std::to_string(kMaxOrder) + "]");
    }
    if (entries_.size() != order * order) {
        throw LengthMismatch("table of order " + std::to_string(order) + " needs " +
                             std::to_string(order * order) + " entries, got " +
                             std::to_string(entries_.size()));
    }
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Element>>& rows)
{
    std::vector<Element> entries;
    entries.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw LengthMismatch("table rows must have length n");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return CayleyTable(rows.size(), std::move(entries));
}

Element CayleyTable::at(std::size_t a, std::size_t b) const
{
    if (a >= order_ || b >= order_) {
        throw IndexOutOfRange("(" + std::to_string(a) + "," + std::to_string(b) +
                              ") outside table of order " + std::to_string(order_));
    }
    return (*this)(a, b);
}

bool CayleyTable::entries_in_range() const
{
    for (auto x : entries_) {
        if (x >= order_) return false;
    }
    return true;
}

bool CayleyTable::is_associative() const
{
    for (std::size_t a = 0; a < order_; ++a) {
        for (std::size_t b = 0; b < order_; ++b) {
            const auto ab = (*this)(a, b);
            for (std::size_t c = 0; c < order_; ++c) {
                if ((*this)(ab, c) != (*this)(a, (*this)(b, c))) return false;
            }
        }
    }
    return true;
}

}  // namespace gyro
