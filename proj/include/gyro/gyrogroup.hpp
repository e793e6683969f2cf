#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gyro/axioms.hpp"
#include "gyro/cayley_table.hpp"
#include "gyro/permutation.hpp"

namespace gyro {

class InvalidGyrogroup : public Error {
public:
    explicit InvalidGyrogroup(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// A validated finite gyrogroup. Immutable after construction, so concurrent
/// reads are safe.
///
/// Gyrations are precomputed from the table and stored deduplicated: each
/// pair (a, b) maps to an index into distinct_gyrations().
class FiniteGyrogroup {
public:
    /// Validates `table` with verify_axioms; throws InvalidGyrogroup on failure.
    /// `labels` is either empty or has one display name per element.
    static FiniteGyrogroup construct(CayleyTable table, std::vector<std::string> labels = {},
                                     Execution exec = Execution::parallel);

    std::size_t order() const { return table_.order(); }
    Element identity() const { return identity_; }
    const CayleyTable& table() const { return table_; }

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(Element e) const;

    /// Unchecked a + b.
    Element op(std::size_t a, std::size_t b) const { return table_(a, b); }
    /// Range-checked a + b; throws IndexOutOfRange.
    Element evaluate(std::size_t a, std::size_t b) const { return table_.at(a, b); }

    Element left_inverse(std::size_t a) const;
    std::span<const Element> left_inverses() const { return inverse_; }

    /// Cached gyr[a,b].
    const Permutation& gyr(std::size_t a, std::size_t b) const
    {
        return gyrations_[gyr_index_[a * order() + b]];
    }
    std::uint32_t gyration_id(std::size_t a, std::size_t b) const
    {
        return gyr_index_[a * order() + b];
    }
    std::span<const Permutation> distinct_gyrations() const { return gyrations_; }

    /// gyr[a,b] recomputed from the table: c -> -(a+b) + (a + (b + c)).
    Permutation gyration(std::size_t a, std::size_t b) const;

    /// True iff p is a bijection with p(x+y) = p(x)+p(y); throws LengthMismatch.
    bool is_automorphism(const Permutation& p) const;

    /// True iff every gyration is the identity, i.e. the gyrogroup is a group.
    bool is_degenerate() const;

    friend bool operator==(const FiniteGyrogroup& a, const FiniteGyrogroup& b)
    {
        return a.table_ == b.table_;
    }

private:
    FiniteGyrogroup() = default;

    CayleyTable table_;
    Element identity_ = 0;
    std::vector<Element> inverse_;
    std::vector<Permutation> gyrations_;
    std::vector<std::uint32_t> gyr_index_;
    std::vector<std::string> labels_;
};

}  // namespace gyro
