#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gyro/cayley_table.hpp"
#include "gyro/kernels.hpp"

namespace gyro {

/// Axiom families, in the order verify_axioms checks them.
enum class Axiom {
    OutOfRangeEntry,        ///< witness (a, b): entry (a, b) is not below n
    NoLeftIdentity,         ///< no witness
    DuplicateLeftIdentity,  ///< witness (e1, e2): two left identities
    MissingLeftInverse,     ///< witness (a): no b with b + a = e
    DuplicateLeftInverse,   ///< witness (a, b1, b2): two left inverses of a
    GyrNotBijective,        ///< witness (a, b)
    GyrNotAutomorphism,     ///< witness (a, b, x, y): gyr[a,b](x+y) != gyr[a,b]x + gyr[a,b]y
    GyroassociativityFails, ///< witness (a, b, c)
    LeftLoopFails,          ///< witness (a, b): gyr[a,b] != gyr[a+b, b]
};

std::string_view axiom_name(Axiom axiom);

/// One violated axiom family. `witness` is the lexicographically smallest
/// failing tuple; `occurrences` counts failing tuples, except for
/// GyrNotAutomorphism where it counts failing (a, b) pairs.
struct Violation {
    Axiom axiom;
    std::vector<Element> witness;
    std::size_t occurrences = 1;

    std::string describe() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;

    const Violation* find(Axiom axiom) const;
    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Exhaustive O(n^3) check that `table` defines a gyrogroup, with gyrations
/// derived from the table by the gyrator identity
///   gyr[a,b](c) = -(a+b) + (a + (b + c)).
/// Checks stop early when a later family cannot be evaluated (no identity,
/// missing inverses, out-of-range entries).
ValidationReport verify_axioms(const CayleyTable& table, Execution exec = Execution::parallel);

}  // namespace gyro
