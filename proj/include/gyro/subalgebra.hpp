#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gyro/gyrogroup.hpp"
#include "gyro/subset.hpp"

namespace gyro {

ElementSubset singleton(const FiniteGyrogroup& g, Element a);

/// { x + y : x in lhs, y in rhs }. An empty operand yields the empty set.
ElementSubset set_product(const FiniteGyrogroup& g, const ElementSubset& lhs, const ElementSubset& rhs);
ElementSubset set_product(const FiniteGyrogroup& g, Element lhs, const ElementSubset& rhs);
ElementSubset set_product(const FiniteGyrogroup& g, const ElementSubset& lhs, Element rhs);

/// Smallest superset of seed and {e} closed under + and left inverses.
ElementSubset closure(const FiniteGyrogroup& g, const ElementSubset& seed);

/// e in H, H closed under + and -, and gyr[a,b](H) = H for all a, b in H.
bool is_subgyrogroup(const FiniteGyrogroup& g, const ElementSubset& h);

/// Every subgyrogroup, canonically ordered, from a scan of all subsets that
/// contain the identity. Throws OrderTooLarge above kernels::kMaxScanOrder.
std::vector<ElementSubset> enumerate_subgyrogroups(const FiniteGyrogroup& g,
                                                   Execution exec = Execution::parallel);

struct GeneratedSets {
    std::vector<ElementSubset> sets;
    /// Proven complete: one more generator would not have produced a new set.
    bool complete = false;
};

/// Subgyrogroups generated by at most `max_generators` elements, built level
/// by level as closure(S + {g}) over the previous level. Any order.
GeneratedSets enumerate_subgyrogroups_by_generators(const FiniteGyrogroup& g,
                                                    std::size_t max_generators = 3);

/// Triple-coset criterion: a+(H+b) = (a+b)+H = (a+H)+b for all a, b.
/// Throws NotASubgyrogroup.
bool is_normal(const FiniteGyrogroup& g, const ElementSubset& h);

/// is_normal for each subset (which must all be subgyrogroups).
std::vector<bool> normal_flags(const FiniteGyrogroup& g, std::span<const ElementSubset> subsets,
                               Execution exec = Execution::parallel);

std::vector<ElementSubset> enumerate_normals(const FiniteGyrogroup& g,
                                             Execution exec = Execution::parallel);
GeneratedSets enumerate_normals_by_generators(const FiniteGyrogroup& g,
                                              std::size_t max_generators = 3);

/// Sub-gyrogroup H as a gyrogroup in its own right, elements renumbered in
/// ascending order and labelled with their indices in g.
FiniteGyrogroup induced_subgyrogroup(const FiniteGyrogroup& g, const ElementSubset& h);

struct CosetFamily {
    /// Disjoint cosets ordered by their minimal element.
    std::vector<ElementSubset> cosets;
    /// representatives[i] = min of cosets[i].
    std::vector<Element> representatives;
    /// coset_of[a] = index of the coset containing a.
    std::vector<std::size_t> coset_of;
};

/// { a + N : a in G }; throws NotNormal.
CosetFamily left_cosets(const FiniteGyrogroup& g, const ElementSubset& n);

class NotAHomomorphism : public Error {
public:
    NotAHomomorphism(Element a, Element b);
    Element a() const { return a_; }
    Element b() const { return b_; }

private:
    Element a_, b_;
};

class GyroHomomorphism {
public:
    /// Throws LengthMismatch/IndexOutOfRange for a malformed map and
    /// NotAHomomorphism(a, b) for the smallest pair with h(a+b) != h(a)+h(b).
    GyroHomomorphism(std::shared_ptr<const FiniteGyrogroup> source,
                     std::shared_ptr<const FiniteGyrogroup> target, std::vector<Element> map);

    const FiniteGyrogroup& source() const { return *source_; }
    const FiniteGyrogroup& target() const { return *target_; }
    std::span<const Element> map() const { return map_; }
    Element operator()(std::size_t a) const { return map_[a]; }

private:
    std::shared_ptr<const FiniteGyrogroup> source_;
    std::shared_ptr<const FiniteGyrogroup> target_;
    std::vector<Element> map_;
};

/// { a : h(a) = e' }.
ElementSubset kernel(const GyroHomomorphism& h);

struct Quotient {
    std::shared_ptr<const FiniteGyrogroup> group;
    CosetFamily cosets;
    GyroHomomorphism projection;
};

/// G/N with (aN)(bN) = (a+b)N. Element i of the quotient is cosets.cosets[i],
/// labelled by its minimal representative. Throws NotNormal, or
/// IllDefinedProduct if the coset product depends on representatives.
Quotient quotient(const FiniteGyrogroup& g, const ElementSubset& n);

/// Builds G/H from left cosets without consulting is_normal: succeeds only if
/// H is a subgyrogroup, its left cosets partition G, the coset product is
/// well defined, the result is a gyrogroup and the projection's kernel is H.
std::optional<Quotient> try_coset_quotient(const FiniteGyrogroup& g, const ElementSubset& h);

}  // namespace gyro
