#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gyro/gyrogroup.hpp"
#include "gyro/subset.hpp"

namespace gyro {

class PhiNotBijective : public Error {
public:
    using Error::Error;
};

/// The doubled table failed verify_axioms or its gyrations broke the
/// sign-preserving rule. The construction guarantees neither can happen.
class ConstructionAxiomFailure : public Error {
public:
    using Error::Error;
};

enum class Sign { plus, minus };

/// G = H+ u H- built from a base gyrogroup H+ of order n. Plus elements keep
/// their indices [0, n); phi(a) in [n, 2n) is the minus partner of a. Products
/// of equal signs are a+b in H+, products of mixed signs are phi(a+b).
class DoubledGyrogroup {
public:
    const FiniteGyrogroup& base() const { return base_; }
    const FiniteGyrogroup& whole() const { return whole_; }
    std::size_t base_order() const { return base_.order(); }

    Element phi(Element plus) const { return phi_[plus]; }
    std::span<const Element> phi_map() const { return phi_; }
    Sign sign(Element x) const { return x < base_order() ? Sign::plus : Sign::minus; }
    /// The plus element a with x in {a, phi(a)}.
    Element plus_part(Element x) const { return x < base_order() ? x : phi_inverse_[x - base_order()]; }

    /// Base subset (order n) viewed inside G.
    ElementSubset embed_plus(const ElementSubset& base_subset) const;
    /// phi(S) as a subset of G.
    ElementSubset phi_image(const ElementSubset& base_subset) const;
    /// phi^-1 of the minus elements of S, as a base subset.
    ElementSubset phi_preimage(const ElementSubset& whole_subset) const;
    /// S n H+ as a base subset.
    ElementSubset plus_part(const ElementSubset& whole_subset) const;
    /// S n H- as a subset of G.
    ElementSubset minus_part(const ElementSubset& whole_subset) const;

private:
    friend DoubledGyrogroup double_gyrogroup(const FiniteGyrogroup&, std::optional<std::vector<Element>>);
    DoubledGyrogroup(FiniteGyrogroup base, std::vector<Element> phi, FiniteGyrogroup whole);

    FiniteGyrogroup base_;
    std::vector<Element> phi_;
    std::vector<Element> phi_inverse_;
    FiniteGyrogroup whole_;
};

/// Doubles `base`. `phi`, if given, must be a bijection [0,n) -> [n,2n)
/// (default phi(k) = k + n); otherwise throws PhiNotBijective. The result is
/// re-validated and its gyrations compared with the sign-preserving rule
/// gyr_G[x,y](t) = gyr[x+, y+](t+) carried to the sign of t;
/// ConstructionAxiomFailure on any mismatch.
DoubledGyrogroup double_gyrogroup(const FiniteGyrogroup& base,
                                  std::optional<std::vector<Element>> phi = std::nullopt);

/// Just the doubled operation table, no validation.
CayleyTable doubled_table(const CayleyTable& base, std::span<const Element> phi);

struct SplitSubset {
    ElementSubset plus;        ///< S n H+, base order
    ElementSubset minus;       ///< S n H-, whole order
    ElementSubset pulled_back; ///< phi^-1(S n H-), base order
};

SplitSubset split(const DoubledGyrogroup& d, const ElementSubset& s);

/// Clause sets for the two structure theorems of the doubled gyrogroup.
/// Clause 1/a: M lies in H+ and is normal (resp. a subgyrogroup) there.
/// Clause 2/b: M = N u L with L a nonempty set of minus elements, N normal
///   (resp. sub) in H+, all products of two L elements in N, N disjoint from
///   L+ = phi^-1(L), and N u L+ normal (resp. sub) in H+.
/// Clause 3/c: M = N u phi(N) with N normal (resp. sub) in H+.
struct Classification {
    std::set<char> clauses;
    /// N+ (or A+): the plus part, base order.
    ElementSubset plus;
    /// L- (clause 2/b) or N- = phi(N+) (clause 3/c): the minus part, whole order.
    ElementSubset minus;
    /// L+ = phi^-1 of the minus part, base order.
    ElementSubset pulled_back;

    bool has(char clause) const { return clauses.count(clause) != 0; }
    /// Reassembles the classified set from the witnesses of `clause`.
    ElementSubset reassemble(const DoubledGyrogroup& d, char clause) const;
    std::string clause_string() const;
};

/// Clauses '1', '2', '3' for a normal subgyrogroup M of G. Throws NotNormal
/// and TheoremViolation when no clause holds.
Classification classify_normal(const DoubledGyrogroup& d, const ElementSubset& m);

/// Clauses 'a', 'b', 'c' for a subgyrogroup B of G. Throws NotASubgyrogroup
/// and TheoremViolation when no clause holds.
Classification classify_subgyrogroup(const DoubledGyrogroup& d, const ElementSubset& b);

/// All sets of the three normal forms, built from the normal subgyrogroups of
/// the base, deduplicated and canonically ordered. Form 2 pairs base normals
/// N < K and uses L+ = K \ N.
std::vector<ElementSubset> generate_normal_candidates(const DoubledGyrogroup& d);
std::vector<ElementSubset> generate_normal_candidates(const DoubledGyrogroup& d,
                                                      const std::vector<ElementSubset>& base_normals);

struct CorollaryCheck {
    std::string name;
    ElementSubset subset;  ///< whole order
    bool passed = false;
};

/// H+ is normal in G, and every base normal embedded in H+ is normal in G.
/// Base normals come from the full scan when the base is small enough and
/// from generator closure otherwise.
std::vector<CorollaryCheck> check_corollary(const DoubledGyrogroup& d);

}  // namespace gyro
