#include "gyro/subalgebra.hpp"

#include <string>
#include <unordered_set>

#include "gyro/kernels.hpp"

namespace gyro {

namespace {

void require_ambient(const FiniteGyrogroup& g, const ElementSubset& s)
{
    if (s.order() != g.order()) {
        throw LengthMismatch("subset of order " + std::to_string(s.order()) +
                             " used with a gyrogroup of order " + std::to_string(g.order()));
    }
}

void require_nonempty(const ElementSubset& s)
{
    if (s.empty()) throw EmptySubset("empty subset");
}

void require_subgyrogroup(const FiniteGyrogroup& g, const ElementSubset& h)
{
    if (!is_subgyrogroup(g, h)) throw NotASubgyrogroup(h.to_string() + " is not a subgyrogroup");
}

// Builds the quotient on a partition into left cosets, or returns nullopt if
// the product is not representative-independent.
std::optional<Quotient> build_quotient(const FiniteGyrogroup& g, CosetFamily family)
{
    const auto n = g.order();
    const auto k = family.cosets.size();
    std::vector<Element> entries(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const auto expected =
                family.coset_of[g.op(family.representatives[i], family.representatives[j])];
            bool well_defined = true;
            family.cosets[i].for_each([&](Element a) {
                family.cosets[j].for_each([&](Element b) {
                    well_defined = well_defined && family.coset_of[g.op(a, b)] == expected;
                });
            });
            if (!well_defined) return std::nullopt;
            entries[i * k + j] = static_cast<Element>(expected);
        }
    }
    std::vector<std::string> labels;
    for (auto r : family.representatives) labels.push_back(std::to_string(r));
    auto q = std::make_shared<const FiniteGyrogroup>(
        FiniteGyrogroup::construct(CayleyTable(k, std::move(entries)), std::move(labels)));
    std::vector<Element> map(n);
    for (std::size_t a = 0; a < n; ++a) map[a] = static_cast<Element>(family.coset_of[a]);
    GyroHomomorphism projection(std::make_shared<const FiniteGyrogroup>(g), q, std::move(map));
    return Quotient{std::move(q), std::move(family), std::move(projection)};
}

// Left cosets a + H; nullopt if they fail to partition G.
std::optional<CosetFamily> partition_by_left_cosets(const FiniteGyrogroup& g, const ElementSubset& h)
{
    const auto n = g.order();
    CosetFamily family;
    family.coset_of.assign(n, SIZE_MAX);
    for (std::size_t a = 0; a < n; ++a) {
        const auto coset = set_product(g, static_cast<Element>(a), h);
        if (family.coset_of[a] != SIZE_MAX) {
            if (family.cosets[family.coset_of[a]] != coset) return std::nullopt;
            continue;
        }
        bool disjoint = true;
        coset.for_each([&](Element x) { disjoint = disjoint && family.coset_of[x] == SIZE_MAX; });
        if (!disjoint || !coset.contains(a)) return std::nullopt;
        coset.for_each([&](Element x) { family.coset_of[x] = family.cosets.size(); });
        family.cosets.push_back(coset);
        family.representatives.push_back(coset.min());
    }
    // Cosets are discovered in order of their smallest element already.
    return family;
}

}  // namespace

ElementSubset singleton(const FiniteGyrogroup& g, Element a)
{
    ElementSubset s(g.order());
    s.insert(a);
    return s;
}

ElementSubset set_product(const FiniteGyrogroup& g, const ElementSubset& lhs, const ElementSubset& rhs)
{
    require_ambient(g, lhs);
    require_ambient(g, rhs);
    ElementSubset out(g.order());
    lhs.for_each([&](Element x) { rhs.for_each([&](Element y) { out.insert(g.op(x, y)); }); });
    return out;
}

ElementSubset set_product(const FiniteGyrogroup& g, Element lhs, const ElementSubset& rhs)
{
    return set_product(g, singleton(g, lhs), rhs);
}

ElementSubset set_product(const FiniteGyrogroup& g, const ElementSubset& lhs, Element rhs)
{
    return set_product(g, lhs, singleton(g, rhs));
}

ElementSubset closure(const FiniteGyrogroup& g, const ElementSubset& seed)
{
    require_ambient(g, seed);
    require_nonempty(seed);
    ElementSubset s(g.order());
    std::vector<Element> members;
    auto add = [&](Element x) {
        if (!s.contains(x)) {
            s.insert(x);
            members.push_back(x);
        }
    };
    add(g.identity());
    seed.for_each(add);
    // Each pair (i, j) with j <= i is multiplied both ways when i is reached.
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto x = members[i];
        add(g.left_inverse(x));
        for (std::size_t j = 0; j <= i; ++j) {
            const auto y = members[j];
            add(g.op(x, y));
            add(g.op(y, x));
        }
    }
    return s;
}

bool is_subgyrogroup(const FiniteGyrogroup& g, const ElementSubset& h)
{
    require_ambient(g, h);
    require_nonempty(h);
    if (!h.contains(g.identity())) return false;
    const auto members = h.elements();
    for (auto a : members) {
        if (!h.contains(g.left_inverse(a))) return false;
        for (auto b : members) {
            if (!h.contains(g.op(a, b))) return false;
        }
    }
    for (auto a : members) {
        for (auto b : members) {
            const auto& gyr = g.gyr(a, b);
            for (auto c : members) {
                if (!h.contains(gyr(c))) return false;
            }
        }
    }
    return true;
}

std::vector<ElementSubset> enumerate_subgyrogroups(const FiniteGyrogroup& g, Execution exec)
{
    const auto n = g.order();
    if (n > kernels::kMaxScanOrder) {
        throw OrderTooLarge("order " + std::to_string(n) + " exceeds the full-scan limit " +
                            std::to_string(kernels::kMaxScanOrder) +
                            "; use enumerate_subgyrogroups_by_generators");
    }
    const auto masks = exec == Execution::parallel
                           ? kernels::closed_subsets(g.table(), g.identity())
                           : kernels::reference::closed_subsets(g.table(), g.identity());
    std::vector<ElementSubset> out;
    for (auto m : masks) {
        auto s = ElementSubset::from_mask(n, m);
        if (is_subgyrogroup(g, s)) out.push_back(s);
    }
    canonicalize(out);
    return out;
}

GeneratedSets enumerate_subgyrogroups_by_generators(const FiniteGyrogroup& g, std::size_t max_generators)
{
    const auto n = g.order();
    std::unordered_set<ElementSubset, ElementSubsetHash> seen;
    std::vector<ElementSubset> level{closure(g, singleton(g, g.identity()))};
    seen.insert(level.front());
    GeneratedSets out;
    out.sets = level;
    // One extra level is computed only to decide completeness.
    for (std::size_t depth = 1; depth <= max_generators + 1 && !level.empty(); ++depth) {
        std::vector<ElementSubset> next;
        for (const auto& s : level) {
            for (std::size_t x = 0; x < n; ++x) {
                if (s.contains(x)) continue;
                auto seed = s;
                seed.insert(x);
                auto c = closure(g, seed);
                if (seen.insert(c).second) next.push_back(std::move(c));
            }
        }
        if (depth > max_generators) {
            out.complete = next.empty();
            canonicalize(out.sets);
            return out;
        }
        out.sets.insert(out.sets.end(), next.begin(), next.end());
        level = std::move(next);
    }
    out.complete = true;
    canonicalize(out.sets);
    return out;
}

std::vector<bool> normal_flags(const FiniteGyrogroup& g, std::span<const ElementSubset> subsets,
                               Execution exec)
{
    for (const auto& h : subsets) require_ambient(g, h);
    const auto raw = exec == Execution::parallel
                         ? kernels::triple_coset_equal(g.table(), subsets)
                         : kernels::reference::triple_coset_equal(g.table(), subsets);
    return {raw.begin(), raw.end()};
}

bool is_normal(const FiniteGyrogroup& g, const ElementSubset& h)
{
    require_subgyrogroup(g, h);
    return normal_flags(g, std::span(&h, 1), Execution::serial).front();
}

std::vector<ElementSubset> enumerate_normals(const FiniteGyrogroup& g, Execution exec)
{
    const auto subs = enumerate_subgyrogroups(g, exec);
    const auto flags = normal_flags(g, subs, exec);
    std::vector<ElementSubset> out;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (flags[i]) out.push_back(subs[i]);
    }
    return out;
}

GeneratedSets enumerate_normals_by_generators(const FiniteGyrogroup& g, std::size_t max_generators)
{
    auto subs = enumerate_subgyrogroups_by_generators(g, max_generators);
    const auto flags = normal_flags(g, subs.sets);
    GeneratedSets out;
    out.complete = subs.complete;
    for (std::size_t i = 0; i < subs.sets.size(); ++i) {
        if (flags[i]) out.sets.push_back(subs.sets[i]);
    }
    return out;
}

FiniteGyrogroup induced_subgyrogroup(const FiniteGyrogroup& g, const ElementSubset& h)
{
    require_subgyrogroup(g, h);
    const auto members = h.elements();
    std::vector<Element> index(g.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Element>(i);
    std::vector<Element> entries;
    entries.reserve(members.size() * members.size());
    for (auto a : members) {
        for (auto b : members) entries.push_back(index[g.op(a, b)]);
    }
    std::vector<std::string> labels;
    for (auto m : members) labels.push_back(g.label(m));
    return FiniteGyrogroup::construct(CayleyTable(members.size(), std::move(entries)), std::move(labels));
}

CosetFamily left_cosets(const FiniteGyrogroup& g, const ElementSubset& n)
{
    if (!is_normal(g, n)) throw NotNormal(n.to_string() + " is not normal");
    auto family = partition_by_left_cosets(g, n);
    if (!family) throw TheoremViolation("left cosets of a normal subgyrogroup do not partition");
    return *family;
}

NotAHomomorphism::NotAHomomorphism(Element a, Element b)
    : Error("map is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")"),
      a_(a), b_(b)
{
}

GyroHomomorphism::GyroHomomorphism(std::shared_ptr<const FiniteGyrogroup> source,
                                   std::shared_ptr<const FiniteGyrogroup> target,
                                   std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map))
{
    const auto n = source_->order();
    if (map_.size() != n) throw LengthMismatch("homomorphism map must have one entry per element");
    for (auto x : map_) {
        if (x >= target_->order()) throw IndexOutOfRange("homomorphism image out of range");
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (map_[source_->op(a, b)] != target_->op(map_[a], map_[b])) {
                throw NotAHomomorphism(static_cast<Element>(a), static_cast<Element>(b));
            }
        }
    }
}

ElementSubset kernel(const GyroHomomorphism& h)
{
    ElementSubset out(h.source().order());
    for (std::size_t a = 0; a < h.source().order(); ++a) {
        if (h(a) == h.target().identity()) out.insert(a);
    }
    return out;
}

Quotient quotient(const FiniteGyrogroup& g, const ElementSubset& n)
{
    auto family = left_cosets(g, n);
    auto q = build_quotient(g, std::move(family));
    if (!q) throw IllDefinedProduct("coset product by " + n.to_string() + " is not well defined");
    if (kernel(q->projection) != n) throw TheoremViolation("projection kernel differs from " + n.to_string());
    return std::move(*q);
}

std::optional<Quotient> try_coset_quotient(const FiniteGyrogroup& g, const ElementSubset& h)
{
    if (h.empty() || !is_subgyrogroup(g, h)) return std::nullopt;
    auto family = partition_by_left_cosets(g, h);
    if (!family) return std::nullopt;
    try {
        auto q = build_quotient(g, std::move(*family));
        if (!q || kernel(q->projection) != h) return std::nullopt;
        return q;
    } catch (const InvalidGyrogroup&) {
        return std::nullopt;
    } catch (const NotAHomomorphism&) {
        return std::nullopt;
    }
}

}  // namespace gyro
