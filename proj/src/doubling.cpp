#include "gyro/doubling.hpp"

#include "gyro/kernels.hpp"
#include "gyro/subalgebra.hpp"

namespace gyro {

namespace {

bool is_normal_in(const FiniteGyrogroup& g, const ElementSubset& s)
{
    return !s.empty() && is_subgyrogroup(g, s) && is_normal(g, s);
}

bool is_sub_in(const FiniteGyrogroup& g, const ElementSubset& s)
{
    return !s.empty() && is_subgyrogroup(g, s);
}

std::vector<ElementSubset> known_normals(const FiniteGyrogroup& g)
{
    if (g.order() <= kernels::kMaxScanOrder) return enumerate_normals(g);
    auto generated = enumerate_normals_by_generators(g);
    return std::move(generated.sets);
}

// Products of two minus elements of `minus` all land in `plus` (whole order).
bool minus_products_in(const DoubledGyrogroup& d, const ElementSubset& minus, const ElementSubset& plus)
{
    bool ok = true;
    minus.for_each([&](Element x) {
        minus.for_each([&](Element y) { ok = ok && plus.contains(d.whole().op(x, y)); });
    });
    return ok;
}

using Predicate = bool (*)(const FiniteGyrogroup&, const ElementSubset&);

Classification classify(const DoubledGyrogroup& d, const ElementSubset& m, Predicate in_base,
                        const char (&names)[3])
{
    auto parts = split(d, m);
    Classification c{{}, parts.plus, parts.minus, parts.pulled_back};
    const bool plus_ok = in_base(d.base(), parts.plus);

    if (parts.minus.empty() && plus_ok) c.clauses.insert(names[0]);

    if (!parts.minus.empty() && plus_ok &&
        minus_products_in(d, parts.minus, d.embed_plus(parts.plus)) &&
        !parts.plus.intersects(parts.pulled_back) && in_base(d.base(), parts.plus | parts.pulled_back)) {
        c.clauses.insert(names[1]);
    }

    if (parts.minus == d.phi_image(parts.plus) && plus_ok) c.clauses.insert(names[2]);

    if (c.clauses.empty()) {
        throw TheoremViolation(m.to_string() + " matches none of the clauses " +
                               std::string(names, 3));
    }
    return c;
}

}  // namespace

DoubledGyrogroup::DoubledGyrogroup(FiniteGyrogroup base, std::vector<Element> phi, FiniteGyrogroup whole)
    : base_(std::move(base)), phi_(std::move(phi)), phi_inverse_(phi_.size()), whole_(std::move(whole))
{
    for (std::size_t a = 0; a < phi_.size(); ++a) {
        phi_inverse_[phi_[a] - phi_.size()] = static_cast<Element>(a);
    }
}

ElementSubset DoubledGyrogroup::embed_plus(const ElementSubset& base_subset) const
{
    ElementSubset out(whole_.order());
    base_subset.for_each([&](Element a) { out.insert(a); });
    return out;
}

ElementSubset DoubledGyrogroup::phi_image(const ElementSubset& base_subset) const
{
    ElementSubset out(whole_.order());
    base_subset.for_each([&](Element a) { out.insert(phi_[a]); });
    return out;
}

ElementSubset DoubledGyrogroup::phi_preimage(const ElementSubset& whole_subset) const
{
    ElementSubset out(base_order());
    whole_subset.for_each([&](Element x) {
        if (x >= base_order()) out.insert(phi_inverse_[x - base_order()]);
    });
    return out;
}

ElementSubset DoubledGyrogroup::plus_part(const ElementSubset& whole_subset) const
{
    ElementSubset out(base_order());
    whole_subset.for_each([&](Element x) {
        if (x < base_order()) out.insert(x);
    });
    return out;
}

ElementSubset DoubledGyrogroup::minus_part(const ElementSubset& whole_subset) const
{
    ElementSubset out(whole_.order());
    whole_subset.for_each([&](Element x) {
        if (x >= base_order()) out.insert(x);
    });
    return out;
}

CayleyTable doubled_table(const CayleyTable& base, std::span<const Element> phi)
{
    const auto n = base.order();
    std::vector<Element> inverse(n);
    for (std::size_t a = 0; a < n; ++a) inverse[phi[a] - n] = static_cast<Element>(a);
    auto plus = [&](std::size_t x) -> std::size_t { return x < n ? x : inverse[x - n]; };

    std::vector<Element> entries(4 * n * n);
    for (std::size_t x = 0; x < 2 * n; ++x) {
        for (std::size_t y = 0; y < 2 * n; ++y) {
            const auto r = base(plus(x), plus(y));
            const bool same_sign = (x < n) == (y < n);
            entries[x * 2 * n + y] = same_sign ? r : phi[r];
        }
    }
    return CayleyTable(2 * n, std::move(entries));
}

DoubledGyrogroup double_gyrogroup(const FiniteGyrogroup& base, std::optional<std::vector<Element>> phi)
{
    const auto n = base.order();
    if (2 * n > kMaxOrder) throw OrderTooLarge("doubled order " + std::to_string(2 * n) + " too large");
    std::vector<Element> map;
    if (phi) {
        map = std::move(*phi);
        if (map.size() != n) throw PhiNotBijective("phi must have one entry per base element");
        std::vector<bool> hit(n, false);
        for (auto x : map) {
            if (x < n || x >= 2 * n || hit[x - n]) {
                throw PhiNotBijective("phi is not a bijection onto [" + std::to_string(n) + ", " +
                                      std::to_string(2 * n) + ")");
            }
            hit[x - n] = true;
        }
    } else {
        map.resize(n);
        for (std::size_t a = 0; a < n; ++a) map[a] = static_cast<Element>(a + n);
    }

    auto table = doubled_table(base.table(), map);
    std::optional<FiniteGyrogroup> whole;
    try {
        whole = FiniteGyrogroup::construct(std::move(table));
    } catch (const InvalidGyrogroup& e) {
        throw ConstructionAxiomFailure(std::string("doubled table: ") + e.what());
    }

    DoubledGyrogroup d(base, std::move(map), std::move(*whole));
    for (std::size_t x = 0; x < 2 * n; ++x) {
        for (std::size_t y = 0; y < 2 * n; ++y) {
            const auto& g = base.gyr(d.plus_part(static_cast<Element>(x)), d.plus_part(static_cast<Element>(y)));
            const auto& actual = d.whole().gyr(x, y);
            for (std::size_t t = 0; t < 2 * n; ++t) {
                const auto expected = t < n ? g(t) : d.phi(g(d.plus_part(static_cast<Element>(t))));
                if (actual(t) != expected) {
                    throw ConstructionAxiomFailure("gyr[" + std::to_string(x) + "," + std::to_string(y) +
                                                   "] breaks the sign-preserving rule at " +
                                                   std::to_string(t));
                }
            }
        }
    }
    return d;
}

SplitSubset split(const DoubledGyrogroup& d, const ElementSubset& s)
{
    if (s.order() != d.whole().order()) throw LengthMismatch("subset is not a subset of the doubled gyrogroup");
    return {d.plus_part(s), d.minus_part(s), d.phi_preimage(s)};
}

ElementSubset Classification::reassemble(const DoubledGyrogroup& d, char clause) const
{
    switch (clause) {
    case '1':
    case 'a': return d.embed_plus(plus);
    case '2':
    case 'b': return d.embed_plus(plus) | minus;
    case '3':
    case 'c': return d.embed_plus(plus) | d.phi_image(plus);
    default: throw std::invalid_argument(std::string("unknown clause ") + clause);
    }
}

std::string Classification::clause_string() const
{
    std::string out;
    for (auto c : clauses) {
        if (!out.empty()) out += ',';
        out += c;
    }
    return out;
}

Classification classify_normal(const DoubledGyrogroup& d, const ElementSubset& m)
{
    if (!is_normal(d.whole(), m)) throw NotNormal(m.to_string() + " is not normal");
    return classify(d, m, &is_normal_in, {'1', '2', '3'});
}

Classification classify_subgyrogroup(const DoubledGyrogroup& d, const ElementSubset& b)
{
    if (!is_subgyrogroup(d.whole(), b)) throw NotASubgyrogroup(b.to_string() + " is not a subgyrogroup");
    return classify(d, b, &is_sub_in, {'a', 'b', 'c'});
}

std::vector<ElementSubset> generate_normal_candidates(const DoubledGyrogroup& d)
{
    return generate_normal_candidates(d, known_normals(d.base()));
}

std::vector<ElementSubset> generate_normal_candidates(const DoubledGyrogroup& d,
                                                      const std::vector<ElementSubset>& base_normals)
{
    std::vector<ElementSubset> out;
    for (const auto& normal : base_normals) {
        out.push_back(d.embed_plus(normal));
        out.push_back(d.embed_plus(normal) | d.phi_image(normal));
    }
    for (const auto& inner : base_normals) {
        for (const auto& outer : base_normals) {
            if (inner == outer || !inner.is_subset_of(outer)) continue;
            const auto pulled_back = outer - inner;
            bool products_in_inner = true;
            pulled_back.for_each([&](Element x) {
                pulled_back.for_each([&](Element y) {
                    products_in_inner = products_in_inner && inner.contains(d.base().op(x, y));
                });
            });
            if (products_in_inner) out.push_back(d.embed_plus(inner) | d.phi_image(pulled_back));
        }
    }
    canonicalize(out);
    return out;
}

std::vector<CorollaryCheck> check_corollary(const DoubledGyrogroup& d)
{
    std::vector<CorollaryCheck> out;
    const auto plus_copy = d.embed_plus(ElementSubset::full(d.base_order()));
    out.push_back({"plus copy is normal", plus_copy, is_normal(d.whole(), plus_copy)});
    for (const auto& normal : known_normals(d.base())) {
        const auto embedded = d.embed_plus(normal);
        out.push_back({"base normal " + normal.to_string() + " stays normal", embedded,
                       is_normal(d.whole(), embedded)});
    }
    return out;
}

}  // namespace gyro
