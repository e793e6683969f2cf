#include "gyro/subset.hpp"

#include <algorithm>
#include <sstream>

namespace gyro {

namespace {

void require_order(std::size_t order)
{
    if (order == 0 || order > kMaxOrder) {
        throw OrderTooLarge("subset order " + std::to_string(order) + " outside [1, " +
                            std::to_string(kMaxOrder) + "]");
    }
}

}  // namespace

ElementSubset::ElementSubset(std::size_t order) : order_(order) { require_order(order); }

ElementSubset::ElementSubset(std::size_t order, std::initializer_list<Element> elements)
    : ElementSubset(order, std::span<const Element>(elements.begin(), elements.size()))
{
}

ElementSubset::ElementSubset(std::size_t order, std::span<const Element> elements)
    : ElementSubset(order)
{
    for (auto e : elements) insert(e);
}

ElementSubset ElementSubset::full(std::size_t order)
{
    ElementSubset s(order);
    for (std::size_t e = 0; e < order; ++e) s.insert(e);
    return s;
}

ElementSubset ElementSubset::from_mask(std::size_t order, std::uint64_t mask)
{
    if (order > 64) throw OrderTooLarge("from_mask needs order <= 64");
    ElementSubset s(order);
    if (order < 64) mask &= (std::uint64_t{1} << order) - 1;
    s.words_[0] = mask;
    return s;
}

void ElementSubset::insert(std::size_t e)
{
    if (e >= order_) {
        throw IndexOutOfRange("element " + std::to_string(e) + " not below order " +
                              std::to_string(order_));
    }
    words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void ElementSubset::erase(std::size_t e)
{
    if (e < order_) words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

Element ElementSubset::min() const
{
    for (std::size_t w = 0; w < kWords; ++w) {
        if (words_[w] != 0) {
            return static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
        }
    }
    throw EmptySubset("min() of an empty subset");
}

std::vector<Element> ElementSubset::elements() const
{
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
}

void ElementSubset::require_same_order(const ElementSubset& other) const
{
    if (order_ != other.order_) {
        throw LengthMismatch("subsets of different ambient orders (" + std::to_string(order_) +
                             " vs " + std::to_string(other.order_) + ")");
    }
}

bool ElementSubset::is_subset_of(const ElementSubset& other) const
{
    require_same_order(other);
    for (std::size_t w = 0; w < kWords; ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

bool ElementSubset::intersects(const ElementSubset& other) const
{
    require_same_order(other);
    for (std::size_t w = 0; w < kWords; ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

ElementSubset ElementSubset::operator|(const ElementSubset& other) const
{
    ElementSubset out = *this;
    out |= other;
    return out;
}

ElementSubset& ElementSubset::operator|=(const ElementSubset& other)
{
    require_same_order(other);
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= other.words_[w];
    return *this;
}

ElementSubset ElementSubset::operator&(const ElementSubset& other) const
{
    require_same_order(other);
    ElementSubset out = *this;
    for (std::size_t w = 0; w < kWords; ++w) out.words_[w] &= other.words_[w];
    return out;
}

ElementSubset ElementSubset::operator-(const ElementSubset& other) const
{
    require_same_order(other);
    ElementSubset out = *this;
    for (std::size_t w = 0; w < kWords; ++w) out.words_[w] &= ~other.words_[w];
    return out;
}

std::string ElementSubset::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each([&](Element e) {
        if (!first) os << ',';
        os << e;
        first = false;
    });
    os << '}';
    return os.str();
}

bool canonical_less(const ElementSubset& a, const ElementSubset& b)
{
    const auto sa = a.size();
    const auto sb = b.size();
    if (sa != sb) return sa < sb;
    // Same size: the first differing element decides, and it is the lowest bit
    // set in exactly one of the two.
    for (std::size_t w = 0; w < ElementSubset::kWords; ++w) {
        const auto diff = a.word(w) ^ b.word(w);
        if (diff != 0) {
            const auto low = diff & (~diff + 1);
            return (a.word(w) & low) != 0;
        }
    }
    return false;
}

void canonicalize(std::vector<ElementSubset>& sets)
{
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::size_t ElementSubsetHash::operator()(const ElementSubset& s) const noexcept
{
    std::size_t h = std::hash<std::size_t>{}(s.order());
    for (std::size_t w = 0; w < ElementSubset::kWords; ++w) {
        h ^= std::hash<std::uint64_t>{}(s.word(w)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace gyro
