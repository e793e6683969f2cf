#include "gyro/permutation.hpp"

#include <sstream>

namespace gyro {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images))
{
    if (!is_bijection(images_)) throw std::invalid_argument("images do not form a bijection");
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<Element> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Element>(i);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Element>>& cycles)
{
    std::vector<Element> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Element>(i);
    for (const auto& cycle : cycles) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            if (cycle[k] >= n) throw IndexOutOfRange("cycle entry out of range");
            images[cycle[k]] = cycle[(k + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(images));
}

bool Permutation::is_bijection(std::span<const Element> images)
{
    std::vector<bool> seen(images.size(), false);
    for (auto x : images) {
        if (x >= images.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

Permutation Permutation::inverse() const
{
    std::vector<Element> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Element>(i);
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const
{
    if (other.size() != size()) throw LengthMismatch("compose: permutation sizes differ");
    std::vector<Element> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = images_[other.images_[i]];
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

std::string Permutation::cycle_string() const
{
    std::ostringstream os;
    std::vector<bool> done(size(), false);
    bool any = false;
    for (std::size_t start = 0; start < size(); ++start) {
        if (done[start] || images_[start] == start) continue;
        any = true;
        os << '(';
        std::size_t i = start;
        bool first = true;
        while (!done[i]) {
            done[i] = true;
            if (!first) os << ',';
            os << i;
            first = false;
            i = images_[i];
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

}  // namespace gyro
