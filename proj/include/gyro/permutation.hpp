#pragma once

#include <span>
#include <string>
#include <vector>

#include "gyro/types.hpp"

namespace gyro {

/// A bijection on {0, ..., n-1}; images()[i] is the image of i.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `images` is a bijection.
    explicit Permutation(std::vector<Element> images);

    static Permutation identity(std::size_t n);
    /// Builds a permutation from disjoint cycles, e.g. {{4,5},{6,7}}.
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Element>>& cycles);

    /// True iff `images` is a bijection on [0, images.size()).
    static bool is_bijection(std::span<const Element> images);

    std::size_t size() const { return images_.size(); }
    Element operator()(std::size_t i) const { return images_[i]; }
    std::span<const Element> images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    /// (this * other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;

    /// Disjoint-cycle notation, fixed points omitted; "()" for the identity.
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<Element> images_;
};

}  // namespace gyro
