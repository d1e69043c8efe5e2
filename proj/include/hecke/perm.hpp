#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

// Permutation of {0..n-1}. The product convention throughout the library is
// "left factor acts first on points": (a.then(b))(p) = b(a(p)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree) : img_(static_cast<size_t>(degree)) {
        for (int i = 0; i < degree; ++i) img_[static_cast<size_t>(i)] = i;
    }

    static Perm from_images(std::vector<int> images);
    // Disjoint-cycle text with 1-based points: "(1 2)(3 4)", "()" or "e" = identity.
    static Perm from_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int p) const { return img_[static_cast<size_t>(p)]; }

    Perm then(const Perm& next) const;
    Perm inverse() const;
    bool is_identity() const;

    auto operator<=>(const Perm&) const = default;

    std::string to_cycles() const;  // 1-based disjoint cycles, "()" for identity

private:
    std::vector<int> img_;
};

}  // namespace hecke
