#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hurwitz {

// Permutation of {0, ..., degree-1}, stored as the image list.
// Products are taken left to right: (p * q)(i) = q(p(i)), so a word
// g1 g2 g3 means "apply g1 first".  All group-theoretic formulas in this
// code base (conjugation, commutators, braid moves) use this convention.
struct Permutation {
    std::vector<uint16_t> images;

    Permutation() = default;
    explicit Permutation(std::vector<uint16_t> im) : images(std::move(im)) {}

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images.size()); }
    uint16_t operator[](int i) const { return images[static_cast<size_t>(i)]; }
    bool is_identity() const;

    Permutation inverse() const;

    // Multiplicative order, via lcm of cycle lengths.
    int64_t order() const;

    auto operator<=>(const Permutation&) const = default;
};

// p * q: apply p, then q.
Permutation compose(const Permutation& p, const Permutation& q);

// g^x = x^{-1} g x.
Permutation conjugate(const Permutation& g, const Permutation& x);

// g^k for k >= 0.
Permutation power(const Permutation& g, int64_t k);

// Throws precondition_error unless images is a bijection on {0..degree-1}.
void validate_permutation(const Permutation& p);

// One-line image notation: "[0 2 1]".  parse accepts the same format.
std::string format_permutation(const Permutation& p);
Permutation parse_permutation(const std::string& text);

struct PermHash {
    size_t operator()(const Permutation& p) const;
};

} // namespace hurwitz
