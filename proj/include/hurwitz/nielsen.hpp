#pragma once

#include <array>
#include <optional>
#include <string>

#include "hurwitz/group.hpp"

namespace hurwitz {

struct ClassVector {
    std::array<uint32_t, 4> class_index{};
    std::array<int, 4> orders{};
    std::array<std::string, 4> labels;
};

// Resolves labels like "11A" against the class table.  A bare order ("11")
// is accepted when the group has exactly one class of that element order.
ClassVector resolve_class_vector(const GroupContext& ctx,
                                 const std::array<std::string, 4>& names);

// A 4-tuple (g1, g2, g3, g4) with product one.  Stored fully materialized;
// tuples compare lexicographically on the entries.
struct NielsenTuple {
    std::array<Permutation, 4> g;

    auto operator<=>(const NielsenTuple&) const = default;
};

NielsenTuple conjugate_tuple(const NielsenTuple& t, const Permutation& h);

Permutation tuple_product(const NielsenTuple& t);

// Lexicographically least tuple in the diagonal-conjugation orbit of t.
// Conjugates g1 onto its class representative, then minimizes the remaining
// entries over the centralizer of that representative.
NielsenTuple canonicalize_tuple(const GroupContext& ctx, const NielsenTuple& t);

struct EnumerateOptions {
    int workers = 1;
    bool generation_filter = true;
    // Alternative anchor for g1 (must lie in C1); used to test that the
    // enumeration does not depend on the anchored representative.
    std::optional<Permutation> anchor;
};

struct NielsenSet {
    ClassVector class_vector;
    std::vector<NielsenTuple> tuples;   // sorted canonical forms, duplicate-free

    size_t d() const { return tuples.size(); }
};

// Complete enumeration of Ni_4^in(C): g1 anchored at the C1 representative,
// (g2, g3) ranging over C2 x C3, g4 forced by the product-one relation and
// filtered by class membership and generation.  Sharded deterministically
// over g2; the merged result is independent of the worker count.
NielsenSet enumerate_nielsen(const GroupContext& ctx, const ClassVector& cv,
                             const EnumerateOptions& options = {});

} // namespace hurwitz
