#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

// Finite permutation group materialized as a full sorted element table.
// Intended scale is |G| up to ~10^5 (PSL2(31) has order 14880), where a
// complete table beats any stabilizer-chain machinery on both simplicity
// and constant factors.  Immutable after construction.
struct FiniteGroup {
    int degree = 0;
    std::string label;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;   // sorted lexicographically
    std::unordered_map<Permutation, uint32_t, PermHash> element_index;

    // Class labels fixed by the constructor (e.g. "5A" -> x+1 in PSL2(5),
    // "2A" -> even-offset reflections in dihedral groups).  Classes without
    // a hint get default labels in table order.
    std::vector<std::pair<std::string, Permutation>> class_name_hints;

    size_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const { return element_index.count(p) != 0; }
    uint32_t index(const Permutation& p) const;
    const Permutation& identity() const;
};

struct ConjugacyClass {
    Permutation rep;                    // lexicographically least member
    std::vector<Permutation> members;   // sorted
    int element_order = 1;
    std::string label;

    size_t size() const { return members.size(); }
};

struct ConjugacyClassTable {
    // Sorted by (element order, class size, representative).
    std::vector<ConjugacyClass> classes;
    std::vector<uint32_t> class_of_index;      // element index -> class index
    std::vector<Permutation> conj_to_rep;      // h with g^h = rep(class of g)
    std::vector<std::vector<Permutation>> rep_centralizer;  // per class, sorted

    uint32_t class_of(const FiniteGroup& G, const Permutation& g) const;
    // Index of the class with the given label, or -1.
    int find_label(const std::string& label) const;
};

// Bundle passed through the whole pipeline; the group and its class data
// are computed once and then shared read-only.
struct GroupContext {
    FiniteGroup group;
    ConjugacyClassTable classes;
};

GroupContext make_context(FiniteGroup group);

struct SylowData {
    int p = 0;
    Permutation sylow_generator;        // deterministic: least element of order p
    FiniteGroup normalizer;             // N_G(<x>)
    bool is_dihedral = false;
    int half_order = 0;                 // k with |N| = 2k, when dihedral
    Permutation rotation_generator;     // order k, when dihedral
    Permutation reflection;             // involution inverting the rotation
};

// Dihedral group of order 2n.  For n >= 3 this is the natural action on n
// points (rotation i -> i+1, reflection i -> -i).  For n <= 2 that action is
// not faithful, so the group acts on 2n points instead.
FiniteGroup build_dihedral(int n);

// PSL2(ell) acting on the projective line over F_ell (ell + 1 points),
// generated by x -> x+1 and x -> -1/x.  Classes of order ell are labeled
// so that x -> x+1 is in "ellA" and x -> x+nu (nu the least quadratic
// non-residue) is in "ellB".
FiniteGroup build_psl2(int ell);

FiniteGroup build_from_generators(int degree, std::vector<Permutation> generators,
                                  std::string label);

ConjugacyClassTable conjugacy_classes(const FiniteGroup& G);

struct SubgroupResult {
    FiniteGroup subgroup;
    bool is_whole = false;
};

// Product closure of the seeds inside G.  Empty seed list gives the trivial
// subgroup.
SubgroupResult subgroup_closure(const FiniteGroup& G, const std::vector<Permutation>& seeds);

// Same closure but bails out as soon as the partial closure exceeds |G|/2
// (a proper subgroup has index >= 2).  This is the hot path of the Nielsen
// generation filter.
bool generates_whole(const FiniteGroup& G, const std::vector<Permutation>& seeds);

FiniteGroup centralizer(const FiniteGroup& G, const Permutation& g);

// Elements commuting with all of G.
std::vector<Permutation> center(const FiniteGroup& G);

// Requires p odd with p || |G|.  Picks the least element x of order p,
// computes N_G(<x>) and attempts to split it as <rotation, reflection>.
SylowData sylow_normalizer_analysis(const FiniteGroup& G, int p);

} // namespace hurwitz
