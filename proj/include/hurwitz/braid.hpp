#pragma once

#include <vector>

#include "hurwitz/nielsen.hpp"

namespace hurwitz {

enum class BranchPoint { zero = 0, one = 1, infinity = 2 };

inline const char* branch_point_name(BranchPoint w) {
    switch (w) {
        case BranchPoint::zero: return "0";
        case BranchPoint::one: return "1";
        default: return "inf";
    }
}

// Signed generator indices: +i is Q_i, -i its inverse.  Words act on the
// right, letters applied left to right.
using BraidWord = std::vector<int>;

// a0 = Q3 Q2 Q1^2 Q2^-1 Q3^-1, a1 = Q3 Q2^2 Q3^-1, ainf = Q3^2.
const BraidWord& a_word(BranchPoint w);

// Elementary Hurwitz move at positions (i, i+1), 1-based:
//   sign +1:  (g_i, g_{i+1}) -> (g_{i+1}, g_{i+1}^{-1} g_i g_{i+1})
//   sign -1:  the inverse move.
// The result is not canonicalized.
NielsenTuple apply_q(int i, int sign, const NielsenTuple& t);

NielsenTuple apply_word(const BraidWord& word, NielsenTuple t);

// Braid action of a_w on canonical classes: evaluate the Q-word, then
// canonicalize.  The Q-word composition is the source of truth; the closed
// formulas below exist only as a cross-check.
NielsenTuple apply_a(const GroupContext& ctx, BranchPoint w, const NielsenTuple& canonical);

// Closed formulas (with g^c = c^{-1} g c, gamma_0 = g4 g1, gamma_1 = g2 g4,
// gamma_inf = g3 g4):
//   a0:   (g1^c, g2, g3, g4^c)
//   a1:   (g1, g2^c, g3^(g2^{-1} g4^{-1} g2 g4), g4^c)
//   ainf: (g1, g2, g3^c, g4^c)
// Returned canonicalized, for comparison against apply_a.
NielsenTuple apply_a_closed(const GroupContext& ctx, BranchPoint w, const NielsenTuple& t);

// The element whose conjugacy class is attached to the a_w-orbit of t.
Permutation gamma_of(BranchPoint w, const NielsenTuple& t);

struct Component {
    std::vector<NielsenTuple> members;   // sorted canonical classes

    int degree() const { return static_cast<int>(members.size()); }
};

// Orbit partition of the Nielsen set under <a0, a1>; components sorted by
// (size, least member).
std::vector<Component> decompose_components(const GroupContext& ctx, const NielsenSet& ns);

struct FusionResult {
    // Partition of component indices into families of isomorphic components,
    // each family sorted, families ordered by least member.
    std::vector<std::vector<int>> families;
    int depth_limit = 0;
    bool depth_exhausted = false;   // true if the BFS hit the depth cap before saturating
};

// Groups components connected by some word in Q1..Q3 (the full braid-group
// action, which may pass through tuples whose class signature is a
// permutation of C).  This recovers the "number of isomorphic components";
// the word length is capped at max_depth.
FusionResult fuse_isomorphic_components(const GroupContext& ctx, const NielsenSet& ns,
                                        const std::vector<Component>& components,
                                        int max_depth = 8);

// Verifies, on a small dihedral fixture, that the Q-word evaluation of each
// a_w agrees with its closed formula and that a0 a1 ainf acts trivially.
// Throws internal_error on failure.  Cheap; run once at program start.
void braid_convention_self_test();

} // namespace hurwitz
