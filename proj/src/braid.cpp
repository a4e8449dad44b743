#include "hurwitz/braid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "hurwitz/errors.hpp"

namespace hurwitz {

const BraidWord& a_word(BranchPoint w) {
    static const BraidWord a0 = {3, 2, 1, 1, -2, -3};
    static const BraidWord a1 = {3, 2, 2, -3};
    static const BraidWord ainf = {3, 3};
    switch (w) {
        case BranchPoint::zero: return a0;
        case BranchPoint::one: return a1;
        default: return ainf;
    }
}

NielsenTuple apply_q(int i, int sign, const NielsenTuple& t) {
    check_pre(i >= 1 && i <= 3, "braid generator index out of range");
    check_pre(sign == 1 || sign == -1, "braid generator sign must be +-1");
    NielsenTuple r = t;
    const size_t a = static_cast<size_t>(i - 1);
    const size_t b = static_cast<size_t>(i);
    if (sign > 0) {
        r.g[a] = t.g[b];
        r.g[b] = conjugate(t.g[a], t.g[b]);
    } else {
        r.g[a] = conjugate(t.g[b], t.g[a].inverse());
        r.g[b] = t.g[a];
    }
    return r;
}

NielsenTuple apply_word(const BraidWord& word, NielsenTuple t) {
    for (int letter : word) t = apply_q(std::abs(letter), letter > 0 ? 1 : -1, t);
    return t;
}

NielsenTuple apply_a(const GroupContext& ctx, BranchPoint w, const NielsenTuple& canonical) {
    NielsenTuple moved = apply_word(a_word(w), canonical);
#ifndef NDEBUG
    for (int i = 0; i < 4; ++i)
        check_internal(ctx.classes.class_of(ctx.group, moved.g[static_cast<size_t>(i)]) ==
                           ctx.classes.class_of(ctx.group, canonical.g[static_cast<size_t>(i)]),
                       "a_w changed the ordered class vector");
#endif
#ifdef HURWITZ_PARANOID
    // Full re-check that the generated subgroup is preserved.  Quadratic in
    // practice, so opt-in rather than tied to NDEBUG.
    check_internal(generates_whole(ctx.group, {moved.g[0], moved.g[1], moved.g[2], moved.g[3]}) ==
                       generates_whole(ctx.group, {canonical.g[0], canonical.g[1],
                                                   canonical.g[2], canonical.g[3]}),
                   "a_w changed the generated subgroup");
#endif
    return canonicalize_tuple(ctx, moved);
}

NielsenTuple apply_a_closed(const GroupContext& ctx, BranchPoint w, const NielsenTuple& t) {
    const Permutation& g1 = t.g[0];
    const Permutation& g2 = t.g[1];
    const Permutation& g3 = t.g[2];
    const Permutation& g4 = t.g[3];
    NielsenTuple r = t;
    switch (w) {
        case BranchPoint::zero: {
            Permutation c = compose(g4, g1);
            r.g[0] = conjugate(g1, c);
            r.g[3] = conjugate(g4, c);
            break;
        }
        case BranchPoint::one: {
            Permutation c = compose(g2, g4);
            // Commutator convention pinned by equality with the Q-word:
            // g3 is conjugated by g2^{-1} g4^{-1} g2 g4.
            Permutation comm = compose(compose(compose(g2.inverse(), g4.inverse()), g2), g4);
            r.g[1] = conjugate(g2, c);
            r.g[2] = conjugate(g3, comm);
            r.g[3] = conjugate(g4, c);
            break;
        }
        default: {
            Permutation c = compose(g3, g4);
            r.g[2] = conjugate(g3, c);
            r.g[3] = conjugate(g4, c);
            break;
        }
    }
    return canonicalize_tuple(ctx, r);
}

Permutation gamma_of(BranchPoint w, const NielsenTuple& t) {
    switch (w) {
        case BranchPoint::zero: return compose(t.g[3], t.g[0]);
        case BranchPoint::one: return compose(t.g[1], t.g[3]);
        default: return compose(t.g[2], t.g[3]);
    }
}

std::vector<Component> decompose_components(const GroupContext& ctx, const NielsenSet& ns) {
    std::set<NielsenTuple> remaining(ns.tuples.begin(), ns.tuples.end());
    std::vector<Component> components;
    while (!remaining.empty()) {
        NielsenTuple start = *remaining.begin();
        std::set<NielsenTuple> orbit;
        std::deque<NielsenTuple> frontier;
        orbit.insert(start);
        frontier.push_back(start);
        while (!frontier.empty()) {
            NielsenTuple t = std::move(frontier.front());
            frontier.pop_front();
            for (BranchPoint w : {BranchPoint::zero, BranchPoint::one}) {
                NielsenTuple next = apply_a(ctx, w, t);
                check_internal(remaining.count(next) || orbit.count(next),
                               "braid orbit left the Nielsen set");
                if (orbit.insert(next).second) frontier.push_back(next);
            }
        }
        Component comp;
        comp.members.assign(orbit.begin(), orbit.end());
        for (const auto& t : comp.members) remaining.erase(t);
        components.push_back(std::move(comp));
    }
    std::sort(components.begin(), components.end(), [](const Component& a, const Component& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members.front() < b.members.front();
    });
    return components;
}

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

} // namespace

FusionResult fuse_isomorphic_components(const GroupContext& ctx, const NielsenSet& ns,
                                        const std::vector<Component>& components,
                                        int max_depth) {
    FusionResult result;
    result.depth_limit = max_depth;
    const int ncomp = static_cast<int>(components.size());
    DisjointSet ds(ncomp);

    std::map<NielsenTuple, int> component_of;
    for (int c = 0; c < ncomp; ++c)
        for (const auto& t : components[static_cast<size_t>(c)].members)
            component_of.emplace(t, c);

    auto signature = [&](const NielsenTuple& t) {
        std::array<uint32_t, 4> sig{};
        for (int i = 0; i < 4; ++i)
            sig[static_cast<size_t>(i)] = ctx.classes.class_of(ctx.group, t.g[static_cast<size_t>(i)]);
        return sig;
    };
    const std::array<uint32_t, 4> target = ns.class_vector.class_index;

    for (int c = 0; c < ncomp; ++c) {
        if (components[static_cast<size_t>(c)].members.empty()) continue;
        // BFS over all Q-moves; intermediate states may carry a permuted
        // class signature.  States are canonical forms, so the walk
        // saturates quickly at small depth.
        std::set<NielsenTuple> visited;
        std::deque<std::pair<NielsenTuple, int>> frontier;
        NielsenTuple start = components[static_cast<size_t>(c)].members.front();
        visited.insert(start);
        frontier.emplace_back(start, 0);
        while (!frontier.empty()) {
            auto [t, depth] = frontier.front();
            frontier.pop_front();
            if (depth >= max_depth) {
                result.depth_exhausted = true;
                continue;
            }
            for (int i = 1; i <= 3; ++i) {
                for (int sign : {1, -1}) {
                    NielsenTuple next = canonicalize_tuple(ctx, apply_q(i, sign, t));
                    if (!visited.insert(next).second) continue;
                    if (signature(next) == target) {
                        auto it = component_of.find(next);
                        check_internal(it != component_of.end(),
                                       "braid move reached an unenumerated Nielsen class");
                        ds.unite(c, it->second);
                    }
                    frontier.emplace_back(next, depth + 1);
                }
            }
        }
    }

    std::map<int, std::vector<int>> buckets;
    for (int c = 0; c < ncomp; ++c) buckets[ds.find(c)].push_back(c);
    for (auto& [root, family] : buckets) {
        std::sort(family.begin(), family.end());
        result.families.push_back(family);
    }
    std::sort(result.families.begin(), result.families.end());
    return result;
}

void braid_convention_self_test() {
    GroupContext ctx = make_context(build_dihedral(7));
    ClassVector cv = resolve_class_vector(ctx, {"2A", "2A", "2A", "2A"});
    NielsenSet ns = enumerate_nielsen(ctx, cv);
    check_internal(!ns.tuples.empty(), "self-test fixture is empty");
    for (const auto& t : ns.tuples) {
        NielsenTuple acc = t;
        for (BranchPoint w : {BranchPoint::zero, BranchPoint::one, BranchPoint::infinity}) {
            check_internal(apply_a(ctx, w, t) == apply_a_closed(ctx, w, t),
                           "Q-word and closed formula disagree");
            acc = apply_a(ctx, w, acc);
        }
        check_internal(acc == t, "a0 a1 ainf is not the identity on classes");
    }
}

} // namespace hurwitz
