#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "hurwitz/braid.hpp"
#include "hurwitz/errors.hpp"

using namespace hurwitz;

namespace {

NielsenSet nielsen_of(const GroupContext& ctx, const std::array<std::string, 4>& labels) {
    return enumerate_nielsen(ctx, resolve_class_vector(ctx, labels));
}

} // namespace

TEST_CASE("apply_q: inverse move undoes the move, product is preserved") {
    auto ctx = make_context(build_psl2(5));
    auto ns = nielsen_of(ctx, {"5A", "5A", "5B", "5B"});
    for (const auto& t : ns.tuples) {
        for (int i = 1; i <= 3; ++i) {
            auto forward = apply_q(i, 1, t);
            CHECK(tuple_product(forward).is_identity());
            CHECK(apply_q(i, -1, forward) == t);
            CHECK(apply_q(i, 1, apply_q(i, -1, t)) == t);
        }
    }
    CHECK_THROWS_AS(apply_q(4, 1, ns.tuples.front()), precondition_error);
    CHECK_THROWS_AS(apply_q(0, 1, ns.tuples.front()), precondition_error);
}

TEST_CASE("Q3^2 equals the closed form (g1, g2, g3^c, g4^c), c = g3 g4, on raw tuples") {
    auto ctx = make_context(build_psl2(11));
    auto ns = nielsen_of(ctx, {"11A", "11A", "11B", "11B"});
    size_t step = std::max<size_t>(1, ns.d() / 10);
    for (size_t i = 0; i < ns.d(); i += step) {
        const auto& t = ns.tuples[i];
        auto moved = apply_word(a_word(BranchPoint::infinity), t);
        Permutation c = compose(t.g[2], t.g[3]);
        NielsenTuple expected{{t.g[0], t.g[1], conjugate(t.g[2], c), conjugate(t.g[3], c)}};
        CHECK(moved == expected);
    }
}

TEST_CASE("braid relations hold on raw tuples") {
    auto ctx = make_context(build_psl2(5));
    for (auto labels : std::vector<std::array<std::string, 4>>{{"5A", "5A", "5B", "5B"},
                                                               {"5A", "5A", "5A", "5A"}}) {
        auto ns = nielsen_of(ctx, labels);
        for (const auto& t : ns.tuples) {
            CHECK(apply_word({1, 2, 1}, t) == apply_word({2, 1, 2}, t));
            CHECK(apply_word({2, 3, 2}, t) == apply_word({3, 2, 3}, t));
            CHECK(apply_word({1, 3}, t) == apply_word({3, 1}, t));
        }
    }
}

TEST_CASE("sphere relation Q1 Q2 Q3^2 Q2 Q1 acts by a global conjugation") {
    auto ctx = make_context(build_psl2(5));
    auto ns = nielsen_of(ctx, {"5A", "5A", "5B", "5B"});
    for (const auto& t : ns.tuples) {
        auto moved = apply_word({1, 2, 3, 3, 2, 1}, t);
        CHECK(canonicalize_tuple(ctx, moved) == t);
        bool is_conjugate = false;
        for (const auto& h : ctx.group.elements)
            if (conjugate_tuple(t, h) == moved) { is_conjugate = true; break; }
        CHECK(is_conjugate);
    }
}

TEST_CASE("a-words agree with the closed formulas on every class (several fixtures)") {
    std::vector<GroupContext> contexts;
    contexts.push_back(make_context(build_psl2(5)));
    contexts.push_back(make_context(build_dihedral(7)));
    std::vector<std::array<std::string, 4>> vectors = {{"5A", "5A", "5B", "5B"},
                                                       {"2A", "2A", "2A", "2A"}};
    for (size_t k = 0; k < contexts.size(); ++k) {
        auto& ctx = contexts[k];
        auto ns = nielsen_of(ctx, vectors[k]);
        REQUIRE(ns.d() > 0);
        for (const auto& t : ns.tuples)
            for (BranchPoint w : {BranchPoint::zero, BranchPoint::one, BranchPoint::infinity})
                CHECK(apply_a(ctx, w, t) == apply_a_closed(ctx, w, t));
    }
}

TEST_CASE("a0 a1 ainf is the identity on canonical classes") {
    auto ctx = make_context(build_psl2(5));
    auto ns = nielsen_of(ctx, {"5A", "5A", "5B", "5B"});
    for (const auto& t : ns.tuples) {
        auto u = apply_a(ctx, BranchPoint::zero, t);
        u = apply_a(ctx, BranchPoint::one, u);
        u = apply_a(ctx, BranchPoint::infinity, u);
        CHECK(u == t);
    }
}

TEST_CASE("ainf fixes a class whose g3 g4 is trivial") {
    // (s, s, st, st) in D8 has g3 g4 = 1.
    auto ctx = make_context(build_dihedral(4));
    auto ns = nielsen_of(ctx, {"2A", "2A", "2B", "2B"});
    bool found = false;
    for (const auto& t : ns.tuples) {
        if (compose(t.g[2], t.g[3]).is_identity()) {
            found = true;
            CHECK(apply_a(ctx, BranchPoint::infinity, t) == t);
        }
    }
    CHECK(found);
}

TEST_CASE("decompose_components reproduces the worked orbit sizes") {
    auto psl11 = make_context(build_psl2(11));
    auto ns11 = nielsen_of(psl11, {"11A", "11A", "11B", "11B"});
    auto comps11 = decompose_components(psl11, ns11);
    std::vector<int> sizes;
    for (const auto& c : comps11) sizes.push_back(c.degree());
    CHECK(sizes == std::vector<int>{2, 16, 33});

    auto psl5 = make_context(build_psl2(5));
    auto ns5 = nielsen_of(psl5, {"5A", "5A", "5B", "5B"});
    auto comps5 = decompose_components(psl5, ns5);
    sizes.clear();
    for (const auto& c : comps5) sizes.push_back(c.degree());
    CHECK(sizes == std::vector<int>{2, 5});

    auto nsA5 = nielsen_of(psl5, {"3A", "3A", "3A", "3A"});
    auto compsA5 = decompose_components(psl5, nsA5);
    REQUIRE(compsA5.size() == 1);
    CHECK(compsA5.front().degree() == 18);
}

TEST_CASE("orbit decomposition does not depend on the input order") {
    auto ctx = make_context(build_psl2(5));
    auto ns = nielsen_of(ctx, {"5A", "5A", "5B", "5B"});
    NielsenSet shuffled = ns;
    std::mt19937 rng(12345);
    std::shuffle(shuffled.tuples.begin(), shuffled.tuples.end(), rng);
    auto a = decompose_components(ctx, ns);
    auto b = decompose_components(ctx, shuffled);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].members == b[i].members);
}

TEST_CASE("components partition the Nielsen set") {
    auto ctx = make_context(build_psl2(7));
    for (auto labels : std::vector<std::array<std::string, 4>>{{"7A", "7A", "7B", "7B"},
                                                               {"7A", "7A", "7A", "7A"}}) {
        auto ns = nielsen_of(ctx, labels);
        auto comps = decompose_components(ctx, ns);
        size_t total = 0;
        std::set<NielsenTuple> seen;
        for (const auto& c : comps) {
            total += c.members.size();
            for (const auto& t : c.members) CHECK(seen.insert(t).second);
        }
        CHECK(total == ns.d());
    }
}

TEST_CASE("fusion: PSL2(7) AAAA has three isomorphic degree-2 components") {
    auto ctx = make_context(build_psl2(7));
    auto ns = nielsen_of(ctx, {"7A", "7A", "7A", "7A"});
    auto comps = decompose_components(ctx, ns);
    std::vector<int> sizes;
    for (const auto& c : comps) sizes.push_back(c.degree());
    CHECK(sizes == std::vector<int>{2, 2, 2, 7});

    auto fusion = fuse_isomorphic_components(ctx, ns, comps, 8);
    REQUIRE(fusion.families.size() == 2);
    CHECK(fusion.families[0] == std::vector<int>{0, 1, 2});
    CHECK(fusion.families[1] == std::vector<int>{3});
}

TEST_CASE("fusion: PSL2(11) AABB components stay separate") {
    auto ctx = make_context(build_psl2(11));
    auto ns = nielsen_of(ctx, {"11A", "11A", "11B", "11B"});
    auto comps = decompose_components(ctx, ns);
    auto fusion = fuse_isomorphic_components(ctx, ns, comps, 8);
    REQUIRE(fusion.families.size() == 3);
    for (int c = 0; c < 3; ++c) CHECK(fusion.families[static_cast<size_t>(c)] == std::vector<int>{c});
}

TEST_CASE("fusion: a single component forms a single family") {
    auto ctx = make_context(build_psl2(5));
    auto ns = nielsen_of(ctx, {"3A", "3A", "3A", "3A"});
    auto comps = decompose_components(ctx, ns);
    REQUIRE(comps.size() == 1);
    auto fusion = fuse_isomorphic_components(ctx, ns, comps, 8);
    CHECK(fusion.families == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("generic permutation group (A4) satisfies the braid laws end to end") {
    auto A4 = build_from_generators(
        4, {parse_permutation("[1 2 0 3]"), parse_permutation("[1 0 3 2]")}, "A4");
    REQUIRE(A4.order() == 12);
    auto ctx = make_context(std::move(A4));
    auto cv = resolve_class_vector(ctx, {"3A", "3A", "3B", "3B"});
    auto ns = enumerate_nielsen(ctx, cv);
    REQUIRE(ns.d() > 0);
    auto comps = decompose_components(ctx, ns);
    size_t total = 0;
    for (const auto& c : comps) total += c.members.size();
    CHECK(total == ns.d());
    for (const auto& t : ns.tuples) {
        CHECK(apply_word({1, 2, 1}, t) == apply_word({2, 1, 2}, t));
        NielsenTuple acc = t;
        for (BranchPoint w : {BranchPoint::zero, BranchPoint::one, BranchPoint::infinity}) {
            CHECK(apply_a(ctx, w, t) == apply_a_closed(ctx, w, t));
            acc = apply_a(ctx, w, acc);
        }
        CHECK(acc == t);
    }
}

TEST_CASE("startup self-test passes") {
    CHECK_NOTHROW(braid_convention_self_test());
}
