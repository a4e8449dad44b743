#include "hurwitz/nielsen.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <set>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

struct ParsedLabel {
    int order = 0;
    std::string letter;
};

ParsedLabel parse_label(const std::string& name) {
    ParsedLabel out;
    size_t i = 0;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
    check_pre(i > 0, "class label must start with the element order: " + name);
    out.order = std::stoi(name.substr(0, i));
    out.letter = name.substr(i);
    return out;
}

} // namespace

ClassVector resolve_class_vector(const GroupContext& ctx,
                                 const std::array<std::string, 4>& names) {
    const auto& table = ctx.classes;
    ClassVector cv;
    for (int i = 0; i < 4; ++i) {
        const std::string& name = names[static_cast<size_t>(i)];
        ParsedLabel parsed = parse_label(name);
        int found = -1;
        if (parsed.letter.empty()) {
            // Bare order: unambiguous only if a single class has it.
            int count = 0;
            for (size_t c = 0; c < table.classes.size(); ++c) {
                if (table.classes[c].element_order == parsed.order) {
                    found = static_cast<int>(c);
                    ++count;
                }
            }
            check_pre(count != 0, "no class of order " + std::to_string(parsed.order));
            check_pre(count == 1, "ambiguous class label: " + name);
        } else {
            found = table.find_label(name);
            check_pre(found >= 0, "unknown class label: " + name);
        }
        cv.class_index[static_cast<size_t>(i)] = static_cast<uint32_t>(found);
        cv.orders[static_cast<size_t>(i)] = table.classes[static_cast<size_t>(found)].element_order;
        cv.labels[static_cast<size_t>(i)] = table.classes[static_cast<size_t>(found)].label;
    }
    return cv;
}

NielsenTuple conjugate_tuple(const NielsenTuple& t, const Permutation& h) {
    NielsenTuple r;
    for (int i = 0; i < 4; ++i) r.g[static_cast<size_t>(i)] = conjugate(t.g[static_cast<size_t>(i)], h);
    return r;
}

Permutation tuple_product(const NielsenTuple& t) {
    return compose(compose(compose(t.g[0], t.g[1]), t.g[2]), t.g[3]);
}

NielsenTuple canonicalize_tuple(const GroupContext& ctx, const NielsenTuple& t) {
    const auto& G = ctx.group;
    const auto& table = ctx.classes;
    uint32_t idx1 = G.index(t.g[0]);
    uint32_t cls = table.class_of_index[idx1];
    NielsenTuple base = conjugate_tuple(t, table.conj_to_rep[idx1]);
    // base.g[0] is now the class representative, the least value the first
    // entry can take.  The remaining freedom is its centralizer.
    NielsenTuple best = base;
    for (const auto& z : table.rep_centralizer[cls]) {
        if (z.is_identity()) continue;
        NielsenTuple cand;
        cand.g[0] = base.g[0];
        cand.g[1] = conjugate(base.g[1], z);
        if (cand.g[1] > best.g[1]) continue;
        cand.g[2] = conjugate(base.g[2], z);
        cand.g[3] = conjugate(base.g[3], z);
        if (cand < best) best = cand;
    }
    return best;
}

namespace {

// Enumerate the g2 indices in [begin, end); shared read-only context.
std::vector<NielsenTuple> enumerate_shard(const GroupContext& ctx, const ClassVector& cv,
                                          const Permutation& g1, bool generation_filter,
                                          size_t begin, size_t end) {
    const auto& G = ctx.group;
    const auto& table = ctx.classes;
    const auto& c2 = table.classes[cv.class_index[1]].members;
    const auto& c3 = table.classes[cv.class_index[2]].members;
    const uint32_t want4 = cv.class_index[3];

    std::set<NielsenTuple> out;
    for (size_t i2 = begin; i2 < end; ++i2) {
        const Permutation& g2 = c2[i2];
        bool pair_generates = generation_filter && generates_whole(G, {g1, g2});
        Permutation p12 = compose(g1, g2);
        for (const Permutation& g3 : c3) {
            Permutation p123 = compose(p12, g3);
            Permutation g4 = p123.inverse();
            if (table.class_of_index[G.index(g4)] != want4) continue;
            if (generation_filter && !pair_generates &&
                !generates_whole(G, {g1, g2, g3}))
                continue;
            NielsenTuple t{{g1, g2, g3, g4}};
            out.insert(canonicalize_tuple(ctx, t));
        }
    }
    return {out.begin(), out.end()};
}

} // namespace

NielsenSet enumerate_nielsen(const GroupContext& ctx, const ClassVector& cv,
                             const EnumerateOptions& options) {
    const auto& table = ctx.classes;
    Permutation g1 = table.classes[cv.class_index[0]].rep;
    if (options.anchor) {
        check_pre(table.class_of(ctx.group, *options.anchor) == cv.class_index[0],
                  "anchor must lie in C1");
        g1 = *options.anchor;
    }
    const size_t n2 = table.classes[cv.class_index[1]].members.size();
    int workers = std::max(1, options.workers);

    std::vector<std::vector<NielsenTuple>> shards;
    if (workers == 1 || n2 < 2) {
        shards.push_back(enumerate_shard(ctx, cv, g1, options.generation_filter, 0, n2));
    } else {
        size_t chunks = std::min<size_t>(static_cast<size_t>(workers), n2);
        std::vector<std::future<std::vector<NielsenTuple>>> futures;
        for (size_t c = 0; c < chunks; ++c) {
            size_t begin = n2 * c / chunks;
            size_t end = n2 * (c + 1) / chunks;
            futures.push_back(std::async(std::launch::async, [&, begin, end] {
                return enumerate_shard(ctx, cv, g1, options.generation_filter, begin, end);
            }));
        }
        for (auto& f : futures) shards.push_back(f.get());
    }

    std::set<NielsenTuple> merged;
    for (auto& shard : shards) merged.insert(shard.begin(), shard.end());

    NielsenSet ns;
    ns.class_vector = cv;
    ns.tuples.assign(merged.begin(), merged.end());
    return ns;
}

} // namespace hurwitz
