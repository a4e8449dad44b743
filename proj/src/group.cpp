#include "hurwitz/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

uint32_t FiniteGroup::index(const Permutation& p) const {
    auto it = element_index.find(p);
    check_pre(it != element_index.end(), "element does not belong to the group");
    return it->second;
}

const Permutation& FiniteGroup::identity() const {
    // The identity is lexicographically least, hence element 0.
    return elements.front();
}

namespace {

std::vector<Permutation> closure(int degree, const std::vector<Permutation>& seeds) {
    std::unordered_map<Permutation, char, PermHash> seen;
    std::deque<Permutation> frontier;
    auto add = [&](const Permutation& p) {
        if (seen.emplace(p, 1).second) frontier.push_back(p);
    };
    add(Permutation::identity(degree));
    for (const auto& s : seeds) add(s);
    while (!frontier.empty()) {
        Permutation x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& s : seeds) add(compose(x, s));
    }
    std::vector<Permutation> elements;
    elements.reserve(seen.size());
    for (auto& [p, _] : seen) elements.push_back(p);
    std::sort(elements.begin(), elements.end());
    return elements;
}

FiniteGroup finish_group(int degree, std::vector<Permutation> generators,
                         std::vector<Permutation> elements, std::string label) {
    FiniteGroup G;
    G.degree = degree;
    G.label = std::move(label);
    G.generators = std::move(generators);
    G.elements = std::move(elements);
    G.element_index.reserve(G.elements.size() * 2);
    for (uint32_t i = 0; i < G.elements.size(); ++i) G.element_index.emplace(G.elements[i], i);
    return G;
}

std::string default_letter(int k) {
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('A' + k % 26));
        k = k / 26 - 1;
    } while (k >= 0);
    return s;
}

} // namespace

FiniteGroup build_from_generators(int degree, std::vector<Permutation> generators,
                                  std::string label) {
    check_pre(degree > 0 && degree < 65536, "degree out of range");
    for (const auto& g : generators) {
        check_pre(g.degree() == degree, "generator degree mismatch");
        validate_permutation(g);
    }
    auto elements = closure(degree, generators);
    return finish_group(degree, std::move(generators), std::move(elements), std::move(label));
}

FiniteGroup build_dihedral(int n) {
    check_pre(n >= 1, "dihedral parameter must be >= 1");
    check_pre(n <= 30000, "dihedral parameter too large");
    int degree = n >= 3 ? n : 2 * n;
    Permutation rot, refl;
    if (n >= 3) {
        rot.images.resize(static_cast<size_t>(n));
        refl.images.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            rot.images[static_cast<size_t>(i)] = static_cast<uint16_t>((i + 1) % n);
            refl.images[static_cast<size_t>(i)] = static_cast<uint16_t>((n - i) % n);
        }
    } else if (n == 2) {
        // Klein four group on 4 points: rotation (01)(23), reflection (01).
        rot = parse_permutation("[1 0 3 2]");
        refl = parse_permutation("[1 0 2 3]");
    } else {
        // Order 2 on 2 points.
        rot = Permutation::identity(2);
        refl = parse_permutation("[1 0]");
    }
    auto G = build_from_generators(degree, {rot, refl}, "D" + std::to_string(2 * n));
    check_internal(G.order() == static_cast<size_t>(2 * n), "dihedral group has wrong order");
    if (n % 2 == 0) {
        G.class_name_hints.emplace_back("2A", refl);
        G.class_name_hints.emplace_back("2B", compose(refl, rot));
    } else {
        G.class_name_hints.emplace_back("2A", refl);
    }
    return G;
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<int64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod) {
    int64_t result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

} // namespace

FiniteGroup build_psl2(int ell) {
    check_pre(ell % 2 == 1 && is_prime(ell), "PSL2 parameter must be an odd prime");
    check_pre(ell >= 5, "PSL2 parameter must be >= 5");
    check_pre(ell <= 101, "PSL2 parameter too large for full element tables");
    const int degree = ell + 1;   // points 0..ell-1 are F_ell, point ell is infinity
    const int inf = ell;
    Permutation t, s;
    t.images.resize(static_cast<size_t>(degree));
    s.images.resize(static_cast<size_t>(degree));
    for (int x = 0; x < ell; ++x) t.images[static_cast<size_t>(x)] = static_cast<uint16_t>((x + 1) % ell);
    t.images[static_cast<size_t>(inf)] = static_cast<uint16_t>(inf);
    s.images[0] = static_cast<uint16_t>(inf);
    s.images[static_cast<size_t>(inf)] = 0;
    for (int x = 1; x < ell; ++x) {
        int64_t inv = pow_mod(x, ell - 2, ell);
        s.images[static_cast<size_t>(x)] = static_cast<uint16_t>((ell - inv) % ell);
    }
    auto G = build_from_generators(degree, {t, s}, "psl2:" + std::to_string(ell));
    size_t expected = static_cast<size_t>(ell) * (ell - 1) * (ell + 1) / 2;
    check_internal(G.order() == expected, "PSL2 group has wrong order");

    int nu = 0;
    for (int x = 2; x < ell; ++x) {
        if (pow_mod(x, (ell - 1) / 2, ell) == static_cast<int64_t>(ell - 1)) { nu = x; break; }
    }
    check_internal(nu != 0, "no quadratic non-residue found");
    std::string order_str = std::to_string(ell);
    G.class_name_hints.emplace_back(order_str + "A", t);
    G.class_name_hints.emplace_back(order_str + "B", power(t, nu));
    return G;
}

ConjugacyClassTable conjugacy_classes(const FiniteGroup& G) {
    const size_t n = G.order();
    check_pre(n > 0, "group has no element table");

    ConjugacyClassTable table;
    table.class_of_index.assign(n, 0);
    table.conj_to_rep.assign(n, Permutation());

    std::vector<char> assigned(n, 0);
    // Conjugation orbits, with a transporter to the orbit seed for each
    // member.  Conjugating by generators only is enough: the orbit closure
    // is finite and each conjugation map is injective on it.
    struct RawClass {
        std::vector<uint32_t> member_indices;
    };
    std::vector<RawClass> raw;
    std::vector<Permutation> to_seed(n);

    for (uint32_t start = 0; start < n; ++start) {
        if (assigned[start]) continue;
        RawClass rc;
        std::deque<uint32_t> frontier;
        assigned[start] = 1;
        to_seed[start] = Permutation::identity(G.degree);
        frontier.push_back(start);
        rc.member_indices.push_back(start);
        while (!frontier.empty()) {
            uint32_t xi = frontier.front();
            frontier.pop_front();
            for (const auto& g : G.generators) {
                Permutation y = conjugate(G.elements[xi], g);
                uint32_t yi = G.index(y);
                if (assigned[yi]) continue;
                assigned[yi] = 1;
                // y = x^g and x^{to_seed[x]} = seed, so y^{g^{-1} to_seed[x]} = seed.
                to_seed[yi] = compose(g.inverse(), to_seed[xi]);
                frontier.push_back(yi);
                rc.member_indices.push_back(yi);
            }
        }
        raw.push_back(std::move(rc));
    }

    std::vector<ConjugacyClass> classes;
    std::vector<std::vector<uint32_t>> class_members;
    for (auto& rc : raw) {
        std::sort(rc.member_indices.begin(), rc.member_indices.end());
        uint32_t rep_idx = rc.member_indices.front();  // elements sorted => least index = least member
        ConjugacyClass cc;
        cc.rep = G.elements[rep_idx];
        cc.element_order = static_cast<int>(cc.rep.order());
        cc.members.reserve(rc.member_indices.size());
        for (uint32_t mi : rc.member_indices) cc.members.push_back(G.elements[mi]);
        classes.push_back(std::move(cc));
        class_members.push_back(std::move(rc.member_indices));
    }

    std::vector<size_t> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        if (classes[a].element_order != classes[b].element_order)
            return classes[a].element_order < classes[b].element_order;
        if (classes[a].size() != classes[b].size())
            return classes[a].size() < classes[b].size();
        return classes[a].rep < classes[b].rep;
    });

    for (size_t pos = 0; pos < perm.size(); ++pos) {
        auto& cc = classes[perm[pos]];
        auto& members = class_members[perm[pos]];
        uint32_t rep_idx = members.front();
        for (uint32_t mi : members) {
            table.class_of_index[mi] = static_cast<uint32_t>(pos);
            // member^{to_seed[member] * to_seed[rep]^{-1}} = rep
            table.conj_to_rep[mi] = compose(to_seed[mi], to_seed[rep_idx].inverse());
        }
        table.classes.push_back(std::move(cc));
    }

    // Labels: constructor hints first, then default letters in table order.
    for (const auto& [label, p] : G.class_name_hints) {
        uint32_t ci = table.class_of_index[G.index(p)];
        check_internal(table.classes[ci].label.empty() || table.classes[ci].label == label,
                       "conflicting class label hints");
        table.classes[ci].label = label;
    }
    for (size_t i = 0; i < table.classes.size(); ++i) {
        auto& cc = table.classes[i];
        if (!cc.label.empty()) continue;
        int k = 0;
        for (;;) {
            std::string candidate = std::to_string(cc.element_order) + default_letter(k);
            bool taken = false;
            for (const auto& other : table.classes)
                if (other.label == candidate) { taken = true; break; }
            if (!taken) { cc.label = candidate; break; }
            ++k;
        }
    }

    table.rep_centralizer.resize(table.classes.size());
    for (size_t i = 0; i < table.classes.size(); ++i) {
        const auto& rep = table.classes[i].rep;
        for (const auto& h : G.elements)
            if (conjugate(rep, h) == rep) table.rep_centralizer[i].push_back(h);
    }
    return table;
}

uint32_t ConjugacyClassTable::class_of(const FiniteGroup& G, const Permutation& g) const {
    return class_of_index[G.index(g)];
}

int ConjugacyClassTable::find_label(const std::string& label) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].label == label) return static_cast<int>(i);
    return -1;
}

GroupContext make_context(FiniteGroup group) {
    GroupContext ctx;
    ctx.group = std::move(group);
    ctx.classes = conjugacy_classes(ctx.group);
    return ctx;
}

SubgroupResult subgroup_closure(const FiniteGroup& G, const std::vector<Permutation>& seeds) {
    for (const auto& s : seeds) check_pre(G.contains(s), "seed element outside the group");
    auto elements = closure(G.degree, seeds);
    SubgroupResult result;
    result.is_whole = elements.size() == G.order();
    std::vector<Permutation> gens = seeds;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    result.subgroup = finish_group(G.degree, std::move(gens), std::move(elements),
                                   G.label + ":subgroup");
    return result;
}

bool generates_whole(const FiniteGroup& G, const std::vector<Permutation>& seeds) {
    if (seeds.empty()) return G.order() == 1;
    const size_t n = G.order();
    const size_t threshold = n / 2;
    std::vector<char> in(n, 0);
    std::vector<uint32_t> stack;
    size_t count = 0;
    auto add = [&](const Permutation& p) {
        uint32_t idx = G.index(p);
        if (!in[idx]) {
            in[idx] = 1;
            ++count;
            stack.push_back(idx);
        }
    };
    add(Permutation::identity(G.degree));
    for (const auto& s : seeds) add(s);
    while (!stack.empty()) {
        // Once the partial closure exceeds |G|/2 the generated subgroup has
        // index < 2, hence equals G.
        if (count > threshold) return true;
        uint32_t xi = stack.back();
        stack.pop_back();
        for (const auto& s : seeds) add(compose(G.elements[xi], s));
    }
    return count == n;
}

FiniteGroup centralizer(const FiniteGroup& G, const Permutation& g) {
    check_pre(G.contains(g), "element outside the group");
    std::vector<Permutation> members;
    for (const auto& h : G.elements)
        if (conjugate(g, h) == g) members.push_back(h);
    return finish_group(G.degree, members, members, G.label + ":centralizer");
}

std::vector<Permutation> center(const FiniteGroup& G) {
    std::vector<Permutation> result;
    for (const auto& h : G.elements) {
        bool central = true;
        for (const auto& g : G.generators)
            if (compose(h, g) != compose(g, h)) { central = false; break; }
        if (central) result.push_back(h);
    }
    return result;
}

SylowData sylow_normalizer_analysis(const FiniteGroup& G, int p) {
    check_pre(p >= 3 && p % 2 == 1 && is_prime(p), "p must be an odd prime");
    size_t n = G.order();
    check_pre(n % static_cast<size_t>(p) == 0, "p does not divide the group order");
    check_pre((n / static_cast<size_t>(p)) % static_cast<size_t>(p) != 0,
              "p^2 divides the group order");

    SylowData data;
    data.p = p;
    bool found = false;
    for (const auto& e : G.elements) {
        if (e.order() == p) { data.sylow_generator = e; found = true; break; }
    }
    check_internal(found, "no element of order p (Cauchy violation)");

    // Powers of the Sylow generator, for the normalizer membership test.
    std::unordered_map<Permutation, char, PermHash> sylow_members;
    Permutation acc = Permutation::identity(G.degree);
    for (int i = 0; i < p; ++i) {
        sylow_members.emplace(acc, 1);
        acc = compose(acc, data.sylow_generator);
    }

    std::vector<Permutation> normalizer_members;
    for (const auto& h : G.elements)
        if (sylow_members.count(conjugate(data.sylow_generator, h)))
            normalizer_members.push_back(h);
    data.normalizer = finish_group(G.degree, normalizer_members, normalizer_members,
                                   G.label + ":sylow-normalizer");

    size_t norm_order = data.normalizer.order();
    if (norm_order % 2 != 0) return data;  // no involution, cannot be dihedral
    int k = static_cast<int>(norm_order / 2);

    for (const auto& r : data.normalizer.elements) {
        if (r.order() != k) continue;
        Permutation r_inv = r.inverse();
        for (const auto& s : data.normalizer.elements) {
            if (s.order() != 2) continue;
            if (conjugate(r, s) != r_inv) continue;
            // s outside <r>: <r, s> then has 2k elements, i.e. the whole normalizer.
            bool in_cyclic = false;
            Permutation rp = Permutation::identity(G.degree);
            for (int i = 0; i < k; ++i) {
                if (rp == s) { in_cyclic = true; break; }
                rp = compose(rp, r);
            }
            if (in_cyclic) continue;
            data.is_dihedral = true;
            data.half_order = k;
            data.rotation_generator = r;
            data.reflection = s;
            return data;
        }
    }
    return data;
}

} // namespace hurwitz
