#include "hurwitz/covers.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::vector<CuspRecord> cusps_over(const GroupContext& ctx, const Component& component,
                                   BranchPoint w) {
    std::map<NielsenTuple, char> unvisited;
    for (const auto& t : component.members) unvisited.emplace(t, 1);

    std::vector<CuspRecord> cusps;
    while (!unvisited.empty()) {
        NielsenTuple start = unvisited.begin()->first;
        CuspRecord rec;
        rec.w = w;
        NielsenTuple t = start;
        do {
            check_internal(unvisited.erase(t) == 1, "a_w orbit escaped the component");
            rec.orbit.push_back(t);
            t = apply_a(ctx, w, t);
        } while (!(t == start));
        std::sort(rec.orbit.begin(), rec.orbit.end());
        rec.e = static_cast<int>(rec.orbit.size());
        Permutation gamma = gamma_of(w, rec.orbit.front());
        rec.gamma_class = ctx.classes.class_of(ctx.group, gamma);
        rec.n = ctx.classes.classes[rec.gamma_class].element_order;
        check_internal(rec.n % rec.e == 0, "a_w orbit length does not divide the cusp order");
#ifndef NDEBUG
        for (const auto& m : rec.orbit)
            check_internal(ctx.classes.class_of(ctx.group, gamma_of(w, m)) == rec.gamma_class,
                           "gamma class not constant along the cusp orbit");
#endif
        cusps.push_back(std::move(rec));
    }
    std::sort(cusps.begin(), cusps.end(), [](const CuspRecord& a, const CuspRecord& b) {
        return a.orbit.front() < b.orbit.front();
    });
    return cusps;
}

int cusp_order(const CuspRecord& c) {
    check_internal(c.n % c.e == 0, "orbit length does not divide the cusp order");
    return c.n;
}

namespace {

RamProfile profile_of(const std::vector<CuspRecord>& cusps) {
    std::map<int, int> counts;
    for (const auto& c : cusps) counts[c.e] += 1;
    RamProfile profile;
    for (auto [e, count] : counts) profile.push_back({e, count});
    return profile;
}

} // namespace

int genus_rh(int degree, const std::array<std::vector<CuspRecord>, 3>& cusps) {
    int64_t rhs = -2 * static_cast<int64_t>(degree);
    for (const auto& list : cusps) {
        int64_t total = 0;
        for (const auto& c : list) {
            rhs += c.e - 1;
            total += c.e;
        }
        check_internal(total == degree, "cusp ramification indices do not sum to the degree");
    }
    check_internal(rhs % 2 == 0, "Riemann-Hurwitz parity violated");
    int64_t g = (rhs + 2) / 2;
    check_internal(g >= 0, "negative genus");
    return static_cast<int>(g);
}

ComponentReport component_report(const GroupContext& ctx, const Component& component) {
    ComponentReport rep;
    rep.degree = component.degree();
    for (BranchPoint w : {BranchPoint::zero, BranchPoint::one, BranchPoint::infinity}) {
        auto& slot = rep.cusps[static_cast<size_t>(w)];
        slot = cusps_over(ctx, component, w);
        rep.ram[static_cast<size_t>(w)] = profile_of(slot);
    }
    rep.genus = genus_rh(rep.degree, rep.cusps);
    rep.ram_string = format_ram(rep.ram);
    return rep;
}

std::string format_ram(const std::array<RamProfile, 3>& ram) {
    std::array<std::string, 3> parts;
    for (size_t w = 0; w < 3; ++w) {
        std::ostringstream os;
        for (size_t i = 0; i < ram[w].size(); ++i) {
            if (i) os << ' ';
            os << ram[w][i].e << '^' << ram[w][i].count;
        }
        parts[w] = os.str();
    }
    std::string out = parts[0];
    for (size_t w = 1; w < 3; ++w) {
        out += ';';
        out += (parts[w] == parts[w - 1]) ? "-" : parts[w];
    }
    return out;
}

std::array<RamProfile, 3> parse_ram(const std::string& text) {
    std::array<RamProfile, 3> out;
    std::array<std::string, 3> parts;
    size_t pos = 0;
    for (size_t w = 0; w < 3; ++w) {
        size_t next = text.find(';', pos);
        check_pre(w == 2 ? next == std::string::npos : next != std::string::npos,
                  "ramification string must have three ';'-separated parts: " + text);
        parts[w] = text.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next + 1;
    }
    for (size_t w = 0; w < 3; ++w) {
        std::string part = parts[w];
        // trim
        while (!part.empty() && part.front() == ' ') part.erase(part.begin());
        while (!part.empty() && part.back() == ' ') part.pop_back();
        if (part == "-") {
            check_pre(w > 0, "ditto mark in the first ramification part");
            out[w] = out[w - 1];
            continue;
        }
        std::map<int, int> counts;
        std::istringstream is(part);
        std::string token;
        while (is >> token) {
            size_t caret = token.find('^');
            int e = std::stoi(token.substr(0, caret));
            int count = caret == std::string::npos ? 1 : std::stoi(token.substr(caret + 1));
            check_pre(e >= 1 && count >= 1, "bad ramification token: " + token);
            counts[e] += count;
        }
        for (auto [e, count] : counts) out[w].push_back({e, count});
    }
    return out;
}

} // namespace hurwitz
