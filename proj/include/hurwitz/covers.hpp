#pragma once

#include <array>
#include <string>

#include "hurwitz/braid.hpp"

namespace hurwitz {

// One cusp above w: an a_w-orbit of Nielsen classes.  e is the orbit length
// (the ramification index of the cusp); n = ord(gamma_w) is the order of the
// cusp and always a multiple of e.  Cusps with e != n are possible (for
// PSL2(ell) exactly when n = ell and a decomposition group is cyclic).
struct CuspRecord {
    BranchPoint w = BranchPoint::zero;
    std::vector<NielsenTuple> orbit;   // sorted
    int e = 0;
    uint32_t gamma_class = 0;
    int n = 0;

    bool e_equals_n() const { return e == n; }
};

struct RamEntry {
    int e = 0;
    int count = 0;
    auto operator<=>(const RamEntry&) const = default;
};

using RamProfile = std::vector<RamEntry>;   // sorted ascending by e

struct ComponentReport {
    int degree = 0;
    std::array<std::vector<CuspRecord>, 3> cusps;   // indexed by BranchPoint
    std::array<RamProfile, 3> ram;
    int genus = 0;
    std::string ram_string;
};

// a_w-orbit partition of the component.  gamma is evaluated on the least
// orbit member; its class is constant along the orbit.
std::vector<CuspRecord> cusps_over(const GroupContext& ctx, const Component& component,
                                   BranchPoint w);

int cusp_order(const CuspRecord& c);

// Riemann-Hurwitz for a tame cover of the line branched over three points:
// 2g - 2 = -2 deg + sum_c (e_c - 1).  Throws internal_error if the result
// is not a non-negative integer (that signals an orbit bug upstream).
int genus_rh(int degree, const std::array<std::vector<CuspRecord>, 3>& cusps);

ComponentReport component_report(const GroupContext& ctx, const Component& component);

// "a^b" tokens ascending by a, w-parts joined by ';', with '-' when a part
// repeats the previous one: "2^2 6^2;-;1^4 3^4".
std::string format_ram(const std::array<RamProfile, 3>& ram);

// Parses the same notation (also accepting bare "a" for "a^1").  Used for
// fixture diffing.
std::array<RamProfile, 3> parse_ram(const std::string& text);

} // namespace hurwitz
