#pragma once

#include <utility>

#include "hurwitz/covers.hpp"

namespace hurwitz {

// Flags (a)-(f) for an odd prime p against (G, C).  The generation flag
// comes in two strengths:
//   * generation_f:       every subgroup containing a dihedral group of
//                          order 2p and an element of some C_i is all of G.
//                          This is what the reduction theory actually needs
//                          (the decomposition group of a separable tail
//                          contains a dihedral inertia group of order 2p),
//                          and it holds for all PSL2(ell) table cases.
//   * generation_f_pairs: the stronger pair form <x, c> = G for x of order
//                          p, which fails whenever p divides (ell-1)/2 (the
//                          Borel subgroup contains both orders).  Reported
//                          as a diagnostic only.
struct ReductionConditions {
    int p = 0;
    bool p_odd = false;
    bool orders_prime_to_p = false;     // (b)
    bool p_exactly_divides = false;     // (c)
    bool normalizer_dihedral = false;   // (d)
    bool center_trivial = false;        // (e)
    bool generation_f = false;          // (f), dihedral form
    bool generation_f_pairs = false;    // (f), literal pair form
    SylowData sylow;
    int half_order = 0;                 // k with |N_G(P)| = 2k

    bool all_hold() const {
        return p_odd && orders_prime_to_p && p_exactly_divides && normalizer_dihedral &&
               center_trivial && generation_f;
    }
};

// Odd primes p with p || |G| and p coprime to every m_i.
std::vector<int> admissible_primes(const GroupContext& ctx, const ClassVector& cv);

ReductionConditions check_conditions(const GroupContext& ctx, const ClassVector& cv, int p);

// Sum of e over the cusps above w whose order n is divisible by p;
// equivalently the number of classes in the component with p | ord(gamma_w).
int d_bad(const ComponentReport& report, int p, BranchPoint w);

// (good_ordinary, good_supersingular) = (d - dbad, d - (p+1)/p * dbad).
// Requires p | dbad; a violation is an upstream inconsistency.
std::pair<int, int> good_counts(int degree, int p, int dbad);

// Levels N with p | N and N | k, sorted ascending.
std::vector<int> candidate_levels(const ReductionConditions& conds);

// Multiplicity of a bad component of level N: (p-1)/2 if N = p, else p-1.
int multiplicity(int N, int p);

// Degree of X_2(N') over the lambda-line, computed as the Nielsen count
// |Ni_4^in(D_{4N'}, (2A,2A,2B,2B))|.  N' = 1 and N' = 2 are pinned to 1 and
// 2; the N' = 2 value is cross-checked against the dihedral count.
// Memoized.
int x2_degree(int n_prime);

struct BadStructureSolution {
    std::vector<int> counts;   // aligned with the level list; k_N >= 0
};

enum class SolveStatus { unique, ambiguous, infeasible };

struct BadStructure {
    std::vector<int> levels;
    std::vector<int> multiplicities;
    std::vector<int> x2_degrees;        // of N/p
    std::vector<BadStructureSolution> solutions;
    SolveStatus status = SolveStatus::infeasible;
};

// All k >= 0 vectors with sum k_N * m(N) * p * x2(N/p) = dbad such that
// every bad cusp order divides some level with k_N >= 1.  Ambiguity and
// infeasibility are reported, never silently resolved.
BadStructure solve_bad_structure(int dbad, int p, const std::vector<int>& levels,
                                 const std::vector<int>& bad_cusp_orders);

// Deuring polynomial h_p = sum_i binom(m,i)^2 x^i with m = (p-1)/2,
// coefficients reduced mod p; degree (p-1)/2.
std::vector<int64_t> deuring_polynomial(int p);

// h_p(lambda) = 0 in F_p.  lambda in {0, 1} mod p is rejected.
bool is_supersingular(int64_t lambda, int p);

// Number of points of y^2 = x(x-1)(x-lambda) over F_p (including infinity).
// The curve is supersingular iff this equals p + 1.
int lambda_point_count(int64_t lambda, int p);

// Element of F_{p^2} = F_p[s]/(s^2 - nu), nu the least non-residue.
struct Fp2 {
    int a = 0;
    int b = 0;
    auto operator<=>(const Fp2&) const = default;
};

struct SupersingularData {
    int p = 0;
    int nu = 0;                          // quadratic model parameter
    std::vector<int64_t> deuring;        // h_p coefficients
    std::vector<Fp2> lambdas;            // sorted roots in F_{p^2}
    size_t count() const { return lambdas.size(); }
};

// All roots of h_p over F_{p^2}; hard error unless exactly (p-1)/2 are
// found (separability plus rationality of supersingular lambda over F_{p^2}).
SupersingularData supersingular_lambdas(int p);

// Lower bound on the ramification index of p in the field of moduli of a
// cover with bad reduction of level N: (p-1)/2 for N = p, p-1 for N > p,
// strict (+1) over a supersingular lambda.
int moduli_ramification_bound(int N, int p, bool lambda_supersingular);

// Three-point covers: good reduction iff p divides no ramification index.
bool three_point_reduction(int m1, int m2, int m3, int p);

struct ReductionReport {
    int component_id = -1;
    int p = 0;
    bool conditions_ok = false;
    bool bad = false;
    std::array<int, 3> d_bad_w{};
    std::array<std::vector<int>, 3> bad_orders_w;   // distinct n with p | n, sorted
    int dbad = 0;
    int good_ordinary = 0;
    int good_supersingular = 0;
    BadStructure structure;                         // empty when good
    int moduli_bound = 0;                           // 0 when good
};

ReductionReport reduce_component(const GroupContext& ctx, int component_id,
                                 const ComponentReport& report,
                                 const ReductionConditions& conds);

} // namespace hurwitz
