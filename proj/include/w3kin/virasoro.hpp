#pragma once

#include "laurent.hpp"

#include <numbers>
#include <vector>

namespace w3 {

/* Virasoro Coulomb gas, kept separate from the rank-2 machinery: here
 * Q = (1/b - b)/2, h_alpha = alpha(alpha - 2Q), and charges are scalars
 * alpha_{rs} = (1-r)/(2b) - (1-s)b/2 with rational indices. */
struct VirCharge {
    Rational r, s;

    friend bool operator==(const VirCharge& a, const VirCharge& b) = default;
};

/* c = 1 - 24 Q^2 = 13 - 6/b^2 - 6 b^2 */
inline const LaurentPoly& vir_c()
{
    static const LaurentPoly c{{-2, -6}, {0, 13}, {2, -6}};
    return c;
}

/* h_{rs} = ((r/b - s*b)^2 - (1/b - b)^2)/4 */
inline LaurentPoly vir_h(const Rational& r, const Rational& s)
{
    LaurentPoly h;
    h.add_term(-2, (r * r - 1) / 4);
    h.add_term(0, (2 - 2 * r * s) / 4);
    h.add_term(2, (s * s - 1) / 4);
    return h;
}

inline LaurentPoly vir_h(const VirCharge& a) { return vir_h(a.r, a.s); }

/* V_alpha == V_{2Q-alpha}; on indices, alpha_{rs} -> alpha_{-r,-s} */
inline VirCharge vir_reflect(const VirCharge& a) { return {-a.r, -a.s}; }

/* Phi_{rs} x V_alpha: the r*s charges alpha_{r', s'} with r' = r0 + r - 1 - 2j,
 * s' = s0 + s - 1 - 2k (j < r, k < s) for alpha = alpha_{r0,s0} */
inline std::vector<VirCharge> vir_fuse_deg_generic(long r, long s, const VirCharge& a)
{
    if (r < 1 || s < 1)
        throw std::invalid_argument("degenerate field needs positive integer indices");
    std::vector<VirCharge> out;
    for (long j = 0; j < r; ++j)
        for (long k = 0; k < s; ++k)
            out.push_back({a.r + r - 1 - 2 * j, a.s + s - 1 - 2 * k});
    return out;
}

/* the spin field: the unique fixed point of Phi_21-fusion up to reflection */
inline VirCharge vir_spin() { return {rat(1, 2), 0}; }

/* generic-b Z2 charge s - 1; rational-model form picks the parity-invariant
 * combination (exactly one of p, p' is even unless both are odd) */
inline int vir_z2(long /*r*/, long s) { return static_cast<int>(((s - 1) % 2 + 2) % 2); }

inline int vir_z2_in_model(long r, long s, long p, long pp)
{
    long q;
    if (p % 2 == 0)
        q = r - 1;
    else if (pp % 2 == 0)
        q = s - 1;
    else
        q = r + s;
    return static_cast<int>(((q % 2) + 2) % 2);
}

/* is Phi_{rs} a member of spin x spin?  Some term of Phi_{rs} x V_spin must
 * equal alpha_spin or its reflection; this happens iff s is odd. */
inline bool vir_spin_contains(long r, long s)
{
    VirCharge spin = vir_spin();
    for (const auto& t : vir_fuse_deg_generic(r, s, spin))
        if (t == spin || t == vir_reflect(spin))
            return true;
    return false;
}

struct VirSectorReport {
    bool pass = true;
    std::vector<std::pair<long, long>> mismatches;
};

/* exhaustive check to the cutoff: membership iff even Z2 charge (s odd) */
inline VirSectorReport vir_sector_check(long cutoff)
{
    VirSectorReport rep;
    for (long r = 1; r <= cutoff; ++r)
        for (long s = 1; s <= cutoff; ++s)
            if (vir_spin_contains(r, s) != (vir_z2(r, s) == 0))
                rep.mismatches.emplace_back(r, s);
    rep.pass = rep.mismatches.empty();
    return rep;
}

/* in M_{p,p'} with p odd and p' even, the spin field sits at the center of
 * the Kac table: Phi_{(p-1)/2, p'/2} == Phi_{(p+1)/2, p'/2} */
inline std::pair<VirCharge, VirCharge> vir_spin_in_model(long p, long pp)
{
    if (p % 2 == 0 || pp % 2 != 0)
        throw std::invalid_argument("spin field identification needs p odd, p' even");
    return {VirCharge{rat(p - 1, 2), rat(pp, 2)},
            VirCharge{rat(p + 1, 2), rat(pp, 2)}};
}

struct VirCurveRow {
    double b, c, h_spin, h_eps_potts, h_eps_on, h_12, q_of_b, n_of_b;
};

/* h_spin with eps = Phi_21 traces the Potts critical/tricritical curve and
 * with eps = Phi_13 the O(n) dense/dilute curve; Q = 4 cos^2(pi b^2) is the
 * Potts state count (sqrt(Q) = -2 cos(pi b^2)), n = -2 cos(pi / b^2) */
inline std::vector<VirCurveRow> vir_curves(const std::vector<double>& grid)
{
    const LaurentPoly hs = vir_h(vir_spin()), h21 = vir_h(2, 1), h13 = vir_h(1, 3),
                      h12 = vir_h(1, 2);
    const double pi = std::numbers::pi;
    std::vector<VirCurveRow> out;
    for (double b : grid) {
        double sq = -2 * std::cos(pi * b * b);
        out.push_back({b, vir_c().eval(b), hs.eval(b), h21.eval(b), h13.eval(b), h12.eval(b),
                       sq * sq, -2 * std::cos(pi / (b * b))});
    }
    return out;
}

} // namespace w3
