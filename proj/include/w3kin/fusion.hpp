#pragma once

#include "models.hpp"

namespace w3 {

enum class FuseMode { self, conjugate };

struct FusionTerm {
    KacCharge charge;
    long mult;
};

/* Phi_{lam,mu} x V_alpha: one term V with (n1,n2) += lam'-coords and
 * (m1,m2) += mu'-coords per weight pair, multiplicity m_lam(lam')*m_mu(mu').
 * (alpha - Q = -P/b + R*b, and the fused charge is alpha - lam'/b + mu'*b,
 * which shifts P by +lam' and R by +mu'.) */
inline std::vector<FusionTerm> fuse_deg_generic(const Weight& lam, const Weight& mu,
                                                const KacCharge& alpha)
{
    const Irrep& rl = weight_system(lam);
    const Irrep& rm = weight_system(mu);
    std::vector<FusionTerm> out;
    for (const auto& [lp, ml] : rl.table)
        for (const auto& [mp, mm] : rm.table)
            out.push_back({charge_from_split(alpha.P() + lp, alpha.R() + mp), ml * mm});
    std::sort(out.begin(), out.end(),
              [](const FusionTerm& a, const FusionTerm& b) { return a.charge < b.charge; });
    return out;
}

/* Phi_{lam,mu} x Phi_{lam',mu'} at generic b: terms Phi_{lam'',mu''} with
 * multiplicity N_{lam lam'}^{lam''} * N_{mu mu'}^{mu''}; fields are labelled
 * by their all-positive-integer Kac indices (lam''+rho, mu''+rho). */
inline std::vector<FusionTerm> fuse_deg_deg(const KacCharge& f1, const KacCharge& f2)
{
    auto lab1 = degenerate_labels(f1), lab2 = degenerate_labels(f2);
    if (!lab1 || !lab2)
        throw std::invalid_argument("deg x deg fusion needs completely degenerate fields");
    auto dl = tensor_decompose(lab1->first, lab2->first);
    auto dm = tensor_decompose(lab1->second, lab2->second);
    std::vector<FusionTerm> out;
    for (const auto& [l, nl] : dl)
        for (const auto& [m, nm] : dm)
            out.push_back({charge_from_split(l + RHO, m + RHO), nl * nm});
    return out;
}

/* model truncation: fuse the canonical triple representatives, drop terms
 * outside the Kac table, re-canonicalize survivors.  (The surviving set is a
 * convention: it depends on which triple member is fused.) */
inline std::vector<DegenerateField> fuse_in_model(const DegenerateField& f1,
                                                  const DegenerateField& f2,
                                                  const RationalModel& m)
{
    std::vector<DegenerateField> out;
    for (const auto& t : fuse_deg_deg(f1.canonical, f2.canonical)) {
        if (!in_table(t.charge, m))
            continue;
        DegenerateField f = make_field(t.charge, m);
        if (std::find(out.begin(), out.end(), f) == out.end())
            out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/* generic-b Weyl-equivalence test: does some x map (P+lam', R+mu') onto the
 * target split pair, with lam' in [lam] and mu' in [mu]? */
inline bool contains_weyl(const Weight& lam, const Weight& mu, const KacCharge& alpha,
                          FuseMode mode)
{
    KacCharge target = (mode == FuseMode::self) ? conjugate(alpha) : alpha;
    const Irrep& rl = weight_system(lam);
    const Irrep& rm = weight_system(mu);
    for (const auto& x : weyl_elements()) {
        const WeylElement& xi = weyl_inverse(x);
        Weight lp = xi(target.P()) - alpha.P();
        Weight mp = xi(target.R()) - alpha.R();
        if (!lp.integral() || !mp.integral())
            continue;
        if (multiplicity(rl, lp) > 0 && multiplicity(rm, mp) > 0)
            return true;
    }
    return false;
}

/* completely degenerate alpha: the Weyl test over-reports (x = id with
 * lam' = 0 passes whenever 0 is a weight of [lam]), so membership is decided
 * by the tensor rule instead */
inline bool contains_tensor(const Weight& lam, const Weight& mu, const KacCharge& alpha,
                            FuseMode mode)
{
    auto lab = degenerate_labels(alpha);
    Weight la = lab->first, ma = lab->second;
    Weight lb = (mode == FuseMode::self) ? la : conjugate_weight(la);
    Weight mb = (mode == FuseMode::self) ? ma : conjugate_weight(ma);
    Weight lt = (mode == FuseMode::self) ? conjugate_weight(lam) : lam;
    Weight mt = (mode == FuseMode::self) ? conjugate_weight(mu) : mu;
    return tensor_multiplicity(la, lb, lt) > 0 && tensor_multiplicity(ma, mb, mt) > 0;
}

} // namespace detail

/* Does Phi*_{lam,mu} appear in alpha x alpha (self), or Phi_{lam,mu} in
 * alpha x alpha* (conjugate)?  Exact rational decision procedure. */
inline bool contains_in_fusion(const Weight& lam, const Weight& mu, const KacCharge& alpha,
                               FuseMode mode)
{
    if (!lam.dominant() || !mu.dominant())
        throw std::invalid_argument("membership test needs dominant integral weights");
    if (classify(alpha) == FieldClass::completely_degenerate)
        return detail::contains_tensor(lam, mu, alpha, mode);
    return detail::contains_weyl(lam, mu, alpha, mode);
}

inline bool contains_in_self_fusion(const Weight& lam, const Weight& mu, const KacCharge& alpha)
{
    return contains_in_fusion(lam, mu, alpha, FuseMode::self);
}

inline bool contains_in_conjugate_fusion(const Weight& lam, const Weight& mu,
                                         const KacCharge& alpha)
{
    return contains_in_fusion(lam, mu, alpha, FuseMode::conjugate);
}

/* all completely degenerate (lam,mu) up to the cutoff passing the membership
 * test, in lexicographic order */
inline std::vector<std::pair<Weight, Weight>> degenerate_spectrum(const KacCharge& alpha,
                                                                  long cutoff, FuseMode mode)
{
    std::vector<std::pair<Weight, Weight>> out;
    for (long l1 = 0; l1 <= cutoff; ++l1)
        for (long l2 = 0; l1 + l2 <= cutoff; ++l2)
            for (long u1 = 0; u1 <= cutoff; ++u1)
                for (long u2 = 0; u1 + u2 <= cutoff; ++u2) {
                    Weight lam{l1, l2}, mu{u1, u2};
                    if (contains_in_fusion(lam, mu, alpha, mode))
                        out.emplace_back(lam, mu);
                }
    return out;
}

/* conformal-block counting: the two channels must agree, per the identity
 * sum_{lam'} m_lam(lam')^2 = sum_nu N_{lam lam*}^nu m_nu(0) applied factorwise */
struct BlockCount {
    long s_channel;
    long t_channel;
};

inline BlockCount block_counts(const Weight& lam, const Weight& mu)
{
    auto s_factor = [](const Weight& l) {
        long s = 0;
        for (const auto& [w, m] : weight_system(l).table)
            s += m * m;
        return s;
    };
    auto t_factor = [](const Weight& l) {
        long t = 0;
        for (const auto& [nu, n] : tensor_decompose(l, conjugate_weight(l)))
            t += n * multiplicity(weight_system(nu), Weight{0, 0});
        return t;
    };
    return {s_factor(lam) * s_factor(mu), t_factor(lam) * t_factor(mu)};
}

} // namespace w3
