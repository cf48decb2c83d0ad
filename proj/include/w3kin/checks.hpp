#pragma once

#include "io.hpp"
#include "spin.hpp"
#include "virasoro.hpp"

#include <functional>

namespace w3 {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

namespace detail {

inline void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
                  const std::string& detail = "")
{
    out.push_back({name, pass, detail});
}

/* deterministic rational noise for the symbolic-invariance checks */
struct RatGen {
    unsigned long state = 0x9e3779b97f4a7c15UL;
    long next_long(long lo, long hi)
    {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return lo + static_cast<long>(state % static_cast<unsigned long>(hi - lo + 1));
    }
    Rational next_rational() { return rat(next_long(-9, 9), next_long(1, 4)); }
    KacCharge next_charge()
    {
        return {next_rational(), next_rational(), next_rational(), next_rational()};
    }
};

inline bool orbits_touch(const KacCharge& a, const KacCharge& b, double at_b, double tol)
{
    auto pa = orbit_points(a, at_b);
    auto pb = orbit_points(b, at_b);
    for (const auto& u : pa)
        for (const auto& v : pb)
            if (std::abs(u.x - v.x) < tol && std::abs(u.y - v.y) < tol)
                return true;
    return false;
}

} // namespace detail

/* the full invariant suite; every entry is exact except the orbit embedding */
inline std::vector<CheckResult> run_check_suite()
{
    using detail::check;
    std::vector<CheckResult> out;

    /* --- sl3 kernel ------------------------------------------------ */
    {
        bool dims = true, weyl = true, triality = true;
        for (long l1 = 0; l1 + 0 <= 6; ++l1)
            for (long l2 = 0; l1 + l2 <= 6; ++l2) {
                const Irrep& r = weight_system(l1, l2);
                dims &= r.dim == weyl_dim(l1, l2);
                for (const auto& x : weyl_elements())
                    for (const auto& [w, m] : r.table)
                        weyl &= multiplicity(r, x(w)) == m;
                for (const auto& [w, m] : r.table)
                    triality &= z3_charge(w) == z3_charge(r);
            }
        check(out, "irrep dimensions match the Weyl formula (cutoff 6)", dims);
        check(out, "weight tables are Weyl-invariant (cutoff 6)", weyl);
        check(out, "weights carry the triality of the highest weight (cutoff 6)", triality);
    }
    {
        bool ok = true;
        for (long l1 = 0; l1 <= 4; ++l1)
            for (long l2 = 0; l1 + l2 <= 4; ++l2)
                for (long u1 = 0; u1 <= 4; ++u1)
                    for (long u2 = 0; u1 + u2 <= 4; ++u2) {
                        long total = 0;
                        for (const auto& [nu, n] : tensor_decompose({l1, l2}, {u1, u2})) {
                            total += n * weight_system(nu).dim;
                            ok &= (z3_charge(nu) - z3_charge(Weight{l1, l2}) -
                                   z3_charge(Weight{u1, u2})) %
                                          3 ==
                                      0 ||
                                  (3 + (z3_charge(nu) - z3_charge(Weight{l1, l2}) -
                                        z3_charge(Weight{u1, u2})) %
                                           3) %
                                          3 ==
                                      0;
                        }
                        ok &= total == weight_system(l1, l2).dim * weight_system(u1, u2).dim;
                    }
        check(out, "tensor decomposition preserves dimension and triality (cutoff 4)", ok);
    }
    {
        bool prop = true;
        for (long l1 = 0; l1 + 0 <= 8; ++l1)
            for (long l2 = 0; l1 + l2 <= 8; ++l2) {
                const Irrep& r = weight_system(l1, l2);
                int q = z3_charge(r);
                prop &= contains_hj_triple(r, +1) == (q == 1);
                prop &= contains_hj_triple(r, -1) == (q == 2);
                prop &= contains_zero(r) == (q == 0);
            }
        check(out, "h-triple / zero-weight membership follows the triality (cutoff 8)", prop);
    }
    {
        bool blocks = true;
        for (long l1 = 0; l1 <= 5; ++l1)
            for (long l2 = 0; l1 + l2 <= 5; ++l2)
                for (long u1 = 0; u1 <= 5; ++u1)
                    for (long u2 = 0; u1 + u2 <= 5; ++u2) {
                        BlockCount bc = block_counts({l1, l2}, {u1, u2});
                        blocks &= bc.s_channel == bc.t_channel;
                    }
        BlockCount b1 = block_counts({1, 1}, {0, 0});
        BlockCount b2 = block_counts({1, 0}, {0, 1});
        blocks &= b1.s_channel == 10 && b2.s_channel == 9;
        check(out, "conformal-block count agrees across channels (cutoff 5)", blocks);
    }

    /* --- charge algebra --------------------------------------------- */
    {
        bool ok = central_charge() == LaurentPoly{{-2, -24}, {0, 50}, {2, -24}};
        ok &= h_of(fields::identity()).zero() && w_factor_of(fields::identity()).zero();
        ok &= h_of(fields::sigma()) == LaurentPoly{{-2, rat(-8, 9)}, {0, rat(17, 9)}, {2, rat(-8, 9)}};
        ok &= w_factor_of(fields::sigma()) == LaurentPoly{{-1, rat(-2, 27)}, {1, rat(2, 27)}};
        ok &= h_of(fields::sigma_prime()) ==
              LaurentPoly{{-2, rat(-2, 3)}, {0, rat(3, 2)}, {2, rat(-3, 4)}};
        ok &= h_of(fields::sigma_second()) == LaurentPoly{{0, -1}, {2, rat(4, 3)}};
        ok &= h_of(fields::psi()) == LaurentPoly{{0, -2}, {2, rat(10, 3)}};
        ok &= h_of(fields::psi_prime()) == LaurentPoly{{-2, rat(4, 3)}, {0, -1}};
        ok &= h_of(fields::eps()) == LaurentPoly{{0, -2}, {2, 3}};
        check(out, "closed-form eigenvalues of the named fields", ok);
    }
    {
        detail::RatGen gen;
        bool star = true, conj = true, halpha = true, reflect = true;
        for (int i = 0; i < 20; ++i) {
            KacCharge c = gen.next_charge();
            for (const auto& x : weyl_elements()) {
                star &= h_of(weyl_star(x, c)) == h_of(c);
                star &= w_factor_of(weyl_star(x, c)) == w_factor_of(c);
            }
            conj &= h_of(conjugate(c)) == h_of(c);
            conj &= w_factor_of(conjugate(c)) == (Rational(-1) * w_factor_of(c));
            halpha &= h_from_alpha(c) == h_of(c);
            reflect &= weyl_star(weyl_elements()[5], reflect_2q(c)) == conjugate(c);
        }
        check(out, "h and w are Weyl-star invariant (randomized)", star);
        check(out, "conjugation fixes h and negates w (randomized)", conj);
        check(out, "index form of h equals alpha.(alpha-2Q)/2 (randomized)", halpha);
        check(out, "reflection through 2Q conjugates, up to the longest element", reflect);
    }
    {
        bool ok = classify(fields::sigma()) == FieldClass::generic;
        ok &= classify(fields::sigma_prime()) == FieldClass::semi_degenerate_level_one;
        ok &= classify(fields::sigma_second()) == FieldClass::completely_degenerate;
        check(out, "classification of sigma / sigma' / sigma''", ok);
    }

    /* --- rational models --------------------------------------------- */
    {
        RationalModel m(4, 5);
        auto table = kac_table(m);
        bool ok = table.size() == 6;
        auto content = potts_content();
        std::vector<Rational> hs;
        for (const auto& f : content)
            hs.push_back(f.h);
        ok &= hs == std::vector<Rational>{0, rat(1, 15), rat(1, 15), rat(2, 3), rat(2, 3), rat(2, 5)};
        std::vector<int> qs;
        for (const auto& f : content)
            qs.push_back(f.q);
        ok &= qs == std::vector<int>{0, 1, -1, 1, -1, 0};
        for (const auto& f : content)
            ok &= std::find(table.begin(), table.end(), f.field) != table.end();
        check(out, "three-state Potts content (M_{4,5})", ok);
    }
    {
        bool ok = true;
        for (long p = 2; p <= 12; ++p)
            for (long pp = 2; pp <= 12; ++pp) {
                if (std::gcd(p, pp) != 1)
                    continue;
                RationalModel m(p, pp);
                for (const auto& f : kac_table(m))
                    for (const KacCharge* alt : {&f.alt1, &f.alt2}) {
                        ok &= z3_charge_of(*alt, m) == z3_charge_of(f, m);
                        ok &= h_in_model(*alt, m) == h_in_model(f.canonical, m);
                        ok &= w_b_in_model(*alt, m) == w_b_in_model(f.canonical, m);
                        ok &= equivalent_at(*alt, f.canonical, p, pp);
                    }
            }
        check(out, "triple identification preserves q, h, w exactly (p,p' <= 12)", ok);
    }
    {
        RationalModel m(4, 5);
        auto table = kac_table(m);
        bool ok = true;
        for (const auto& f1 : table)
            for (const auto& f2 : table)
                for (const auto& g : fuse_in_model(f1, f2, m)) {
                    int q = (z3_charge_of(f1, m) + z3_charge_of(f2, m)) % 3;
                    q = ((q % 3) + 3) % 3;
                    int qg = ((z3_charge_of(g, m) % 3) + 3) % 3;
                    ok &= q == qg;
                }
        auto names = potts_content();
        auto by_name = [&](const char* n) {
            for (const auto& f : names)
                if (std::string(n) == f.name)
                    return f.field;
            throw std::logic_error("unknown Potts field");
        };
        auto ss = fuse_in_model(by_name("sigma"), by_name("sigma"), m);
        ok &= ss == std::vector<DegenerateField>{by_name("sigma*"), by_name("psi*")} ||
              ss == std::vector<DegenerateField>{by_name("psi*"), by_name("sigma*")};
        auto sc = fuse_in_model(by_name("sigma"), by_name("sigma*"), m);
        ok &= sc == std::vector<DegenerateField>{by_name("1"), by_name("eps")} ||
              sc == std::vector<DegenerateField>{by_name("eps"), by_name("1")};
        check(out, "Potts fusion: sigma x sigma and sigma x sigma*, Z3 conserved", ok);
    }

    /* --- fusion sectors ---------------------------------------------- */
    {
        auto rep = sector_coverage(fields::sigma(), FuseMode::self, 4, SectorPattern::sum(1));
        check(out, "sigma self-fusion covers the q_lam + q_mu = 1 sector (cutoff 4)", rep.pass);
        rep = sector_coverage(fields::sigma(), FuseMode::conjugate, 4, SectorPattern::sum(0));
        check(out, "sigma conjugate fusion covers the neutral sector (cutoff 4)", rep.pass);
        rep = sector_coverage(fields::sigma_prime(), FuseMode::self, 4, SectorPattern::each(1, 0));
        check(out, "sigma' self-fusion: q_lam = 1, q_mu = 0 (cutoff 4)", rep.pass);
        rep = sector_coverage(fields::sigma_prime(), FuseMode::conjugate, 4, SectorPattern::each(0, 0));
        check(out, "sigma' conjugate fusion: q_lam = 0, q_mu = 0 (cutoff 4)", rep.pass);
        rep = sector_coverage(fields::sigma_second(), FuseMode::conjugate, 4,
                              SectorPattern::exact({{Weight{0, 0}, Weight{0, 0}},
                                                    {Weight{0, 0}, Weight{1, 1}}}));
        check(out, "sigma'' conjugate fusion is exactly {1, eps-type} (cutoff 4)", rep.pass);
        rep = sector_coverage(fields::sigma_second(), FuseMode::self, 4,
                              SectorPattern::exact({{Weight{0, 0}, Weight{0, 2}},
                                                    {Weight{0, 0}, Weight{1, 0}}}));
        check(out, "sigma'' self-fusion is exactly {psi-type, sigma''-type} (cutoff 4)", rep.pass);
    }

    /* --- constraint solver ------------------------------------------- */
    {
        ConstraintSpec spec{{{Weight{1, 0}, Weight{0, 0}},
                             {Weight{0, 0}, Weight{1, 0}},
                             {Weight{0, 1}, Weight{0, 1}}},
                            FuseMode::self,
                            Rational(1)};
        auto r = solve(spec);
        bool ok = r.points.size() == 1 && r.families.empty() &&
                  r.points[0].charge == fields::sigma();
        check(out, "spin constraint: unique orbit with indices (2/3,-1/3,1/3,1/3)", ok);
    }
    {
        ConstraintSpec spec{{{Weight{1, 0}, Weight{0, 0}}}, FuseMode::self, std::nullopt};
        auto r = solve(spec);
        bool ok = result_contains(r, fields::sigma_prime()) && result_contains(r, fields::sigma());
        check(out, "weaker constraint admits sigma' (and sigma)", ok);
    }
    {
        ConstraintSpec spec{{{Weight{0, 0}, Weight{1, 0}}, {Weight{0, 0}, Weight{0, 2}}},
                            FuseMode::self,
                            std::nullopt};
        auto r = solve(spec);
        bool ok = result_contains(r, fields::sigma_second());
        /* sigma'' is the minimal completely degenerate solution by index sum */
        long best = 0;
        KacCharge best_c;
        for (const auto& f : r.families)
            for (long t = 1; t <= 4 && ok; ++t)
                for (long s = 1; s <= 4; ++s) {
                    std::array<Rational, 4> pt = f.point;
                    for (size_t i = 0; i < f.dirs.size(); ++i)
                        for (int j = 0; j < 4; ++j)
                            pt[j] += (i == 0 ? Rational(t) : Rational(s)) * f.dirs[i][j];
                    KacCharge c{pt[0], pt[1], pt[2], pt[3]};
                    if (classify(c) != FieldClass::completely_degenerate)
                        continue;
                    long sum = 0;
                    for (const auto& q : {c.n1, c.n2, c.m1, c.m2})
                        if (is_integer(q))
                            sum += to_long(q);
                    if (best == 0 || sum < best) {
                        best = sum;
                        best_c = canonical_charge(c);
                    }
                }
        ok &= best == 0 || best_c == canonical_charge(fields::sigma_second());
        check(out, "sigma'' solves its self-fusion spec (minimal degenerate member)", ok);
    }
    {
        bool ok = rational_specialization(fields::sigma(), 4, 5).field.canonical ==
                  make_field(KacCharge{1, 1, 2, 1}, RationalModel(4, 5)).canonical;
        ok &= rational_specialization(fields::sigma(), 5, 4).ok;
        ok &= !rational_specialization(fields::sigma(), 4, 7).ok;
        check(out, "rational specialization of sigma", ok);
    }

    /* --- special points and curves ------------------------------------ */
    {
        auto at = [](const LaurentPoly& p, const Rational& bsq) { return p.eval_at_bsq(bsq); };
        const LaurentPoly c = central_charge();
        bool ok = at(c, rat(4, 5)) == rat(4, 5);
        ok &= at(h_of(fields::sigma()), rat(4, 5)) == rat(1, 15) &&
              at(h_of(fields::sigma_prime()), rat(4, 5)) == rat(1, 15) &&
              at(h_of(fields::sigma_second()), rat(4, 5)) == rat(1, 15);
        ok &= at(h_of(fields::psi()), rat(4, 5)) == rat(2, 3) &&
              at(h_of(fields::psi_prime()), rat(4, 5)) == rat(2, 3) &&
              at(h_of(fields::eps()), rat(4, 5)) == rat(2, 5);
        ok &= at(c, rat(4, 3)) == 0 && at(h_of(fields::sigma_prime()), rat(4, 3)) == 0 &&
              at(h_of(fields::psi_prime()), rat(4, 3)) == 0;
        ok &= at(c, rat(2, 3)) == -2 && at(h_of(fields::sigma_prime()), rat(2, 3)) == 0 &&
              at(h_of(fields::eps()), rat(2, 3)) == 0;
        ok &= at(c, rat(1, 2)) == -10 && at(h_of(fields::sigma()), rat(1, 2)) == rat(-1, 3) &&
              at(h_of(fields::sigma_second()), rat(1, 2)) == rat(-1, 3) &&
              at(h_of(fields::psi()), rat(1, 2)) == rat(-1, 3);
        ok &= at(c, rat(2, 1)) == -10 && at(h_of(fields::sigma()), 2) == rat(-1, 3) &&
              at(h_of(fields::sigma_prime()), 2) == rat(-1, 3) &&
              at(h_of(fields::psi_prime()), 2) == rat(-1, 3);
        ok &= at(h_of(fields::sigma()), 1) == rat(1, 9);
        check(out, "special central charges and dimension coincidences", ok);

        LaurentPoly d = h_of(fields::eps()) - (Rational(4) * h_of(fields::sigma_prime()));
        bool dz = at(d, rat(2, 3)) == 0 && at(d.derivative_bsq(), rat(2, 3)) == 0;
        check(out, "h_eps - 4 h_sigma' has a double zero at b^2 = 2/3", dz,
              "derivative at the zero: " + to_string(at(d.derivative_bsq(), rat(2, 3))));

        bool flag = at(h_of(fields::psi()), 1) == rat(4, 3);
        check(out, "c = 2: h_psi formula value is 4/3 (a stated 1/3 would contradict it)", flag);
    }

    /* --- Virasoro baseline -------------------------------------------- */
    {
        auto at = [](const LaurentPoly& p, const Rational& bsq) { return p.eval_at_bsq(bsq); };
        bool ok = at(vir_c(), rat(3, 4)) == rat(1, 2) && at(vir_h(1, 2), rat(3, 4)) == rat(1, 16) &&
                  at(vir_h(1, 3), rat(3, 4)) == rat(1, 2);
        ok &= at(vir_h(vir_spin()), rat(3, 4)) == rat(1, 16);
        ok &= at(vir_c(), rat(2, 5)) == rat(-22, 5) && at(vir_h(1, 2), rat(2, 5)) == rat(-1, 5) &&
              at(vir_h(1, 3), rat(2, 5)) == rat(-1, 5);
        check(out, "Ising and Lee-Yang values", ok);

        const LaurentPoly hs = vir_h(vir_spin()), h13 = vir_h(1, 3), h21 = vir_h(2, 1),
                          h12 = vir_h(1, 2), one{Rational(1)};
        bool on = hs * (Rational(8) * h13 + Rational(8) * one) ==
                  Rational(2) * h13 - h13 * h13;
        bool potts = hs * (Rational(4) * h21 + Rational(2) * one) == h21 - h21 * h21;
        bool half = Rational(3) * h13 == Rational(8) * h12 + one;
        check(out, "O(n) curve identity, cleared of denominators", on);
        check(out, "Potts curve identity, cleared of denominators", potts);
        check(out, "half-line h13 = (8 h12 + 1)/3", half);

        bool merge = at(hs, 1) == rat(1, 16) && at(h21, 1) == rat(1, 4) && at(vir_c(), 1) == 1;
        check(out, "critical/tricritical branches merge at (1/16, 1/4), c = 1", merge);

        bool inter = at(hs, rat(5, 2)) == rat(-1, 5) && at(h21, rat(5, 2)) == rat(-1, 5);
        check(out, "Potts curve meets the thermal line at h = -1/5", inter);

        auto d = [&](const LaurentPoly& p) { return p.derivative_bsq().eval_at_bsq(rat(1, 2)); };
        bool slope = at(hs, rat(1, 2)) == 0 && at(h13, rat(1, 2)) == 0 &&
                     at(vir_c(), rat(1, 2)) == -2 && d(h13) == 4 * d(hs);
        check(out, "O(n) curve leaves (0,0) with slope 4", slope);

        check(out, "Z2 sector rule holds exhaustively (cutoff 7)", vir_sector_check(7).pass);

        auto [a, b] = vir_spin_in_model(3, 4);
        bool ident = at(vir_h(a), rat(3, 4)) == at(vir_h(vir_spin()), rat(3, 4)) &&
                     at(vir_h(b), rat(3, 4)) == at(vir_h(vir_spin()), rat(3, 4));
        check(out, "spin field sits at the Kac-table center of M_{3,4}", ident);
    }

    /* --- orbit geometry ------------------------------------------------ */
    {
        bool ok = true;
        for (long p = 1; p <= 20; ++p) {
            double b = std::sqrt(double(p) / (p + 1));
            ok &= orbit_points(fields::sigma(), b).size() == 12;
            ok &= orbit_points(fields::sigma_prime(), b).size() == 12;
            ok &= orbit_points(fields::sigma_second(), b).size() == 12;
        }
        double b4 = std::sqrt(4.0 / 5.0), b1 = std::sqrt(0.5);
        ok &= detail::orbits_touch(fields::sigma(), fields::sigma_prime(), b4, 1e-10);
        ok &= detail::orbits_touch(fields::sigma(), fields::sigma_second(), b4, 1e-10);
        ok &= detail::orbits_touch(fields::sigma_prime(), fields::sigma_second(), b4, 1e-10);
        ok &= detail::orbits_touch(fields::sigma(), fields::sigma_second(), b1, 1e-10);
        check(out, "orbit coincidences at p = 4 and p = 1 (tolerance 1e-10)", ok);
    }

    /* --- serialization --------------------------------------------------- */
    {
        OutputRecord rec;
        rec.columns = {"name", "value"};
        rec.exact = true;
        rec.add_row({std::string("x"), rat(2, 3)});
        bool ok = render_csv(rec) == "name,value\nx,2/3\n";
        ok &= render_json(rec).find("\"2/3\"") != std::string::npos;
        check(out, "exact rationals survive serialization", ok);
    }

    return out;
}

inline bool all_pass(const std::vector<CheckResult>& results)
{
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return true;
}

} // namespace w3
