#pragma once

#include "fusion.hpp"

#include <optional>
#include <set>
#include <string>

namespace w3 {

/* ------------------------------------------------------------------ *
 *  exact affine linear algebra over Q^4                               *
 * ------------------------------------------------------------------ */

using Row = std::array<Rational, 5>; // 4 coefficients + right-hand side

/* reduced row echelon form; nullopt if the system is inconsistent */
inline std::optional<std::vector<Row>> rref(std::vector<Row> rows)
{
    std::vector<Row> out;
    for (int col = 0; col < 4 && !rows.empty(); ++col) {
        auto piv = rows.end();
        for (auto it = rows.begin(); it != rows.end(); ++it)
            if ((*it)[col] != 0) {
                piv = it;
                break;
            }
        if (piv == rows.end())
            continue;
        Row r = *piv;
        rows.erase(piv);
        Rational inv = 1 / r[col];
        for (auto& v : r)
            v *= inv;
        for (auto& q : rows)
            if (q[col] != 0) {
                Rational f = q[col];
                for (int j = 0; j < 5; ++j)
                    q[j] -= f * r[j];
            }
        for (auto& q : out)
            if (q[col] != 0) {
                Rational f = q[col];
                for (int j = 0; j < 5; ++j)
                    q[j] -= f * r[j];
            }
        out.push_back(r);
    }
    for (const auto& q : rows) {
        bool all_zero = q[0] == 0 && q[1] == 0 && q[2] == 0 && q[3] == 0;
        if (all_zero && q[4] != 0)
            return std::nullopt; // 0 = nonzero
    }
    return out;
}

/* consistent affine subspace of Q^4 in RREF row form */
struct AffinePiece {
    std::vector<Row> rows;

    int dim() const { return 4 - static_cast<int>(rows.size()); }

    std::vector<int> pivots() const
    {
        std::vector<int> p;
        for (const auto& r : rows)
            for (int j = 0; j < 4; ++j)
                if (r[j] != 0) {
                    p.push_back(j);
                    break;
                }
        return p;
    }

    /* particular point: free coordinates set to zero */
    std::array<Rational, 4> point() const
    {
        std::array<Rational, 4> pt{0, 0, 0, 0};
        auto p = pivots();
        for (size_t i = 0; i < rows.size(); ++i)
            pt[p[i]] = rows[i][4];
        return pt;
    }

    /* basis of the direction space */
    std::vector<std::array<Rational, 4>> dirs() const
    {
        auto p = pivots();
        std::vector<std::array<Rational, 4>> out;
        for (int f = 0; f < 4; ++f) {
            if (std::find(p.begin(), p.end(), f) != p.end())
                continue;
            std::array<Rational, 4> d{0, 0, 0, 0};
            d[f] = 1;
            for (size_t i = 0; i < rows.size(); ++i)
                d[p[i]] = -rows[i][f];
            out.push_back(d);
        }
        return out;
    }

    bool contains(const KacCharge& c) const
    {
        for (const auto& r : rows)
            if (r[0] * c.n1 + r[1] * c.n2 + r[2] * c.m1 + r[3] * c.m2 != r[4])
                return false;
        return true;
    }

    friend bool operator==(const AffinePiece& a, const AffinePiece& b) { return a.rows == b.rows; }
};

inline std::optional<AffinePiece> make_piece(std::vector<Row> rows)
{
    auto r = rref(std::move(rows));
    if (!r)
        return std::nullopt;
    return AffinePiece{std::move(*r)};
}

inline std::optional<AffinePiece> intersect(const AffinePiece& a, const AffinePiece& b)
{
    std::vector<Row> rows = a.rows;
    rows.insert(rows.end(), b.rows.begin(), b.rows.end());
    return make_piece(std::move(rows));
}

/* ------------------------------------------------------------------ *
 *  the spin-field constraint                                          *
 * ------------------------------------------------------------------ */

struct ConstraintSpec {
    std::vector<std::pair<Weight, Weight>> rep_pairs;
    FuseMode mode = FuseMode::self;
    std::optional<Rational> q_tilde;
};

struct Witness {
    std::string x;
    Weight lam_p, mu_p;
};

struct SpinSolution {
    KacCharge charge; // canonical: lex-greatest Weyl-star image
    FieldClass cls;
    LaurentPoly h, w;
    std::vector<Witness> witnesses; // one per rep pair, verified
};

struct SpinFamily {
    std::array<Rational, 4> point;
    std::vector<std::array<Rational, 4>> dirs;
    AffinePiece piece;
};

struct SolveResult {
    std::vector<SpinSolution> points;
    std::vector<SpinFamily> families;
};

namespace detail {

/* one rep pair contributes the union over (x, lam', mu') of the affine systems
 * x(P + lam') = T(P), x(R + mu') = T(R) with T = conjugation swap (self mode)
 * or identity (conjugate mode) */
inline std::vector<AffinePiece> pieces_for_pair(const Weight& lam, const Weight& mu, FuseMode mode)
{
    const int swap = (mode == FuseMode::self) ? 1 : 0;
    std::vector<AffinePiece> out;
    for (const auto& x : weyl_elements())
        for (const auto& [lp, ml] : weight_system(lam).table)
            for (const auto& [mp, mm] : weight_system(mu).table) {
                std::vector<Row> rows;
                for (int blk = 0; blk < 2; ++blk) { // 0: P-side, 1: R-side
                    const Weight& shift = (blk == 0) ? lp : mp;
                    Rational rhs[2] = {-(x.m[0][0] * shift.a1 + x.m[0][1] * shift.a2),
                                       -(x.m[1][0] * shift.a1 + x.m[1][1] * shift.a2)};
                    for (int i = 0; i < 2; ++i) {
                        Row r{0, 0, 0, 0, rhs[i]};
                        for (int j = 0; j < 2; ++j)
                            r[2 * blk + j] = x.m[i][j];
                        // subtract T: swap exchanges the two coordinates
                        r[2 * blk + (swap ? 1 - i : i)] -= 1;
                        rows.push_back(r);
                    }
                }
                auto piece = make_piece(std::move(rows));
                if (piece && std::find(out.begin(), out.end(), *piece) == out.end())
                    out.push_back(*piece);
            }
    return out;
}

/* Weyl-star action on a piece: rows pick up x^{-1} on each 2x2 index block */
inline AffinePiece star_piece(const WeylElement& x, const AffinePiece& p)
{
    const WeylElement& xi = weyl_inverse(x);
    std::vector<Row> rows;
    for (const auto& r : p.rows) {
        Row s{0, 0, 0, 0, r[4]};
        for (int blk = 0; blk < 2; ++blk)
            for (int j = 0; j < 2; ++j)
                s[2 * blk + j] = r[2 * blk] * xi.m[0][j] + r[2 * blk + 1] * xi.m[1][j];
        rows.push_back(s);
    }
    auto q = make_piece(std::move(rows));
    if (!q)
        throw std::logic_error("Weyl image of a consistent piece became inconsistent");
    return *q;
}

inline std::string piece_key(const AffinePiece& p)
{
    std::vector<std::string> lines;
    for (const auto& r : p.rows) {
        std::string s;
        for (const auto& v : r)
            s += to_string(v) + ",";
        lines.push_back(s);
    }
    std::sort(lines.begin(), lines.end());
    std::string key;
    for (const auto& l : lines)
        key += l + ";";
    return key;
}

/* orbit-canonical key: maximal serialized RREF over the 6 Weyl images */
inline std::string orbit_key(const AffinePiece& p)
{
    std::string best;
    for (const auto& x : weyl_elements()) {
        std::string k = piece_key(star_piece(x, p));
        if (k > best)
            best = k;
    }
    return best;
}

inline std::optional<Witness> find_witness(const KacCharge& c, const Weight& lam, const Weight& mu,
                                           FuseMode mode)
{
    KacCharge target = (mode == FuseMode::self) ? conjugate(c) : c;
    for (const auto& x : weyl_elements()) {
        const WeylElement& xi = weyl_inverse(x);
        Weight lp = xi(target.P()) - c.P();
        Weight mp = xi(target.R()) - c.R();
        if (!lp.integral() || !mp.integral())
            continue;
        if (multiplicity(weight_system(lam), lp) > 0 && multiplicity(weight_system(mu), mp) > 0)
            return Witness{x.label, lp, mp};
    }
    return std::nullopt;
}

} // namespace detail

/* Solve the constraint: for every rep pair, Phi*_{lam,mu} must appear in the
 * self fusion (or Phi_{lam,mu} in the conjugate fusion) of the unknown charge,
 * for ALL b — an exact linear condition on the Kac indices.  Zero-dimensional
 * intersections become SpinSolutions; positive-dimensional ones are reported
 * as families, deduplicated modulo the Weyl-star action. */
inline SolveResult solve(const ConstraintSpec& spec)
{
    if (spec.rep_pairs.empty())
        throw std::invalid_argument("constraint spec needs at least one rep pair");
    for (const auto& [lam, mu] : spec.rep_pairs)
        if (!lam.dominant() || !mu.dominant())
            throw std::invalid_argument("rep pairs must be dominant integral weights");

    std::vector<AffinePiece> current;
    if (spec.q_tilde) {
        auto p = make_piece({Row{1, -1, 1, -1, *spec.q_tilde}});
        current.push_back(*p);
    } else {
        current.push_back(AffinePiece{});
    }

    for (const auto& [lam, mu] : spec.rep_pairs) {
        auto pieces = detail::pieces_for_pair(lam, mu, spec.mode);
        std::vector<AffinePiece> next;
        std::set<std::string> seen;
        for (const auto& a : current)
            for (const auto& b : pieces)
                if (auto c = intersect(a, b))
                    if (seen.insert(detail::piece_key(*c)).second)
                        next.push_back(*c);
        current = std::move(next);
    }

    SolveResult result;
    std::set<std::string> point_keys, family_keys;
    for (const auto& piece : current) {
        if (piece.dim() == 0) {
            auto pt = piece.point();
            KacCharge c = canonical_charge(KacCharge{pt[0], pt[1], pt[2], pt[3]});
            std::string key = bracket_str(c);
            if (!point_keys.insert(key).second)
                continue;
            SpinSolution sol{c, classify(c), h_of(c), w_factor_of(c), {}};
            for (const auto& [lam, mu] : spec.rep_pairs) {
                auto w = detail::find_witness(c, lam, mu, spec.mode);
                if (!w)
                    throw std::logic_error("solution fails to re-verify against its spec");
                sol.witnesses.push_back(*w);
            }
            result.points.push_back(std::move(sol));
        } else {
            if (!family_keys.insert(detail::orbit_key(piece)).second)
                continue;
            result.families.push_back(SpinFamily{piece.point(), piece.dirs(), piece});
        }
    }
    std::sort(result.points.begin(), result.points.end(),
              [](const SpinSolution& a, const SpinSolution& b) { return a.charge < b.charge; });
    return result;
}

/* does the result contain the charge, either as an isolated point or inside
 * a family (up to Weyl-star equivalence)? */
inline bool result_contains(const SolveResult& r, const KacCharge& c)
{
    KacCharge canon = canonical_charge(c);
    for (const auto& s : r.points)
        if (s.charge == canon)
            return true;
    for (const auto& f : r.families)
        for (const auto& img : star_orbit(c))
            if (f.piece.contains(img))
                return true;
    return false;
}

/* ------------------------------------------------------------------ *
 *  sector coverage                                                    *
 * ------------------------------------------------------------------ */

/* expected shape of a degenerate spectrum */
struct SectorPattern {
    enum Kind { sum_mod3, each_mod3, exact_list } kind;
    int a = 0, b = 0;
    std::vector<std::pair<Weight, Weight>> list;

    static SectorPattern sum(int r) { return {sum_mod3, r, 0, {}}; }
    static SectorPattern each(int ql, int qm) { return {each_mod3, ql, qm, {}}; }
    static SectorPattern exact(std::vector<std::pair<Weight, Weight>> l)
    {
        return {exact_list, 0, 0, std::move(l)};
    }

    bool matches(const Weight& lam, const Weight& mu) const
    {
        switch (kind) {
        case sum_mod3: return (z3_charge(lam) + z3_charge(mu)) % 3 == a;
        case each_mod3: return z3_charge(lam) == a && z3_charge(mu) == b;
        default:
            return std::find(list.begin(), list.end(), std::make_pair(lam, mu)) != list.end();
        }
    }
};

struct SectorReport {
    bool pass = true;
    std::vector<std::pair<Weight, Weight>> missing;    // predicted but absent
    std::vector<std::pair<Weight, Weight>> unexpected; // present but not predicted
};

/* compare the computed spectrum against the predicted pattern, exhaustively
 * up to the cutoff */
inline SectorReport sector_coverage(const KacCharge& alpha, FuseMode mode, long cutoff,
                                    const SectorPattern& pattern)
{
    SectorReport rep;
    for (long l1 = 0; l1 <= cutoff; ++l1)
        for (long l2 = 0; l1 + l2 <= cutoff; ++l2)
            for (long u1 = 0; u1 <= cutoff; ++u1)
                for (long u2 = 0; u1 + u2 <= cutoff; ++u2) {
                    Weight lam{l1, l2}, mu{u1, u2};
                    bool member = contains_in_fusion(lam, mu, alpha, mode);
                    bool predicted = pattern.matches(lam, mu);
                    if (member && !predicted)
                        rep.unexpected.emplace_back(lam, mu);
                    if (!member && predicted)
                        rep.missing.emplace_back(lam, mu);
                }
    rep.pass = rep.missing.empty() && rep.unexpected.empty();
    return rep;
}

/* ------------------------------------------------------------------ *
 *  rational specialization of the spin field                          *
 * ------------------------------------------------------------------ */

struct Specialization {
    bool ok = false;
    std::string reason;
    DegenerateField field{KacCharge{}, KacCharge{}, KacCharge{}};
};

/* land the charge on positive integer indices inside M_{p,p'}: the target is
 * [[ (p+2)/3,(p'+1)/3 ],[ (p-1)/3,(p'+1)/3 ]]    for (p,p') = (+1,-1) mod 3,
 * [[ (p+1)/3,(p'-1)/3 ],[ (p-2)/3,(p'-1)/3 ]]    for (p,p') = (-1,+1) mod 3;
 * exact Weyl-star equivalence at b^2 = p/p' is verified, not assumed */
inline Specialization rational_specialization(const KacCharge& c, long p, long pp)
{
    if ((p + pp) % 3 != 0)
        return {false, "p + p' is not divisible by 3", {}};
    RationalModel m(p, pp);
    KacCharge target = (p % 3 == 1)
                           ? KacCharge{(p + 2) / 3, (p - 1) / 3, (pp + 1) / 3, (pp + 1) / 3}
                           : KacCharge{(p + 1) / 3, (p - 2) / 3, (pp - 1) / 3, (pp - 1) / 3};
    if (!in_table(target, m))
        return {false, "specialized indices fall outside the Kac table", {}};
    if (!equivalent_at(c, target, p, pp))
        return {false, "target is not Weyl-equivalent to the charge at b^2 = p/p'", {}};
    return {true, "", make_field(target, m)};
}

/* ------------------------------------------------------------------ *
 *  orbit geometry and curve tables                                    *
 * ------------------------------------------------------------------ */

struct Point2 {
    double x, y;
};

/* Cartesian embedding w1 = (sqrt(3),1)/sqrt(6), w2 = (0,sqrt(2/3)): the 6 Weyl
 * images of alpha - Q followed by the 6 of alpha* - Q, at the given b */
inline std::vector<Point2> orbit_points(const KacCharge& c, double b)
{
    if (b <= 0)
        throw std::invalid_argument("orbit_points needs b > 0");
    std::vector<Point2> out;
    for (const KacCharge& a : {c, conjugate(c)}) {
        double v1 = -to_double(a.n1) / b + to_double(a.m1) * b;
        double v2 = -to_double(a.n2) / b + to_double(a.m2) * b;
        for (const auto& x : weyl_elements()) {
            double u1 = x.m[0][0] * v1 + x.m[0][1] * v2;
            double u2 = x.m[1][0] * v1 + x.m[1][1] * v2;
            out.push_back({u1 / std::sqrt(2.0), (u1 + 2 * u2) / std::sqrt(6.0)});
        }
    }
    return out;
}

struct CurveRow {
    double b, c, h_sigma, h_psi, h_psi1, h_sigma1, h_sigma2, h_eps;
};

inline std::vector<double> make_grid(double lo, double hi, int steps)
{
    if (!(lo > 0) || !(hi > lo) || steps < 2)
        throw std::invalid_argument("grid needs 0 < min < max and steps >= 2");
    std::vector<double> g(steps);
    for (int i = 0; i < steps; ++i)
        g[i] = lo + (hi - lo) * i / (steps - 1);
    return g;
}

inline std::vector<CurveRow> curve_tables(const std::vector<double>& grid)
{
    const LaurentPoly hs = h_of(fields::sigma()), hp = h_of(fields::psi()),
                      hp1 = h_of(fields::psi_prime()), hs1 = h_of(fields::sigma_prime()),
                      hs2 = h_of(fields::sigma_second()), he = h_of(fields::eps());
    std::vector<CurveRow> out;
    for (double b : grid)
        out.push_back({b, central_charge().eval(b), hs.eval(b), hp.eval(b), hp1.eval(b),
                       hs1.eval(b), hs2.eval(b), he.eval(b)});
    return out;
}

} // namespace w3
