#pragma once

#include "irrep.hpp"
#include "laurent.hpp"

#include <array>
#include <optional>

namespace w3 {

/* Vertex charge in Kac-index form.  The split pair P = n1*w1 + n2*w2,
 * R = m1*w1 + m2*w2 satisfies alpha - Q = -P/b + R*b identically in b,
 * with Q = (1/b - b)*rho. */
struct KacCharge {
    Rational n1, n2, m1, m2;

    KacCharge() : n1(0), n2(0), m1(0), m2(0) {}
    KacCharge(Rational n1, Rational n2, Rational m1, Rational m2)
        : n1(std::move(n1)), n2(std::move(n2)), m1(std::move(m1)), m2(std::move(m2))
    {
    }
    KacCharge(long n1, long n2, long m1, long m2) : n1(n1), n2(n2), m1(m1), m2(m2) {}

    Weight P() const { return {n1, n2}; }
    Weight R() const { return {m1, m2}; }

    friend bool operator==(const KacCharge& a, const KacCharge& b) = default;
    friend bool operator<(const KacCharge& a, const KacCharge& b)
    {
        if (a.n1 != b.n1)
            return a.n1 < b.n1;
        if (a.n2 != b.n2)
            return a.n2 < b.n2;
        if (a.m1 != b.m1)
            return a.m1 < b.m1;
        return a.m2 < b.m2;
    }
};

inline KacCharge charge_from_split(const Weight& P, const Weight& R)
{
    return {P.a1, P.a2, R.a1, R.a2};
}

/* "[[n1,m1],[n2,m2]]" (row = omega-component, column = 1/b vs b side) */
inline std::string bracket_str(const KacCharge& c)
{
    return "[[" + to_string(c.n1) + "," + to_string(c.m1) + "],[" + to_string(c.n2) + "," +
           to_string(c.m2) + "]]";
}

/* c = 2 - 12 Q^2 = 50 - 24/b^2 - 24 b^2 */
inline const LaurentPoly& central_charge()
{
    static const LaurentPoly c{{-2, -24}, {0, 50}, {2, -24}};
    return c;
}

/* W0 normalization beta = 2/sqrt(8 - 15 Q^2); real only near b = 1 */
inline double beta_at(double b)
{
    if (b <= 0)
        throw std::domain_error("beta_at needs b > 0");
    double q = 1 / b - b;
    double radicand = 8 - 30 * q * q;
    if (radicand <= 0)
        throw std::domain_error("beta is not real at this b");
    return 2 / std::sqrt(radicand);
}

/* h_alpha = alpha.(alpha - 2Q)/2 expanded in Kac indices: exponents -2,0,2 */
inline LaurentPoly h_of(const KacCharge& c)
{
    Rational np = c.n1 + c.n2, nm = c.n1 - c.n2;
    Rational mp = c.m1 + c.m2, mm = c.m1 - c.m2;
    LaurentPoly h;
    h.add_term(-2, np * np / 4 + nm * nm / 12 - 1);
    h.add_term(0, -np * mp / 2 - nm * mm / 6 + 2);
    h.add_term(2, mp * mp / 4 + mm * mm / 12 - 1);
    return h;
}

/* the factor w/(beta*sqrt(3)): a cubic in the three root projections,
 * exponents -3,-1,1,3; odd, Weyl-invariant, negated by conjugation */
inline LaurentPoly w_factor_of(const KacCharge& c)
{
    auto lin = [](const Rational& u, const Rational& v) {
        LaurentPoly f;
        f.add_term(-1, u);
        f.add_term(1, -v);
        return f;
    };
    LaurentPoly w = lin(c.n1 - c.n2, c.m1 - c.m2) * lin(c.n1 + 2 * c.n2, c.m1 + 2 * c.m2) *
                    lin(2 * c.n1 + c.n2, 2 * c.m1 + c.m2);
    return rat(2, 27) * w;
}

/* alpha as a pair of Laurent polynomials in b (omega-coordinates) */
inline std::array<LaurentPoly, 2> alpha_poly(const KacCharge& c)
{
    auto comp = [](const Rational& n, const Rational& m) {
        LaurentPoly a;
        a.add_term(-1, 1 - n);
        a.add_term(1, m - 1);
        return a;
    };
    return {comp(c.n1, c.m1), comp(c.n2, c.m2)};
}

/* h recomputed from alpha.(alpha-2Q)/2 in the Laurent ring — cross-check */
inline LaurentPoly h_from_alpha(const KacCharge& c)
{
    auto a = alpha_poly(c);
    LaurentPoly q; // one omega-coordinate of Q
    q.add_term(-1, 1);
    q.add_term(1, -1);
    std::array<LaurentPoly, 2> d{a[0] - (Rational(2) * q), a[1] - (Rational(2) * q)};
    LaurentPoly dot = rat(2, 3) * (a[0] * d[0] + a[1] * d[1]) +
                      rat(1, 3) * (a[0] * d[1] + a[1] * d[0]);
    return rat(1, 2) * dot;
}

/* x * alpha = Q + x(alpha - Q): x acts on P and R simultaneously */
inline KacCharge weyl_star(const WeylElement& x, const KacCharge& c)
{
    return charge_from_split(x(c.P()), x(c.R()));
}

/* (a1 w1 + a2 w2)* = a2 w1 + a1 w2, i.e. swap within each index pair */
inline KacCharge conjugate(const KacCharge& c) { return {c.n2, c.n1, c.m2, c.m1}; }

/* alpha -> 2Q - alpha negates all Kac indices */
inline KacCharge reflect_2q(const KacCharge& c) { return {-c.n1, -c.n2, -c.m1, -c.m2}; }

inline std::array<KacCharge, 6> star_orbit(const KacCharge& c)
{
    std::array<KacCharge, 6> out;
    int i = 0;
    for (const auto& x : weyl_elements())
        out[i++] = weyl_star(x, c);
    return out;
}

/* lex-greatest Weyl-star image: deterministic orbit representative */
inline KacCharge canonical_charge(const KacCharge& c)
{
    KacCharge best = c;
    for (const auto& img : star_orbit(c))
        if (best < img)
            best = img;
    return best;
}

enum class FieldClass { completely_degenerate, semi_degenerate_level_one, generic };

inline const char* to_string(FieldClass f)
{
    switch (f) {
    case FieldClass::completely_degenerate: return "completely_degenerate";
    case FieldClass::semi_degenerate_level_one: return "semi_degenerate_level_one";
    default: return "generic";
    }
}

/* Degeneracy is a property of the Weyl orbit: completely degenerate iff some
 * image has all four indices positive integers; semi-degenerate at level one
 * iff some image has (n2,m2) = (1,1); generic otherwise.  Anything failing
 * both predicates counts as generic (coarser than a measure-zero exclusion
 * set, documented). */
inline FieldClass classify(const KacCharge& c)
{
    bool semi = false;
    for (const auto& img : star_orbit(c)) {
        auto pos_int = [](const Rational& q) { return is_integer(q) && q > 0; };
        if (pos_int(img.n1) && pos_int(img.n2) && pos_int(img.m1) && pos_int(img.m2))
            return FieldClass::completely_degenerate;
        if (img.n2 == 1 && img.m2 == 1)
            semi = true;
    }
    return semi ? FieldClass::semi_degenerate_level_one : FieldClass::generic;
}

/* generic-b Z3 charge q~ = (n1-n2) + (m1-m2) */
inline Rational generalized_z3(const KacCharge& c) { return (c.n1 - c.n2) + (c.m1 - c.m2); }

/* For completely degenerate charges, the labels of the underlying rep pair:
 * lambda = (n1-1, n2-1), mu = (m1-1, m2-1) of the all-positive-integer
 * orbit representative. */
inline std::optional<std::pair<Weight, Weight>> degenerate_labels(const KacCharge& c)
{
    for (const auto& img : star_orbit(c)) {
        auto pos_int = [](const Rational& q) { return is_integer(q) && q > 0; };
        if (pos_int(img.n1) && pos_int(img.n2) && pos_int(img.m1) && pos_int(img.m2))
            return std::make_pair(Weight{img.n1 - 1, img.n2 - 1}, Weight{img.m1 - 1, img.m2 - 1});
    }
    return std::nullopt;
}

/* alpha - Q evaluated at b^2 = p/p', divided by b: R - (p'/p) P.  Exact
 * vehicle for charge equality / Weyl-star equivalence at rational b^2. */
inline Weight charge_at(const KacCharge& c, long p, long pp)
{
    Rational t(pp, p);
    return {c.m1 - t * c.n1, c.m2 - t * c.n2};
}

inline bool equivalent_at(const KacCharge& a, const KacCharge& b, long p, long pp)
{
    Weight target = charge_at(b, p, pp);
    for (const auto& x : weyl_elements())
        if (x(charge_at(a, p, pp)) == target)
            return true;
    return false;
}

/* the named charges of the spin-field family and its fusion partners */
namespace fields {
inline KacCharge identity() { return {1, 1, 1, 1}; }
inline KacCharge sigma() { return {rat(2, 3), rat(-1, 3), rat(1, 3), rat(1, 3)}; }
inline KacCharge sigma_prime() { return {1, 0, rat(1, 2), rat(1, 2)}; }
inline KacCharge sigma_second() { return {1, 1, 2, 1}; }
inline KacCharge psi() { return {1, 1, 1, 3}; }
inline KacCharge psi_prime() { return {2, 1, 1, 1}; }
inline KacCharge eps() { return {1, 1, 2, 2}; }
} // namespace fields

} // namespace w3
