#pragma once

#include "charge.hpp"

#include <numeric>
#include <vector>

namespace w3 {

/* M_{p,p'}: the theory at b^2 = p/p' with a finite table of completely
 * degenerate fields */
struct RationalModel {
    long p, pp;

    RationalModel(long p, long pp) : p(p), pp(pp)
    {
        if (p < 1 || pp < 1 || std::gcd(p, pp) != 1)
            throw std::invalid_argument("model needs coprime positive p, p'");
    }

    Rational bsq() const { return rat(p, pp); }
};

inline bool in_table(const KacCharge& c, const RationalModel& m)
{
    auto pos_int = [](const Rational& q) { return is_integer(q) && q > 0; };
    return pos_int(c.n1) && pos_int(c.n2) && pos_int(c.m1) && pos_int(c.m2) &&
           c.n1 + c.n2 < m.p && c.m1 + c.m2 < m.pp;
}

/* the triple identification: [[n1,m1],[n2,m2]] == [[p-n1-n2, p'-m1-m2],[n1,m1]];
 * applying it three times is the identity */
inline KacCharge triple_rotate(const KacCharge& c, const RationalModel& m)
{
    return {m.p - c.n1 - c.n2, c.n1, m.pp - c.m1 - c.m2, c.m1};
}

/* one field of the Kac table: canonical (lex-least) indices first, then the
 * two alternates of its identification triple */
struct DegenerateField {
    KacCharge canonical;
    KacCharge alt1, alt2;

    friend bool operator==(const DegenerateField& a, const DegenerateField& b)
    {
        return a.canonical == b.canonical;
    }
    friend bool operator<(const DegenerateField& a, const DegenerateField& b)
    {
        return a.canonical < b.canonical;
    }
};

inline DegenerateField make_field(const KacCharge& c, const RationalModel& m)
{
    KacCharge r1 = triple_rotate(c, m);
    KacCharge r2 = triple_rotate(r1, m);
    if (triple_rotate(r2, m) != c)
        throw std::logic_error("triple identification failed to close");
    DegenerateField f{c, r1, r2};
    if (r1 < f.canonical)
        f = {r1, r2, c};
    if (r2 < f.canonical)
        f = {r2, c, r1};
    return f;
}

/* all fields of M_{p,p'}, one canonical representative per triple */
inline std::vector<DegenerateField> kac_table(const RationalModel& m)
{
    std::vector<DegenerateField> out;
    for (long a = 1; a < m.p; ++a)
        for (long b = 1; a + b < m.p; ++b)
            for (long u = 1; u < m.pp; ++u)
                for (long v = 1; u + v < m.pp; ++v) {
                    DegenerateField f = make_field(KacCharge{a, b, u, v}, m);
                    if (f.canonical == KacCharge{a, b, u, v})
                        out.push_back(f);
                }
    std::sort(out.begin(), out.end());
    return out;
}

/* Z3 charge of a degenerate field, constant on its triple.  Exactly one case
 * applies for coprime p,p'. */
inline int z3_charge_of(const KacCharge& c, const RationalModel& m)
{
    Rational q;
    if (m.p % 3 == 0)
        q = c.n1 - c.n2;
    else if (m.pp % 3 == 0)
        q = c.m1 - c.m2;
    else if ((m.p + m.pp) % 3 == 0)
        q = (c.n1 - c.n2) + (c.m1 - c.m2);
    else
        q = (c.n1 - c.n2) - (c.m1 - c.m2);
    if (!is_integer(q))
        throw std::domain_error("Z3 charge needs integer indices");
    long r = ((to_long(q) % 3) + 3) % 3;
    return r == 2 ? -1 : static_cast<int>(r);
}

inline int z3_charge_of(const DegenerateField& f, const RationalModel& m)
{
    return z3_charge_of(f.canonical, m);
}

/* same vertex charge at b^2 = p/p': (n_i, m_i) -> (n_i + u p, m_i + u p')
 * on the first index pair, v on the second */
inline KacCharge index_shift(const KacCharge& c, const Rational& u, const Rational& v,
                             const RationalModel& m)
{
    return {c.n1 + u * m.p, c.n2 + v * m.p, c.m1 + u * m.pp, c.m2 + v * m.pp};
}

/* exact eigenvalues inside the model */
inline Rational h_in_model(const KacCharge& c, const RationalModel& m)
{
    return h_of(c).eval_at_bsq(m.bsq());
}

/* the factor w/(beta*sqrt(3)) equals w_b * b at b^2 = p/p'; w_b is exact */
inline Rational w_b_in_model(const KacCharge& c, const RationalModel& m)
{
    return w_factor_of(c).eval_over_b_at_bsq(m.bsq());
}

/* the three-state Potts model M_{4,5}: named content */
struct PottsField {
    const char* name;
    DegenerateField field;
    int q;
    Rational h;
};

inline std::vector<PottsField> potts_content()
{
    RationalModel m(4, 5);
    auto named = [&](const char* name, long n1, long n2, long m1, long m2) {
        DegenerateField f = make_field(KacCharge{n1, n2, m1, m2}, m);
        return PottsField{name, f, z3_charge_of(f, m), h_in_model(f.canonical, m)};
    };
    return {
        named("1", 1, 1, 1, 1),       named("sigma", 1, 1, 2, 1), named("sigma*", 1, 1, 1, 2),
        named("psi", 1, 1, 1, 3),     named("psi*", 1, 1, 3, 1),  named("eps", 1, 1, 2, 2),
    };
}

} // namespace w3
