#pragma once

#include "rational.hpp"

#include <algorithm>
#include <array>
#include <string_view>
#include <vector>

namespace w3 {

/* Vector in the omega-basis of the sl3 weight lattice.  The Gram matrix
 * w1.w1 = w2.w2 = 2/3, w1.w2 = 1/3 carries all the geometry; coordinates of
 * integral weights are integers, but rational coordinates are allowed
 * everywhere (vertex charges need them). */
struct Weight {
    Rational a1, a2;

    Weight() : a1(0), a2(0) {}
    Weight(Rational a1, Rational a2) : a1(std::move(a1)), a2(std::move(a2)) {}
    Weight(long a1, long a2) : a1(a1), a2(a2) {}

    friend bool operator==(const Weight& u, const Weight& v) = default;
    friend bool operator<(const Weight& u, const Weight& v)
    {
        if (u.a1 != v.a1)
            return u.a1 < v.a1;
        return u.a2 < v.a2;
    }

    friend Weight operator+(const Weight& u, const Weight& v) { return {u.a1 + v.a1, u.a2 + v.a2}; }
    friend Weight operator-(const Weight& u, const Weight& v) { return {u.a1 - v.a1, u.a2 - v.a2}; }
    friend Weight operator-(const Weight& u) { return {-u.a1, -u.a2}; }
    friend Weight operator*(const Rational& k, const Weight& u) { return {k * u.a1, k * u.a2}; }

    bool integral() const { return is_integer(a1) && is_integer(a2); }
    bool dominant() const { return integral() && a1 >= 0 && a2 >= 0; }
};

inline Rational inner(const Weight& u, const Weight& v)
{
    return rat(2, 3) * (u.a1 * v.a1 + u.a2 * v.a2) + rat(1, 3) * (u.a1 * v.a2 + u.a2 * v.a1);
}

/* simple roots, Weyl vector, and the weights of the fundamental rep */
inline const Weight E1{2, -1};
inline const Weight E2{-1, 2};
inline const Weight RHO{1, 1};
inline const std::array<Weight, 3> H_TRIPLE{Weight{1, 0}, Weight{-1, 1}, Weight{0, -1}};
inline const std::array<Weight, 3> POSITIVE_ROOTS{E1, E2, E1 + E2};

/* exchange of omega1 and omega2; not a Weyl element */
inline Weight conjugate_weight(const Weight& w) { return {w.a2, w.a1}; }

/* Element of the Weyl group S3 as an integer matrix on omega-basis column
 * vectors; det is the reflection sign. */
struct WeylElement {
    const char* label;
    int m[2][2];
    int det;

    Weight operator()(const Weight& w) const
    {
        return {m[0][0] * w.a1 + m[0][1] * w.a2, m[1][0] * w.a1 + m[1][1] * w.a2};
    }
};

/* all 6 elements; s1:(a1,a2)->(-a1,a1+a2), s2:(a1,a2)->(a1+a2,-a2) */
inline const std::array<WeylElement, 6>& weyl_elements()
{
    static const std::array<WeylElement, 6> W = {{
        {"id", {{1, 0}, {0, 1}}, 1},
        {"s1", {{-1, 0}, {1, 1}}, -1},
        {"s2", {{1, 1}, {0, -1}}, -1},
        {"s1s2", {{-1, -1}, {1, 0}}, 1},
        {"s2s1", {{0, 1}, {-1, -1}}, 1},
        {"s1s2s1", {{0, -1}, {-1, 0}}, -1},
    }};
    return W;
}

inline WeylElement weyl_compose(const WeylElement& a, const WeylElement& b)
{
    WeylElement c{"", {{0, 0}, {0, 0}}, a.det * b.det};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    for (const auto& w : weyl_elements())
        if (std::equal(&w.m[0][0], &w.m[0][0] + 4, &c.m[0][0])) {
            c.label = w.label;
            return c;
        }
    throw std::logic_error("composition left the Weyl group");
}

inline const WeylElement& weyl_inverse(const WeylElement& x)
{
    for (const auto& y : weyl_elements()) {
        WeylElement xy = weyl_compose(x, y);
        if (std::string_view(xy.label) == "id")
            return y;
    }
    throw std::logic_error("element without inverse");
}

/* triality: a1 - a2 mod 3, reduced to {0,1,2} */
inline int z3_charge(const Weight& w)
{
    if (!w.integral())
        throw std::domain_error("z3_charge needs an integral weight");
    long d = to_long(w.a1 - w.a2) % 3;
    return static_cast<int>((d % 3 + 3) % 3);
}

} // namespace w3
