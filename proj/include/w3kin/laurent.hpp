#pragma once

#include "rational.hpp"

#include <cmath>
#include <map>

namespace w3 {

/* Finite Laurent polynomial in b with exact rational coefficients; no zero
 * coefficients are ever stored. */
struct LaurentPoly {
    std::map<int, Rational> coeffs;

    LaurentPoly() = default;
    explicit LaurentPoly(Rational constant)
    {
        if (constant != 0)
            coeffs[0] = std::move(constant);
    }
    LaurentPoly(std::initializer_list<std::pair<const int, Rational>> terms)
    {
        for (const auto& [k, c] : terms)
            add_term(k, c);
    }

    void add_term(int k, const Rational& c)
    {
        if (c == 0)
            return;
        Rational& slot = coeffs[k];
        slot += c;
        if (slot == 0)
            coeffs.erase(k);
    }

    Rational coeff(int k) const
    {
        auto it = coeffs.find(k);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    bool zero() const { return coeffs.empty(); }

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) { return p.coeffs == q.coeffs; }

    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q)
    {
        LaurentPoly r = p;
        for (const auto& [k, c] : q.coeffs)
            r.add_term(k, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q)
    {
        LaurentPoly r = p;
        for (const auto& [k, c] : q.coeffs)
            r.add_term(k, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q)
    {
        LaurentPoly r;
        for (const auto& [k, c] : p.coeffs)
            for (const auto& [l, d] : q.coeffs)
                r.add_term(k + l, c * d);
        return r;
    }
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p)
    {
        LaurentPoly r;
        for (const auto& [k, d] : p.coeffs)
            r.add_term(k, c * d);
        return r;
    }

    /* multiply by b^k */
    LaurentPoly shifted(int k) const
    {
        LaurentPoly r;
        for (const auto& [l, c] : coeffs)
            r.coeffs[l + k] = c;
        return r;
    }

    bool even() const
    {
        for (const auto& [k, c] : coeffs)
            if (k % 2 != 0)
                return false;
        return true;
    }
    bool odd() const
    {
        for (const auto& [k, c] : coeffs)
            if (k % 2 == 0)
                return false;
        return true;
    }

    double eval(double b) const
    {
        double r = 0;
        for (const auto& [k, c] : coeffs)
            r += to_double(c) * std::pow(b, k);
        return r;
    }

    /* exact value at a given b^2; the polynomial must be even */
    Rational eval_at_bsq(const Rational& bsq) const
    {
        if (!even())
            throw std::domain_error("eval_at_bsq on a poly with odd powers of b");
        Rational r = 0;
        for (const auto& [k, c] : coeffs)
            r += c * pow_rat(bsq, k / 2);
        return r;
    }

    /* exact value of p/b at b^2, for odd p (p = b * even poly) */
    Rational eval_over_b_at_bsq(const Rational& bsq) const
    {
        if (!odd())
            throw std::domain_error("eval_over_b_at_bsq on a poly with even powers of b");
        return shifted(-1).eval_at_bsq(bsq);
    }

    /* d/d(b^2) for even polynomials, again an even Laurent polynomial */
    LaurentPoly derivative_bsq() const
    {
        if (!even())
            throw std::domain_error("derivative_bsq on a poly with odd powers of b");
        LaurentPoly r;
        for (const auto& [k, c] : coeffs)
            r.add_term(k - 2, rat(k, 2) * c);
        return r;
    }

    /* human-readable, e.g. "-2/3*b^-2 + 3/2 - 3/4*b^2" */
    std::string str() const
    {
        if (coeffs.empty())
            return "0";
        std::string s;
        for (const auto& [k, c] : coeffs) {
            std::string mag = to_string(c < 0 ? -c : c);
            s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            if (k == 0)
                s += mag;
            else {
                if (mag != "1")
                    s += mag + "*";
                s += (k == 1) ? "b" : "b^" + std::to_string(k);
            }
        }
        return s;
    }
};

} // namespace w3
