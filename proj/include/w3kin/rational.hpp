#pragma once

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>
#include <string>

namespace w3 {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize(); // mpq_class(n, d) does not reduce on its own
    return q;
}

inline Integer num(const Rational& q) { return q.get_num(); }
inline Integer den(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/* exact long value; only call when is_integer and in range */
inline long to_long(const Rational& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::domain_error("to_long on non-integer or out-of-range rational");
    return q.get_num().get_si();
}

inline double to_double(const Rational& q) { return q.get_d(); }

/* "num/den" with the slash omitted for integers */
inline std::string to_string(const Rational& q)
{
    std::string s = q.get_num().get_str();
    if (!is_integer(q))
        s += '/' + q.get_den().get_str();
    return s;
}

/* accepts "n", "-n", "n/d", "-n/d" */
inline Rational parse_rational(const std::string& s)
{
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rational pow_rat(const Rational& q, int k)
{
    if (k < 0)
        return Rational(1) / pow_rat(q, -k);
    Rational r = 1;
    for (int i = 0; i < k; ++i)
        r *= q;
    return r;
}

} // namespace w3
