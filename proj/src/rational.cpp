#include "evenlat/rational.hpp"

#include "evenlat/error.hpp"

namespace evenlat {

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw ParseError("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw ParseError("bad rational literal '" + s + "'");
    if (r.get_den() == 0)
        throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rational mod_into(const Rational& r, const Integer& m)
{
    // r - m * floor(r / m)
    Rational t = r / Rational(m);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    Rational out = r - Rational(m * fl);
    out.canonicalize();
    return out;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

RatVec to_rational(const IntVec& v)
{
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.emplace_back(x);
    return out;
}

} // namespace evenlat
