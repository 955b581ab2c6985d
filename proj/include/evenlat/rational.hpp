#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace evenlat {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

/// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p", "-p", "p/q"; result is canonicalized.
Rational parse_rational(const std::string& s);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

Integer floor_div(const Integer& a, const Integer& b);

/// r reduced into [0, m) for a positive integer modulus m.
Rational mod_into(const Rational& r, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

RatVec to_rational(const IntVec& v);

} // namespace evenlat
