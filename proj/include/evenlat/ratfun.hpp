#pragma once

#include "evenlat/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace evenlat {

/// Univariate polynomial over Q; coeffs[i] multiplies s^i, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Rational c);
    explicit UniPoly(RatVec coeffs);
    static UniPoly variable();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const { return coeffs_.back(); }
    const RatVec& coeffs() const { return coeffs_; }

    UniPoly monic() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    /// Euclidean division; divisor must be nonzero.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    /// Monic gcd (zero when both are zero).
    static UniPoly gcd(UniPoly a, UniPoly b);

    std::string to_string(const std::string& var = "s") const;

private:
    void trim();
    RatVec coeffs_;
};

/// Element of Q(s): reduced fraction with monic denominator.
class UniRatFun {
public:
    UniRatFun() : num_(), den_(Rational(1)) {}
    UniRatFun(Rational c) : num_(c), den_(Rational(1)) {}
    UniRatFun(UniPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    UniRatFun(UniPoly num, UniPoly den);
    static UniRatFun variable() { return UniRatFun(UniPoly::variable()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend UniRatFun operator+(const UniRatFun& a, const UniRatFun& b);
    friend UniRatFun operator-(const UniRatFun& a, const UniRatFun& b);
    friend UniRatFun operator*(const UniRatFun& a, const UniRatFun& b);
    friend UniRatFun operator/(const UniRatFun& a, const UniRatFun& b);
    friend UniRatFun operator-(const UniRatFun& a);
    friend bool operator==(const UniRatFun& a, const UniRatFun& b) = default;

    std::string to_string(const std::string& var = "s") const;

private:
    UniPoly num_;
    UniPoly den_;
};

/// A point of P^1 over Q(s); nullopt is the point at infinity.
using ProjPoint = std::optional<UniRatFun>;

/// z -> (a z + b) / (c z + d) over Q(s).
struct MobiusMap {
    UniRatFun a, b, c, d;

    /// Builds z -> scale * (a z + b) / (c z + d). Throws PreconditionError
    /// when the map is degenerate (a d - b c = 0).
    static MobiusMap scaled(const UniRatFun& scale, const UniRatFun& a, const UniRatFun& b, const UniRatFun& c, const UniRatFun& d);

    UniRatFun determinant() const { return a * d - b * c; }
    MobiusMap inverse() const;
    ProjPoint apply(const ProjPoint& z) const;
};

/// Images of points under z -> scale * (a z + b) / (c z + d).
std::vector<ProjPoint> mobius_images(const UniRatFun& scale, const UniRatFun& a, const UniRatFun& b, const UniRatFun& c, const UniRatFun& d, const std::vector<ProjPoint>& points);

std::string to_string(const ProjPoint& p, const std::string& var = "s");

} // namespace evenlat
