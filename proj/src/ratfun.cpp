#include "evenlat/ratfun.hpp"

#include "evenlat/error.hpp"

#include <sstream>

namespace evenlat {

UniPoly::UniPoly(Rational c)
{
    if (c != 0)
        coeffs_.push_back(c);
}

UniPoly::UniPoly(RatVec coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::variable()
{
    return UniPoly(RatVec{Rational(0), Rational(1)});
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

UniPoly UniPoly::monic() const
{
    if (is_zero())
        return *this;
    UniPoly p = *this;
    const Rational lc = leading();
    for (auto& c : p.coeffs_)
        c /= lc;
    return p;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b)
{
    RatVec c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a)
{
    RatVec c = a.coeffs_;
    for (auto& x : c)
        x = -x;
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b)
{
    return a + (-b);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return UniPoly();
    RatVec c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r)
{
    if (b.is_zero())
        throw PreconditionError("polynomial division by zero");
    RatVec quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    RatVec rem = a.coeffs_;
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const Rational f = rem[k + b.degree()] / b.leading();
        quot[k] = f;
        for (int j = 0; j <= b.degree(); ++j)
            rem[k + j] -= f * b.coeffs_[j];
    }
    q = UniPoly(std::move(quot));
    r = UniPoly(std::move(rem));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1)
            os << mag.get_str();
        if (i > 0) {
            if (mag != 1)
                os << '*';
            os << var;
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

UniRatFun::UniRatFun(UniPoly num, UniPoly den)
{
    if (den.is_zero())
        throw PreconditionError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UniPoly();
        den_ = UniPoly(Rational(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num, den);
    UniPoly q, r;
    UniPoly::divmod(num, g, num_, r);
    UniPoly::divmod(den, g, den_, r);
    const Rational lc = den_.leading();
    num_ = num_ * UniPoly(Rational(1) / lc);
    den_ = den_.monic();
}

UniRatFun operator+(const UniRatFun& a, const UniRatFun& b)
{
    return UniRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

UniRatFun operator-(const UniRatFun& a)
{
    return UniRatFun(-a.num_, a.den_);
}

UniRatFun operator-(const UniRatFun& a, const UniRatFun& b)
{
    return a + (-b);
}

UniRatFun operator*(const UniRatFun& a, const UniRatFun& b)
{
    return UniRatFun(a.num_ * b.num_, a.den_ * b.den_);
}

UniRatFun operator/(const UniRatFun& a, const UniRatFun& b)
{
    if (b.is_zero())
        throw PreconditionError("rational function division by zero");
    return UniRatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string UniRatFun::to_string(const std::string& var) const
{
    if (den_ == UniPoly(Rational(1)))
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

MobiusMap MobiusMap::scaled(const UniRatFun& scale, const UniRatFun& a, const UniRatFun& b, const UniRatFun& c, const UniRatFun& d)
{
    MobiusMap m{scale * a, scale * b, c, d};
    if (m.determinant().is_zero())
        throw PreconditionError("degenerate Moebius map (ad - bc = 0)");
    return m;
}

MobiusMap MobiusMap::inverse() const
{
    return MobiusMap{d, -b, -c, a};
}

ProjPoint MobiusMap::apply(const ProjPoint& z) const
{
    if (!z) {
        // image of infinity is a / c
        if (c.is_zero())
            return std::nullopt;
        return a / c;
    }
    UniRatFun den = c * *z + d;
    if (den.is_zero())
        return std::nullopt;
    return (a * *z + b) / den;
}

std::vector<ProjPoint> mobius_images(const UniRatFun& scale, const UniRatFun& a, const UniRatFun& b, const UniRatFun& c, const UniRatFun& d, const std::vector<ProjPoint>& points)
{
    const MobiusMap m = MobiusMap::scaled(scale, a, b, c, d);
    std::vector<ProjPoint> out;
    out.reserve(points.size());
    for (const auto& p : points)
        out.push_back(m.apply(p));
    return out;
}

std::string to_string(const ProjPoint& p, const std::string& var)
{
    return p ? p->to_string(var) : std::string("INFINITY");
}

} // namespace evenlat
