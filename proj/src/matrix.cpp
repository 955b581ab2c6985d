#include "evenlat/matrix.hpp"

#include <sstream>

namespace evenlat {

RatMat to_rational(const IntMat& m)
{
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

bool is_integral(const RatMat& m)
{
    for (const auto& x : m.data())
        if (x.get_den() != 1)
            return false;
    return true;
}

IntMat to_integer(const RatMat& m)
{
    IntMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw PreconditionError("non-integral entry at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

IntMat block_diagonal(const IntMat& a, const IntMat& b)
{
    IntMat m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

Integer determinant(const IntMat& a)
{
    if (!a.is_square())
        throw PreconditionError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMat m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t row_reduce(RatMat& a, RatMat* rhs, std::vector<std::size_t>* pivots)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(r, p);
        if (rhs)
            rhs->swap_rows(r, p);
        Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(r, j) *= inv;
        if (rhs)
            for (std::size_t j = 0; j < rhs->cols(); ++j)
                (*rhs)(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            Rational f = -a(i, c);
            a.add_row_multiple(i, r, f);
            if (rhs)
                rhs->add_row_multiple(i, r, f);
        }
        if (pivots)
            pivots->push_back(c);
        ++r;
    }
    return r;
}

Rational determinant(const RatMat& a)
{
    if (!a.is_square())
        throw PreconditionError("determinant of non-square matrix");
    RatMat m = a;
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            m.swap_rows(k, p);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0)
                continue;
            Rational f = -m(i, k) / m(k, k);
            m.add_row_multiple(i, k, f);
        }
    }
    return det;
}

RatMat inverse(const RatMat& a)
{
    if (!a.is_square())
        throw PreconditionError("inverse of non-square matrix");
    RatMat m = a;
    RatMat inv = RatMat::identity(a.rows());
    if (row_reduce(m, &inv, nullptr) != a.rows())
        throw PreconditionError("singular matrix");
    return inv;
}

RatMat inverse(const IntMat& a)
{
    return inverse(to_rational(a));
}

std::size_t rank(const RatMat& a)
{
    RatMat m = a;
    return row_reduce(m, nullptr, nullptr);
}

std::size_t rank(const IntMat& a)
{
    return rank(to_rational(a));
}

Rational bilinear(const IntMat& g, const RatVec& x, const RatVec& y)
{
    if (x.size() != g.rows() || y.size() != g.cols())
        throw PreconditionError("bilinear form dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (x[i] == 0)
            continue;
        Rational row = 0;
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g(i, j) != 0)
                row += Rational(g(i, j)) * y[j];
        s += x[i] * row;
    }
    return s;
}

template <typename T>
static std::string format(const Matrix<T>& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

std::string to_string(const IntMat& m) { return format(m); }
std::string to_string(const RatMat& m) { return format(m); }

} // namespace evenlat
