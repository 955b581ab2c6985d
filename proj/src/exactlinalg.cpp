#include "evenlat/exactlinalg.hpp"

#include <algorithm>

namespace evenlat {

IntVec SmithForm::invariant_factors() const
{
    IntVec d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        d.push_back(D(i, i));
    return d;
}

RatVec RationalSmithForm::diagonal() const
{
    RatVec d;
    for (std::size_t i = 0; i < D.rows(); ++i)
        d.push_back(D(i, i));
    return d;
}

HermiteForm hnf(const IntMat& a)
{
    HermiteForm out{a, IntMat::identity(a.rows()), 0};
    IntMat& h = out.H;
    IntMat& u = out.U;
    const std::size_t m = h.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
        while (true) {
            std::size_t p = m;
            for (std::size_t i = r; i < m; ++i)
                if (h(i, c) != 0 && (p == m || abs(h(i, c)) < abs(h(p, c))))
                    p = i;
            if (p == m)
                break;
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, c) == 0)
                    continue;
                Integer q = floor_div(h(i, c), h(r, c));
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h(i, c) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (h(r, c) == 0)
            continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(h(i, c), h(r, c));
            if (q != 0) {
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
        }
        ++r;
    }
    out.rank = r;
    return out;
}

SmithForm snf(const IntMat& a)
{
    SmithForm out{a, IntMat::identity(a.rows()), IntMat::identity(a.cols())};
    IntMat& d = out.D;
    IntMat& s = out.S;
    IntMat& t = out.T;
    const std::size_t m = d.rows(), n = d.cols();

    auto move_to = [&](std::size_t k, std::size_t i, std::size_t j) {
        d.swap_rows(k, i);
        s.swap_rows(k, i);
        d.swap_cols(k, j);
        t.swap_cols(k, j);
    };

    for (std::size_t k = 0; k < std::min(m, n); ++k) {
        // smallest nonzero entry of the remaining block
        std::size_t bi = m, bj = n;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (d(i, j) != 0 && (bi == m || abs(d(i, j)) < abs(d(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == m)
            break;
        move_to(k, bi, bj);

        while (true) {
            bool clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (d(i, k) == 0)
                    continue;
                Integer q = floor_div(d(i, k), d(k, k));
                d.add_row_multiple(i, k, -q);
                s.add_row_multiple(i, k, -q);
                if (d(i, k) != 0)
                    clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (d(k, j) == 0)
                    continue;
                Integer q = floor_div(d(k, j), d(k, k));
                d.add_col_multiple(j, k, -q);
                t.add_col_multiple(j, k, -q);
                if (d(k, j) != 0)
                    clean = false;
            }
            if (!clean) {
                std::size_t bi2 = k, bj2 = k;
                for (std::size_t i = k + 1; i < m; ++i)
                    if (d(i, k) != 0 && abs(d(i, k)) < abs(d(bi2, bj2))) {
                        bi2 = i;
                        bj2 = k;
                    }
                for (std::size_t j = k + 1; j < n; ++j)
                    if (d(k, j) != 0 && abs(d(k, j)) < abs(d(bi2, bj2))) {
                        bi2 = k;
                        bj2 = j;
                    }
                move_to(k, bi2, bj2);
                continue;
            }
            // divisibility of the remaining block by the pivot
            std::size_t bad = m;
            for (std::size_t i = k + 1; i < m && bad == m; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(k, k).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            d.add_row_multiple(k, bad, 1);
            s.add_row_multiple(k, bad, 1);
        }
        if (d(k, k) < 0) {
            d.negate_row(k);
            s.negate_row(k);
        }
    }
    return out;
}

RationalSmithForm snf_rational(const RatMat& a)
{
    if (!a.is_square())
        throw PreconditionError("snf_rational: matrix is not square");
    Integer l = 1;
    for (const auto& x : a.data())
        l = lcm(l, x.get_den());
    IntMat scaled(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            scaled(i, j) = Rational(a(i, j) * l).get_num();
    SmithForm f = snf(scaled);
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (f.D(i, i) == 0)
            throw PreconditionError("snf_rational: singular matrix");

    RationalSmithForm out{RatMat(n, n), IntMat(n, n), IntMat(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = n - 1 - i;
        Rational v(f.D(src, src), l);
        v.canonicalize();
        out.D(i, i) = v;
        for (std::size_t j = 0; j < n; ++j) {
            out.S(i, j) = f.S(src, j);
            out.T(j, i) = f.T(j, src);
        }
    }
    return out;
}

Signature signature(const RatMat& g)
{
    if (!g.is_symmetric())
        throw PreconditionError("signature: matrix is not symmetric");
    RatMat m = g;
    Signature sig;
    std::size_t n = m.rows();
    // active indices shrink as pivots are eliminated
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i)
        active[i] = i;

    while (!active.empty()) {
        std::size_t piv = n;
        for (auto i : active)
            if (m(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            // zero diagonal: look for an off-diagonal entry and fold it in
            std::size_t pi = n, pj = n;
            for (auto i : active) {
                for (auto j : active)
                    if (i != j && m(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
                if (pi != n)
                    break;
            }
            if (pi == n) {
                sig.n_zero += active.size();
                break;
            }
            // e_i <- e_i + e_j (congruence): new m(i,i) = 2 m(i,j)
            for (auto k : active)
                m(pi, k) += m(pj, k);
            for (auto k : active)
                m(k, pi) += m(k, pj);
            piv = pi;
        }
        const Rational p = m(piv, piv);
        if (p > 0)
            ++sig.n_plus;
        else
            ++sig.n_minus;
        active.erase(std::find(active.begin(), active.end(), piv));
        for (auto i : active) {
            if (m(i, piv) == 0)
                continue;
            const Rational f = m(i, piv) / p;
            for (auto j : active)
                m(i, j) -= f * m(piv, j);
        }
    }
    return sig;
}

Signature signature(const IntMat& g)
{
    return signature(to_rational(g));
}

std::optional<RationalSolution> solve_rational(const RatMat& a, const RatVec& b)
{
    if (b.size() != a.rows())
        throw PreconditionError("solve_rational: dimension mismatch");
    RatMat m = a;
    RatMat rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i)
        rhs(i, 0) = b[i];
    std::vector<std::size_t> pivots;
    const std::size_t r = row_reduce(m, &rhs, &pivots);
    for (std::size_t i = r; i < m.rows(); ++i)
        if (rhs(i, 0) != 0)
            return std::nullopt;

    RationalSolution sol;
    sol.x.assign(a.cols(), Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        sol.x[pivots[i]] = rhs(i, 0);

    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    sol.kernel = RatMat(0, a.cols());
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RatVec k(a.cols(), Rational(0));
        k[f] = 1;
        for (std::size_t i = 0; i < r; ++i)
            k[pivots[i]] = -m(i, f);
        sol.kernel.append_row(k);
    }
    return sol;
}

std::optional<RationalSolution> solve_rational(const IntMat& a, const RatVec& b)
{
    return solve_rational(to_rational(a), b);
}

std::optional<IntVec> solve_integer(const IntMat& gens, const IntVec& target)
{
    if (target.size() != gens.cols())
        throw PreconditionError("solve_integer: dimension mismatch");
    HermiteForm h = hnf(gens);
    IntVec rest = target;
    IntVec y(gens.rows());
    std::size_t c = 0;
    for (std::size_t i = 0; i < h.rank; ++i) {
        while (h.H(i, c) == 0)
            ++c;
        // columns before c are already zero in rest
        if (!mpz_divisible_p(rest[c].get_mpz_t(), h.H(i, c).get_mpz_t()))
            return std::nullopt;
        Integer q = rest[c] / h.H(i, c);
        y[i] = q;
        for (std::size_t j = c; j < gens.cols(); ++j)
            rest[j] -= q * h.H(i, j);
    }
    for (const auto& x : rest)
        if (x != 0)
            return std::nullopt;
    IntVec out(gens.rows());
    for (std::size_t i = 0; i < gens.rows(); ++i)
        for (std::size_t k = 0; k < gens.rows(); ++k)
            out[k] += y[i] * h.U(i, k);
    return out;
}

namespace {

IntMat nonzero_hnf_rows(const IntMat& m)
{
    HermiteForm h = hnf(m);
    IntMat out(0, m.cols());
    for (std::size_t i = 0; i < h.rank; ++i)
        out.append_row(h.H.row(i));
    return out;
}

} // namespace

IntMat kernel_saturated(const IntMat& a)
{
    // U * A^T = H; rows of U beyond rank(H) satisfy x A^T = 0 and form a
    // basis of a direct summand because U is unimodular.
    HermiteForm h = hnf(a.transpose());
    IntMat basis(0, a.cols());
    for (std::size_t i = h.rank; i < h.U.rows(); ++i)
        basis.append_row(h.U.row(i));
    if (basis.rows() == 0)
        return basis;
    return nonzero_hnf_rows(basis);
}

IntMat saturate_rows(const IntMat& gens)
{
    const std::size_t n = gens.cols();
    if (gens.rows() == 0 || gens.is_zero())
        return IntMat(0, n);
    IntMat perp = kernel_saturated(gens);
    if (perp.rows() == 0)
        return IntMat::identity(n);
    return kernel_saturated(perp);
}

RatMat rational_row_basis(const RatMat& gens)
{
    Integer l = 1;
    for (const auto& x : gens.data())
        l = lcm(l, x.get_den());
    IntMat scaled(gens.rows(), gens.cols());
    for (std::size_t i = 0; i < gens.rows(); ++i)
        for (std::size_t j = 0; j < gens.cols(); ++j)
            scaled(i, j) = Rational(gens(i, j) * l).get_num();
    IntMat h = nonzero_hnf_rows(scaled);
    RatMat out(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) {
            out(i, j) = Rational(h(i, j), l);
            out(i, j).canonicalize();
        }
    return out;
}

} // namespace evenlat
