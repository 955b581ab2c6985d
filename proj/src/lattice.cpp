#include "evenlat/lattice.hpp"

#include <regex>
#include <sstream>

namespace evenlat {

Lattice::Lattice(IntMat gram, std::string name, bool allow_degenerate)
    : gram_(std::move(gram)), name_(std::move(name))
{
    if (!gram_.is_square())
        throw PreconditionError("Gram matrix is not square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = i + 1; j < gram_.cols(); ++j)
            if (gram_(i, j) != gram_(j, i))
                throw PreconditionError("Gram matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    det_ = determinant(gram_);
    if (det_ == 0 && !allow_degenerate)
        throw PreconditionError("degenerate Gram matrix");
    sig_ = evenlat::signature(gram_);
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        if (!mpz_even_p(gram_(i, i).get_mpz_t()))
            even_ = false;
}

namespace {

IntMat e8_gram()
{
    // Negative definite, Bourbaki numbering: chain 1-3-4-5-6-7-8 with 2 attached to 4.
    IntMat g(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        g(i, i) = -2;
    const int edges[7][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (const auto& e : edges) {
        g(e[0], e[1]) = 1;
        g(e[1], e[0]) = 1;
    }
    return g;
}

Lattice half_sum_extension(std::size_t n, const std::vector<std::vector<std::size_t>>& halves, const std::string& name)
{
    IntMat diag(n, n);
    for (std::size_t i = 0; i < n; ++i)
        diag(i, i) = -2;
    Lattice host(diag);
    RatMat gens = to_rational(IntMat::identity(n));
    for (const auto& h : halves) {
        RatVec v(n, Rational(0));
        for (auto i : h)
            v[i] = Rational(1, 2);
        gens.append_row(v);
    }
    SpanData s = span_lattice(host, gens, name);
    return s.lattice;
}

} // namespace

Lattice make_named(const std::string& name)
{
    static const std::regex scaled_u(R"(U\((-?[0-9]+)\))");
    static const std::regex diag(R"((?:diag)?<\s*(-?[0-9]+(?:\s*,\s*-?[0-9]+)*)\s*>)");
    std::smatch m;
    if (name == "U")
        return Lattice(IntMat{{0, 1}, {1, 0}}, "U");
    if (std::regex_match(name, m, scaled_u)) {
        Integer k(m[1].str());
        if (k == 0)
            throw PreconditionError("U(0) is degenerate");
        return Lattice(IntMat{{0, k}, {k, 0}}, name);
    }
    if (name == "E8")
        return Lattice(e8_gram(), "E8");
    if (name == "A1")
        return Lattice(IntMat{{-2}}, "A1");
    if (std::regex_match(name, m, diag)) {
        IntVec d;
        std::stringstream ss(m[1].str());
        std::string item;
        while (std::getline(ss, item, ','))
            d.emplace_back(static_cast<long>(std::stol(item)));
        return Lattice(IntMat::diagonal(d), name);
    }
    if (name == "Nikulin")
        return half_sum_extension(8, {{0, 1, 2, 3, 4, 5, 6, 7}}, "Nikulin");
    if (name == "M_Z2_3")
        return half_sum_extension(14,
            {{0, 1, 2, 3, 4, 5, 6, 7}, {4, 5, 6, 7, 8, 9, 10, 11}, {0, 1, 4, 5, 8, 9, 12, 13}},
            "M_Z2_3");
    throw PreconditionError("unknown lattice name '" + name + "'");
}

Lattice direct_sum(const Lattice& a, const Lattice& b)
{
    std::string name;
    if (!a.name().empty() && !b.name().empty())
        name = a.name() + "+" + b.name();
    return Lattice(block_diagonal(a.gram(), b.gram()), name, a.is_degenerate() || b.is_degenerate());
}

Lattice direct_sum(const std::vector<Lattice>& parts)
{
    if (parts.empty())
        throw PreconditionError("direct sum of nothing");
    Lattice acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = direct_sum(acc, parts[i]);
    return acc;
}

Lattice rescale(const Lattice& l, const Integer& m)
{
    if (m == 0)
        throw PreconditionError("rescale by zero");
    IntMat g = l.gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            g(i, j) *= m;
    return Lattice(g, l.name().empty() ? std::string() : l.name() + "(" + m.get_str() + ")", l.is_degenerate());
}

SpanData span_lattice(const Lattice& host, const RatMat& gens, const std::string& name)
{
    RatMat basis = rational_row_basis(gens);
    RatMat g = basis * to_rational(host.gram()) * basis.transpose();
    if (!is_integral(g))
        throw PreconditionError("span_lattice: induced form is not integral");
    return SpanData{basis, Lattice(to_integer(g), name, true)};
}

DiscGroupData discriminant_group(const Lattice& l)
{
    if (l.is_degenerate())
        throw PreconditionError("discriminant group of a degenerate lattice");
    DiscGroupData out;
    out.order = abs(l.det());
    const std::size_t n = l.rank();
    RatMat ginv = inverse(l.gram());
    RationalSmithForm f = snf_rational(ginv);
    RatMat rows = to_rational(f.S) * ginv;
    // D is non-increasing, so the non-integral entries come last and their
    // denominators already form a divisibility chain d_1 | d_2 | ...
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& d = f.D(i, i);
        if (d.get_den() == 1)
            continue;
        out.invariant_factors.push_back(d.get_den());
        out.generator_lifts.push_back(rows.row(i));
    }
    return out;
}

std::size_t disc_length(const Lattice& l)
{
    RationalSmithForm f = snf_rational(inverse(l.gram()));
    std::size_t len = 0;
    for (const auto& d : f.diagonal())
        if (d.get_den() != 1)
            ++len;
    return len;
}

Integer scale_gcd(const Lattice& l)
{
    Integer g = 0;
    for (const auto& x : l.gram().data())
        g = gcd(g, x);
    return g;
}

Integer norm_gcd(const Lattice& l)
{
    Integer g = 0;
    const IntMat& m = l.gram();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        g = gcd(g, m(i, i));
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            g = gcd(g, 2 * m(i, j));
    }
    return g;
}

SublatticeData sublattice(const Lattice& host, const IntMat& gens)
{
    if (gens.rows() > 0 && gens.cols() != host.rank())
        throw PreconditionError("sublattice: generator length differs from host rank");
    if (rank(gens) != gens.rows())
        throw PreconditionError("sublattice: generators are linearly dependent (use saturation)");
    SublatticeData s;
    s.basis_coords = gens;
    s.induced_gram = gens * host.gram() * gens.transpose();
    s.degenerate = determinant(s.induced_gram) == 0;
    return s;
}

bool is_primitive(const Lattice& host, const IntMat& gens)
{
    if (gens.rows() > 0 && gens.cols() != host.rank())
        throw PreconditionError("is_primitive: generator length differs from host rank");
    for (const auto& d : snf(gens).invariant_factors())
        if (d != 1)
            return false;
    return true;
}

IntMat saturation(const Lattice& host, const IntMat& gens)
{
    if (gens.rows() > 0 && gens.cols() != host.rank())
        throw PreconditionError("saturation: generator length differs from host rank");
    return saturate_rows(gens.rows() ? gens : IntMat(0, host.rank()));
}

SublatticeData orthogonal_complement(const Lattice& host, const IntMat& gens)
{
    IntMat basis;
    if (gens.rows() == 0)
        basis = IntMat::identity(host.rank());
    else
        basis = kernel_saturated(gens * host.gram());
    SublatticeData s;
    s.basis_coords = basis;
    s.induced_gram = basis * host.gram() * basis.transpose();
    s.degenerate = basis.rows() == 0 || determinant(s.induced_gram) == 0;
    return s;
}

bool contains(const Lattice& l, const RatVec& v)
{
    if (v.size() != l.rank())
        throw PreconditionError("contains: vector length differs from rank");
    for (const auto& x : v)
        if (x.get_den() != 1)
            return false;
    return true;
}

bool in_dual(const Lattice& l, const RatVec& v)
{
    for (const auto& x : to_rational(l.gram()).apply(v))
        if (x.get_den() != 1)
            return false;
    return true;
}

namespace {

void require_even(const Lattice& l, const char* what)
{
    if (!l.is_even())
        throw PreconditionError(std::string(what) + ": lattice is odd");
}

} // namespace

bool nikulin_unique(const Lattice& l)
{
    require_even(l, "nikulin_unique");
    const auto& s = l.signature();
    if (s.n_plus == 0 || s.n_minus == 0)
        return false;
    return l.rank() >= 2 + disc_length(l);
}

bool splits_E8(const Lattice& l)
{
    require_even(l, "splits_E8");
    const auto& s = l.signature();
    return s.n_plus >= 1 && s.n_minus >= 8 && l.rank() >= 9 + disc_length(l);
}

bool splits_U(const Lattice& l)
{
    require_even(l, "splits_U");
    const auto& s = l.signature();
    return s.n_plus >= 1 && s.n_minus >= 1 && l.rank() >= 3 + disc_length(l);
}

std::optional<TwoElementaryInvariants> two_elem_invariants(const Lattice& l)
{
    require_even(l, "two_elem_invariants");
    DiscGroupData a = discriminant_group(l);
    for (const auto& d : a.invariant_factors)
        if (d != 2)
            return std::nullopt;
    TwoElementaryInvariants inv{l.signature(), a.length(), 0};
    // On a 2-elementary group 2 b(x, y) is integral, so q is integral
    // everywhere iff it is integral on generators.
    for (const auto& g : a.generator_lifts)
        if (l.pair(g, g).get_den() != 1)
            inv.delta = 1;
    return inv;
}

} // namespace evenlat
