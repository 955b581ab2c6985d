#include "evenlat/discform.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace evenlat {

namespace {

Rational mod1(const Rational& r) { return mod_into(r, 1); }
Rational mod2(const Rational& r) { return mod_into(r, 2); }

long to_long(const Integer& z)
{
    if (!z.fits_slong_p())
        throw GuardExceeded("group order does not fit a machine integer");
    return z.get_si();
}

} // namespace

FiniteQuadraticModule::FiniteQuadraticModule(std::vector<long> orders, const RatMat& table)
    : orders_(std::move(orders))
{
    const std::size_t k = orders_.size();
    if (table.rows() != k || table.cols() != k)
        throw PreconditionError("form table must be " + std::to_string(k) + "x" + std::to_string(k));
    if (!table.is_symmetric())
        throw PreconditionError("form table is not symmetric");
    q_.resize(k);
    b_ = RatMat(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (orders_[i] < 2)
            throw PreconditionError("generator orders must be at least 2");
        q_[i] = mod2(table(i, i));
        for (std::size_t j = 0; j < k; ++j)
            b_(i, j) = i == j ? mod1(table(i, i)) : mod1(table(i, j));
    }
    for (std::size_t i = 0; i < k; ++i) {
        const Rational d(orders_[i]);
        if (!is_integral(d * d * q_[i] / 2) || !is_integral(d * q_[i]))
            throw PreconditionError("q(g" + std::to_string(i + 1) + ") is incompatible with its order");
        for (std::size_t j = 0; j < k; ++j)
            if (!is_integral(d * b_(i, j)))
                throw PreconditionError("b(g" + std::to_string(i + 1) + ",g" + std::to_string(j + 1) +
                                        ") is incompatible with the order of g" + std::to_string(i + 1));
    }
}

long FiniteQuadraticModule::order() const
{
    long n = 1;
    for (long d : orders_)
        n *= d;
    return n;
}

GroupElement FiniteQuadraticModule::reduce(const GroupElement& x) const
{
    if (x.size() != orders_.size())
        throw PreconditionError("group element has wrong length");
    GroupElement r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = ((x[i] % orders_[i]) + orders_[i]) % orders_[i];
    return r;
}

Rational FiniteQuadraticModule::q_value(const GroupElement& x) const
{
    const GroupElement e = reduce(x);
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        s += Rational(e[i] * e[i]) * q_[i];
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[j] != 0)
                s += Rational(2 * e[i] * e[j]) * b_(i, j);
    }
    return mod2(s);
}

Rational FiniteQuadraticModule::b_value(const GroupElement& x, const GroupElement& y) const
{
    const GroupElement a = reduce(x), c = reduce(y);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0)
                s += Rational(a[i] * c[j]) * b_(i, j);
    }
    return mod1(s);
}

GroupElement FiniteQuadraticModule::add(const GroupElement& x, const GroupElement& y) const
{
    GroupElement r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = x[i] + y[i];
    return reduce(r);
}

GroupElement FiniteQuadraticModule::neg(const GroupElement& x) const { return scale(-1, x); }

GroupElement FiniteQuadraticModule::scale(long n, const GroupElement& x) const
{
    GroupElement r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = (n % orders_[i]) * (x[i] % orders_[i]);
    return reduce(r);
}

GroupElement FiniteQuadraticModule::generator(std::size_t i) const
{
    GroupElement g = zero();
    g.at(i) = 1;
    return g;
}

long FiniteQuadraticModule::element_order(const GroupElement& x) const
{
    const GroupElement e = reduce(x);
    long o = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        o = std::lcm(o, orders_[i] / std::gcd(e[i], orders_[i]));
    return o;
}

std::vector<GroupElement> FiniteQuadraticModule::elements() const
{
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order()));
    GroupElement e = zero();
    while (true) {
        out.push_back(e);
        std::size_t i = e.size();
        while (i > 0) {
            --i;
            if (++e[i] < orders_[i])
                break;
            e[i] = 0;
            if (i == 0)
                return out;
        }
        if (e.empty())
            return out;
    }
}

std::size_t FiniteQuadraticModule::index_of(const GroupElement& x) const
{
    const GroupElement e = reduce(x);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(e[i]);
    return idx;
}

RatMat FiniteQuadraticModule::form_matrix(const std::vector<GroupElement>& basis) const
{
    RatMat m(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            m(i, j) = i == j ? q_value(basis[i]) : b_value(basis[i], basis[j]);
    return m;
}

RatVec FiniteQuadraticModule::lift(const GroupElement& x) const
{
    if (!source_)
        throw PreconditionError("module has no source lattice");
    const GroupElement e = reduce(x);
    RatVec v(source_->rank(), Rational(0));
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t c = 0; c < v.size(); ++c)
            v[c] += Rational(e[i]) * lifts_[i][c];
    return v;
}

FiniteQuadraticModule from_lifts(const Lattice& l, const std::vector<RatVec>& lifts, const std::vector<long>& orders)
{
    if (!l.is_even())
        throw PreconditionError("discriminant form of an odd lattice");
    if (l.is_degenerate())
        throw PreconditionError("discriminant form of a degenerate lattice");
    if (lifts.size() != orders.size())
        throw PreconditionError("number of lifts differs from number of orders");
    const std::size_t k = lifts.size(), n = l.rank();
    long total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (lifts[i].size() != n)
            throw PreconditionError("lift " + std::to_string(i + 1) + " has wrong length");
        if (!in_dual(l, lifts[i]))
            throw PreconditionError("lift " + std::to_string(i + 1) + " is not in the dual lattice");
        RatVec v = lifts[i];
        for (auto& x : v)
            x *= orders[i];
        if (!contains(l, v))
            throw PreconditionError("lift " + std::to_string(i + 1) + " does not have order " + std::to_string(orders[i]));
        for (long d = 1; d < orders[i]; ++d)
            if (orders[i] % d == 0) {
                RatVec w = lifts[i];
                for (auto& x : w)
                    x *= d;
                if (contains(l, w))
                    throw PreconditionError("lift " + std::to_string(i + 1) + " has order smaller than " + std::to_string(orders[i]));
            }
        total *= orders[i];
    }
    if (Integer(total) != abs(l.det()))
        throw PreconditionError("product of orders " + std::to_string(total) + " differs from |det| = " + Integer(abs(l.det())).get_str());
    // The lifts generate A_L iff L + <lifts> = L*, i.e. the index is |det|.
    RatMat gens = to_rational(IntMat::identity(n));
    for (const auto& v : lifts)
        gens.append_row(v);
    RatMat basis = rational_row_basis(gens);
    if (basis.rows() != n || abs(1 / determinant(basis)) != Rational(abs(l.det())))
        throw PreconditionError("lifts do not generate the discriminant group");
    RatMat table(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            table(i, j) = l.pair(lifts[i], lifts[j]);
    FiniteQuadraticModule m(orders, table);
    m.lifts_ = lifts;
    m.source_ = l;
    return m;
}

FiniteQuadraticModule from_lattice(const Lattice& l)
{
    DiscGroupData a = discriminant_group(l);
    std::vector<long> orders;
    for (const auto& d : a.invariant_factors)
        orders.push_back(to_long(d));
    return from_lifts(l, a.generator_lifts, orders);
}

FiniteQuadraticModule negate(const FiniteQuadraticModule& m)
{
    const std::size_t k = m.num_generators();
    RatMat t(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            t(i, j) = i == j ? -m.q_gen(i) : -m.b_gen(i, j);
    return FiniteQuadraticModule(m.orders(), t);
}

FiniteQuadraticModule direct_sum(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b)
{
    const std::size_t ka = a.num_generators(), kb = b.num_generators();
    std::vector<long> orders = a.orders();
    orders.insert(orders.end(), b.orders().begin(), b.orders().end());
    RatMat t(ka + kb, ka + kb);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j)
            t(i, j) = i == j ? a.q_gen(i) : a.b_gen(i, j);
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = 0; j < kb; ++j)
            t(ka + i, ka + j) = i == j ? b.q_gen(i) : b.b_gen(i, j);
    return FiniteQuadraticModule(orders, t);
}

std::vector<GroupElement> isotropic_elements(const FiniteQuadraticModule& m)
{
    std::vector<GroupElement> out;
    for (const auto& x : m.elements())
        if (m.q_value(x) == 0 && x != m.zero())
            out.push_back(x);
    return out;
}

std::vector<GroupElement> generated_subgroup(const FiniteQuadraticModule& m, const std::vector<GroupElement>& gens)
{
    std::set<GroupElement> seen{m.zero()};
    std::vector<GroupElement> frontier{m.zero()};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                GroupElement y = m.add(x, g);
                if (seen.insert(y).second)
                    next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

namespace {

IsotropicSubgroup make_subgroup(const FiniteQuadraticModule& m, std::vector<GroupElement> elems)
{
    IsotropicSubgroup h;
    std::sort(elems.begin(), elems.end());
    h.elements = elems;
    std::vector<GroupElement> span{m.zero()};
    for (const auto& x : elems) {
        if (std::binary_search(span.begin(), span.end(), x))
            continue;
        h.generators.push_back(x);
        span = generated_subgroup(m, h.generators);
    }
    return h;
}

} // namespace

std::vector<IsotropicSubgroup> isotropic_subgroups(const FiniteQuadraticModule& m)
{
    const long guard = isomorphism_guard_order();
    if (m.order() > guard)
        throw GuardExceeded("isotropic subgroup search: |A| = " + std::to_string(m.order()) + " exceeds guard " + std::to_string(guard));
    const std::vector<GroupElement> iso = isotropic_elements(m);
    std::set<std::vector<GroupElement>> found;
    std::vector<std::vector<GroupElement>> frontier{{m.zero()}};
    found.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<std::vector<GroupElement>> next;
        for (const auto& h : frontier)
            for (const auto& g : iso) {
                if (std::binary_search(h.begin(), h.end(), g))
                    continue;
                // <H, g> is isotropic iff q(g) = 0 and b(g, H) = 0 on generators;
                // checking every element keeps this simple and exact.
                std::vector<GroupElement> gens = h;
                gens.push_back(g);
                std::vector<GroupElement> k = generated_subgroup(m, gens);
                bool ok = true;
                for (const auto& x : k)
                    if (m.q_value(x) != 0) {
                        ok = false;
                        break;
                    }
                if (ok && found.insert(k).second)
                    next.push_back(k);
            }
        frontier = std::move(next);
    }
    std::vector<IsotropicSubgroup> out;
    for (const auto& e : found)
        out.push_back(make_subgroup(m, e));
    std::stable_sort(out.begin(), out.end(), [](const IsotropicSubgroup& a, const IsotropicSubgroup& b) {
        if (a.order() != b.order())
            return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

OverlatticeData overlattice(const FiniteQuadraticModule& m, const IsotropicSubgroup& h)
{
    if (!m.source())
        throw PreconditionError("overlattice: module has no source lattice");
    for (const auto& x : h.elements)
        if (m.q_value(x) != 0)
            throw PreconditionError("overlattice: subgroup is not isotropic");
    const Lattice& l = *m.source();
    RatMat gens = to_rational(IntMat::identity(l.rank()));
    for (const auto& g : h.generators)
        gens.append_row(m.lift(g));
    SpanData s = span_lattice(l, gens);
    if (!s.lattice.is_even())
        throw PreconditionError("overlattice: result is odd");
    return OverlatticeData{s.basis, s.lattice};
}

long isomorphism_guard_order()
{
    if (const char* env = std::getenv("EVENLAT_GUARD_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 1024;
}

namespace {

struct Search {
    const FiniteQuadraticModule& a;
    const FiniteQuadraticModule& b;
    std::vector<std::vector<GroupElement>> candidates;
    std::vector<GroupElement> images;

    bool run(std::size_t i)
    {
        if (i == a.num_generators()) {
            Isomorphism f{images};
            return is_isometry(a, b, f);
        }
        const GroupElement gi = a.generator(i);
        for (const auto& y : candidates[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = b.b_value(y, images[j]) == a.b_gen(i, j);
            if (!ok)
                continue;
            images.push_back(y);
            if (run(i + 1))
                return true;
            images.pop_back();
        }
        return false;
    }
};

std::map<std::pair<long, Rational>, long> fingerprint(const FiniteQuadraticModule& m)
{
    std::map<std::pair<long, Rational>, long> f;
    for (const auto& x : m.elements())
        ++f[{m.element_order(x), m.q_value(x)}];
    return f;
}

} // namespace

bool is_isometry(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b, const Isomorphism& f)
{
    const std::size_t k = a.num_generators();
    if (f.images.size() != k || a.order() != b.order())
        return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (f.images[i].size() != b.num_generators())
            return false;
        if (b.scale(a.orders()[i], f.images[i]) != b.zero())
            return false;
        if (b.q_value(f.images[i]) != a.q_gen(i))
            return false;
        for (std::size_t j = i + 1; j < k; ++j)
            if (b.b_value(f.images[i], f.images[j]) != a.b_gen(i, j))
                return false;
    }
    // Well defined and form-preserving; bijective iff the images generate B
    // (|A| = |B|).
    return static_cast<long>(generated_subgroup(b, f.images).size()) == b.order();
}

std::optional<Isomorphism> are_isomorphic(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b)
{
    const long guard = isomorphism_guard_order();
    if (a.order() > guard || b.order() > guard)
        throw GuardExceeded("isomorphism search: group order " + std::to_string(std::max(a.order(), b.order())) +
                            " exceeds guard " + std::to_string(guard));
    if (a.order() != b.order())
        return std::nullopt;
    if (fingerprint(a) != fingerprint(b))
        return std::nullopt;
    Search s{a, b, {}, {}};
    const auto elems = b.elements();
    for (std::size_t i = 0; i < a.num_generators(); ++i) {
        std::vector<GroupElement> c;
        for (const auto& y : elems)
            if (b.element_order(y) == a.orders()[i] && b.q_value(y) == a.q_gen(i))
                c.push_back(y);
        s.candidates.push_back(std::move(c));
    }
    if (s.run(0))
        return Isomorphism{s.images};
    return std::nullopt;
}

} // namespace evenlat
