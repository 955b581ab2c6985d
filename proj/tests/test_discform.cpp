#include <doctest.h>

#include "evenlat/discform.hpp"
#include "evenlat/error.hpp"

#include "support.hpp"

#include <set>

using namespace evenlat;

namespace {

const IntMat kQ{{-2, 0, 1, 0, 2, -1},   {0, -6, -1, -4, 4, -5}, {1, -1, -8, 6, 2, 0},
                {0, -4, 6, -16, 4, -2}, {2, 4, 2, 4, -8, 6},    {-1, -5, 0, -2, 6, -12}};

Rational mod2(Rational r) { return mod_into(r, 2); }
Rational mod1(Rational r) { return mod_into(r, 1); }

// Canonical key of a lattice L' with 2L' contained in Z^n: HNF of 2 * basis.
IntMat key_of(const RatMat& basis)
{
    IntMat m(basis.rows(), basis.cols());
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j) {
            Rational x = basis(i, j) * 2;
            REQUIRE(is_integral(x));
            m(i, j) = x.get_num();
        }
    HermiteForm h = hnf(m);
    IntMat out(h.rank, m.cols());
    for (std::size_t i = 0; i < h.rank; ++i)
        out.set_row(i, h.H.row(i));
    return out;
}

std::string key_string(const IntMat& m) { return to_string(m); }

// Brute force: all even index-2 overlattices L + Z(x/2), x in {0,1}^n.
std::set<std::string> index_two_overlattices(const Lattice& l)
{
    std::size_t n = l.rank();
    std::set<std::string> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        RatVec v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = (mask >> i) & 1 ? Rational(1, 2) : Rational(0);
        if (!in_dual(l, v))
            continue;
        Rational sq = l.pair(v, v);
        if (!is_integral(sq) || sq.get_num() % 2 != 0)
            continue;
        RatMat basis = to_rational(IntMat::identity(n));
        basis.append_row(v);
        out.insert(key_string(key_of(rational_row_basis(basis))));
    }
    return out;
}

} // namespace

TEST_CASE("discriminant form of A1 and U(2)")
{
    FiniteQuadraticModule a1 = from_lattice(make_named("A1"));
    CHECK(a1.orders() == std::vector<long>{2});
    CHECK(a1.q_gen(0) == Rational(3, 2)); // -1/2 mod 2
    FiniteQuadraticModule u2 = from_lattice(make_named("U(2)"));
    CHECK(u2.order() == 4);
    std::vector<Rational> qs;
    for (const auto& x : u2.elements())
        qs.push_back(u2.q_value(x));
    std::multiset<Rational> got(qs.begin(), qs.end());
    CHECK(got == std::multiset<Rational>{0, 0, 0, 1});
}

TEST_CASE("module arithmetic")
{
    RatMat table{{Rational(1, 2), 0}, {0, Rational(-1, 4)}};
    FiniteQuadraticModule m({2, 4}, table);
    CHECK(m.add({1, 3}, {1, 2}) == GroupElement{0, 1});
    CHECK(m.neg({1, 1}) == GroupElement{1, 3});
    CHECK(m.element_order({0, 2}) == 2);
    CHECK(m.q_value({0, 2}) == 1);
    CHECK(negate(negate(m)).q_gen(1) == m.q_gen(1));
    FiniteQuadraticModule triv({}, RatMat(0, 0));
    FiniteQuadraticModule s = direct_sum(m, triv);
    CHECK(s.orders() == m.orders());
    CHECK(are_isomorphic(s, m).has_value());
    // b(g, g) = 1/3 has no order dividing 4
    CHECK_THROWS_AS(FiniteQuadraticModule({4}, RatMat{{Rational(1, 3)}}), PreconditionError);
}

TEST_CASE("A_Q: invariant factors, table and isotropic classes")
{
    Lattice q(kQ);
    FiniteQuadraticModule a = from_lattice(q);
    std::vector<long> orders = a.orders();
    CHECK(orders == std::vector<long>{2, 2, 4, 4});

    // Oracle: enumerate a v1 + b v2 + c w1 + d w2 directly with rational vectors.
    std::vector<RatVec> g{{Rational(1, 2), Rational(-1, 2), 0, 0, Rational(1, 2), 0},
                          {Rational(-1, 2), Rational(1, 2), 0, 0, 0, 0},
                          {Rational(1, 2), 0, 0, Rational(-1, 4), 0, 0},
                          {0, 0, Rational(1, 4), Rational(-1, 4), Rational(-1, 4), Rational(-1, 4)}};
    FiniteQuadraticModule b = from_lifts(q, g, {2, 2, 4, 4});
    std::set<GroupElement> iso;
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            for (long k = 0; k < 4; ++k)
                for (long l = 0; l < 4; ++l) {
                    if (!i && !j && !k && !l)
                        continue;
                    RatVec v(6);
                    for (std::size_t c = 0; c < 6; ++c)
                        v[c] = i * g[0][c] + j * g[1][c] + k * g[2][c] + l * g[3][c];
                    if (mod2(q.pair(v, v)) == 0)
                        iso.insert({i, j, k, l});
                }
    std::set<GroupElement> printed{{0, 0, 2, 0}, {0, 1, 0, 0}, {0, 1, 2, 0}, {1, 0, 0, 2},
                                   {1, 0, 2, 2}, {1, 1, 0, 0}, {1, 1, 2, 0}};
    CHECK(iso == printed);
    auto got = isotropic_elements(b);
    CHECK(std::set<GroupElement>(got.begin(), got.end()) == printed);
    CHECK(are_isomorphic(a, b).has_value());
    CHECK(isotropic_subgroups(b).size() == 11);
}

TEST_CASE("overlattice of U(2) by an isotropic element is U")
{
    FiniteQuadraticModule m = from_lattice(make_named("U(2)"));
    auto subs = isotropic_subgroups(m);
    REQUIRE(subs.size() == 3); // trivial and two lines
    OverlatticeData d = overlattice(m, subs[1]);
    CHECK(abs(d.lattice.det()) == 1);
    CHECK(d.lattice.is_even());
}

TEST_CASE("guard")
{
    FiniteQuadraticModule big = from_lattice(direct_sum(make_named("<-4>"), make_named("<-1024>")));
    CHECK_THROWS_AS(are_isomorphic(big, big), GuardExceeded);
}

TEST_CASE("property: q(x + y) - q(x) - q(y) = 2 b(x, y) and q(n x) = n^2 q(x)")
{
    int checked = 0;
    for (int t = 0; checked < evt::kCases; ++t) {
        evt::reseed(9000 + t);
        IntMat g = evt::random_even_lattice(evt::uniform(1, 4), 4);
        if (abs(determinant(g)) > 400)
            continue;
        FiniteQuadraticModule m = from_lattice(Lattice(g));
        INFO("case " << t << " G=" << to_string(g));
        auto els = m.elements();
        for (int k = 0; k < 6; ++k) {
            const auto& x = els[evt::uniform(0, static_cast<long>(els.size()) - 1)];
            const auto& y = els[evt::uniform(0, static_cast<long>(els.size()) - 1)];
            Rational lhs = m.q_value(m.add(x, y)) - m.q_value(x) - m.q_value(y);
            CHECK(mod2(lhs) == mod2(2 * m.b_value(x, y)));
            CHECK(mod1(m.b_value(x, y)) == mod1(m.b_value(y, x)));
            long n = evt::uniform(-3, 3);
            CHECK(m.q_value(m.scale(n, x)) == mod2(n * n * m.q_value(x)));
            // lifts give the same values
            RatVec lx = m.lift(x);
            CHECK(mod2(Lattice(g).pair(lx, lx)) == m.q_value(x));
        }
        ++checked;
    }
}

TEST_CASE("property: isotropic elements are closed under negation")
{
    int checked = 0;
    for (int t = 0; checked < evt::kCases; ++t) {
        evt::reseed(10000 + t);
        IntMat g = evt::random_even_lattice(evt::uniform(1, 4), 4);
        if (abs(determinant(g)) > 400)
            continue;
        FiniteQuadraticModule m = from_lattice(Lattice(g));
        auto iso = isotropic_elements(m);
        std::set<GroupElement> s(iso.begin(), iso.end());
        for (const auto& x : iso)
            CHECK(s.count(m.neg(x)) == 1);
        ++checked;
    }
}

TEST_CASE("property: from_lattice does not depend on the basis")
{
    int checked = 0;
    for (int t = 0; checked < evt::kCases; ++t) {
        evt::reseed(11000 + t);
        std::size_t n = evt::uniform(1, 4);
        IntMat g = evt::random_even_lattice(n, 4);
        if (abs(determinant(g)) > 300)
            continue;
        IntMat p = evt::random_unimodular(n);
        IntMat h = p.transpose() * g * p;
        INFO("case " << t << " G=" << to_string(g));
        auto iso = are_isomorphic(from_lattice(Lattice(g)), from_lattice(Lattice(h)));
        REQUIRE(iso);
        CHECK(is_isometry(from_lattice(Lattice(g)), from_lattice(Lattice(h)), *iso));
        ++checked;
    }
}

TEST_CASE("property: overlattices match a brute-force index-2 scan")
{
    int checked = 0, nontrivial = 0;
    for (int t = 0; checked < evt::kCases; ++t) {
        evt::reseed(12000 + t);
        std::size_t n = evt::uniform(1, 4);
        IntMat g = evt::random_even_lattice(n, 6);
        // favour lattices with 2-torsion in A_L
        if (evt::uniform(0, 1))
            g = Integer(2) * g;
        if (abs(determinant(g)) > 1024)
            continue;
        Lattice l(g);
        INFO("case " << t << " G=" << to_string(g));
        FiniteQuadraticModule m = from_lattice(l);
        std::set<std::string> brute = index_two_overlattices(l);
        std::set<std::string> ours;
        for (const auto& h : isotropic_subgroups(m)) {
            OverlatticeData d = overlattice(m, h);
            CHECK(d.lattice.is_even());
            CHECK(d.lattice.det() * h.order() * h.order() == l.det());
            // L has index |H| in L'
            Integer idx = 1;
            RatMat inc = to_rational(IntMat::identity(n)) * inverse(d.basis);
            RatVec diag = snf_rational(inc).diagonal();
            for (const auto& x : diag) {
                CHECK(is_integral(x));
                idx *= x.get_num();
            }
            CHECK(idx == h.order());
            if (h.order() == 2)
                ours.insert(key_string(key_of(d.basis)));
        }
        CHECK(ours == brute);
        // and each brute-force overlattice comes from its glue group L'/L
        for (const auto& h : isotropic_subgroups(m))
            if (h.order() == 2)
                CHECK(brute.count(key_string(key_of(overlattice(m, h).basis))) == 1);
        nontrivial += !brute.empty();
        ++checked;
    }
    CHECK(nontrivial >= 20);
}
