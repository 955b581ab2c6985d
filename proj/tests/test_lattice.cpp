#include <doctest.h>

#include "evenlat/discform.hpp"
#include "evenlat/error.hpp"
#include "evenlat/lattice.hpp"

#include "support.hpp"

using namespace evenlat;

namespace {

Lattice sum(std::initializer_list<const char*> names)
{
    std::vector<Lattice> parts;
    for (const char* n : names)
        parts.push_back(make_named(n));
    return direct_sum(parts);
}

// q_S = -q_{S^perp} for primitive S in a unimodular host.
void check_glue(const Lattice& host, const IntMat& gens)
{
    SublatticeData s = sublattice(host, gens);
    SublatticeData p = orthogonal_complement(host, gens);
    REQUIRE(!p.degenerate);
    Lattice ls = s.lattice(), lp = p.lattice();
    CHECK(abs(ls.det()) == abs(lp.det()));
    auto iso = are_isomorphic(from_lattice(ls), negate(from_lattice(lp)));
    CHECK(iso.has_value());
}

} // namespace

TEST_CASE("named lattices")
{
    Lattice u = make_named("U");
    CHECK(u.det() == -1);
    CHECK(u.is_even());
    Lattice e8 = make_named("E8");
    CHECK(e8.det() == 1);
    CHECK(e8.signature() == Signature{0, 8, 0});
    CHECK(make_named("U(2)").det() == -4);
    CHECK(make_named("<-4>").gram() == IntMat{{-4}});
    CHECK(make_named("A1").gram() == IntMat{{-2}});
    Lattice nik = make_named("Nikulin");
    CHECK(nik.rank() == 8);
    CHECK(nik.is_even());
    CHECK(discriminant_group(nik).invariant_factors == IntVec{2, 2, 2, 2, 2, 2});
    CHECK_THROWS_AS(make_named("Q7"), PreconditionError);
}

TEST_CASE("discriminant groups")
{
    Lattice t = sum({"U", "U(2)", "<-4>", "<-4>"});
    DiscGroupData d = discriminant_group(t);
    CHECK(d.invariant_factors == IntVec{2, 2, 4, 4});
    CHECK(d.order == 64);
    for (std::size_t i = 0; i < d.generator_lifts.size(); ++i) {
        CHECK(in_dual(t, d.generator_lifts[i]));
        RatVec m = d.generator_lifts[i];
        for (auto& x : m)
            x *= d.invariant_factors[i];
        CHECK(contains(t, m));
    }
    CHECK(disc_length(make_named("E8")) == 0);
    CHECK(discriminant_group(make_named("E8")).order == 1);
}

TEST_CASE("uniqueness and splitting predicates")
{
    CHECK(nikulin_unique(sum({"U", "U(2)", "<-4>", "<-4>"})));
    CHECK(!nikulin_unique(sum({"<-4>", "<-4>"})));
    CHECK(splits_U(sum({"U", "U", "<-4>"})));
    CHECK(splits_E8(sum({"U", "E8", "E8"})));
    auto inv = two_elem_invariants(make_named("U(2)"));
    REQUIRE(inv);
    CHECK(inv->sig == Signature{1, 1, 0});
    CHECK(inv->length == 2);
    CHECK(inv->delta == 0);
    inv = two_elem_invariants(make_named("A1"));
    REQUIRE(inv);
    CHECK(inv->delta == 1);
    CHECK(!two_elem_invariants(make_named("<-4>")));
}

TEST_CASE("gcd invariants")
{
    CHECK(norm_gcd(sum({"U(2)", "U(2)", "U(2)", "<-4>", "<-4>"})) == 4);
    CHECK(scale_gcd(sum({"<2>", "<2>", "U(2)", "<-2>"})) == 2);
    CHECK(norm_gcd(make_named("U")) == 2);
}

TEST_CASE("sublattices, saturation and complements")
{
    Lattice amb = sum({"U(2)", "<-8>"});
    IntMat gens{{1, 1, 1}, {-1, 1, 0}};
    SublatticeData s = sublattice(amb, gens);
    CHECK(s.induced_gram == IntMat{{-4, 0}, {0, -4}});
    CHECK(is_primitive(amb, gens));

    Lattice u = make_named("U");
    CHECK(!is_primitive(u, IntMat{{2, 2}}));
    CHECK(saturation(u, IntMat{{2, 2}}) == IntMat{{1, 1}});
    SublatticeData c = orthogonal_complement(u, IntMat{{1, 1}});
    CHECK(c.basis_coords == IntMat{{1, -1}});
    CHECK(c.induced_gram == IntMat{{-2}});

    CHECK_THROWS_AS(sublattice(u, IntMat{{1, 1}, {2, 2}}), PreconditionError);
    // isotropic vector: complement is degenerate
    CHECK(orthogonal_complement(u, IntMat{{1, 0}}).degenerate);
}

TEST_CASE("glue on U + U")
{
    Lattice uu = sum({"U", "U"});
    check_glue(uu, IntMat{{1, 1, 0, 0}});
    check_glue(uu, IntMat{{1, 2, 0, 0}});
    check_glue(uu, IntMat{{1, 1, 1, 1}});
    check_glue(uu, IntMat{{1, 3, 0, 0}, {0, 0, 1, -1}});
}

TEST_CASE("property: |det L| = |A_L|")
{
    int checked = 0;
    for (int t = 0; checked < evt::kCases; ++t) {
        evt::reseed(6000 + t);
        IntMat g = evt::random_symmetric(evt::uniform(1, 5), 5, evt::uniform(0, 1));
        if (determinant(g) == 0)
            continue;
        Lattice l(g);
        INFO("case " << t << " G=" << to_string(g));
        DiscGroupData d = discriminant_group(l);
        CHECK(d.order == abs(l.det()));
        Integer prod = 1;
        for (const auto& x : d.invariant_factors) {
            CHECK(x > 1);
            prod *= x;
        }
        CHECK(prod == d.order);
        ++checked;
    }
}

TEST_CASE("property: saturation and complements")
{
    Lattice host = sum({"U", "U", "<-2>", "<-6>"});
    int checked = 0;
    for (int t = 0; checked < evt::kCases; ++t) {
        evt::reseed(7000 + t);
        std::size_t k = evt::uniform(1, 3);
        IntMat gens = evt::random_matrix(k, host.rank(), 3);
        if (rank(gens) < k)
            continue;
        INFO("case " << t << " gens=" << to_string(gens));
        IntMat sat = saturation(host, gens);
        CHECK(saturation(host, sat) == sat);
        CHECK(is_primitive(host, sat));
        SublatticeData c = orthogonal_complement(host, gens);
        CHECK((gens * host.gram() * c.basis_coords.transpose()).is_zero());
        CHECK(c.basis_coords.rows() == host.rank() - k);
        ++checked;
    }
}

TEST_CASE("property: discriminant forms of primitive sublattices of U + U + E8 are opposite")
{
    Lattice host = sum({"U", "U", "E8"});
    int checked = 0;
    for (int t = 0; checked < evt::kCases; ++t) {
        REQUIRE(t < 100 * evt::kCases);
        evt::reseed(8000 + t);
        std::size_t k = evt::uniform(1, 2);
        IntMat gens(k, host.rank());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < host.rank(); ++j)
                gens(i, j) = evt::uniform(0, 3) == 0 ? evt::uniform(-1, 1) : 0;
        if (rank(gens) < k)
            continue;
        IntMat sat = saturation(host, gens);
        SublatticeData s = sublattice(host, sat);
        Integer d = determinant(s.induced_gram);
        if (d == 0 || abs(d) > 256)
            continue;
        SublatticeData p = orthogonal_complement(host, sat);
        if (p.degenerate)
            continue;
        INFO("case " << t << " gens=" << to_string(sat));
        check_glue(host, sat);
        ++checked;
    }
}
