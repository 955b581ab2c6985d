#include <doctest.h>

#include "evenlat/curveconfig.hpp"
#include "evenlat/error.hpp"
#include "evenlat/refdata.hpp"
#include "evenlat/reconstruct.hpp"
#include "evenlat/verify.hpp"

#include "support.hpp"

using namespace evenlat;

namespace {

// Random configuration on 2k curves invariant under the involution i <-> i+k.
CurveConfig random_symmetric_config(std::size_t k, InvolutionAction& act)
{
    std::size_t n = 2 * k;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("D" + std::to_string(i + 1));
    act.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        act.perm[i] = (i + k) % n;
    IntVec self(n);
    for (std::size_t i = 0; i < k; ++i)
        self[i] = self[i + k] = evt::uniform(0, 1) ? -2 : -1;
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m(i, j) != 0 || act.perm[i] == j)
                continue;
            Integer v = evt::uniform(0, 3) == 0 ? evt::uniform(1, 2) : 0;
            std::size_t a = act.perm[i], b = act.perm[j];
            m(i, j) = m(j, i) = v;
            m(a, b) = m(b, a) = v;
        }
    return CurveConfig(labels, self, m);
}

CurveConfig validated_x24()
{
    Reconstruction24 r = reconstruct_24();
    for (const auto& s : r.solutions)
        if (q_orthogonal_to_s(s))
            return s;
    FAIL("no validated configuration");
    return {};
}

IntVec one_based_vector(const std::vector<int>& idx, std::size_t n)
{
    IntVec v(n, Integer(0));
    for (int i : idx)
        v[static_cast<std::size_t>(i - 1)] += 1;
    return v;
}

struct XPrime {
    CurveConfig xp;
    CurveLattice lat;
    std::vector<EvenRelation> rel;
};

const XPrime& xprime()
{
    static XPrime x = [] {
        CurveConfig xp = reconstruct_xprime(validated_x24());
        CurveLattice l(xp, ref::m_basis(), ref::m_basis_names());
        std::vector<EvenRelation> rel;
        for (const auto& r : ref::xprime_relations())
            rel.push_back(relation_from_equality(l, r.name, one_based_vector(r.lhs, xp.size()),
                                                 one_based_vector(r.rhs, xp.size())));
        rel.push_back(relation_from_member(l, "N", ref::nikulin_sum()));
        rel.push_back(relation_from_member(l, "Lambda1", ref::lambda1_sum()));
        rel.push_back(relation_from_member(l, "Lambda2", ref::lambda2_sum()));
        return XPrime{xp, l, rel};
    }();
    return x;
}

CurveSet set_of(const CurveConfig& c, std::initializer_list<const char*> labels)
{
    std::vector<std::size_t> idx;
    for (const char* l : labels)
        idx.push_back(c.index_of(l));
    return curve_set(idx);
}

} // namespace

TEST_CASE("hexagon")
{
    CurveConfig h = hexagon();
    CHECK(h.size() == 6);
    CHECK(h.labels().front() == "L0");
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(h.self_int()[i] == -1);
        CHECK(h.mult()(i, (i + 1) % 6) == 1);
        CHECK(h.mult()(i, (i + 3) % 6) == 0);
    }
    CHECK(signature(h.gram()) == Signature{1, 3, 2});
}

TEST_CASE("configuration preconditions")
{
    CHECK_THROWS_AS(CurveConfig({"A", "B"}, IntVec{-2, -2}, IntMat{{0, 1}, {2, 0}}), PreconditionError);
    CHECK_THROWS_AS(CurveConfig({"A", "B"}, IntVec{-2, -2}, IntMat{{0, -1}, {-1, 0}}), PreconditionError);
    CHECK_THROWS_AS(InvolutionAction::from_one_based({1, 1}), PreconditionError);
    CurveConfig c({"A", "B"}, IntVec{-2, -1}, IntMat{{0, 1}, {1, 0}});
    CHECK(!involution_defect(c, InvolutionAction::from_one_based({2, 1})).empty());
    CHECK(involution_defect(c, InvolutionAction::from_one_based({1, 2})).empty());
    CHECK_THROWS_AS(c.index_of("Z"), PreconditionError);
}

TEST_CASE("quotient of two disjoint chains")
{
    CurveConfig c({"A", "B", "C", "D"}, IntVec{-2, -2, -2, -2},
                  IntMat{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    QuotientData q = quotient_by_involution(c, InvolutionAction::from_one_based({3, 4, 1, 2}), FixedPointData{});
    CHECK(q.config.size() == 2);
    CHECK(q.config.labels() == std::vector<std::string>{"{A,C}", "{B,D}"});
    CHECK(q.config.mult()(0, 1) == 1);
    CHECK(q.config.self_int() == IntVec{-2, -2});
    // an action fixing a curve is refused
    CHECK_THROWS_AS(quotient_by_involution(c, InvolutionAction::from_one_based({1, 2, 3, 4}), FixedPointData{}),
                    PreconditionError);
}

TEST_CASE("pullback over the hexagon")
{
    CoverStep st;
    st.branch_points["L0"] = 2;
    auto res = double_cover_pullback(hexagon(), st);
    REQUIRE(!res.empty());
    const auto& pre = res.front().preimages;
    CHECK(pre.at("L0") == std::vector<std::string>{"L0~"});
    CHECK(pre.at("L1").size() == 2);
    st.branch_points["L1"] = 3;
    CHECK_THROWS_AS(double_cover_pullback(hexagon(), st), PreconditionError);
}

TEST_CASE("property: involutions preserve the Gram and quotients halve orbit pairings")
{
    for (int t = 0; t < evt::kCases; ++t) {
        evt::reseed(13000 + t);
        InvolutionAction act;
        CurveConfig c = random_symmetric_config(evt::uniform(1, 4), act);
        INFO("case " << t);
        IntMat g = c.gram();
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j)
                CHECK(g(act.perm[i], act.perm[j]) == g(i, j));
        CHECK(involution_defect(c, act).empty());
        QuotientData q = quotient_by_involution(c, act, FixedPointData{});
        IntMat qg = q.config.gram();
        for (std::size_t a = 0; a < q.orbits.size(); ++a)
            for (std::size_t b = 0; b < q.orbits.size(); ++b) {
                Integer s = 0;
                for (auto i : q.orbits[a])
                    for (auto j : q.orbits[b])
                        s += g(i, j);
                CHECK(2 * qg(a, b) == s);
            }
    }
}

TEST_CASE("property: pullback conserves degrees")
{
    for (int t = 0; t < evt::kCases; ++t) {
        evt::reseed(14000 + t);
        std::size_t n = evt::uniform(2, 4);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back("E" + std::to_string(i));
        IntVec self(n);
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            self[i] = evt::uniform(-2, -1);
            for (std::size_t j = i + 1; j < n; ++j)
                m(i, j) = m(j, i) = evt::uniform(0, 2) == 0 ? 1 : 0;
        }
        CurveConfig c(labels, self, m);
        CoverStep st;
        for (const auto& l : labels)
            st.branch_points[l] = evt::uniform(0, 1) ? 2 : 0;
        INFO("case " << t);
        auto res = double_cover_pullback(c, st);
        REQUIRE(!res.empty());
        for (const auto& r : res) {
            IntMat g = r.config.gram();
            auto total = [&](const std::string& a, const std::string& b) {
                Integer s = 0;
                for (const auto& x : r.preimages.at(a))
                    for (const auto& y : r.preimages.at(b))
                        s += g(r.config.index_of(x), r.config.index_of(y));
                return s;
            };
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    CHECK(total(labels[i], labels[j]) == 2 * c.gram()(i, j));
        }
    }
}

TEST_CASE("X' certificates: the worked reduction, an immediate four and the even eight")
{
    const XPrime& x = xprime();
    auto cert = find_even_four_certificate(x.lat, set_of(x.xp, {"C1", "C2", "C7", "C8", "N2", "N3", "N5", "N7"}), x.rel);
    REQUIRE(cert);
    CHECK(replay_certificate(x.lat, *cert, x.rel));
    CHECK(cert->target == set_of(x.xp, {"N1", "N4", "N5", "N7"}));

    cert = find_even_four_certificate(x.lat, set_of(x.xp, {"C1", "C2", "C7", "C8"}), x.rel);
    REQUIRE(cert);
    CHECK(cert->steps.empty());
    CHECK(replay_certificate(x.lat, *cert, x.rel));

    CHECK(!find_even_four_certificate(x.lat, support_mod2(ref::nikulin_sum()), x.rel));
}

TEST_CASE("property: certificates on X' are sound")
{
    const XPrime& x = xprime();
    const std::size_t n = x.xp.size();
    IntMat g = x.xp.gram();
    // every disjoint four of C curves and N curves is a valid target
    std::vector<CurveSet> fours;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    std::size_t s[4] = {a, b, c, d};
                    bool ok = true;
                    for (int i = 0; i < 4 && ok; ++i)
                        for (int j = i + 1; j < 4 && ok; ++j)
                            ok = g(s[i], s[j]) == 0;
                    if (ok)
                        fours.push_back(curve_set({a, b, c, d}));
                }
    REQUIRE(fours.size() > 10);
    for (int t = 0; t < evt::kCases; ++t) {
        evt::reseed(15000 + t);
        CurveSet start = fours[evt::uniform(0, static_cast<long>(fours.size()) - 1)];
        for (const auto& r : x.rel)
            if (evt::uniform(0, 1))
                start ^= support_mod2(r.coeffs);
        INFO("case " << t << " start " << format_set(x.xp, start));
        auto cert = find_even_four_certificate(x.lat, start, x.rel);
        REQUIRE(cert);
        CHECK(cert->start == start);
        CHECK(replay_certificate(x.lat, *cert, x.rel));
        // tampering with the target breaks the replay
        EvenFourCertificate bad = *cert;
        bad.target ^= 1;
        CHECK(!replay_certificate(x.lat, bad, x.rel));
    }
}

TEST_CASE("relations must be lattice vectors")
{
    const XPrime& x = xprime();
    IntVec lhs(x.xp.size(), Integer(0)), rhs(x.xp.size(), Integer(0));
    lhs[0] = 1;
    rhs[1] = 1;
    CHECK_THROWS_AS(relation_from_equality(x.lat, "bogus", lhs, rhs), PreconditionError);
}
