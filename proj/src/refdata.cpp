#include "evenlat/refdata.hpp"

namespace evenlat::ref {

namespace {

Rational r(const char* s) { return parse_rational(s); }

RatMat rat_rows(std::initializer_list<std::initializer_list<const char*>> rows)
{
    std::vector<RatVec> out;
    std::size_t cols = 0;
    for (const auto& row : rows) {
        RatVec v;
        for (const char* s : row)
            v.push_back(r(s));
        cols = v.size();
        out.push_back(v);
    }
    return RatMat::from_rows(out, cols);
}

IntVec on_curves(std::size_t n, std::initializer_list<std::pair<int, int>> terms)
{
    IntVec v(n, Integer(0));
    for (auto [idx, c] : terms)
        v.at(static_cast<std::size_t>(idx - 1)) += c;
    return v;
}

} // namespace

const std::vector<int>& iota001()
{
    static const std::vector<int> p{3, 4, 1, 2, 7, 8, 5, 6, 9, 10, 11, 12, 15, 16, 13, 14, 19, 20, 17, 18, 21, 22, 23, 24};
    return p;
}

const std::vector<int>& iota010()
{
    static const std::vector<int> p{2, 1, 4, 3, 5, 6, 7, 8, 11, 12, 9, 10, 14, 13, 16, 15, 17, 18, 19, 20, 23, 24, 21, 22};
    return p;
}

const std::vector<int>& iota011()
{
    static const std::vector<int> p{4, 3, 2, 1, 7, 8, 5, 6, 11, 12, 9, 10, 16, 15, 14, 13, 19, 20, 17, 18, 23, 24, 21, 22};
    return p;
}

const std::vector<int>& s_basis()
{
    static const std::vector<int> s{1, 5, 9, 13, 17, 23, 4, 15, 8, 3};
    return s;
}

const std::vector<IntVec>& q_basis()
{
    static const std::vector<IntVec> q{
        on_curves(24, {{16, 1}}),
        on_curves(24, {{14, 1}, {21, -1}, {22, 1}}),
        on_curves(24, {{11, 1}, {2, -1}, {19, 1}, {20, -1}}),
        on_curves(24, {{17, 1}, {14, 2}, {18, -1}, {19, -1}, {20, 1}}),
        on_curves(24, {{12, 1}, {10, -1}, {18, 1}, {20, 1}}),
        on_curves(24, {{3, 1}, {22, 2}, {6, -2}, {12, -1}}),
    };
    return q;
}

const IntMat& q_gram()
{
    static const IntMat g{
        {-2, 0, 1, 0, 2, -1},
        {0, -6, -1, -4, 4, -5},
        {1, -1, -8, 6, 2, 0},
        {0, -4, 6, -16, 4, -2},
        {2, 4, 2, 4, -8, 6},
        {-1, -5, 0, -2, 6, -12},
    };
    return g;
}

const std::vector<RatVec>& aq_generators()
{
    static const std::vector<RatVec> g{
        {r("1/2"), r("-1/2"), r("0"), r("0"), r("1/2"), r("0")},
        {r("-1/2"), r("1/2"), r("0"), r("0"), r("0"), r("0")},
        {r("1/2"), r("0"), r("0"), r("-1/4"), r("0"), r("0")},
        {r("0"), r("0"), r("1/4"), r("-1/4"), r("-1/4"), r("-1/4")},
    };
    return g;
}

const std::vector<long>& aq_orders()
{
    static const std::vector<long> o{2, 2, 4, 4};
    return o;
}

const RatMat& aq_pairing_table()
{
    static const RatMat t = rat_rows({
        {"-5", "5/2", "-1", "-1/2"},
        {"5/2", "-2", "1", "1/2"},
        {"-1", "1", "-3/2", "-5/4"},
        {"-1/2", "1/2", "-5/4", "-11/4"},
    });
    return t;
}

const RatMat& q_m1_binv()
{
    static const RatMat m = rat_rows({
        {"0", "0", "0", "0", "0", "1"},
        {"1", "0", "0", "0", "1", "0"},
        {"1/2", "-1/2", "0", "0", "1/2", "0"},
        {"-1/2", "1/2", "0", "0", "0", "0"},
        {"1/2", "0", "0", "-1/4", "0", "0"},
        {"0", "0", "1/4", "-1/4", "-1/4", "-1/4"},
    });
    return m;
}

const std::vector<std::pair<std::string, std::vector<long>>>& aq_isotropic()
{
    static const std::vector<std::pair<std::string, std::vector<long>>> l{
        {"2w1", {0, 0, 2, 0}},
        {"v2", {0, 1, 0, 0}},
        {"v2+2w1", {0, 1, 2, 0}},
        {"v1+2w2", {1, 0, 0, 2}},
        {"v1+2w1+2w2", {1, 0, 2, 2}},
        {"v1+v2", {1, 1, 0, 0}},
        {"v1+v2+2w1", {1, 1, 2, 0}},
    };
    return l;
}

const std::vector<CurveRelation>& ns_relations()
{
    static const std::vector<CurveRelation> l{
        {"alpha1", {13, 14, 17, 18}, {15, 16, 19, 20}},
        {"beta1", {11, 12, 14, 16}, {1, 3, 21, 22}},
    };
    return l;
}

const std::vector<std::pair<std::string, std::vector<int>>>& aq_printed_fours()
{
    static const std::vector<std::pair<std::string, std::vector<int>>> l{
        {"2w1", {17, 18, 19, 20}},
        {"v2", {14, 16, 21, 22}},
        {"v2+2w1", {13, 15, 21, 22}},
        {"v1+2w2", {1, 2, 17, 18}},
        {"v1+2w1+2w2", {1, 2, 19, 20}},
        {"v1+v2", {10, 12, 18, 20}},
        {"v1+v2+2w1", {10, 12, 17, 19}},
    };
    return l;
}

const std::vector<std::vector<long>>& tx_basis_change()
{
    static const std::vector<std::vector<long>> b{
        {0, 1, 0, 0},
        {1, 1, 2, 0},
        {1, 0, 2, -1},
        {1, 0, 1, -1},
    };
    return b;
}

const RatMat& tx_block_form()
{
    static const RatMat m = rat_rows({
        {"0", "-1/2", "0", "0"},
        {"-1/2", "0", "0", "0"},
        {"0", "0", "1/4", "0"},
        {"0", "0", "0", "1/4"},
    });
    return m;
}

const std::vector<std::string>& tx_candidate()
{
    static const std::vector<std::string> l{"U", "U(2)", "<-4>", "<-4>"};
    return l;
}

const std::vector<std::string>& txprime_candidate()
{
    static const std::vector<std::string> l{"U(2)", "U(2)", "<-4>", "<-4>"};
    return l;
}

const EmbeddingCase& km_embedding()
{
    static const EmbeddingCase e{"km", {"U", "U(2)", "<-4>", "<-4>"},
                                 IntMat{{1, 2, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}}, IntMat{{4, 0}, {0, 4}}};
    return e;
}

const EmbeddingCase& u2_m8_embedding()
{
    static const EmbeddingCase e{"u2_m8", {"U(2)", "<-8>"}, IntMat{{1, 1, 1}, {-1, 1, 0}}, IntMat{{-4, 0}, {0, -4}}};
    return e;
}

const std::vector<std::vector<int>>& xprime_orbits()
{
    static const std::vector<std::vector<int>> o{
        {1, 4}, {2, 3}, {5, 7}, {6, 8}, {9, 11}, {10, 12}, {13, 16}, {14, 15}, {17, 19}, {18, 20}, {21, 23}, {22, 24},
    };
    return o;
}

const std::vector<std::string>& xprime_labels()
{
    static const std::vector<std::string> l{"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10",
                                            "C11", "C12", "N1", "N2", "N3", "N4", "N5", "N6", "N7", "N8"};
    return l;
}

namespace {

// 1-based positions on C1..C12 (1..12) and N1..N8 (13..20)
constexpr int C(int i) { return i; }
constexpr int N(int i) { return 12 + i; }

} // namespace

const IntVec& nikulin_sum()
{
    static const IntVec v = on_curves(20, {{N(1), 1}, {N(2), 1}, {N(3), 1}, {N(4), 1},
                                           {N(5), 1}, {N(6), 1}, {N(7), 1}, {N(8), 1}});
    return v;
}

const IntVec& lambda1_sum()
{
    static const IntVec v = on_curves(20, {{C(5), 1}, {C(6), 1}, {C(9), 1}, {C(10), 1},
                                           {N(1), 1}, {N(2), 1}, {N(3), 1}, {N(4), 1}});
    return v;
}

const IntVec& lambda2_sum()
{
    static const IntVec v = on_curves(20, {{C(1), 1}, {C(2), 1}, {C(5), 1}, {C(6), 1},
                                           {N(1), 1}, {N(2), 1}, {N(5), 1}, {N(6), 1}});
    return v;
}

const std::vector<std::string>& m_basis_names()
{
    static const std::vector<std::string> l{"C1", "C2", "C3", "C4", "C5", "C7", "C8", "C9",
                                            "N1", "N2", "N3", "N5", "N7", "N", "Lambda1", "Lambda2"};
    return l;
}

const RatMat& m_basis()
{
    static const RatMat b = [] {
        RatMat m(16, 20);
        const int curves[13] = {C(1), C(2), C(3), C(4), C(5), C(7), C(8), C(9), N(1), N(2), N(3), N(5), N(7)};
        for (std::size_t i = 0; i < 13; ++i)
            m(i, static_cast<std::size_t>(curves[i] - 1)) = 1;
        const IntVec* halves[3] = {&nikulin_sum(), &lambda1_sum(), &lambda2_sum()};
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t j = 0; j < 20; ++j)
                m(13 + k, j) = Rational((*halves[k])[j]) / 2;
        return m;
    }();
    return b;
}

const std::vector<std::pair<std::string, IntVec>>& m_omitted_curves()
{
    auto row = [](std::initializer_list<int> v) {
        IntVec out;
        for (int x : v)
            out.emplace_back(x);
        return out;
    };
    static const std::vector<std::pair<std::string, IntVec>> l{
        {"C6", row({0, 0, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})},
        {"C10", row({1, 1, 1, 1, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0})},
        {"C11", row({0, 0, 1, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0})},
        {"C12", row({-1, -1, 0, -1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0})},
        {"N4", row({-1, -1, -2, 0, -2, 1, 1, 0, -1, -1, -1, 0, 0, 0, 2, 0})},
        {"N6", row({-1, -1, -1, 1, -2, 0, 0, 0, -1, -1, 0, -1, 0, 0, 0, 2})},
        {"N8", row({2, 2, 3, -1, 4, -1, -1, 0, 1, 1, 0, 0, -1, 2, -2, -2})},
    };
    return l;
}

const RatMat& m_generators()
{
    static const RatMat m = rat_rows({
        {"0", "0", "0", "0", "0", "0", "0", "0", "0", "1/2", "-1/2", "-1/2", "-1/2", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "0", "1/2", "0", "-1/2", "-1/2", "-1/2", "0", "0", "0"},
        {"0", "0", "0", "0", "1/2", "0", "0", "-1/2", "0", "0", "0", "-1/2", "-1/2", "0", "0", "0"},
        {"0", "0", "1/2", "-1/2", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "1/4", "-1/4", "-1/2", "0", "0", "-1/2", "0", "-1/2", "0", "0", "0"},
        {"1/4", "-1/4", "0", "-1/2", "0", "0", "0", "0", "0", "0", "-1/2", "0", "-1/2", "0", "0", "0"},
    });
    return m;
}

const std::vector<long>& am_orders()
{
    static const std::vector<long> o{2, 2, 2, 2, 4, 4};
    return o;
}

const std::vector<std::vector<long>>& m_basis_change()
{
    static const std::vector<std::vector<long>> b{
        {1, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 2},
        {0, 0, 1, 1, 0, 0},
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1},
    };
    return b;
}

const RatMat& m_block_form()
{
    static const RatMat m = rat_rows({
        {"0", "1/2", "0", "0", "0", "0"},
        {"1/2", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "1/2", "0", "0"},
        {"0", "0", "1/2", "0", "0", "0"},
        {"0", "0", "0", "0", "1/4", "0"},
        {"0", "0", "0", "0", "0", "1/4"},
    });
    return m;
}

const std::vector<CurveRelation>& xprime_relations()
{
    static const std::vector<CurveRelation> l{
        {"C1+C2+C3+C4=C7+C8+C9+C10", {1, 2, 3, 4}, {7, 8, 9, 10}},
        {"C1+C2+C11+C12=C5+C6+C7+C8", {1, 2, 11, 12}, {5, 6, 7, 8}},
        {"C3+C5=C4+C6", {3, 5}, {4, 6}},
        {"C4+C6=C9+C11", {4, 6}, {9, 11}},
        {"C9+C11=C10+C12", {9, 11}, {10, 12}},
    };
    return l;
}

const std::vector<std::vector<std::string>>& xprime_printed_isotropic()
{
    static const std::vector<std::vector<std::string>> l{
        {"C1", "C2", "C7", "C8"},
        {"C1", "C2", "C3", "C4"},
        {"C3", "C4", "C7", "C8"},
        {"C5", "C9", "N5", "N7"},
        {"N1", "N3", "N5", "N7"},
        {"C5", "C9", "N1", "N3"},
        {"N2", "N3", "N5", "N7"},
        {"C5", "C9", "N2", "N3"},
        {"C1", "C2", "N1", "N2"},
        {"C7", "C8", "N1", "N2"},
        {"C3", "C4", "N1", "N2"},
        {"C3", "C4", "C5", "C9", "N5", "N7"},
        {"C3", "C4", "C5", "C9", "N1", "N3"},
        {"C3", "C4", "C5", "C9", "N2", "N3"},
        {"C1", "C2", "C5", "C7", "C8", "C9", "N5", "N7"},
        {"C1", "C2", "C7", "C8", "N1", "N3", "N5", "N7"},
        {"C1", "C2", "C3", "C4", "N1", "N3", "N5", "N7"},
        {"C3", "C4", "C7", "C8", "N1", "N3", "N5", "N7"},
        {"C1", "C2", "C5", "C7", "C8", "C9", "N1", "N3"},
        {"C1", "C2", "C7", "C8", "N2", "N3", "N5", "N7"},
        {"C1", "C2", "C3", "C4", "N2", "N3", "N5", "N7"},
        {"C3", "C4", "C7", "C8", "N2", "N3", "N5", "N7"},
        {"C1", "C2", "C5", "C7", "C8", "C9", "N2", "N3"},
        {"C1", "C2", "C3", "C4", "C7", "C8", "N1", "N2"},
        {"C1", "C2", "C5", "C9", "N1", "N2", "N5", "N7"},
        {"C5", "C7", "C8", "C9", "N1", "N2", "N5", "N7"},
        {"C1", "C2", "C3", "C4", "C5", "C7", "C8", "C9", "N5", "N7"},
        {"C1", "C2", "C3", "C4", "C5", "C7", "C8", "C9", "N1", "N3"},
        {"C1", "C2", "C3", "C4", "C5", "C7", "C8", "C9", "N2", "N3"},
        {"C1", "C2", "C3", "C4", "C5", "C9", "N1", "N2", "N5", "N7"},
        {"C3", "C4", "C5", "C7", "C8", "C9", "N1", "N2", "N5", "N7"},
    };
    return l;
}

const std::vector<std::string>& worked_example_start()
{
    static const std::vector<std::string> l{"C1", "C2", "C7", "C8", "N2", "N3", "N5", "N7"};
    return l;
}

const std::vector<std::string>& worked_example_end()
{
    static const std::vector<std::string> l{"N1", "N4", "N5", "N7"};
    return l;
}

const std::vector<std::string>& omega23_perp()
{
    static const std::vector<std::string> l{"U(2)", "U(2)", "U(2)", "<-4>", "<-4>"};
    return l;
}

const std::vector<std::string>& mz23_perp()
{
    static const std::vector<std::string> l{"<2>", "<2>", "U(2)", "<-2>", "<-2>", "<-2>", "<-2>"};
    return l;
}

const RatVec& square_two_vector()
{
    static const RatVec v{r("1"), r("1"), r("0"), r("0"), r("0"), r("0")};
    return v;
}

} // namespace evenlat::ref
