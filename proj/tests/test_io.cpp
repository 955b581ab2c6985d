#include <doctest.h>

#include "evenlat/error.hpp"
#include "evenlat/io.hpp"

#include "support.hpp"

using namespace evenlat;
using io::Json;

TEST_CASE("numbers")
{
    CHECK(io::to_json(Integer(-7)) == -7);
    CHECK(io::to_json(Rational(3, 6)) == "1/2");
    CHECK(io::to_json(Rational(4, 2)) == 2);
    Integer big("123456789012345678901234567890");
    CHECK(io::to_json(big) == "123456789012345678901234567890");
    CHECK(io::integer_from_json(io::to_json(big)) == big);
    CHECK(io::rational_from_json(Json("-5/4")) == Rational(-5, 4));
    CHECK(io::rational_from_json(Json(3)) == 3);
    CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), ParseError);
    CHECK_THROWS_AS(io::integer_from_json(Json(1.5)), ParseError);
}

TEST_CASE("gram files")
{
    io::GramFile g = io::parse_gram_file(R"({"gram":[[2,1],[1,-4]],"name":"t"})");
    CHECK(g.gram == IntMat{{2, 1}, {1, -4}});
    CHECK(g.name == "t");
    CHECK_THROWS_AS(io::parse_gram_file("{\"gram\":[[1,2],[3,1]]}"), ParseError);
    CHECK_THROWS_AS(io::parse_gram_file("{\"gram\":[[1,2]]}"), ParseError);
    CHECK_THROWS_AS(io::parse_gram_file("{\"gram\":[[1,2],[2]]}"), ParseError);
    CHECK_THROWS_AS(io::parse_gram_file("{gram"), ParseError);
    CHECK_THROWS_AS(io::parse_gram_file("{\"matrix\":[[1]]}"), ParseError);
}

TEST_CASE("property: gram files round-trip")
{
    for (int t = 0; t < evt::kCases; ++t) {
        evt::reseed(17000 + t);
        IntMat g = evt::random_symmetric(evt::uniform(1, 6), 1000000, false);
        if (evt::uniform(0, 3) == 0)
            g(0, 0) = Integer("-98765432109876543210");
        io::GramFile f{g, t % 2 ? "x" + std::to_string(t) : ""};
        io::GramFile back = io::parse_gram_file(io::gram_file_json(f).dump());
        CHECK(back.gram == g);
        CHECK(back.name == f.name);
    }
}

TEST_CASE("configuration files")
{
    const char* text = R"({"curves":[{"label":"A","self":-2},{"label":"B","self":-1}],"mult":[["A","B",2]]})";
    CurveConfig c = io::parse_config(text);
    CHECK(c.mult()(0, 1) == 2);
    CHECK(io::parse_config(io::config_json(c).dump()) == c);
    CHECK_THROWS_AS(io::parse_config(R"({"curves":[{"label":"A","self":-2},{"label":"A","self":-2}],"mult":[]})"),
                    ParseError);
    CHECK_THROWS_AS(io::parse_config(R"({"curves":[{"label":"A","self":-2}],"mult":[["A","Z",1]]})"), ParseError);
    CHECK_THROWS_AS(
        io::parse_config(R"({"curves":[{"label":"A","self":-2},{"label":"B","self":-2}],"mult":[["A","B",-1]]})"),
        ParseError);
    CHECK_THROWS_AS(io::parse_config(R"({"curves":[{"label":"A","self":-2},{"label":"B","self":-2}],)"
                                     R"("mult":[["A","B",1],["B","A",2]]})"),
                    ParseError);
}

TEST_CASE("involution files")
{
    InvolutionAction a = io::parse_involution(R"({"perm":[2,1,3]})");
    CHECK(a.perm == std::vector<std::size_t>{1, 0, 2});
    CHECK(io::involution_json(a)["perm"] == Json::array({2, 1, 3}));
    CHECK_THROWS_AS(io::parse_involution(R"({"perm":[2,2]})"), ParseError);
    CHECK_THROWS_AS(io::parse_involution(R"({"perm":[0,1]})"), ParseError);
}

TEST_CASE("lattice and matrix specs")
{
    Lattice l = io::lattice_from_spec("U+U(2)+<-4>^2");
    CHECK(l.rank() == 6);
    CHECK(l.det() == 64);
    CHECK_THROWS(io::lattice_from_spec("U+"));
    CHECK(io::matrix_from_spec("[[1,1,1],[-1,1,0]]") == IntMat{{1, 1, 1}, {-1, 1, 0}});
    CHECK(io::matrix_from_spec(R"({"gens":[[1,0]]})") == IntMat{{1, 0}});
    CHECK_THROWS_AS(io::matrix_from_spec("[[1,2],[3]]"), ParseError);
}
