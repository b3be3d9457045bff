#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "weylpi/errors.hpp"
#include "weylpi/freealg.hpp"

using namespace weylpi;

namespace {

const Char Q = Char::zero();

FreePoly x(Var v, Char c = Q)
{
    return FreePoly::variable(v, c);
}

} // namespace

TEST_CASE("words and multidegrees")
{
    Word w{1, 2, 2, 3};
    CHECK(w.to_string() == "x1*x2^2*x3");
    CHECK(Word{}.to_string() == "1");
    CHECK(mdeg(w) == MultiDegree{1, 2, 1});
    CHECK(MultiDegree{2, 1, 0, 0} == MultiDegree{2, 1});
    CHECK(MultiDegree{1, 2, 3}.to_string() == "(1,2,3)");
    CHECK(MultiDegree{1, 2}[2] == 2);
    CHECK(MultiDegree{1, 2}[5] == 0);
    CHECK(Word{2} < Word{1, 1});
    CHECK(Word{1, 2} < Word{2, 1});
}

TEST_CASE("words of a multidegree")
{
    auto ws = words_of_multidegree({2, 1});
    REQUIRE(ws.size() == 3);
    CHECK(ws[0] == Word{1, 1, 2});
    CHECK(ws[2] == Word{2, 1, 1});
    CHECK(words_of_multidegree({1, 1, 1, 1}).size() == 24);
    CHECK(words_of_multidegree({2, 2}).size() == 6);
    CHECK(std::is_sorted(ws.begin(), ws.end()));
}

TEST_CASE("arithmetic")
{
    FreePoly a = x(1) + x(2);
    CHECK(render(a * a) == "x1^2 + x1*x2 + x2*x1 + x2^2");
    CHECK(render(bracket(x(1), x(2))) == "x1*x2 - x2*x1");
    CHECK(bracket(x(1), x(1)).is_zero());
    CHECK(render(power(x(1), 3)) == "x1^3");
    CHECK(render(FreePoly(Q)) == "0");
    CHECK(render(a.scaled(Scalar::from_rational(mpq_class(1, 2), Q))) == "1/2*x1 + 1/2*x2");
    CHECK_THROWS_AS(x(1) + x(1, Char::prime(2)), CharMismatch);
    CHECK((x(1, Char::prime(2)).scaled(2)).is_zero());
}

TEST_CASE("standard polynomial")
{
    CHECK(render(standard_polynomial({1, 2}, Q)) == "x1*x2 - x2*x1");
    FreePoly st3 = standard_polynomial({1, 2, 3}, Q);
    CHECK(st3.size() == 6);
    CHECK(st3.coefficient(Word{2, 1, 3}) == Scalar::from_integer(-1L, Q));
    CHECK(st3.coefficient(Word{3, 1, 2}) == Scalar::one(Q));
    CHECK_THROWS_AS(standard_polynomial({1, 1, 2}, Q), DuplicateVariable);
}

TEST_CASE("standard polynomial alternates")
{
    std::mt19937 rng(5);
    for (std::uint32_t n = 2; n <= 5; ++n) {
        std::vector<Var> vars(n);
        std::iota(vars.begin(), vars.end(), 1);
        const FreePoly st = standard_polynomial(vars, Q);
        CHECK(st.size() == std::tgamma(n + 1));
        // transposition changes the sign
        std::vector<Var> swapped = vars;
        std::swap(swapped[0], swapped[n - 1]);
        CHECK(standard_polynomial(swapped, Q) == st.scaled(-1));
        // equal arguments give zero
        std::vector<FreePoly> images;
        for (Var v = 1; v <= n; ++v)
            images.push_back(x(v == 2 ? 1 : v));
        CHECK(substitute(st, images).is_zero());
        std::shuffle(vars.begin(), vars.end(), rng);
        std::vector<FreePoly> args;
        for (Var v : vars)
            args.push_back(x(v));
        CHECK(standard_polynomial_at(args) == standard_polynomial(vars, Q));
    }
}

TEST_CASE("substitution")
{
    FreePoly f = parse("x1*x2 - x2*x1", Q);
    std::vector<FreePoly> img{x(1) + x(3), x(2)};
    CHECK(render(substitute(f, img)) == "x1*x2 - x2*x1 - x2*x3 + x3*x2");
    std::vector<FreePoly> ones{FreePoly::one(Q), x(1)};
    CHECK(substitute(f, ones).is_zero());
}

TEST_CASE("multihomogeneous components")
{
    FreePoly f = parse("x1^2*x2 + x2*x1 + 3", Q);
    auto comps = components(f);
    CHECK(comps.size() == 3);
    CHECK_FALSE(is_multihomogeneous(f));
    CHECK_THROWS_AS(multidegree_of(f), NotMultihomogeneous);
    CHECK(render(homogeneous_component(f, {1, 1})) == "x2*x1");
    CHECK(multidegree_of(parse("x1*x2*x1", Q)) == MultiDegree{2, 1});
}

TEST_CASE("parser")
{
    CHECK(render(parse("x1^2*x2^2 - 3*x1*x2*x1*x2", Q)) == "x1^2*x2^2 - 3*x1*x2*x1*x2");
    CHECK(parse("[[x1,x2],[x3,x4]]", Q) ==
          bracket(bracket(x(1), x(2)), bracket(x(3), x(4))));
    CHECK(parse("St3(x1,x2,x3)", Q) == standard_polynomial({1, 2, 3}, Q));
    CHECK(parse("2*(x1 + x2)^2", Q) == (x(1) + x(2)) * (x(1) + x(2)) * FreePoly::constant(Scalar::from_integer(2L, Q)));
    CHECK(parse("  2 x1*x2 ", Q) == (x(1) * x(2)).scaled(2));
    CHECK(parse("-x1 + 1/2*x2", Q).coefficient(Word{2}).to_string() == "1/2");
    CHECK(parse("3*x1", Char::prime(3)).is_zero());
    CHECK_THROWS_AS(parse("x1 +* x2", Q), SyntaxError);
    CHECK_THROWS_AS(parse("x0", Q), SyntaxError);
    CHECK_THROWS_AS(parse("(x1", Q), SyntaxError);
    CHECK_THROWS_AS(parse("Foo(x1)", Q), UnknownFunction);
    CHECK_THROWS_AS(parse("St3(x1,x2)", Q), SyntaxError);
    try {
        parse("x1 + ?", Q);
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("render and parse round trip")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> len(0, 5), letter(1, 5);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
    for (Char c : {Q, Char::prime(2), Char::prime(5)})
        for (int t = 0; t < 200; ++t) {
            FreePoly f(c);
            for (int s = 0; s < 5; ++s) {
                std::vector<Var> w;
                for (int r = len(rng); r > 0; --r)
                    w.push_back(static_cast<Var>(letter(rng)));
                f.add_term(Word(w), c.is_zero() ? Scalar::from_rational(mpq_class(num(rng), den(rng)), c)
                                                : Scalar::from_integer(num(rng), c));
            }
            CHECK(parse(render(f), c) == f);
        }
}
