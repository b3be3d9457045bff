#include <doctest.h>

#include <algorithm>

#include "weylpi/catalog.hpp"
#include "weylpi/errors.hpp"
#include "weylpi/linearize.hpp"

using namespace weylpi;

namespace {

const Char Q = Char::zero();
const Char F2 = Char::prime(2);

FreePoly x(Var v, Char c)
{
    return FreePoly::variable(v, c);
}

} // namespace

TEST_CASE("names")
{
    CHECK(all_named().size() == 17);
    for (Named n : all_named())
        CHECK(named_from_string(name_of(n)) == n);
    CHECK(named_from_string("phi22") == Named::Phi22);
    CHECK_THROWS_AS(named_from_string("Phi23"), UnknownName);
}

TEST_CASE("multidegrees of catalog elements")
{
    CHECK(multidegree_of(named(Named::Phi22, Q)) == MultiDegree{2, 2});
    CHECK(multidegree_of(named(Named::Phi211, Q)) == MultiDegree{2, 1, 1});
    CHECK(multidegree_of(named(Named::Psi211, Q)) == MultiDegree{2, 1, 1});
    CHECK(multidegree_of(named(Named::H, Q)) == MultiDegree{2, 1, 1});
    for (Named n : {Named::PhiLin, Named::Psi, Named::PsiLin, Named::Gamma, Named::Lambda,
                    Named::Delta, Named::G, Named::CommSq, Named::CommSq1324})
        CHECK(multidegree_of(named(n, Q)) == MultiDegree{1, 1, 1, 1});
    CHECK(named(Named::PhiLin, Q).size() == 24);
}

TEST_CASE("Psi forms")
{
    CHECK(render(named(Named::Psi211, Q)) ==
          render(parse("x1*[x1,x2]*x3 + x3*[x1,x2]*x1", Q)));
    CHECK(named(Named::PsiLin, Q) == lin_complete(named(Named::Psi211, Q)));
}

TEST_CASE("degree (2,1,1) relations")
{
    const FreePoly st = named(Named::St3, Q);
    const FreePoly lhs = named(Named::CommSq211, Q) - named(Named::H, Q);
    const FreePoly rhs = (x(1, Q) * st + st * x(1, Q) - named(Named::Phi211, Q))
                             .scaled(Scalar::from_rational(mpq_class(1, 2), Q));
    CHECK(lhs == rhs);

    const FreePoly st2 = named(Named::St3, F2);
    CHECK(named(Named::H, F2) == x(1, F2) * st2 + named(Named::Psi211, F2));
    CHECK(named(Named::Phi211, F2) == x(1, F2) * st2 + st2 * x(1, F2));
}

TEST_CASE("free-algebra equalities in degree (1,1,1,1)")
{
    FreePoly rhs = named(Named::PhiLin, Q) + st3_left(1, Q) + st3_left(2, Q) + st3_left(3, Q).scaled(2) +
                   st3_right(1, Q) + st3_right(2, Q) + st3_right(3, Q).scaled(2);
    CHECK(named(Named::Gamma, Q).scaled(4) - named(Named::Lambda, Q).scaled(2) == rhs);

    FreePoly alt(Q);
    for (Var i = 1; i <= 4; ++i)
        alt += (st3_left(i, Q) + st3_right(i, Q)).scaled(i % 2 ? 1 : -1);
    CHECK(alt.is_zero());
}

TEST_CASE("g expands to twelve reduced words in char 2")
{
    const FreePoly g = named(Named::G, F2);
    CHECK(g == parse("x1*x2*x4*x3 + x1*x3*x2*x4 + x1*x3*x4*x2 + x1*x4*x2*x3"
                     " + x2*x1*x3*x4 + x2*x3*x1*x4 + x2*x3*x4*x1 + x2*x4*x1*x3"
                     " + x3*x1*x2*x4 + x3*x1*x4*x2 + x4*x1*x2*x3 + x4*x2*x3*x1",
                     F2));
    const auto& reduced = reduced_monomials();
    for (const auto& [w, c] : g.terms())
        CHECK(std::find(reduced.begin(), reduced.end(), w) != reduced.end());
}

TEST_CASE("reduced monomials")
{
    const auto& r = reduced_monomials();
    CHECK(r.size() == 17);
    CHECK(nonreduced_monomials().size() == 7);
    CHECK(std::is_sorted(r.begin(), r.end()));
    CHECK(r.front() == Word{1, 2, 3, 4});
    CHECK(r[13] == Word{3, 4, 1, 2});
    CHECK(r[14] == Word{4, 1, 2, 3});
    CHECK(r[15] == Word{4, 1, 3, 2});
    CHECK(r[16] == Word{4, 2, 3, 1});
}

TEST_CASE("reduction modulo St3 products")
{
    for (Char c : {Q, F2, Char::prime(3)}) {
        for (Named n : {Named::Gamma, Named::Lambda, Named::PhiLin, Named::CommSq}) {
            const FreePoly f = named(n, c);
            Reduction r = reduce_to_reduced(f);
            CHECK(r.reduced + r.remainder == f);
            for (const auto& w : nonreduced_monomials())
                CHECK(r.reduced.coefficient(w).is_zero());
        }
        for (const auto& w : words_of_multidegree({1, 1, 1, 1})) {
            Reduction r = reduce_to_reduced(FreePoly::monomial(w, c));
            CHECK(r.reduced + r.remainder == FreePoly::monomial(w, c));
        }
    }
    CHECK_THROWS_AS(reduce_to_reduced(named(Named::Phi22, Q)), WrongMultidegree);
}
