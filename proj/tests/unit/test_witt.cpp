#include <doctest.h>

#include "weylpi/catalog.hpp"
#include "weylpi/errors.hpp"
#include "weylpi/freealg.hpp"
#include "weylpi/linearize.hpp"
#include "weylpi/witt.hpp"

using namespace weylpi;

namespace {

const Char Q = Char::zero();
const Char F2 = Char::prime(2);

// Brute force: every linearization of every component vanishes on a grid.
bool vanishes_on_grid(const FreePoly& f, std::uint64_t bound)
{
    for (const auto& [d, comp] : components(f))
        for (const auto& l : all_linearizations(comp, false)) {
            const std::size_t m = l.poly.num_vars();
            std::vector<std::uint64_t> p(m, 0);
            for (;;) {
                if (!eval_concrete(l.poly, p).is_zero())
                    return false;
                std::size_t k = 0;
                while (k < m && ++p[k] == bound)
                    p[k++] = 0;
                if (k == m)
                    break;
            }
        }
    return true;
}

} // namespace

TEST_CASE("concrete evaluation")
{
    const std::vector<std::uint64_t> p12{1, 2}, p012{0, 1, 2}, p02{0, 2};
    CHECK(eval_concrete(parse("x1*x2", Q), p12).to_string() == "x^3*y^2 + 2*x^2*y");
    CHECK(eval_concrete(parse("St3(x1,x2,x3)", Q), p012).is_zero());
    CHECK(eval_concrete(parse("St2(x1,x2)", Q), p02).to_string() == "2*x*y");
    CHECK(eval_concrete(FreePoly::one(Q), {}).to_string() == "1");
    CHECK_THROWS_AS(eval_concrete(parse("x1*x2", Q), std::vector<std::uint64_t>{1}), ArityMismatch);
}

TEST_CASE("symbolic evaluation")
{
    SymbolicEvaluation s = eval_symbolic(parse("x1*x2", Q));
    CHECK(s.denominator == 1);
    // coefficient of y^1 in c_i c_j is j, at x-exponent i + j - 1
    bool found = false;
    for (const auto& [key, coeff] : s.numerator.terms())
        if (key.y_exp == 1) {
            CHECK(coeff == ExpPoly::symbol(1));
            CHECK(key.x_exp.to_string() == "i+j-1");
            found = true;
        }
    CHECK(found);

    SymbolicEvaluation h = eval_symbolic(parse("1/2*x1*x2 + 1/3*x2*x1", Q));
    CHECK(h.denominator == 6);
}

TEST_CASE("top PBW coefficient is the coefficient sum")
{
    FreePoly f = parse("3*x1*x2*x3 - 5*x2*x3*x1 + x3*x3*x3", Q);
    // with every argument c_0 = y each word becomes y^3
    const std::vector<std::uint64_t> zero{0, 0, 0};
    CHECK(eval_concrete(f, zero).to_string() == "-y^3");
}

TEST_CASE("symbolic evaluation specializes to concrete evaluation")
{
    for (Named n : {Named::Phi22, Named::Psi211, Named::H, Named::G}) {
        FreePoly f = named(n, Q);
        SymbolicEvaluation s = eval_symbolic(f);
        const std::size_t m = f.num_vars();
        std::vector<std::uint64_t> p(m, 0);
        for (;;) {
            CHECK(s.numerator.substitute(p, Q) == eval_concrete(f, p));
            std::size_t k = 0;
            while (k < m && ++p[k] == 4)
                p[k++] = 0;
            if (k == m)
                break;
        }
    }
}

TEST_CASE("identity verdicts")
{
    CHECK(is_identity(named(Named::Phi22, Q)).identity);
    CHECK(is_identity(named(Named::Delta, F2)).identity);
    CHECK_FALSE(is_identity(named(Named::Delta, Q)).identity);
    CHECK(is_identity(parse("St3(x1,x2,x3)", Char::prime(7))).identity);
    CHECK(is_identity(FreePoly(Q)).identity);
    CHECK_FALSE(is_identity(FreePoly::one(Q)).identity);
    // non-homogeneous inputs split into components
    CHECK(is_identity(named(Named::Phi22, Q) + parse("St3(x1,x2,x3)", Q)).identity);
    CHECK_FALSE(is_identity(named(Named::Phi22, Q) + parse("x1*x2", Q)).identity);
}

TEST_CASE("witnesses are concrete and recheck")
{
    EvalReport r = is_identity(parse("x1*x2 - x2*x1", Q));
    REQUIRE_FALSE(r.identity);
    REQUIRE(r.witness);
    CHECK(recheck(*r.witness));
    const Witness& w = *r.witness;
    CHECK_FALSE(eval_concrete(w.polynomial, w.point).coefficient(w.monomial.x, w.monomial.y).is_zero());
    CHECK(r.to_text().rfind("NotIdentity", 0) == 0);
    CHECK(r.to_json()["verdict"] == "NotIdentity");

    EvalReport s = is_identity(named(Named::Delta, Q));
    REQUIRE(s.witness);
    CHECK(recheck(*s.witness));
}

TEST_CASE("symbolic verdict matches brute force on the grid")
{
    for (Char c : {Q, F2, Char::prime(3)})
        for (Named n : {Named::St3, Named::Phi22, Named::Phi211, Named::Psi211, Named::CommSq211,
                        Named::H, Named::X1St3}) {
            FreePoly f = named(n, c);
            CHECK(is_identity(f).identity == vanishes_on_grid(f, c.is_zero() ? 5 : c.value() + 1));
        }
}

TEST_CASE("the span of basis elements is closed under brackets")
{
    for (std::uint64_t i = 0; i <= 6; ++i)
        for (std::uint64_t j = 0; j <= 6; ++j) {
            WeylElement b = commutator(basis_element(i, Q), basis_element(j, Q));
            for (const auto& [m, coeff] : b.terms())
                CHECK(m.y == 1);
        }
}

TEST_CASE("linearized (2,2) generators at (c1,c1,c2) in char 2")
{
    const std::vector<std::uint64_t> at{1, 1, 2};
    for (const char* text : {"[x1^2,x2^2]", "x1*x2*x1*x2 + x2*x1*x2*x1"}) {
        FreePoly g = lin(parse(text, F2), 2, Composition{1, 1});
        CHECK(eval_concrete(g, at).to_string() == "x^2*y");
    }
}
