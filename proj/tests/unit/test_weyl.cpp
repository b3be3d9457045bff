#include <doctest.h>

#include <random>

#include "weylpi/errors.hpp"
#include "weylpi/weyl.hpp"

using namespace weylpi;

namespace {

const Char Q = Char::zero();

// y * x^a = x^a * y + a * x^(a-1), applied directly to a term x^i y^j.
WeylElement left_y(const WeylElement& e)
{
    WeylElement out(e.characteristic());
    for (const auto& [m, c] : e.terms()) {
        out.add_term({m.x, m.y + 1}, c);
        if (m.x > 0)
            out.add_term({m.x - 1, m.y}, c * Scalar::from_integer(static_cast<long>(m.x), e.characteristic()));
    }
    return out;
}

WeylElement left_x(const WeylElement& e)
{
    WeylElement out(e.characteristic());
    for (const auto& [m, c] : e.terms())
        out.add_term({m.x + 1, m.y}, c);
    return out;
}

// Independent evaluation of a word by multiplying letters from the right end.
WeylElement by_letters(const std::string& word, Char c)
{
    WeylElement acc = WeylElement::one(c);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = *it == 'x' ? left_x(acc) : left_y(acc);
    return acc;
}

std::string basis_word(std::uint64_t i)
{
    return std::string(i, 'x') + "y";
}

} // namespace

TEST_CASE("normal ordering by rewriting")
{
    CHECK(normal_form("yx", Q).to_string() == "x*y + 1");
    CHECK(normal_form("yyxx", Q).to_string() == "x^2*y^2 + 4*x*y + 2");
    CHECK(normal_form("", Q).to_string() == "1");
    CHECK(normal_form("yyxx", Char::prime(2)).to_string() == "x^2*y^2");
    CHECK_THROWS_AS(normal_form("xz", Q), std::invalid_argument);
}

TEST_CASE("multiplication agrees with the letter-by-letter oracle")
{
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> len(0, 8), bit(0, 1);
    for (Char c : {Q, Char::prime(2), Char::prime(3)})
        for (int t = 0; t < 200; ++t) {
            std::string a, b;
            for (int s = len(rng); s > 0; --s)
                a += bit(rng) ? 'x' : 'y';
            for (int s = len(rng); s > 0; --s)
                b += bit(rng) ? 'x' : 'y';
            CHECK(normal_form(a, c) * normal_form(b, c) == by_letters(a + b, c));
            CHECK(normal_form(a + b, c) == by_letters(a + b, c));
        }
}

TEST_CASE("products of basis elements")
{
    // c_1 c_2 = x^3 y^2 + 2 x^2 y
    WeylElement p = WeylElement::monomial(1, 1, Q) * WeylElement::monomial(2, 1, Q);
    CHECK(p.to_string() == "x^3*y^2 + 2*x^2*y");
    // [c_i, c_j] = (j - i) x^(i+j-1) y
    for (std::uint32_t i = 0; i <= 6; ++i)
        for (std::uint32_t j = 0; j <= 6; ++j) {
            WeylElement br = commutator(WeylElement::monomial(i, 1, Q), WeylElement::monomial(j, 1, Q));
            if (i + j == 0) {
                CHECK(br.is_zero());
                continue;
            }
            CHECK(br == WeylElement::monomial(i + j - 1, 1,
                                              Scalar::from_integer(long(j) - long(i), Q)));
        }
    // x^i y^2 * x^j y = x^(i+j) y^3 + 2j x^(i+j-1) y^2 + j(j-1) x^(i+j-2) y
    for (std::uint32_t i = 0; i <= 4; ++i)
        for (std::uint32_t j = 0; j <= 4; ++j) {
            WeylElement lhs = WeylElement::monomial(i, 2, Q) * WeylElement::monomial(j, 1, Q);
            WeylElement rhs = WeylElement::monomial(i + j, 3, Q);
            if (i + j >= 1)
                rhs.add_term({i + j - 1, 2}, Scalar::from_integer(2L * j, Q));
            if (i + j >= 2)
                rhs.add_term({i + j - 2, 1}, Scalar::from_integer(long(j) * (long(j) - 1), Q));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("quartic closed form")
{
    CHECK(quartic_closed_form(1, 1, 1, 1, Q).to_string() == "x^4*y^4 + 6*x^3*y^3 + 7*x^2*y^2 + x*y");
    CHECK(quartic_closed_form(0, 0, 0, 1, Q).to_string() == "x*y^4 + 3*y^3");
    CHECK(quartic_closed_form(0, 0, 0, 0, Q).to_string() == "y^4");
    for (std::uint64_t i = 0; i <= 3; ++i)
        for (std::uint64_t j = 0; j <= 3; ++j)
            for (std::uint64_t k = 0; k <= 3; ++k)
                for (std::uint64_t l = 0; l <= 3; ++l)
                    CHECK(quartic_closed_form(i, j, k, l, Q) ==
                          normal_form(basis_word(i) + basis_word(j) + basis_word(k) + basis_word(l), Q));
}

TEST_CASE("ring axioms")
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> e(0, 4), c(-3, 3);
    auto draw = [&](Char ch) {
        WeylElement w(ch);
        for (int t = 0; t < 3; ++t)
            w.add_term({static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng))},
                       Scalar::from_integer(long(c(rng)), ch));
        return w;
    };
    for (Char ch : {Q, Char::prime(3)})
        for (int t = 0; t < 50; ++t) {
            WeylElement a = draw(ch), b = draw(ch), d = draw(ch);
            CHECK((a * b) * d == a * (b * d));
            CHECK(a * (b + d) == a * b + a * d);
            // Jacobi
            CHECK((commutator(a, commutator(b, d)) + commutator(b, commutator(d, a)) +
                   commutator(d, commutator(a, b)))
                      .is_zero());
        }
}

TEST_CASE("center in prime characteristic")
{
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Char c = Char::prime(p);
        for (std::uint32_t a = 0; a <= 2 * p; ++a)
            for (std::uint32_t b = 0; b <= 2 * p; ++b) {
                WeylElement m = WeylElement::monomial(a, b, c);
                bool central = commutator(m, WeylElement::x(c)).is_zero() &&
                               commutator(m, WeylElement::y(c)).is_zero();
                CHECK(central == (a % p == 0 && b % p == 0));
            }
    }
    CHECK_FALSE(commutator(WeylElement::monomial(2, 0, Q), WeylElement::y(Q)).is_zero());
}

TEST_CASE("symbolic products specialize to concrete products")
{
    // c_i * c_j with symbols i, j.
    SymbolicWeylElement s = SymbolicWeylElement::unit().times_basis(0).times_basis(1);
    for (std::uint64_t i = 0; i <= 5; ++i)
        for (std::uint64_t j = 0; j <= 5; ++j) {
            const std::vector<std::uint64_t> pt{i, j};
            CHECK(s.substitute(pt, Q) ==
                  WeylElement::monomial(i, 1, Q) * WeylElement::monomial(j, 1, Q));
        }
    CHECK(AffineForm({1, 2}, -1).to_string() == "i+2*j-1");
}

TEST_CASE("negative exponents carry zero coefficients")
{
    // Products up to length 5 with repeated symbols; every substitution must succeed.
    for (std::uint32_t n = 1; n <= 5; ++n) {
        SymbolicWeylElement s = SymbolicWeylElement::unit();
        for (std::uint32_t k = 0; k < n; ++k)
            s = s.times_basis(k % 2);
        for (std::uint64_t i = 0; i <= 5; ++i)
            for (std::uint64_t j = 0; j <= 5; ++j) {
                const std::vector<std::uint64_t> pt{i, j};
                CHECK_NOTHROW(s.substitute(pt, Q));
            }
    }
}
