#include <doctest.h>

#include <random>

#include "weylpi/errors.hpp"
#include "weylpi/linalg.hpp"

using namespace weylpi;

namespace {

const Char Q = Char::zero();

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Char ch, int spread)
{
    std::uniform_int_distribution<long> d(-spread, spread);
    std::vector<std::vector<long>> e(r, std::vector<long>(c));
    for (auto& row : e)
        for (auto& v : row)
            v = d(rng);
    return Matrix::from_integers(e, ch);
}

bool is_zero(const Vector& v)
{
    for (const auto& s : v)
        if (!s.is_zero())
            return false;
    return true;
}

} // namespace

TEST_CASE("trivial nullspaces")
{
    CHECK(nullspace(Matrix::from_integers({{1, 0}, {0, 1}}, Q)).empty());
    auto zero = nullspace(Matrix(2, 3, Q));
    REQUIRE(zero.size() == 3);
    CHECK(zero[0][0].is_one());
    CHECK(zero[2][2].is_one());
    auto k = nullspace(Matrix::from_integers({{1, 2, 3}}, Q));
    REQUIRE(k.size() == 2);
    CHECK(k[0][0].to_string() == "-2");
}

TEST_CASE("determinants")
{
    CHECK(determinant(Matrix::from_integers({{2, 1}, {1, 1}}, Q)).is_one());
    CHECK(determinant(Matrix::from_integers({{0, 1}, {1, 0}}, Q)).to_string() == "-1");
    CHECK(determinant(Matrix::from_integers({{1, 2}, {2, 4}}, Q)).is_zero());
    CHECK(determinant(Matrix::from_integers({{2, 1}, {1, 1}}, Char::prime(2))).is_one());
    CHECK(determinant(Matrix::from_integers({{3, 0}, {0, 1}}, Char::prime(3))).is_zero());
    CHECK_THROWS_AS(determinant(Matrix(2, 3, Q)), ArityMismatch);
}

TEST_CASE("determinant against cofactor expansion")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        Matrix m = random_matrix(rng, 3, 3, Q, 9);
        Scalar cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                     m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                     m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        CHECK(determinant(m) == cof);
    }
}

TEST_CASE("nullspace vectors are annihilated")
{
    std::mt19937_64 rng(43);
    for (Char c : {Q, Char::prime(2), Char::prime(7)})
        for (int t = 0; t < 60; ++t) {
            // low-rank matrices from products
            Matrix a = random_matrix(rng, 6, 3, c, 4), b = random_matrix(rng, 3, 7, c, 4);
            Matrix m(6, 7, c);
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 7; ++j)
                    for (std::size_t k = 0; k < 3; ++k)
                        m(i, j) += a(i, k) * b(k, j);
            auto ns = nullspace(m);
            CHECK(ns.size() + rank(m) == 7);
            for (const auto& v : ns)
                CHECK(is_zero(m.apply(v)));
        }
}

TEST_CASE("rational and modular solutions agree when ranks do")
{
    std::mt19937_64 rng(47);
    for (int t = 0; t < 60; ++t) {
        Matrix mq = random_matrix(rng, 4, 6, Q, 6);
        for (std::uint32_t p : {5u, 7u, 11u}) {
            const Char c = Char::prime(p);
            Matrix mp(0, 6, c);
            for (std::size_t r = 0; r < 4; ++r) {
                Vector row;
                for (std::size_t j = 0; j < 6; ++j)
                    row.push_back(Scalar::from_integer(mq(r, j).rational().get_num(), c));
                mp.append_row(row);
            }
            if (rank(mp) != rank(mq))
                continue;
            auto nq = nullspace(mq);
            auto np = nullspace(mp);
            REQUIRE(nq.size() == np.size());
            // The rational kernel reduces to a basis of the modular one when no
            // denominator vanishes mod p.
            Matrix reduced(0, 6, c);
            bool invertible = true;
            for (const auto& v : nq)
                for (const auto& s : v)
                    invertible = invertible && mpz_class(s.rational().get_den() % p) != 0;
            if (!invertible)
                continue;
            for (const auto& v : nq) {
                Vector w;
                for (const auto& s : v)
                    w.push_back(Scalar::from_rational(s.rational(), c));
                CHECK(is_zero(mp.apply(w)));
                reduced.append_row(w);
            }
            CHECK(rank(reduced) == np.size());
        }
    }
}

TEST_CASE("rows must match")
{
    Matrix m(0, 2, Q);
    CHECK_THROWS_AS(m.append_row({Scalar(Q)}), ArityMismatch);
    CHECK_THROWS_AS(m.append_row({Scalar(Char::prime(2)), Scalar(Char::prime(2))}), CharMismatch);
}
