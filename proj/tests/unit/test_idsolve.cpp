#include <doctest.h>

#include <fstream>

#include "weylpi/catalog.hpp"
#include "weylpi/errors.hpp"
#include "weylpi/idsolve.hpp"
#include "weylpi/witt.hpp"

using namespace weylpi;

namespace {

const Char Q = Char::zero();
const Char F2 = Char::prime(2);

nlohmann::json golden(const std::string& name)
{
    std::ifstream in(std::string(WEYLPI_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

} // namespace

TEST_CASE("dimensions by multidegree and characteristic")
{
    struct Case {
        MultiDegree d;
        Char c;
        std::size_t dim;
    };
    const std::vector<Case> cases{
        {{1, 1}, Q, 0},          {{2}, Q, 0},           {{1, 1, 1}, Q, 1},
        {{1, 1, 1}, F2, 1},      {{3, 1}, Q, 0},        {{3, 1}, Char::prime(3), 0},
        {{2, 2}, Q, 1},          {{2, 2}, F2, 1},       {{2, 2}, Char::prime(3), 1},
        {{2, 1, 1}, Q, 3},       {{2, 1, 1}, F2, 4},    {{2, 1, 1}, Char::prime(3), 3},
        {{1, 1, 1, 1}, Q, 9},    {{1, 1, 1, 1}, F2, 12}, {{1, 1, 1, 1}, Char::prime(5), 9},
        {{4}, Q, 0},
    };
    for (const auto& k : cases) {
        CAPTURE(k.d.to_string());
        CAPTURE(k.c.to_string());
        CHECK(solve(k.d, k.c).dimension() == k.dim);
    }
    CHECK_THROWS_AS(solve(MultiDegree{}, Q), WrongMultidegree);
}

TEST_CASE("every basis vector is an identity")
{
    for (Char c : {Q, F2, Char::prime(3)})
        for (MultiDegree d : {MultiDegree{1, 1, 1}, MultiDegree{2, 2}, MultiDegree{2, 1, 1},
                              MultiDegree{1, 1, 1, 1}}) {
            SolveReport r = solve(d, c);
            for (std::size_t i = 0; i < r.dimension(); ++i)
                CHECK(is_identity(r.basis_polynomial(i)).identity);
        }
}

TEST_CASE("membership")
{
    SolveReport r0 = solve({2, 1, 1}, Q);
    CHECK(contains(r0, named(Named::Phi211, Q)));
    CHECK_FALSE(contains(r0, named(Named::Psi211, Q)));
    CHECK_FALSE(contains(r0, named(Named::CommSq211, Q)));
    CHECK(contains(r0, FreePoly(Q)));
    SolveReport r2 = solve({1, 1, 1, 1}, F2);
    CHECK(contains(r2, named(Named::G, F2)));
    CHECK(contains(r2, named(Named::PhiLin, F2)));
    CHECK(contains(r2, named(Named::PsiLin, F2)));
    SolveReport r4 = solve({1, 1, 1, 1}, Q);
    CHECK(contains(r4, named(Named::Lambda, Q)));
    CHECK_FALSE(contains(r4, named(Named::Delta, Q)));
    CHECK_FALSE(contains(r4, named(Named::CommSq, Q)));
    CHECK_THROWS_AS(contains(r0, named(Named::Phi22, Q)), WrongMultidegree);
    CHECK_THROWS_AS(contains(r0, named(Named::Phi211, F2)), CharMismatch);
}

TEST_CASE("rank of families")
{
    std::vector<FreePoly> polys{named(Named::Gamma, Q), named(Named::Lambda, Q),
                                named(Named::PhiLin, Q)};
    CHECK(rank_of(polys) == 3);
    polys.push_back(named(Named::Gamma, Q).scaled(4) - named(Named::Lambda, Q).scaled(2));
    CHECK(rank_of(polys) == 3);
    polys.push_back(st3_left(1, Q));
    CHECK(rank_of(polys) == 4);
    std::vector<FreePoly> none;
    CHECK(rank_of(none) == 0);
}

TEST_CASE("characteristic sweep")
{
    const std::vector<Char> chars{Q, F2, Char::prime(3), Char::prime(5)};
    SweepResult s = sweep({2, 1, 1}, chars);
    CHECK(s.dimensions_differ);
    CHECK(s.reports[1].dimension() == 4);
    CHECK_FALSE(sweep({2, 2}, chars).dimensions_differ);
}

TEST_CASE("report JSON round trip and golden files")
{
    struct Case {
        MultiDegree d;
        Char c;
        const char* file;
    };
    for (const auto& k : std::vector<Case>{{{1, 1, 1}, Q, "solve_111_c0.json"},
                                           {{3, 1}, Q, "solve_31_c0.json"},
                                           {{2, 2}, Q, "solve_22_c0.json"},
                                           {{2, 1, 1}, Q, "solve_211_c0.json"},
                                           {{2, 1, 1}, F2, "solve_211_c2.json"},
                                           {{1, 1, 1, 1}, Q, "solve_1111_c0.json"},
                                           {{1, 1, 1, 1}, F2, "solve_1111_c2.json"}}) {
        CAPTURE(k.file);
        SolveReport r = solve(k.d, k.c);
        const nlohmann::json j = r.to_json();
        CHECK(j == golden(k.file));
        SolveReport back = SolveReport::from_json(j);
        CHECK(back.to_json() == j);
        CHECK(back.monomials == r.monomials);
    }
}

TEST_CASE("published matrices")
{
    for (MatrixLabel l : {MatrixLabel::Multilinear15, MatrixLabel::Multilinear12, MatrixLabel::Pivot5}) {
        CAPTURE(to_string(l));
        IntegerMatrix m = assemble_matrix(l);
        CHECK(m == published_matrix(l));
        nlohmann::json g = golden("matrix_" + to_string(l) + ".json");
        CHECK(g["entries"] == m.to_json()["entries"]);
        CHECK(matrix_label_from_string(to_string(l)) == l);
    }
    CHECK(determinant(assemble_matrix(MatrixLabel::Multilinear15).to_matrix()).to_string() == "-64");
    CHECK(determinant(assemble_matrix(MatrixLabel::Multilinear12).to_matrix()).is_one());
    CHECK_FALSE(determinant(assemble_matrix(MatrixLabel::Pivot5).to_matrix()).is_zero());
    CHECK(nullspace(assemble_matrix(MatrixLabel::Multilinear15).to_matrix()).empty());
    CHECK_THROWS_AS(matrix_label_from_string("P44"), UnknownName);
}

TEST_CASE("first row of the 15x15 system")
{
    // f(c_1, c_0, c_0, c_0): coefficient of x y^4 is 1 for every word.
    auto m = assemble_matrix(MatrixLabel::Multilinear15);
    CHECK(m.entries[0] == std::vector<long>(15, 1));
}
