#include "weylpi/repro.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "weylpi/catalog.hpp"
#include "weylpi/exppoly.hpp"
#include "weylpi/freealg.hpp"
#include "weylpi/idsolve.hpp"
#include "weylpi/linearize.hpp"
#include "weylpi/weyl.hpp"
#include "weylpi/witt.hpp"

namespace weylpi {

namespace {

using Point = std::vector<std::uint64_t>;

// Collects failures; a criterion passes when nothing was recorded.
class Checker {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && failures_.size() < 5)
            failures_.push_back(what);
        if (!ok)
            ++failed_;
    }
    CriterionResult result(int id, const std::string& title, const std::string& summary) const
    {
        CriterionResult r{id, title, failed_ == 0, summary};
        if (failed_) {
            r.detail = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed";
            for (const auto& f : failures_)
                r.detail += "; " + f;
        }
        return r;
    }
    std::size_t checks() const { return checks_; }

private:
    std::size_t checks_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

const Char Q = Char::zero();
const Char F2 = Char::prime(2);

void for_grid(std::size_t n, std::uint64_t bound, const std::function<void(const Point&)>& fn)
{
    Point p(n, 0);
    for (;;) {
        fn(p);
        std::size_t k = 0;
        while (k < n && ++p[k] == bound)
            p[k++] = 0;
        if (k == n)
            return;
    }
}

std::string point_string(const Point& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

// ---- 1

CriterionResult quartic_oracle()
{
    Checker ck;
    for (Char c : {Q, F2, Char::prime(3)}) {
        std::vector<WeylElement> basis;
        for (std::uint64_t i = 0; i <= 6; ++i)
            basis.push_back(basis_element(i, c));
        for_grid(4, 7, [&](const Point& p) {
            WeylElement chain = basis[p[0]] * basis[p[1]] * basis[p[2]] * basis[p[3]];
            ck.expect(quartic_closed_form(p[0], p[1], p[2], p[3], c) == chain,
                      "char " + c.to_string() + " at " + point_string(p));
        });
    }
    return ck.result(1, "quartic closed form equals multiplication chain",
                     std::to_string(ck.checks()) + " products over Q, F2, F3 agree");
}

// ---- 2..6

std::string dims_text(const std::vector<std::pair<Char, std::size_t>>& dims)
{
    std::string s;
    for (const auto& [c, d] : dims)
        s += (s.empty() ? "" : ", ") + std::string("char ") + c.to_string() + ": dim " +
             std::to_string(d);
    return s;
}

CriterionResult degree3()
{
    Checker ck;
    std::vector<std::pair<Char, std::size_t>> dims;
    for (Char c : {Q, F2}) {
        SolveReport r = solve({1, 1, 1}, c);
        dims.emplace_back(c, r.dimension());
        ck.expect(r.dimension() == 1, "dimension over char " + c.to_string());
        ck.expect(contains(r, named(Named::St3, c)), "St3 over char " + c.to_string());
    }
    return ck.result(2, "multidegree (1,1,1): identities are multiples of St3",
                     dims_text(dims) + ", spanned by St3");
}

CriterionResult degree31()
{
    Checker ck;
    std::vector<std::pair<Char, std::size_t>> dims;
    for (Char c : {Q, F2, Char::prime(3), Char::prime(5)}) {
        SolveReport r = solve({3, 1}, c);
        dims.emplace_back(c, r.dimension());
        ck.expect(r.dimension() == 0, "dimension over char " + c.to_string());
    }
    return ck.result(3, "multidegree (3,1): no identities", dims_text(dims));
}

CriterionResult degree22()
{
    Checker ck;
    std::vector<std::pair<Char, std::size_t>> dims;
    for (Char c : {Q, F2, Char::prime(3), Char::prime(5)}) {
        SolveReport r = solve({2, 2}, c);
        dims.emplace_back(c, r.dimension());
        ck.expect(r.dimension() == 1, "dimension over char " + c.to_string());
        ck.expect(contains(r, named(Named::Phi22, c)), "Phi22 over char " + c.to_string());
    }
    return ck.result(4, "multidegree (2,2): identities are multiples of Phi22",
                     dims_text(dims) + ", spanned by Phi22");
}

void check_basis(Checker& ck, const SolveReport& r, const std::vector<Named>& names,
                 std::size_t dim)
{
    const Char c = r.characteristic;
    ck.expect(r.dimension() == dim, "dimension " + std::to_string(r.dimension()) + " over char " +
                                        c.to_string() + ", expected " + std::to_string(dim));
    std::vector<FreePoly> polys;
    for (Named n : names) {
        polys.push_back(named(n, c));
        ck.expect(contains(r, polys.back()), name_of(n) + " over char " + c.to_string());
    }
    ck.expect(rank_of(polys) == polys.size(), "listed set dependent over char " + c.to_string());
}

CriterionResult degree211()
{
    Checker ck;
    SolveReport r0 = solve({2, 1, 1}, Q);
    check_basis(ck, r0, {Named::X1St3, Named::St3X1, Named::Phi211}, 3);
    SolveReport r2 = solve({2, 1, 1}, F2);
    check_basis(ck, r2, {Named::X1St3, Named::St3X1, Named::Psi211, Named::CommSq211}, 4);
    return ck.result(5, "multidegree (2,1,1): bases in char 0 and char 2",
                     dims_text({{Q, r0.dimension()}, {F2, r2.dimension()}}) +
                         ", listed sets independent and contained");
}

void check_poly_basis(Checker& ck, const SolveReport& r, const std::vector<FreePoly>& polys,
                      const std::vector<std::string>& labels)
{
    for (std::size_t i = 0; i < polys.size(); ++i)
        ck.expect(contains(r, polys[i]), labels[i] + " over char " + r.characteristic.to_string());
    ck.expect(rank_of(polys) == polys.size(),
              "listed set dependent over char " + r.characteristic.to_string());
    ck.expect(polys.size() == r.dimension(),
              "cardinality " + std::to_string(polys.size()) + " vs dimension " +
                  std::to_string(r.dimension()));
}

std::vector<FreePoly> st3_products(Char c, std::vector<std::string>& labels)
{
    std::vector<FreePoly> out;
    for (Var i = 1; i <= 4; ++i) {
        out.push_back(st3_left(i, c));
        labels.push_back("x" + std::to_string(i) + "*St3");
    }
    for (Var i = 1; i <= 3; ++i) {
        out.push_back(st3_right(i, c));
        labels.push_back("St3*x" + std::to_string(i));
    }
    return out;
}

CriterionResult degree1111()
{
    Checker ck;
    SolveReport r0 = solve({1, 1, 1, 1}, Q);
    {
        std::vector<std::string> labels{"Gamma", "PhiLin"};
        std::vector<FreePoly> polys{named(Named::Gamma, Q), named(Named::PhiLin, Q)};
        for (auto& p : st3_products(Q, labels))
            polys.push_back(std::move(p));
        ck.expect(r0.dimension() == 9, "dimension over char 0");
        check_poly_basis(ck, r0, polys, labels);
    }
    SolveReport r2 = solve({1, 1, 1, 1}, F2);
    {
        std::vector<std::string> labels{"Gamma", "Psi", "Delta", "Lambda"};
        std::vector<FreePoly> polys{named(Named::Gamma, F2), named(Named::Psi, F2),
                                    named(Named::Delta, F2), named(Named::Lambda, F2)};
        for (auto& p : st3_products(F2, labels))
            polys.push_back(std::move(p));
        polys.push_back(named(Named::CommSq1324, F2));
        labels.push_back("[[x1,x3],[x2,x4]]");
        ck.expect(r2.dimension() == 12, "dimension over char 2");
        check_poly_basis(ck, r2, polys, labels);
    }
    return ck.result(6, "multidegree (1,1,1,1): bases in char 0 and char 2",
                     dims_text({{Q, r0.dimension()}, {F2, r2.dimension()}}) +
                         ", listed sets are bases");
}

// ---- 7

CriterionResult matrices()
{
    Checker ck;
    std::string summary;
    for (MatrixLabel l : {MatrixLabel::Multilinear15, MatrixLabel::Multilinear12, MatrixLabel::Pivot5}) {
        IntegerMatrix built = assemble_matrix(l);
        ck.expect(built == published_matrix(l), to_string(l) + " differs from the published matrix");
        Scalar det = determinant(built.to_matrix());
        summary += (summary.empty() ? "" : ", ") + std::string("det ") + to_string(l) + " = " +
                   det.to_string();
        switch (l) {
        case MatrixLabel::Multilinear15:
            ck.expect(det == Scalar::from_integer(-64L, Q), "det multilinear15 = " + det.to_string());
            ck.expect(nullspace(built.to_matrix()).empty(), "multilinear15 has a kernel");
            break;
        case MatrixLabel::Multilinear12:
            ck.expect(det.is_one(), "det multilinear12 = " + det.to_string());
            break;
        case MatrixLabel::Pivot5:
            ck.expect(!det.is_zero(), "pivot5 singular");
            break;
        }
    }
    return ck.result(7, "coefficient matrices match the published ones",
                     "all entries equal; " + summary);
}

// ---- 8

CriterionResult remark_equalities()
{
    Checker ck;
    const FreePoly gamma = named(Named::Gamma, Q), lambda = named(Named::Lambda, Q);
    FreePoly rhs = named(Named::PhiLin, Q) + st3_left(1, Q) + st3_left(2, Q) +
                   st3_left(3, Q).scaled(2) + st3_right(1, Q) + st3_right(2, Q) +
                   st3_right(3, Q).scaled(2);
    ck.expect(gamma.scaled(4) - lambda.scaled(2) == rhs, "4*Gamma - 2*Lambda");
    FreePoly alt(Q);
    for (Var i = 1; i <= 4; ++i) {
        FreePoly t = st3_left(i, Q) + st3_right(i, Q);
        alt += (i % 2 ? t : t.scaled(-1));
    }
    ck.expect(alt.is_zero(), "alternating sum is " + alt.to_string());
    return ck.result(8, "free-algebra equalities among Gamma, Lambda, PhiLin, x_i*St3, St3*x_i",
                     "both equalities hold exactly over Q");
}

// ---- 9

CriterionResult verification()
{
    Checker ck;
    std::size_t verdicts = 0;
    auto expect_identity = [&](Named n, Char c) {
        ++verdicts;
        ck.expect(is_identity(named(n, c)).identity, name_of(n) + " over char " + c.to_string());
    };
    for (Char c : {Q, F2, Char::prime(3), Char::prime(5)})
        for (Named n : {Named::Phi22, Named::Phi211, Named::PhiLin})
            expect_identity(n, c);
    for (Named n : {Named::Psi211, Named::Psi, Named::PsiLin, Named::CommSq, Named::Delta,
                    Named::Gamma, Named::Lambda})
        expect_identity(n, F2);

    auto expect_witness = [&](const FreePoly& f, const std::string& label) {
        ++verdicts;
        EvalReport r = is_identity(f);
        ck.expect(!r.identity, label + " reported as identity");
        ck.expect(r.witness && recheck(*r.witness), label + " witness does not recheck");
    };
    expect_witness(named(Named::Delta, Q), "Delta over char 0");
    for (Char c : {Q, F2, Char::prime(3), Char::prime(5)})
        expect_witness(parse("St2(x1,x2)", c), "St2 over char " + c.to_string());
    return ck.result(9, "identity verdicts for the catalog",
                     std::to_string(verdicts) + " verdicts as expected; witnesses recheck");
}

// ---- 10

CriterionResult linearized_degree22()
{
    Checker ck;
    const WeylElement x2y = WeylElement::monomial(2, 1, F2);
    const Point at{1, 1, 2};
    for (const char* text : {"[x1^2,x2^2]", "x1*x2*x1*x2 + x2*x1*x2*x1"}) {
        FreePoly g = lin(parse(text, F2), 2, Composition{1, 1});
        WeylElement v = eval_concrete(g, at);
        ck.expect(v == x2y, std::string(text) + " gives " + v.to_string());
    }
    return ck.result(10, "(1,1)-linearization in x2 at (c1,c1,c2) over F2",
                     "both generators evaluate to x^2*y");
}

// ---- 11

void field_axioms(Checker& ck, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12), big(-1000000, 1000000);
    for (Char c : {Q, F2, Char::prime(3), Char::prime(5), Char::prime(7), Char::prime(101)}) {
        auto draw = [&] {
            return c.is_zero() ? Scalar::from_rational(mpq_class(num(rng), den(rng)), c)
                               : Scalar::from_integer(num(rng), c);
        };
        for (int t = 0; t < 300; ++t) {
            Scalar a = draw(), b = draw(), d = draw();
            const std::string tag = " char " + c.to_string();
            ck.expect((a + b) + d == a + (b + d), "additive associativity" + tag);
            ck.expect((a * b) * d == a * (b * d), "multiplicative associativity" + tag);
            ck.expect(a + b == b + a && a * b == b * a, "commutativity" + tag);
            ck.expect(a * (b + d) == a * b + a * d, "distributivity" + tag);
            ck.expect((a + (-a)).is_zero() && (a - a).is_zero(), "additive inverse" + tag);
            ck.expect((a * Scalar::one(c)) == a, "unit" + tag);
            if (!a.is_zero())
                ck.expect((a * a.inverse()).is_one() && (b / a) * a == b, "inverse" + tag);
            long m = big(rng), n = big(rng);
            ck.expect(Scalar::from_integer(m + n, c) ==
                              Scalar::from_integer(m, c) + Scalar::from_integer(n, c) &&
                          Scalar::from_integer(mpz_class(m) * n, c) ==
                              Scalar::from_integer(m, c) * Scalar::from_integer(n, c),
                      "integer homomorphism" + tag);
        }
    }
}

ExpPoly random_exppoly(std::mt19937_64& rng, std::uint32_t max_deg)
{
    std::uniform_int_distribution<int> coeff(-3, 3), deg(0, static_cast<int>(max_deg));
    ExpPoly p;
    for (int t = 0; t < 4; ++t) {
        Exponents e{static_cast<std::uint32_t>(deg(rng)), static_cast<std::uint32_t>(deg(rng))};
        p = p + ExpPoly::monomial(e, coeff(rng));
    }
    return p;
}

void zero_functions(Checker& ck, std::mt19937_64& rng)
{
    for (Char c : {Q, F2, Char::prime(3), Char::prime(5)}) {
        for (int t = 0; t < 200; ++t) {
            ExpPoly p = random_exppoly(rng, 4);
            if (t % 2) {
                // Add a multiple of a polynomial vanishing on all integers.
                ExpPoly vanishing = c.is_zero()
                                        ? falling_factorial(0, 3) -
                                              (ExpPoly::monomial({3}, 1) - ExpPoly::monomial({2}, 3) +
                                               ExpPoly::monomial({1}, 2))
                                        : ExpPoly::monomial({0, static_cast<std::uint32_t>(c.value())}, 1) - ExpPoly::symbol(1);
                p = random_exppoly(rng, 2) * vanishing;
                if (t % 4 == 1)
                    p = p + ExpPoly::monomial({1}, c.is_zero() ? 1 : static_cast<long>(c.value()));
            }
            bool brute = true;
            const std::uint64_t bound = c.is_zero() ? 5 : c.value();
            for_grid(2, bound, [&](const Point& pt) {
                mpz_class v = p.eval(pt);
                if (c.is_zero() ? v != 0 : mpz_class(v % mpz_class(c.value())) != 0)
                    brute = false;
            });
            ck.expect(is_zero_function(p, c) == brute,
                      "zero-function test disagrees for " + p.to_string() + " char " + c.to_string());
        }
    }
}

int permutation_sign(const std::vector<Var>& perm)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                sign = -sign;
    return sign;
}

void standard_alternation(Checker& ck, std::mt19937_64& rng)
{
    for (Char c : {Q, Char::prime(3)}) {
        for (std::uint32_t n = 2; n <= 5; ++n) {
            std::vector<Var> vars(n);
            std::iota(vars.begin(), vars.end(), 1);
            const FreePoly st = standard_polynomial(vars, c);
            for (int t = 0; t < 5; ++t) {
                std::vector<Var> perm = vars;
                std::shuffle(perm.begin(), perm.end(), rng);
                ck.expect(standard_polynomial(perm, c) == st.scaled(permutation_sign(perm)),
                          "St" + std::to_string(n) + " sign under permutation");
            }
            for (Var a = 1; a < n; ++a) {
                std::vector<FreePoly> images;
                for (Var v = 1; v <= n; ++v)
                    images.push_back(FreePoly::variable(v == a + 1 ? a : v, c));
                ck.expect(substitute(st, images).is_zero(),
                          "St" + std::to_string(n) + " with equal arguments");
            }
        }
    }
}

void parse_round_trip(Checker& ck, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> len(0, 4), letter(1, 4), exps(0, 2);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    for (Char c : {Q, F2, Char::prime(3), Char::prime(7)}) {
        for (int t = 0; t < 100; ++t) {
            FreePoly f(c);
            for (int k = 0; k < 4; ++k) {
                std::vector<Var> w;
                for (int s = len(rng); s > 0; --s)
                    for (int r = 1 + exps(rng); r > 0; --r)
                        w.push_back(static_cast<Var>(letter(rng)));
                Scalar coeff = c.is_zero() ? Scalar::from_rational(mpq_class(num(rng), den(rng)), c)
                                           : Scalar::from_integer(num(rng), c);
                f.add_term(Word(w), coeff);
            }
            const std::string text = render(f);
            ck.expect(parse(text, c) == f, "round trip of " + text);
        }
    }
}

WeylElement power(const WeylElement& a, std::uint32_t n)
{
    WeylElement out = WeylElement::one(a.characteristic());
    for (std::uint32_t i = 0; i < n; ++i)
        out = out * a;
    return out;
}

void center(Checker& ck)
{
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Char c = Char::prime(p);
        const WeylElement x = WeylElement::x(c), y = WeylElement::y(c);
        for (std::uint32_t a = 0; a <= 2 * p; ++a)
            for (std::uint32_t b = 0; b <= 2 * p; ++b) {
                WeylElement m = WeylElement::monomial(a, b, c);
                bool central = commutator(m, x).is_zero() && commutator(m, y).is_zero();
                ck.expect(central == (a % p == 0 && b % p == 0),
                          "x^" + std::to_string(a) + "*y^" + std::to_string(b) + " in char " +
                              std::to_string(p));
            }
        ck.expect(commutator(power(x, p) + power(y, p), x * y).is_zero(), "x^p + y^p central");
        const WeylElement xq = WeylElement::x(Q), yq = WeylElement::y(Q);
        ck.expect(commutator(yq, power(xq, p)) ==
                      WeylElement::monomial(p - 1, 0, Scalar::from_integer(long(p), Q)),
                  "[y, x^p] over Q");
    }
}

void truncation(Checker& ck)
{
    std::vector<WeylElement> basis;
    for (std::uint64_t i = 0; i <= 6; ++i)
        basis.push_back(basis_element(i, Q));
    for (std::uint32_t n = 1; n <= 6; ++n) {
        std::vector<Var> letters(n);
        std::iota(letters.begin(), letters.end(), 1);
        const SymbolicWeylElement sym = symbolic_word_product(Word(letters));
        for_grid(n, 7, [&](const Point& p) {
            WeylElement chain = basis[p[0]];
            for (std::uint32_t k = 1; k < n; ++k)
                chain = chain * basis[p[k]];
            ck.expect(sym.substitute(p, Q) == chain, "length " + std::to_string(n) + " at " +
                                                         point_string(p));
        });
    }
}

void symbolic_matches_concrete(Checker& ck)
{
    for (Char c : {Q, F2, Char::prime(3)}) {
        for (Named n : all_named()) {
            const FreePoly f = named(n, c);
            const SymbolicEvaluation se = eval_symbolic(f);
            const Scalar inv = Scalar::from_integer(se.denominator, c).inverse();
            for_grid(f.num_vars(), 4, [&](const Point& p) {
                ck.expect(se.numerator.substitute(p, c).scaled(inv) == eval_concrete(f, p),
                          name_of(n) + " char " + c.to_string() + " at " + point_string(p));
            });
        }
    }
}

void multinomial_substitution(Checker& ck)
{
    const std::vector<std::string> sources{"x1^3*x2", "x1*x2*x1*x3*x1", "x1^2*x2^2 - 2*x2*x1^2*x2",
                                           "x2*x1^2*x2^2 + x1*x2^3*x1"};
    for (Char c : {Q, F2, Char::prime(3)}) {
        for (const auto& text : sources) {
            const FreePoly f = parse(text, c);
            const MultiDegree d = multidegree_of(f);
            for (Var v = 1; v <= d.size(); ++v) {
                for (const Composition& gamma : compositions_of(d[v])) {
                    const FreePoly g = lin(f, v, gamma);
                    mpz_class multinomial;
                    mpz_fac_ui(multinomial.get_mpz_t(), d[v]);
                    for (auto part : gamma.parts()) {
                        mpz_class fp;
                        mpz_fac_ui(fp.get_mpz_t(), part);
                        multinomial /= fp;
                    }
                    const Scalar m = Scalar::from_integer(multinomial, c);
                    for_grid(d.size(), 4, [&](const Point& p) {
                        Point q(p.begin(), p.begin() + (v - 1));
                        q.insert(q.end(), gamma.size(), p[v - 1]);
                        q.insert(q.end(), p.begin() + v, p.end());
                        ck.expect(eval_concrete(g, q) == eval_concrete(f, p).scaled(m),
                                  "lin of " + text + " in x" + std::to_string(v) + " by " +
                                      gamma.to_string() + " at " + point_string(p));
                    });
                }
            }
        }
    }
}

CriterionResult properties()
{
    Checker ck;
    std::mt19937_64 rng(20240531);
    std::vector<std::pair<std::string, std::size_t>> parts;
    auto stage = [&](const std::string& name, const std::function<void()>& fn) {
        const std::size_t before = ck.checks();
        fn();
        parts.emplace_back(name, ck.checks() - before);
    };
    stage("field axioms", [&] { field_axioms(ck, rng); });
    stage("zero functions", [&] { zero_functions(ck, rng); });
    stage("St_N alternation", [&] { standard_alternation(ck, rng); });
    stage("parse/render", [&] { parse_round_trip(ck, rng); });
    stage("center", [&] { center(ck); });
    stage("truncation", [&] { truncation(ck); });
    stage("symbolic vs concrete", [&] { symbolic_matches_concrete(ck); });
    stage("multinomial substitution", [&] { multinomial_substitution(ck); });
    std::string summary;
    for (const auto& [name, n] : parts)
        summary += (summary.empty() ? "" : ", ") + name + " " + std::to_string(n);
    return ck.result(11, "property suites", summary + " checks");
}

} // namespace

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> table{
        {1, "quartic closed form", quartic_oracle},
        {2, "multidegree (1,1,1)", degree3},
        {3, "multidegree (3,1)", degree31},
        {4, "multidegree (2,2)", degree22},
        {5, "multidegree (2,1,1)", degree211},
        {6, "multidegree (1,1,1,1)", degree1111},
        {7, "coefficient matrices", matrices},
        {8, "free-algebra equalities", remark_equalities},
        {9, "identity verdicts", verification},
        {10, "linearized (2,2) generators", linearized_degree22},
        {11, "property suites", properties},
    };
    return table;
}

CriterionResult run_criterion(const Criterion& c)
{
    try {
        return c.run();
    } catch (const std::exception& e) {
        return {c.id, c.title, false, std::string("exception: ") + e.what()};
    }
}

std::vector<CriterionResult> run_all()
{
    std::vector<CriterionResult> out;
    for (const auto& c : criteria())
        out.push_back(run_criterion(c));
    return out;
}

std::string to_text(const CriterionResult& r)
{
    std::ostringstream s;
    s << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.title << ": " << r.detail;
    return s.str();
}

nlohmann::json to_json(const std::vector<CriterionResult>& results)
{
    auto arr = nlohmann::json::array();
    for (const auto& r : results)
        arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    return arr;
}

} // namespace weylpi
