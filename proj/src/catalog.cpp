#include "weylpi/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "weylpi/errors.hpp"
#include "weylpi/linearize.hpp"

namespace weylpi {

namespace {

struct Entry {
    Named id;
    const char* name;
};

constexpr std::array<Entry, 17> entries{{
    {Named::St3, "St3"},
    {Named::X1St3, "X1St3"},
    {Named::St3X1, "St3X1"},
    {Named::Phi22, "Phi22"},
    {Named::Phi211, "Phi211"},
    {Named::PhiLin, "PhiLin"},
    {Named::Psi, "Psi"},
    {Named::Psi211, "Psi211"},
    {Named::PsiLin, "PsiLin"},
    {Named::Gamma, "Gamma"},
    {Named::Lambda, "Lambda"},
    {Named::Delta, "Delta"},
    {Named::H, "H"},
    {Named::G, "G"},
    {Named::CommSq, "CommSq"},
    {Named::CommSq211, "CommSq211"},
    {Named::CommSq1324, "CommSq1324"},
}};

bool iequals(std::string_view a, std::string_view b)
{
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

FreePoly var(Var v, Char c)
{
    return FreePoly::variable(v, c);
}

} // namespace

const std::vector<Named>& all_named()
{
    static const std::vector<Named> all = [] {
        std::vector<Named> v;
        for (const auto& e : entries)
            v.push_back(e.id);
        return v;
    }();
    return all;
}

std::string name_of(Named n)
{
    for (const auto& e : entries)
        if (e.id == n)
            return e.name;
    throw UnknownName("unnamed element");
}

Named named_from_string(std::string_view name)
{
    for (const auto& e : entries)
        if (iequals(name, e.name))
            return e.id;
    throw UnknownName("unknown element name '" + std::string(name) + "'");
}

FreePoly psi_at(const FreePoly& a, const FreePoly& b, const FreePoly& c, const FreePoly& d)
{
    const FreePoly ad = bracket(a, d);
    return b * ad * c + c * ad * b;
}

FreePoly st3_left(Var i, Char c)
{
    std::vector<Var> others;
    for (Var v = 1; v <= 4; ++v)
        if (v != i)
            others.push_back(v);
    return var(i, c) * standard_polynomial(others, c);
}

FreePoly st3_right(Var i, Char c)
{
    std::vector<Var> others;
    for (Var v = 1; v <= 4; ++v)
        if (v != i)
            others.push_back(v);
    return standard_polynomial(others, c) * var(i, c);
}

FreePoly named(Named n, Char c)
{
    switch (n) {
    case Named::St3:
        return standard_polynomial({1, 2, 3}, c);
    case Named::X1St3:
        return var(1, c) * standard_polynomial({1, 2, 3}, c);
    case Named::St3X1:
        return standard_polynomial({1, 2, 3}, c) * var(1, c);
    case Named::Phi22:
        return parse("x1^2*x2^2 - 3*x1*x2*x1*x2 + 2*x1*x2^2*x1 + 2*x2*x1^2*x2"
                     " - 3*x2*x1*x2*x1 + x2^2*x1^2",
                     c);
    case Named::Phi211:
        return lin(named(Named::Phi22, c), 2, Composition{1, 1});
    case Named::PhiLin:
        return lin_complete(named(Named::Phi22, c));
    case Named::Psi:
        return parse("x2*[x1,x4]*x3 + x3*[x1,x4]*x2", c);
    case Named::Psi211:
        return psi_at(var(1, c), var(1, c), var(3, c), var(2, c));
    case Named::PsiLin:
        return psi_at(var(1, c), var(2, c), var(4, c), var(3, c)) +
               psi_at(var(2, c), var(1, c), var(4, c), var(3, c));
    case Named::Gamma:
        return parse("-x1*x2*x3*x4 + 2*x1*x2*x4*x3 + x1*x3*x4*x2 - 2*x1*x4*x2*x3"
                     " + 2*x2*x1*x3*x4 - 2*x2*x1*x4*x3 - 2*x2*x3*x1*x4 + x2*x3*x4*x1"
                     " + x2*x4*x1*x3 + x3*x1*x2*x4 - 2*x3*x1*x4*x2 + x3*x4*x1*x2"
                     " + x4*x1*x2*x3 - x4*x2*x3*x1",
                     c);
    case Named::Lambda:
        return parse("-3*x1*x2*x3*x4 + 3*x1*x2*x4*x3 + 2*x1*x3*x2*x4 - 2*x1*x4*x2*x3"
                     " + 3*x2*x1*x3*x4 - 3*x2*x1*x4*x3 - 2*x2*x3*x1*x4 + 2*x2*x4*x1*x3"
                     " - x3*x1*x4*x2 + x3*x2*x4*x1 + x4*x1*x3*x2 - x4*x2*x3*x1",
                     c);
    case Named::Delta:
        return parse("x2*x1*x3*x4 + x2*x4*x1*x3 + x3*x1*x2*x4 + x3*x4*x1*x2"
                     " + x4*x1*x2*x3 + x4*x1*x3*x2",
                     c);
    case Named::H:
        return parse("x1^2*x3*x2 + 2*x3*x1^2*x2 + x3*x2*x1^2 - x1*x2*x3*x1"
                     " + 3*x1*x3*x2*x1 - 3*x1*x3*x1*x2 - 3*x3*x1*x2*x1",
                     c);
    case Named::G:
        return parse("[[x1,x3],[x2,x4]] + x2*St3(x1,x3,x4) + St3(x1,x2,x4)*x3", c);
    case Named::CommSq:
        return parse("[[x1,x2],[x3,x4]]", c);
    case Named::CommSq211:
        return parse("[[x1,x2],[x1,x3]]", c);
    case Named::CommSq1324:
        return parse("[[x1,x3],[x2,x4]]", c);
    }
    throw UnknownName("unknown element");
}

FreePoly named(std::string_view name, Char c)
{
    return named(named_from_string(name), c);
}

const std::vector<Word>& nonreduced_monomials()
{
    static const std::vector<Word> words{
        {1, 4, 3, 2}, {2, 4, 3, 1}, {3, 2, 1, 4}, {3, 4, 2, 1},
        {4, 2, 1, 3}, {4, 3, 1, 2}, {4, 3, 2, 1},
    };
    return words;
}

const std::vector<Word>& reduced_monomials()
{
    static const std::vector<Word> words = [] {
        std::vector<Word> out;
        const auto& excluded = nonreduced_monomials();
        for (auto& w : words_of_multidegree({1, 1, 1, 1}))
            if (std::find(excluded.begin(), excluded.end(), w) == excluded.end())
                out.push_back(std::move(w));
        return out;
    }();
    return words;
}

namespace {

struct Eliminator {
    Word leading;
    std::string label;
    bool left;
    Var var;
};

const std::vector<Eliminator>& eliminators()
{
    static const std::vector<Eliminator> table{
        {{1, 4, 3, 2}, "x1*St3(x2,x3,x4)", true, 1},
        {{2, 4, 3, 1}, "x2*St3(x1,x3,x4)", true, 2},
        {{3, 4, 2, 1}, "x3*St3(x1,x2,x4)", true, 3},
        {{4, 3, 2, 1}, "x4*St3(x1,x2,x3)", true, 4},
        {{4, 3, 1, 2}, "St3(x1,x3,x4)*x2", false, 2},
        {{4, 2, 1, 3}, "St3(x1,x2,x4)*x3", false, 3},
        {{3, 2, 1, 4}, "St3(x1,x2,x3)*x4", false, 4},
    };
    return table;
}

} // namespace

Reduction reduce_to_reduced(const FreePoly& f)
{
    const Char c = f.characteristic();
    for (const auto& [w, coeff] : f.terms())
        if (mdeg(w) != MultiDegree{1, 1, 1, 1})
            throw WrongMultidegree("reduction needs multidegree (1,1,1,1), found " +
                                   mdeg(w).to_string());

    Reduction out{f, FreePoly(c), {}};
    for (;;) {
        // Largest nonreduced word still present.
        const Eliminator* pick = nullptr;
        for (const auto& e : eliminators())
            if (!out.reduced.coefficient(e.leading).is_zero() &&
                (!pick || pick->leading < e.leading))
                pick = &e;
        if (!pick)
            break;
        FreePoly gen = pick->left ? st3_left(pick->var, c) : st3_right(pick->var, c);
        for (const auto& [w, coeff] : gen.terms())
            if (pick->leading < w)
                throw std::logic_error("generator " + pick->label + " is not led by " +
                                       pick->leading.to_string());
        Scalar a = out.reduced.coefficient(pick->leading) / gen.coefficient(pick->leading);
        out.reduced -= gen.scaled(a);
        out.remainder += gen.scaled(a);
        out.steps.push_back({pick->label, a});
    }
    return out;
}

} // namespace weylpi
