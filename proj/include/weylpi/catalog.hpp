#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylpi/freealg.hpp"

namespace weylpi {

/// Named degree-4 elements of F<X> used by the identity classification.
enum class Named {
    St3,        ///< St_3(x1,x2,x3)
    X1St3,      ///< x1 St_3(x1,x2,x3)
    St3X1,      ///< St_3(x1,x2,x3) x1
    Phi22,
    Phi211,     ///< lin_{x2}^{(1,1)} Phi22
    PhiLin,     ///< complete linearization of Phi22
    Psi,        ///< x2[x1,x4]x3 + x3[x1,x4]x2
    Psi211,     ///< Psi(x1,x1,x3,x2)
    PsiLin,     ///< Psi(x1,x2,x4,x3) + Psi(x2,x1,x4,x3)
    Gamma,
    Lambda,
    Delta,
    H,          ///< the (2,1,1) element h
    G,          ///< [[x1,x3],[x2,x4]] + x2 St3(x1,x3,x4) + St3(x1,x2,x4) x3
    CommSq,     ///< [[x1,x2],[x3,x4]]
    CommSq211,  ///< [[x1,x2],[x1,x3]]
    CommSq1324, ///< [[x1,x3],[x2,x4]]
};

const std::vector<Named>& all_named();
std::string name_of(Named n);
/// Case-insensitive lookup; throws UnknownName.
Named named_from_string(std::string_view name);

FreePoly named(Named n, Char c);
FreePoly named(std::string_view name, Char c);

/// Psi(a,b,c,d) = b[a,d]c + c[a,d]b at arbitrary arguments.
FreePoly psi_at(const FreePoly& a, const FreePoly& b, const FreePoly& c, const FreePoly& d);

/// x_i St3(others in increasing order), for {i,j,k,l} = {1,2,3,4}.
FreePoly st3_left(Var i, Char c);
/// St3(others in increasing order) x_i.
FreePoly st3_right(Var i, Char c);

/// The seven multilinear degree-4 words excluded from the reduced ones.
const std::vector<Word>& nonreduced_monomials();
/// The 17 remaining multilinear degree-4 words, in lexicographic order.
const std::vector<Word>& reduced_monomials();

/// One elimination step: coefficient times a generator x_i St3 or St3 x_l.
struct ReductionStep {
    std::string generator;
    Scalar coefficient;
};

struct Reduction {
    FreePoly reduced;   ///< supported on reduced words only
    FreePoly remainder; ///< combination of x_i St3(...) and St3(...) x_l
    std::vector<ReductionStep> steps;
};

/// Splits f of multidegree (1,1,1,1) as reduced + remainder, eliminating the
/// nonreduced words from the lexicographically largest down, each with the
/// St3 product whose leading word it is. Throws WrongMultidegree.
Reduction reduce_to_reduced(const FreePoly& f);

} // namespace weylpi
