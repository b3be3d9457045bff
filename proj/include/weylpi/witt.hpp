#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "weylpi/freealg.hpp"
#include "weylpi/linearize.hpp"
#include "weylpi/weyl.hpp"

namespace weylpi {

/// c_i = x^i y, the standard basis of the subspace spanned by {x^i y}.
WeylElement basis_element(std::uint64_t i, Char c);

/// f(c_{point[0]}, c_{point[1]}, ...). Throws ArityMismatch when the point has
/// fewer entries than the largest variable of f.
WeylElement eval_concrete(const FreePoly& f, std::span<const std::uint64_t> point);

/// Product c_{s(w_1)} ... c_{s(w_n)} with x_v mapped to the exponent symbol v-1.
SymbolicWeylElement symbolic_word_product(const Word& w);

/// Symbolic image of a multihomogeneous f, with x_v mapped to c_{symbol v-1}.
/// ExpPoly coefficients are integral, so rational coefficients of f are cleared
/// first: the image of f equals numerator / denominator.
struct SymbolicEvaluation {
    SymbolicWeylElement numerator;
    mpz_class denominator = 1;
};

/// Throws NotMultihomogeneous.
SymbolicEvaluation eval_symbolic(const FreePoly& f);

/// One scalar condition of the identity criterion: a coefficient of an
/// exponent monomial inside the coefficient of one symbolic PBW term of one
/// linearization.
struct ConditionKey {
    std::size_t linearization = 0;
    SymbolicKey term;
    Exponents monomial;

    auto operator<=>(const ConditionKey&) const = default;
};

using ConditionVector = std::map<ConditionKey, Scalar>;

/// Adds coeff * (conditions of g) into out, where g is a linearization tagged
/// with the given index. Conditions are reduced for the characteristic of g.
void accumulate_conditions(const FreePoly& g, std::size_t linearization, ConditionVector& out);

struct Witness {
    /// The polynomial actually evaluated: f's component or one of its linearizations.
    FreePoly polynomial;
    MultiDegree component;
    CompositionTuple linearization;
    std::vector<std::uint64_t> point;
    PbwIndex monomial;
    Scalar coefficient;
};

struct EvalReport {
    FreePoly polynomial;
    bool identity = false;
    std::optional<Witness> witness;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// Exact identity test for the span of {x^i y}: f is an identity iff for each
/// multihomogeneous component, every partial linearization evaluates to zero
/// as a function of the basis indices. A failing verdict carries a concrete
/// witness that was re-checked with eval_concrete.
EvalReport is_identity(const FreePoly& f);

/// True iff the witness re-evaluates to the recorded nonzero coefficient.
bool recheck(const Witness& w);

} // namespace weylpi
