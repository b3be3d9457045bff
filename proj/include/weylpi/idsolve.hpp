#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weylpi/freealg.hpp"
#include "weylpi/linalg.hpp"

namespace weylpi {

/// The space of multihomogeneous identities of one multidegree.
struct SolveReport {
    MultiDegree mdeg;
    Char characteristic;
    /// Words of multidegree mdeg in length-lex order; coordinates of basis vectors.
    std::vector<Word> monomials;
    std::vector<Vector> basis;
    std::size_t constraint_rows = 0;

    std::size_t dimension() const { return basis.size(); }
    FreePoly basis_polynomial(std::size_t i) const;
    /// Coordinates of f in `monomials`. Throws WrongMultidegree / CharMismatch.
    Vector coordinates(const FreePoly& f) const;

    /// {"mdeg", "char", "monomial_order", "dimension", "basis"}.
    nlohmann::json to_json() const;
    static SolveReport from_json(const nlohmann::json& j);
};

/// Every identity of multidegree d for span{x^i y} in characteristic c.
///
/// The generic combination of all words of multidegree d is linearized in all
/// ways; every exponent-monomial coefficient of every symbolic PBW term gives
/// one linear condition on the word coefficients, and the report holds an
/// exact nullspace basis of those conditions.
SolveReport solve(const MultiDegree& d, Char c);

/// True iff f lies in the span of report.basis.
bool contains(const SolveReport& report, const FreePoly& f);

/// Rank of a family of polynomials as vectors over their common words.
std::size_t rank_of(std::span<const FreePoly> polys);

struct SweepResult {
    std::vector<SolveReport> reports;
    bool dimensions_differ = false;
};

/// solve() for each listed characteristic.
SweepResult sweep(const MultiDegree& d, std::span<const Char> chars);

/// Coefficient matrices of the linear systems used to classify multilinear
/// degree-4 identities.
enum class MatrixLabel {
    /// 15x15 over Z: coefficients of f(c_i,c_j,c_k,c_l) for the first 15
    /// reduced words at 15 (point, PBW monomial) pairs.
    Multilinear15,
    /// 12x12 over F_2: the analogous system on 12 reduced words.
    Multilinear12,
    /// 5x5 over F_2: coefficients of Gamma, Psi, Delta, Lambda, G on the five
    /// reduced words x1x2x4x3, x3x2x4x1, x3x4x1x2, x4x1x3x2, x4x2x3x1.
    Pivot5,
};

std::string to_string(MatrixLabel l);
/// Accepts "multilinear15", "multilinear12", "pivot5" (case-insensitive).
MatrixLabel matrix_label_from_string(std::string_view s);

struct IntegerMatrix {
    MatrixLabel label;
    Char characteristic;
    std::vector<std::vector<long>> entries;

    Matrix to_matrix() const { return Matrix::from_integers(entries, characteristic); }
    nlohmann::json to_json() const;
    bool operator==(const IntegerMatrix&) const = default;
};

/// Builds the matrix from the definitions (evaluating words at basis tuples,
/// or reading coefficients of the named elements).
IntegerMatrix assemble_matrix(MatrixLabel label);

/// The matrix as published, transcribed entry by entry.
IntegerMatrix published_matrix(MatrixLabel label);

} // namespace weylpi
