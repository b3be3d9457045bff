#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weylpi/scalar.hpp"

namespace weylpi {

/// Index of an exponent symbol. Symbols 0, 1, 2, 3 render as i, j, k, l.
using SymbolId = std::size_t;

std::string symbol_name(SymbolId s);

/// Exponent vector of an ExpPoly monomial; trailing zeros are always trimmed.
using Exponents = std::vector<std::uint32_t>;

void trim(Exponents& e);

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken by the exponent of the earliest symbol.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Commutative polynomial with integer coefficients in exponent symbols.
///
/// Coefficients stay in Z; the characteristic only enters through
/// reduce_for_char / is_zero_function, so one symbolic computation serves
/// every characteristic.
class ExpPoly {
public:
    using TermMap = std::map<Exponents, mpz_class, GradedLexDesc>;

    ExpPoly() = default;
    explicit ExpPoly(const mpz_class& constant);
    explicit ExpPoly(long constant) : ExpPoly(mpz_class(constant)) {}

    static ExpPoly symbol(SymbolId s);
    static ExpPoly monomial(Exponents e, const mpz_class& coeff);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// One more than the largest symbol index occurring.
    std::size_t num_symbols() const;
    std::uint32_t degree_in(SymbolId s) const;
    std::uint32_t total_degree() const;
    mpz_class constant_term() const;

    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly& operator-=(const ExpPoly& o);
    ExpPoly& operator*=(const ExpPoly& o);

    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    ExpPoly operator-() const;

    ExpPoly scaled(const mpz_class& n) const;

    /// Value at point[s] for each symbol s. Throws MissingSymbol when the point
    /// is too short for a symbol that occurs.
    mpz_class eval(std::span<const std::uint64_t> point) const;

    /// "3*j*k^2 - i", terms largest first; "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

private:
    void add_term(const Exponents& e, const mpz_class& c);

    TermMap terms_;
};

/// sym (sym - 1) ... (sym - s + 1); the empty product for s = 0.
ExpPoly falling_factorial(SymbolId sym, std::uint32_t s);

/// Canonical representative of p as a function on nonnegative integers in
/// characteristic c. For c = 0 this is p itself. For c = q prime, exponents
/// e >= 1 become ((e - 1) mod (q - 1)) + 1 and coefficients are reduced into [0, q).
ExpPoly reduce_for_char(const ExpPoly& p, Char c);

/// True iff p vanishes at every point of N^m, with values taken in characteristic c.
bool is_zero_function(const ExpPoly& p, Char c);

} // namespace weylpi
