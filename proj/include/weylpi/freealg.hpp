#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylpi/scalar.hpp"

namespace weylpi {

/// Index of a free generator; x1 is 1.
using Var = std::uint32_t;

/// Multidegree (deg_{x1}, deg_{x2}, ...). Trailing zeros are not stored, so
/// (1,1,0) and (1,1) compare equal.
class MultiDegree {
public:
    MultiDegree() = default;
    MultiDegree(std::initializer_list<std::uint32_t> entries);
    explicit MultiDegree(std::vector<std::uint32_t> entries);

    /// Degree in x_v (1-based); zero beyond the stored entries.
    std::uint32_t operator[](Var v) const;
    const std::vector<std::uint32_t>& entries() const { return entries_; }
    /// Number of variables up to the last one with nonzero degree.
    std::size_t size() const { return entries_.size(); }
    std::uint32_t total() const;

    std::string to_string() const;

    auto operator<=>(const MultiDegree&) const = default;

private:
    std::vector<std::uint32_t> entries_;
};

/// A monomial of the free algebra: a sequence of variable indices. The empty
/// word is the unit. Ordered length first, then lexicographically.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Var> letters) : letters_(letters) {}
    explicit Word(std::vector<Var> letters) : letters_(std::move(letters)) {}

    const std::vector<Var>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Var operator[](std::size_t i) const { return letters_[i]; }
    Var max_letter() const;

    friend Word operator+(const Word& a, const Word& b);

    std::strong_ordering operator<=>(const Word& o) const;
    bool operator==(const Word& o) const = default;

    /// "x1*x2^2*x3"; "1" for the unit.
    std::string to_string() const;

private:
    std::vector<Var> letters_;
};

MultiDegree mdeg(const Word& w);

/// Element of F<X>: a finite linear combination of words.
class FreePoly {
public:
    using TermMap = std::map<Word, Scalar>;

    explicit FreePoly(Char c = Char::zero()) : char_(c) {}

    static FreePoly one(Char c);
    static FreePoly variable(Var v, Char c);
    static FreePoly monomial(Word w, const Scalar& coeff);
    static FreePoly monomial(Word w, Char c);
    static FreePoly constant(const Scalar& s);

    Char characteristic() const { return char_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of w (zero when absent).
    Scalar coefficient(const Word& w) const;
    /// Largest variable index that occurs; 0 for constants.
    Var num_vars() const;

    void add_term(const Word& w, const Scalar& coeff);

    FreePoly& operator+=(const FreePoly& o);
    FreePoly& operator-=(const FreePoly& o);
    FreePoly& operator*=(const FreePoly& o);

    friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
    friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
    friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
    FreePoly operator-() const;

    FreePoly scaled(const Scalar& s) const;
    FreePoly scaled(long n) const { return scaled(Scalar::from_integer(n, char_)); }

    friend bool operator==(const FreePoly& a, const FreePoly& b);

    /// Same as render().
    std::string to_string() const;

private:
    void check_same_char(Char c) const;

    Char char_;
    TermMap terms_;
};

FreePoly power(const FreePoly& f, std::uint32_t n);

/// fg - gf.
FreePoly bracket(const FreePoly& f, const FreePoly& g);

/// Alternating sum over S_N of x_{v_sigma(1)} ... x_{v_sigma(N)}. The indices
/// must be distinct (DuplicateVariable otherwise).
FreePoly standard_polynomial(std::span<const Var> vars, Char c);
FreePoly standard_polynomial(std::initializer_list<Var> vars, Char c);

/// St_N evaluated at arbitrary free polynomials.
FreePoly standard_polynomial_at(std::span<const FreePoly> args);

/// Image of f under x_t -> images[t-1]. Variables beyond images.size() are kept.
FreePoly substitute(const FreePoly& f, std::span<const FreePoly> images);

/// Multihomogeneous decomposition: multidegree -> component.
std::map<MultiDegree, FreePoly> components(const FreePoly& f);
FreePoly homogeneous_component(const FreePoly& f, const MultiDegree& d);
bool is_multihomogeneous(const FreePoly& f);
/// Multidegree of a nonzero multihomogeneous f; throws NotMultihomogeneous otherwise.
MultiDegree multidegree_of(const FreePoly& f);

/// All words of multidegree d in length-lex order.
std::vector<Word> words_of_multidegree(const MultiDegree& d);

/// Parses the expression grammar
///   poly   := ['-'] term { ('+'|'-') term }
///   term   := [coeff ['*']] factor { '*' factor } | coeff
///   coeff  := integer ['/' integer]
///   factor := atom ['^' integer]
///   atom   := 'x' integer | '[' poly ',' poly ']' | '(' poly ')' | 'St' integer '(' poly {',' poly} ')'
/// Throws SyntaxError (with position) or UnknownFunction.
FreePoly parse(std::string_view text, Char c);

/// Inverse of parse on canonical forms, terms in length-lex order.
std::string render(const FreePoly& f);

} // namespace weylpi
