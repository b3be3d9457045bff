#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylpi/exppoly.hpp"
#include "weylpi/scalar.hpp"

namespace weylpi {

/// Exponents of the PBW monomial x^x y^y.
struct PbwIndex {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    auto operator<=>(const PbwIndex&) const = default;
};

/// Graded lexicographic order on (x, y), largest first.
struct PbwOrder {
    bool operator()(const PbwIndex& a, const PbwIndex& b) const
    {
        auto ta = std::uint64_t{a.x} + a.y, tb = std::uint64_t{b.x} + b.y;
        if (ta != tb)
            return ta > tb;
        return a.x > b.x;
    }
};

/// Element of the Weyl algebra A_1 = F<x, y>/(yx - xy - 1) in normal-ordered
/// form sum c_{ij} x^i y^j.
class WeylElement {
public:
    using TermMap = std::map<PbwIndex, Scalar, PbwOrder>;

    explicit WeylElement(Char c = Char::zero()) : char_(c) {}

    static WeylElement one(Char c) { return monomial(0, 0, c); }
    static WeylElement x(Char c) { return monomial(1, 0, c); }
    static WeylElement y(Char c) { return monomial(0, 1, c); }
    static WeylElement monomial(std::uint32_t i, std::uint32_t j, Char c);
    static WeylElement monomial(std::uint32_t i, std::uint32_t j, const Scalar& coeff);

    Char characteristic() const { return char_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(std::uint32_t i, std::uint32_t j) const;

    void add_term(PbwIndex m, const Scalar& coeff);

    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    WeylElement operator-() const;
    /// Product in normal form, reordering with
    /// y^t x^k = sum_s C(t,s) k(k-1)...(k-s+1) x^{k-s} y^{t-s}.
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    WeylElement& operator*=(const WeylElement& o) { return *this = *this * o; }
    WeylElement scaled(const Scalar& s) const;

    friend bool operator==(const WeylElement& a, const WeylElement& b);

    /// "x^3*y^2 + 2*x^2*y"; "0" for zero.
    std::string to_string() const;

private:
    Char char_;
    TermMap terms_;
};

/// ab - ba.
WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// Normal form of a word over {x, y} by exhaustive rewriting yx -> xy + 1.
/// Kept independent of operator* so each can check the other. Throws
/// std::invalid_argument on letters other than x and y.
WeylElement normal_form(std::string_view word, Char c);

/// c_i c_j c_k c_l with c_t = x^t y, from the closed-form coefficients
/// 1, j+2k+3l, (k+2l)(j+k+l-1) + l(k+l-1), l(k+l-1)(j+k+l-2) of
/// x^e y^4, x^{e-1} y^3, x^{e-2} y^2, x^{e-3} y, where e = i+j+k+l.
WeylElement quartic_closed_form(std::uint64_t i, std::uint64_t j, std::uint64_t k,
                                std::uint64_t l, Char c);

/// Affine form sum_s multiplicity[s] * symbol_s + offset; the x-exponent of a
/// symbolic PBW term.
class AffineForm {
public:
    AffineForm() = default;
    AffineForm(Exponents multiplicities, std::int64_t offset);

    const Exponents& multiplicities() const { return mult_; }
    std::int64_t offset() const { return offset_; }

    AffineForm plus_symbol(SymbolId s) const;
    AffineForm shifted(std::int64_t delta) const;
    std::int64_t eval(std::span<const std::uint64_t> point) const;
    std::string to_string() const;

    auto operator<=>(const AffineForm&) const = default;

private:
    Exponents mult_;
    std::int64_t offset_ = 0;
};

struct SymbolicKey {
    AffineForm x_exp;
    std::uint32_t y_exp = 0;

    auto operator<=>(const SymbolicKey&) const = default;
};

/// A_1 element whose x-exponents are affine forms in exponent symbols and
/// whose coefficients are integer polynomials in the same symbols.
class SymbolicWeylElement {
public:
    using TermMap = std::map<SymbolicKey, ExpPoly>;

    SymbolicWeylElement() = default;
    static SymbolicWeylElement unit();

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SymbolicKey& key, const ExpPoly& coeff);

    SymbolicWeylElement& operator+=(const SymbolicWeylElement& o);
    SymbolicWeylElement scaled(const mpz_class& n) const;

    /// Right multiplication by x^{sym} y.
    SymbolicWeylElement times_basis(SymbolId sym) const;

    /// Concrete element at the given symbol values. Terms whose x-exponent
    /// evaluates negative must have vanishing coefficient (checked in
    /// characteristic c) and are dropped; otherwise
    /// NegativeExponentWithNonzeroCoeff is thrown.
    WeylElement substitute(std::span<const std::uint64_t> point, Char c) const;

    std::string to_string() const;

    friend bool operator==(const SymbolicWeylElement&, const SymbolicWeylElement&) = default;

private:
    TermMap terms_;
};

} // namespace weylpi
