#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace weylpi {

/// Characteristic of the coefficient field: 0 (the rationals) or a prime p.
class Char {
public:
    constexpr Char() = default;

    static constexpr Char zero() { return Char(); }
    /// Throws InvalidCharacteristic unless p is prime.
    static Char prime(std::uint32_t p);
    /// 0 maps to zero(), anything else must be prime.
    static Char from_value(std::uint64_t c);

    constexpr bool is_zero() const { return p_ == 0; }
    /// The prime p, or 0 for characteristic zero.
    constexpr std::uint32_t value() const { return p_; }

    std::string to_string() const { return std::to_string(p_); }

    constexpr auto operator<=>(const Char&) const = default;

private:
    explicit constexpr Char(std::uint32_t p) : p_(p) {}

    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact element of Q or of F_p, tagged with its characteristic.
class Scalar {
public:
    /// The zero element of characteristic c.
    explicit Scalar(Char c = Char::zero());

    static Scalar from_integer(const mpz_class& n, Char c);
    static Scalar from_integer(long n, Char c) { return from_integer(mpz_class(n), c); }
    /// a/b in characteristic c; b must be invertible in that field.
    static Scalar from_rational(const mpq_class& q, Char c);
    static Scalar one(Char c) { return from_integer(1L, c); }

    Char characteristic() const { return char_; }
    bool is_zero() const;
    bool is_one() const;

    /// Canonical rational value; only valid in characteristic zero.
    const mpq_class& rational() const;
    /// Residue in [0, p); only valid in prime characteristic.
    std::uint64_t residue() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "a/b" (b omitted when 1) or "k (mod p)".
    std::string to_string() const;
    /// Value only: "a/b" or "k". Used inside polynomial renderings and JSON.
    std::string value_string() const;
    /// True for negative rationals; residues are never negative.
    bool is_negative() const;

private:
    void check_same_char(const Scalar& o) const;

    Char char_;
    std::variant<mpq_class, std::uint64_t> value_;
};

} // namespace weylpi
