#include "weylpi/scalar.hpp"

#include "weylpi/errors.hpp"

namespace weylpi {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Char Char::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw InvalidCharacteristic(std::to_string(p) + " is not a prime");
    return Char(p);
}

Char Char::from_value(std::uint64_t c)
{
    if (c == 0)
        return zero();
    if (c > UINT32_MAX)
        throw InvalidCharacteristic("characteristic " + std::to_string(c) + " is too large");
    return prime(static_cast<std::uint32_t>(c));
}

namespace {

std::uint64_t reduce(const mpz_class& n, std::uint32_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

} // namespace

Scalar::Scalar(Char c) : char_(c)
{
    if (c.is_zero())
        value_ = mpq_class(0);
    else
        value_ = std::uint64_t{0};
}

Scalar Scalar::from_integer(const mpz_class& n, Char c)
{
    Scalar s(c);
    if (c.is_zero())
        s.value_ = mpq_class(n);
    else
        s.value_ = reduce(n, c.value());
    return s;
}

Scalar Scalar::from_rational(const mpq_class& q, Char c)
{
    mpq_class canon(q);
    canon.canonicalize();
    if (c.is_zero()) {
        Scalar s(c);
        s.value_ = canon;
        return s;
    }
    return from_integer(canon.get_num(), c) / from_integer(canon.get_den(), c);
}

bool Scalar::is_zero() const
{
    if (char_.is_zero())
        return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const
{
    if (char_.is_zero())
        return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const
{
    if (!char_.is_zero())
        throw CharMismatch("rational value requested in characteristic " + char_.to_string());
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const
{
    if (char_.is_zero())
        throw CharMismatch("residue requested in characteristic 0");
    return std::get<std::uint64_t>(value_);
}

void Scalar::check_same_char(const Scalar& o) const
{
    if (char_ != o.char_)
        throw CharMismatch("characteristics " + char_.to_string() + " and " + o.char_.to_string() +
                           " mixed");
}

Scalar Scalar::operator-() const
{
    Scalar r(*this);
    if (char_.is_zero()) {
        auto& q = std::get<mpq_class>(r.value_);
        q = -q;
    } else {
        auto& v = std::get<std::uint64_t>(r.value_);
        v = v == 0 ? 0 : char_.value() - v;
    }
    return r;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    Scalar r(*this);
    if (char_.is_zero()) {
        auto& q = std::get<mpq_class>(r.value_);
        q = 1 / q;
    } else {
        auto& v = std::get<std::uint64_t>(r.value_);
        v = pow_mod(v, char_.value() - 2, char_.value());
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    check_same_char(o);
    if (char_.is_zero())
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    else {
        auto& v = std::get<std::uint64_t>(value_);
        v = (v + std::get<std::uint64_t>(o.value_)) % char_.value();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    check_same_char(o);
    if (char_.is_zero())
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    else {
        auto& v = std::get<std::uint64_t>(value_);
        v = v * std::get<std::uint64_t>(o.value_) % char_.value();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    check_same_char(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    a.check_same_char(b);
    return a.value_ == b.value_;
}

std::string Scalar::value_string() const
{
    if (char_.is_zero())
        return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

std::string Scalar::to_string() const
{
    if (char_.is_zero())
        return value_string();
    return value_string() + " (mod " + char_.to_string() + ")";
}

bool Scalar::is_negative() const
{
    return char_.is_zero() && sgn(std::get<mpq_class>(value_)) < 0;
}

} // namespace weylpi
