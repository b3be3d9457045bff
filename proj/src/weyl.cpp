#include "weylpi/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "weylpi/errors.hpp"

namespace weylpi {

namespace {

mpz_class binomial(std::uint64_t n, std::uint64_t k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// k (k-1) ... (k-s+1) over Z.
mpz_class falling(std::uint64_t k, std::uint64_t s)
{
    mpz_class r = 1;
    for (std::uint64_t t = 0; t < s; ++t) {
        if (t >= k)
            return 0;
        r *= static_cast<unsigned long>(k - t);
    }
    return r;
}

std::string monomial_string(std::uint32_t i, std::uint32_t j)
{
    std::string out;
    if (i > 0)
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j > 0) {
        if (!out.empty())
            out += "*";
        out += j == 1 ? "y" : "y^" + std::to_string(j);
    }
    return out;
}

} // namespace

WeylElement WeylElement::monomial(std::uint32_t i, std::uint32_t j, Char c)
{
    return monomial(i, j, Scalar::one(c));
}

WeylElement WeylElement::monomial(std::uint32_t i, std::uint32_t j, const Scalar& coeff)
{
    WeylElement e(coeff.characteristic());
    e.add_term({i, j}, coeff);
    return e;
}

Scalar WeylElement::coefficient(std::uint32_t i, std::uint32_t j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Scalar(char_) : it->second;
}

void WeylElement::add_term(PbwIndex m, const Scalar& coeff)
{
    if (coeff.characteristic() != char_)
        throw CharMismatch();
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

WeylElement& WeylElement::operator+=(const WeylElement& o)
{
    if (o.char_ != char_)
        throw CharMismatch();
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o)
{
    return *this += -o;
}

WeylElement WeylElement::operator-() const
{
    WeylElement r(char_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b)
{
    if (a.char_ != b.char_)
        throw CharMismatch();
    WeylElement r(a.char_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            const Scalar c = ca * cb;
            // x^{ma.x} (y^{ma.y} x^{mb.x}) y^{mb.y}
            const std::uint32_t smax = std::min(ma.y, mb.x);
            for (std::uint32_t s = 0; s <= smax; ++s) {
                mpz_class n = binomial(ma.y, s) * falling(mb.x, s);
                r.add_term({ma.x + mb.x - s, ma.y + mb.y - s}, c * Scalar::from_integer(n, a.char_));
            }
        }
    return r;
}

WeylElement WeylElement::scaled(const Scalar& s) const
{
    WeylElement r(char_);
    for (const auto& [m, c] : terms_)
        r.add_term(m, c * s);
    return r;
}

bool operator==(const WeylElement& a, const WeylElement& b)
{
    if (a.char_ != b.char_)
        throw CharMismatch();
    return a.terms_ == b.terms_;
}

std::string WeylElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool negative = c.is_negative();
        Scalar mag = negative ? -c : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono = monomial_string(m.x, m.y);
        if (mono.empty())
            out += mag.value_string();
        else if (mag.is_one())
            out += mono;
        else
            out += mag.value_string() + "*" + mono;
    }
    return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b)
{
    return a * b - b * a;
}

WeylElement normal_form(std::string_view word, Char c)
{
    for (char ch : word)
        if (ch != 'x' && ch != 'y')
            throw std::invalid_argument("Weyl words use only the letters x and y");

    // Rewrite the leftmost "yx" of every pending word until all are of the form x^a y^b.
    std::map<std::string, mpz_class> pending{{std::string(word), 1}};
    WeylElement result(c);
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::string& w = node.key();
        const mpz_class& coeff = node.mapped();
        auto pos = w.find("yx");
        if (pos == std::string::npos) {
            auto xs = static_cast<std::uint32_t>(std::count(w.begin(), w.end(), 'x'));
            auto ys = static_cast<std::uint32_t>(w.size() - xs);
            result.add_term({xs, ys}, Scalar::from_integer(coeff, c));
            continue;
        }
        std::string swapped = w;
        swapped[pos] = 'x';
        swapped[pos + 1] = 'y';
        std::string dropped = w.substr(0, pos) + w.substr(pos + 2);
        pending[swapped] += coeff;
        pending[dropped] += coeff;
    }
    return result;
}

WeylElement quartic_closed_form(std::uint64_t i, std::uint64_t j, std::uint64_t k,
                                std::uint64_t l, Char c)
{
    const mpz_class I(static_cast<unsigned long>(i)), J(static_cast<unsigned long>(j)),
        K(static_cast<unsigned long>(k)), L(static_cast<unsigned long>(l));
    const std::int64_t e = static_cast<std::int64_t>(i + j + k + l);
    const mpz_class coeffs[4] = {
        1,
        J + 2 * K + 3 * L,
        (K + 2 * L) * (J + K + L - 1) + L * (K + L - 1),
        L * (K + L - 1) * (J + K + L - 2),
    };
    WeylElement r(c);
    for (std::int64_t s = 0; s < 4; ++s) {
        if (e - s < 0) {
            if (sgn(coeffs[s]) != 0)
                throw NegativeExponentWithNonzeroCoeff("quartic coefficient of x^" +
                                                       std::to_string(e - s) + " is " +
                                                       coeffs[s].get_str());
            continue;
        }
        r.add_term({static_cast<std::uint32_t>(e - s), static_cast<std::uint32_t>(4 - s)},
                   Scalar::from_integer(coeffs[s], c));
    }
    return r;
}

// Symbolic elements

AffineForm::AffineForm(Exponents multiplicities, std::int64_t offset)
    : mult_(std::move(multiplicities)), offset_(offset)
{
    trim(mult_);
}

AffineForm AffineForm::plus_symbol(SymbolId s) const
{
    AffineForm r(*this);
    if (r.mult_.size() <= s)
        r.mult_.resize(s + 1, 0);
    ++r.mult_[s];
    return r;
}

AffineForm AffineForm::shifted(std::int64_t delta) const
{
    AffineForm r(*this);
    r.offset_ += delta;
    return r;
}

std::int64_t AffineForm::eval(std::span<const std::uint64_t> point) const
{
    std::int64_t v = offset_;
    for (std::size_t s = 0; s < mult_.size(); ++s) {
        if (mult_[s] == 0)
            continue;
        if (s >= point.size())
            throw MissingSymbol("no value for symbol " + symbol_name(s));
        v += static_cast<std::int64_t>(mult_[s]) * static_cast<std::int64_t>(point[s]);
    }
    return v;
}

std::string AffineForm::to_string() const
{
    std::string out;
    for (std::size_t s = 0; s < mult_.size(); ++s) {
        if (mult_[s] == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (mult_[s] > 1)
            out += std::to_string(mult_[s]) + "*";
        out += symbol_name(s);
    }
    if (offset_ != 0 || out.empty()) {
        if (!out.empty() && offset_ > 0)
            out += "+";
        out += std::to_string(offset_);
    }
    return out;
}

SymbolicWeylElement SymbolicWeylElement::unit()
{
    SymbolicWeylElement e;
    e.add_term({AffineForm{}, 0}, ExpPoly(1L));
    return e;
}

void SymbolicWeylElement::add_term(const SymbolicKey& key, const ExpPoly& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SymbolicWeylElement& SymbolicWeylElement::operator+=(const SymbolicWeylElement& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

SymbolicWeylElement SymbolicWeylElement::scaled(const mpz_class& n) const
{
    SymbolicWeylElement r;
    for (const auto& [k, c] : terms_)
        r.add_term(k, c.scaled(n));
    return r;
}

SymbolicWeylElement SymbolicWeylElement::times_basis(SymbolId sym) const
{
    // x^A y^t x^J y = sum_s C(t,s) ff(J,s) x^{A+J-s} y^{t-s+1}
    SymbolicWeylElement r;
    for (const auto& [key, coeff] : terms_) {
        const AffineForm base = key.x_exp.plus_symbol(sym);
        for (std::uint32_t s = 0; s <= key.y_exp; ++s) {
            ExpPoly c = coeff * falling_factorial(sym, s).scaled(binomial(key.y_exp, s));
            r.add_term({base.shifted(-static_cast<std::int64_t>(s)), key.y_exp - s + 1}, c);
        }
    }
    return r;
}

WeylElement SymbolicWeylElement::substitute(std::span<const std::uint64_t> point, Char c) const
{
    WeylElement r(c);
    for (const auto& [key, coeff] : terms_) {
        const std::int64_t xe = key.x_exp.eval(point);
        Scalar value = Scalar::from_integer(coeff.eval(point), c);
        if (xe < 0) {
            if (!value.is_zero())
                throw NegativeExponentWithNonzeroCoeff(
                    "term x^(" + key.x_exp.to_string() + ") y^" + std::to_string(key.y_exp) +
                    " has exponent " + std::to_string(xe) + " and coefficient " +
                    value.to_string());
            continue;
        }
        r.add_term({static_cast<std::uint32_t>(xe), key.y_exp}, value);
    }
    return r;
}

std::string SymbolicWeylElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, coeff] = *it;
        if (!out.empty())
            out += " + ";
        out += "(" + coeff.to_string() + ")*x^(" + key.x_exp.to_string() + ")";
        if (key.y_exp > 0)
            out += "*y^" + std::to_string(key.y_exp);
    }
    return out;
}

} // namespace weylpi
