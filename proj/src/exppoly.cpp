#include "weylpi/exppoly.hpp"

#include <algorithm>

#include "weylpi/errors.hpp"

namespace weylpi {

std::string symbol_name(SymbolId s)
{
    static constexpr const char* names[] = {"i", "j", "k", "l", "m", "n"};
    if (s < std::size(names))
        return names[s];
    return "s" + std::to_string(s + 1);
}

void trim(Exponents& e)
{
    while (!e.empty() && e.back() == 0)
        e.pop_back();
}

namespace {

std::uint64_t total(const Exponents& e)
{
    std::uint64_t t = 0;
    for (auto v : e)
        t += v;
    return t;
}

} // namespace

bool GradedLexDesc::operator()(const Exponents& a, const Exponents& b) const
{
    auto ta = total(a), tb = total(b);
    if (ta != tb)
        return ta > tb;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        if (x != y)
            return x > y;
    }
    return false;
}

ExpPoly::ExpPoly(const mpz_class& constant)
{
    add_term({}, constant);
}

ExpPoly ExpPoly::symbol(SymbolId s)
{
    Exponents e(s + 1, 0);
    e[s] = 1;
    return monomial(std::move(e), 1);
}

ExpPoly ExpPoly::monomial(Exponents e, const mpz_class& coeff)
{
    trim(e);
    ExpPoly p;
    p.add_term(e, coeff);
    return p;
}

void ExpPoly::add_term(const Exponents& e, const mpz_class& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

std::size_t ExpPoly::num_symbols() const
{
    std::size_t n = 0;
    for (const auto& [e, c] : terms_)
        n = std::max(n, e.size());
    return n;
}

std::uint32_t ExpPoly::degree_in(SymbolId s) const
{
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        if (s < e.size())
            d = std::max(d, e[s]);
    return d;
}

std::uint32_t ExpPoly::total_degree() const
{
    return terms_.empty() ? 0 : static_cast<std::uint32_t>(total(terms_.begin()->first));
}

mpz_class ExpPoly::constant_term() const
{
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b)
{
    ExpPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i)
                e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i)
                e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& o)
{
    return *this = *this * o;
}

ExpPoly ExpPoly::operator-() const
{
    return scaled(-1);
}

ExpPoly ExpPoly::scaled(const mpz_class& n) const
{
    ExpPoly r;
    if (sgn(n) == 0)
        return r;
    r.terms_ = terms_;
    for (auto& [e, c] : r.terms_)
        c *= n;
    return r;
}

mpz_class ExpPoly::eval(std::span<const std::uint64_t> point) const
{
    mpz_class sum = 0;
    mpz_class term, power;
    for (const auto& [e, c] : terms_) {
        if (e.size() > point.size())
            throw MissingSymbol("no value for symbol " + symbol_name(e.size() - 1));
        term = c;
        for (std::size_t s = 0; s < e.size(); ++s) {
            if (e[s] == 0)
                continue;
            mpz_ui_pow_ui(power.get_mpz_t(), point[s], e[s]);
            term *= power;
        }
        sum += term;
    }
    return sum;
}

std::string ExpPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class mag = abs(c);
        if (first)
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t s = 0; s < e.size(); ++s) {
            if (e[s] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += symbol_name(s);
            if (e[s] > 1)
                mono += "^" + std::to_string(e[s]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

ExpPoly falling_factorial(SymbolId sym, std::uint32_t s)
{
    ExpPoly r(1L);
    ExpPoly x = ExpPoly::symbol(sym);
    for (std::uint32_t t = 0; t < s; ++t)
        r *= x - ExpPoly(static_cast<long>(t));
    return r;
}

ExpPoly reduce_for_char(const ExpPoly& p, Char c)
{
    if (c.is_zero())
        return p;
    const std::uint32_t q = c.value();
    ExpPoly r;
    for (const auto& [e, coeff] : p.terms()) {
        Exponents capped(e);
        for (auto& v : capped)
            if (v > 0)
                v = (v - 1) % (q - 1) + 1;
        mpz_class m;
        mpz_fdiv_r_ui(m.get_mpz_t(), coeff.get_mpz_t(), q);
        r += ExpPoly::monomial(std::move(capped), m);
    }
    // Recollected coefficients may have left [0, q).
    ExpPoly canon;
    for (const auto& [e, coeff] : r.terms()) {
        mpz_class m;
        mpz_fdiv_r_ui(m.get_mpz_t(), coeff.get_mpz_t(), q);
        canon += ExpPoly::monomial(e, m);
    }
    return canon;
}

bool is_zero_function(const ExpPoly& p, Char c)
{
    return reduce_for_char(p, c).is_zero();
}

} // namespace weylpi
