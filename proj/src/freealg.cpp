#include "weylpi/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "weylpi/errors.hpp"

namespace weylpi {

MultiDegree::MultiDegree(std::initializer_list<std::uint32_t> entries)
    : MultiDegree(std::vector<std::uint32_t>(entries))
{}

MultiDegree::MultiDegree(std::vector<std::uint32_t> entries) : entries_(std::move(entries))
{
    while (!entries_.empty() && entries_.back() == 0)
        entries_.pop_back();
}

std::uint32_t MultiDegree::operator[](Var v) const
{
    return v >= 1 && v <= entries_.size() ? entries_[v - 1] : 0;
}

std::uint32_t MultiDegree::total() const
{
    return std::accumulate(entries_.begin(), entries_.end(), std::uint32_t{0});
}

std::string MultiDegree::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

Var Word::max_letter() const
{
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word operator+(const Word& a, const Word& b)
{
    std::vector<Var> l(a.letters_);
    l.insert(l.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(l));
}

std::strong_ordering Word::operator<=>(const Word& o) const
{
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0)
        return c;
    return letters_ <=> o.letters_;
}

std::string Word::to_string() const
{
    if (letters_.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size();) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i])
            ++j;
        if (!out.empty())
            out += "*";
        out += "x" + std::to_string(letters_[i]);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

MultiDegree mdeg(const Word& w)
{
    std::vector<std::uint32_t> d(w.max_letter(), 0);
    for (Var v : w.letters())
        ++d[v - 1];
    return MultiDegree(std::move(d));
}

FreePoly FreePoly::one(Char c)
{
    return monomial(Word{}, c);
}

FreePoly FreePoly::variable(Var v, Char c)
{
    return monomial(Word{v}, c);
}

FreePoly FreePoly::monomial(Word w, const Scalar& coeff)
{
    FreePoly f(coeff.characteristic());
    f.add_term(w, coeff);
    return f;
}

FreePoly FreePoly::monomial(Word w, Char c)
{
    return monomial(std::move(w), Scalar::one(c));
}

FreePoly FreePoly::constant(const Scalar& s)
{
    return monomial(Word{}, s);
}

Scalar FreePoly::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(char_) : it->second;
}

Var FreePoly::num_vars() const
{
    Var n = 0;
    for (const auto& [w, c] : terms_)
        n = std::max(n, w.max_letter());
    return n;
}

void FreePoly::check_same_char(Char c) const
{
    if (c != char_)
        throw CharMismatch("characteristics " + char_.to_string() + " and " + c.to_string() +
                           " mixed");
}

void FreePoly::add_term(const Word& w, const Scalar& coeff)
{
    check_same_char(coeff.characteristic());
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

FreePoly& FreePoly::operator+=(const FreePoly& o)
{
    check_same_char(o.char_);
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o)
{
    check_same_char(o.char_);
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b)
{
    a.check_same_char(b.char_);
    FreePoly r(a.char_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            r.add_term(wa + wb, ca * cb);
    return r;
}

FreePoly& FreePoly::operator*=(const FreePoly& o)
{
    return *this = *this * o;
}

FreePoly FreePoly::operator-() const
{
    FreePoly r(char_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, -c);
    return r;
}

FreePoly FreePoly::scaled(const Scalar& s) const
{
    check_same_char(s.characteristic());
    FreePoly r(char_);
    if (s.is_zero())
        return r;
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, c * s);
    return r;
}

bool operator==(const FreePoly& a, const FreePoly& b)
{
    a.check_same_char(b.char_);
    return a.terms_ == b.terms_;
}

std::string FreePoly::to_string() const
{
    return render(*this);
}

FreePoly power(const FreePoly& f, std::uint32_t n)
{
    FreePoly r = FreePoly::one(f.characteristic());
    for (std::uint32_t i = 0; i < n; ++i)
        r *= f;
    return r;
}

FreePoly bracket(const FreePoly& f, const FreePoly& g)
{
    return f * g - g * f;
}

namespace {

int permutation_sign(const std::vector<std::size_t>& perm)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                sign = -sign;
    return sign;
}

} // namespace

FreePoly standard_polynomial(std::span<const Var> vars, Char c)
{
    std::vector<Var> sorted(vars.begin(), vars.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DuplicateVariable("standard polynomial needs distinct variables");
    std::vector<FreePoly> args;
    for (Var v : vars)
        args.push_back(FreePoly::variable(v, c));
    return standard_polynomial_at(args);
}

FreePoly standard_polynomial(std::initializer_list<Var> vars, Char c)
{
    return standard_polynomial(std::span<const Var>(vars.begin(), vars.size()), c);
}

FreePoly standard_polynomial_at(std::span<const FreePoly> args)
{
    if (args.empty())
        throw ArityMismatch("standard polynomial of no arguments");
    const Char c = args.front().characteristic();
    std::vector<std::size_t> perm(args.size());
    std::iota(perm.begin(), perm.end(), 0);
    FreePoly sum(c);
    do {
        FreePoly term = FreePoly::one(c);
        for (std::size_t i : perm)
            term *= args[i];
        sum += term.scaled(permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

FreePoly substitute(const FreePoly& f, std::span<const FreePoly> images)
{
    const Char c = f.characteristic();
    FreePoly r(c);
    for (const auto& [w, coeff] : f.terms()) {
        FreePoly term = FreePoly::constant(coeff);
        for (Var v : w.letters())
            term *= v <= images.size() ? images[v - 1] : FreePoly::variable(v, c);
        r += term;
    }
    return r;
}

std::map<MultiDegree, FreePoly> components(const FreePoly& f)
{
    std::map<MultiDegree, FreePoly> out;
    for (const auto& [w, c] : f.terms())
        out.try_emplace(mdeg(w), f.characteristic()).first->second.add_term(w, c);
    return out;
}

FreePoly homogeneous_component(const FreePoly& f, const MultiDegree& d)
{
    FreePoly r(f.characteristic());
    for (const auto& [w, c] : f.terms())
        if (mdeg(w) == d)
            r.add_term(w, c);
    return r;
}

bool is_multihomogeneous(const FreePoly& f)
{
    return components(f).size() <= 1;
}

MultiDegree multidegree_of(const FreePoly& f)
{
    auto comps = components(f);
    if (comps.size() != 1)
        throw NotMultihomogeneous("polynomial has " + std::to_string(comps.size()) +
                                  " multihomogeneous components");
    return comps.begin()->first;
}

std::vector<Word> words_of_multidegree(const MultiDegree& d)
{
    std::vector<Var> letters;
    for (Var v = 1; v <= d.size(); ++v)
        letters.insert(letters.end(), d[v], v);
    std::vector<Word> out;
    do {
        out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

// Parser

namespace {

class Parser {
public:
    Parser(std::string_view text, Char c) : text_(text), char_(c) {}

    FreePoly parse_all()
    {
        FreePoly f = poly();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return f;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char ch)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    bool accept(char ch)
    {
        if (peek(ch)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch)
    {
        if (!accept(ch)) {
            if (pos_ >= text_.size())
                throw SyntaxError(std::string("expected '") + ch + "' but input ended", pos_);
            throw SyntaxError(std::string("expected '") + ch + "'", pos_);
        }
    }

    bool at_digit()
    {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    mpz_class integer()
    {
        if (!at_digit())
            throw SyntaxError("expected integer", pos_);
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::uint32_t small_integer(const char* what)
    {
        std::size_t start = pos_;
        mpz_class n = integer();
        if (n > 100000)
            throw SyntaxError(std::string(what) + " too large", start);
        return static_cast<std::uint32_t>(n.get_ui());
    }

    Scalar coefficient()
    {
        std::size_t start = pos_;
        mpz_class num = integer();
        mpz_class den = 1;
        if (accept('/')) {
            den = integer();
            if (den == 0)
                throw SyntaxError("zero denominator", start);
        }
        try {
            return Scalar::from_rational(mpq_class(num, den), char_);
        } catch (const DivisionByZero&) {
            throw SyntaxError("denominator vanishes in characteristic " + char_.to_string(),
                              start);
        }
    }

    FreePoly poly()
    {
        bool negate = accept('-');
        FreePoly f = term();
        if (negate)
            f = -f;
        for (;;) {
            if (accept('+'))
                f += term();
            else if (accept('-'))
                f -= term();
            else
                return f;
        }
    }

    FreePoly term()
    {
        FreePoly f = FreePoly::one(char_);
        if (at_digit()) {
            f = FreePoly::constant(coefficient());
            if (!accept('*') && !starts_factor())
                return f;
        }
        f *= factor();
        while (accept('*'))
            f *= factor();
        return f;
    }

    bool starts_factor()
    {
        skip_ws();
        if (pos_ >= text_.size())
            return false;
        char ch = text_[pos_];
        return ch == 'x' || ch == '[' || ch == '(' || std::isalpha(static_cast<unsigned char>(ch));
    }

    FreePoly factor()
    {
        FreePoly a = atom();
        if (accept('^'))
            a = power(a, small_integer("exponent"));
        return a;
    }

    FreePoly atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw SyntaxError("unexpected end of input", pos_);
        std::size_t start = pos_;
        char ch = text_[pos_];
        if (ch == '[') {
            ++pos_;
            FreePoly a = poly();
            expect(',');
            FreePoly b = poly();
            expect(']');
            return bracket(a, b);
        }
        if (ch == '(') {
            ++pos_;
            FreePoly a = poly();
            expect(')');
            return a;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end])))
                ++end;
            std::string_view name = text_.substr(pos_, end - pos_);
            pos_ = end;
            if (name == "x") {
                std::uint32_t v = small_integer("variable index");
                if (v == 0)
                    throw SyntaxError("variable indices start at 1", start);
                return FreePoly::variable(v, char_);
            }
            if (name == "St") {
                std::uint32_t n = small_integer("standard polynomial order");
                if (n == 0 || n > 8)
                    throw SyntaxError("standard polynomial order must be in 1..8", start);
                expect('(');
                std::vector<FreePoly> args{poly()};
                while (accept(','))
                    args.push_back(poly());
                expect(')');
                if (args.size() != n)
                    throw SyntaxError("St" + std::to_string(n) + " takes " + std::to_string(n) +
                                          " arguments, got " + std::to_string(args.size()),
                                      start);
                return standard_polynomial_at(args);
            }
            throw UnknownFunction("unknown name '" + std::string(name) + "'", start);
        }
        throw SyntaxError(std::string("unexpected '") + ch + "'", pos_);
    }

    std::string_view text_;
    Char char_;
    std::size_t pos_ = 0;
};

} // namespace

FreePoly parse(std::string_view text, Char c)
{
    return Parser(text, c).parse_all();
}

std::string render(const FreePoly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        bool negative = c.is_negative();
        Scalar mag = negative ? -c : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (w.empty())
            out += mag.value_string();
        else if (mag.is_one())
            out += w.to_string();
        else
            out += mag.value_string() + "*" + w.to_string();
    }
    return out;
}

} // namespace weylpi
