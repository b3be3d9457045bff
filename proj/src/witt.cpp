#include "weylpi/witt.hpp"

#include <algorithm>

#include "weylpi/errors.hpp"

namespace weylpi {

WeylElement basis_element(std::uint64_t i, Char c)
{
    return WeylElement::monomial(static_cast<std::uint32_t>(i), 1, c);
}

WeylElement eval_concrete(const FreePoly& f, std::span<const std::uint64_t> point)
{
    const Char c = f.characteristic();
    if (f.num_vars() > point.size())
        throw ArityMismatch("polynomial uses x" + std::to_string(f.num_vars()) + " but only " +
                            std::to_string(point.size()) + " basis indices were given");
    std::vector<WeylElement> images;
    for (auto i : point)
        images.push_back(basis_element(i, c));
    WeylElement sum(c);
    for (const auto& [w, coeff] : f.terms()) {
        WeylElement term = WeylElement::one(c).scaled(coeff);
        for (Var v : w.letters())
            term *= images[v - 1];
        sum += term;
    }
    return sum;
}

SymbolicWeylElement symbolic_word_product(const Word& w)
{
    SymbolicWeylElement e = SymbolicWeylElement::unit();
    for (Var v : w.letters())
        e = e.times_basis(v - 1);
    return e;
}

SymbolicEvaluation eval_symbolic(const FreePoly& f)
{
    SymbolicEvaluation out;
    if (f.is_zero())
        return out;
    multidegree_of(f);
    const Char c = f.characteristic();
    if (c.is_zero())
        for (const auto& [w, coeff] : f.terms())
            out.denominator = lcm(out.denominator, coeff.rational().get_den());
    for (const auto& [w, coeff] : f.terms()) {
        mpz_class n = c.is_zero() ? mpz_class(coeff.rational() * out.denominator)
                                  : mpz_class(static_cast<unsigned long>(coeff.residue()));
        out.numerator += symbolic_word_product(w).scaled(n);
    }
    return out;
}

void accumulate_conditions(const FreePoly& g, std::size_t linearization, ConditionVector& out)
{
    const Char c = g.characteristic();
    for (const auto& [w, coeff] : g.terms()) {
        const SymbolicWeylElement product = symbolic_word_product(w);
        for (const auto& [key, poly] : product.terms()) {
            const ExpPoly reduced = reduce_for_char(poly, c);
            for (const auto& [mono, z] : reduced.terms()) {
                ConditionKey ck{linearization, key, mono};
                auto [it, inserted] = out.try_emplace(ck, c);
                it->second += coeff * Scalar::from_integer(z, c);
            }
        }
    }
}

namespace {

bool has_nonzero(const ConditionVector& cv)
{
    return std::any_of(cv.begin(), cv.end(), [](const auto& kv) { return !kv.second.is_zero(); });
}

// Points of {0..bound}^m ordered by coordinate sum, then lexicographically.
std::vector<std::vector<std::uint64_t>> grid_points(std::size_t m, std::uint64_t bound)
{
    std::vector<std::vector<std::uint64_t>> pts{{}};
    for (std::size_t d = 0; d < m; ++d) {
        std::vector<std::vector<std::uint64_t>> next;
        for (const auto& p : pts)
            for (std::uint64_t v = 0; v <= bound; ++v) {
                auto q = p;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        pts = std::move(next);
    }
    std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        std::uint64_t sa = 0, sb = 0;
        for (auto v : a)
            sa += v;
        for (auto v : b)
            sb += v;
        return sa < sb;
    });
    return pts;
}

std::optional<Witness> find_witness(const FreePoly& g, const MultiDegree& component,
                                    const CompositionTuple& tuple)
{
    const Char c = g.characteristic();
    std::uint64_t degree = 0;
    for (const auto& [w, coeff] : g.terms())
        degree = std::max<std::uint64_t>(degree, w.size());
    // A nonzero integer polynomial of degree <= n in each symbol is nonzero
    // somewhere on {0..n}^m; in characteristic p the reduced form is nonzero
    // somewhere on {0..p-1}^m.
    const std::uint64_t bound = c.is_zero() ? degree : c.value() - 1;
    for (const auto& pt : grid_points(g.num_vars(), bound)) {
        WeylElement value = eval_concrete(g, pt);
        if (value.is_zero())
            continue;
        const auto& [mono, coeff] = *value.terms().begin();
        return Witness{g, component, tuple, pt, mono, coeff};
    }
    return std::nullopt;
}

} // namespace

bool recheck(const Witness& w)
{
    WeylElement value = eval_concrete(w.polynomial, w.point);
    Scalar coeff = value.coefficient(w.monomial.x, w.monomial.y);
    return !coeff.is_zero() && coeff == w.coefficient;
}

EvalReport is_identity(const FreePoly& f)
{
    EvalReport report{f, true, std::nullopt};
    for (const auto& [d, comp] : components(f)) {
        for (const auto& tuple : composition_tuples(d, true)) {
            FreePoly g = lin_tuple(comp, tuple);
            ConditionVector cv;
            accumulate_conditions(g, 0, cv);
            if (!has_nonzero(cv))
                continue;
            report.identity = false;
            report.witness = find_witness(g, d, tuple);
            if (!report.witness || !recheck(*report.witness))
                throw std::logic_error("symbolic criterion failed but no concrete witness found for " +
                                       render(g));
            return report;
        }
    }
    return report;
}

namespace {

std::string point_string(const std::vector<std::uint64_t>& pt)
{
    std::string out = "(";
    for (std::size_t i = 0; i < pt.size(); ++i)
        out += (i ? ", " : "") + std::string("c_") + std::to_string(pt[i]);
    return out + ")";
}

} // namespace

std::string EvalReport::to_text() const
{
    if (identity)
        return "Identity";
    const Witness& w = *witness;
    std::string out = "NotIdentity\n";
    out += "  component:     " + w.component.to_string() + "\n";
    out += "  linearization: " + to_string(w.linearization) + "\n";
    out += "  evaluated:     " + render(w.polynomial) + "\n";
    out += "  at:            " + point_string(w.point) + "\n";
    out += "  value:         " + eval_concrete(w.polynomial, w.point).to_string() + "\n";
    out += "  coefficient of x^" + std::to_string(w.monomial.x) + "*y^" +
           std::to_string(w.monomial.y) + " is " + w.coefficient.to_string();
    return out;
}

nlohmann::json EvalReport::to_json() const
{
    nlohmann::json j;
    j["polynomial"] = render(polynomial);
    j["char"] = polynomial.characteristic().value();
    j["verdict"] = identity ? "Identity" : "NotIdentity";
    if (witness) {
        const Witness& w = *witness;
        j["witness"] = {
            {"component", w.component.entries()},
            {"linearization", w.linearization},
            {"polynomial", render(w.polynomial)},
            {"point", w.point},
            {"monomial", {w.monomial.x, w.monomial.y}},
            {"coefficient", w.coefficient.value_string()},
            {"value", eval_concrete(w.polynomial, w.point).to_string()},
        };
    }
    return j;
}

} // namespace weylpi
