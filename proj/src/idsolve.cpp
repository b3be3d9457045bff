#include "weylpi/idsolve.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "weylpi/catalog.hpp"
#include "weylpi/errors.hpp"
#include "weylpi/linearize.hpp"
#include "weylpi/witt.hpp"

namespace weylpi {

FreePoly SolveReport::basis_polynomial(std::size_t i) const
{
    FreePoly f(characteristic);
    for (std::size_t k = 0; k < monomials.size(); ++k)
        f.add_term(monomials[k], basis.at(i)[k]);
    return f;
}

Vector SolveReport::coordinates(const FreePoly& f) const
{
    if (f.characteristic() != characteristic)
        throw CharMismatch();
    Vector v(monomials.size(), Scalar(characteristic));
    for (const auto& [w, coeff] : f.terms()) {
        auto it = std::lower_bound(monomials.begin(), monomials.end(), w);
        if (it == monomials.end() || *it != w)
            throw WrongMultidegree("word " + w.to_string() + " is not of multidegree " +
                                   mdeg.to_string());
        v[static_cast<std::size_t>(it - monomials.begin())] = coeff;
    }
    return v;
}

nlohmann::json SolveReport::to_json() const
{
    nlohmann::json j;
    j["mdeg"] = mdeg.entries();
    j["char"] = characteristic.value();
    auto order = nlohmann::json::array();
    for (const auto& w : monomials)
        order.push_back(w.letters());
    j["monomial_order"] = order;
    j["dimension"] = dimension();
    auto b = nlohmann::json::array();
    for (const auto& v : basis) {
        auto row = nlohmann::json::array();
        for (const auto& s : v)
            row.push_back(s.value_string());
        b.push_back(row);
    }
    j["basis"] = b;
    return j;
}

SolveReport SolveReport::from_json(const nlohmann::json& j)
{
    SolveReport r;
    r.mdeg = MultiDegree(j.at("mdeg").get<std::vector<std::uint32_t>>());
    r.characteristic = Char::from_value(j.at("char").get<std::uint64_t>());
    for (const auto& w : j.at("monomial_order"))
        r.monomials.emplace_back(w.get<std::vector<Var>>());
    for (const auto& row : j.at("basis")) {
        Vector v;
        for (const auto& s : row)
            v.push_back(Scalar::from_rational(mpq_class(s.get<std::string>()), r.characteristic));
        if (v.size() != r.monomials.size())
            throw ArityMismatch("basis vector length does not match monomial_order");
        r.basis.push_back(std::move(v));
    }
    if (j.at("dimension").get<std::size_t>() != r.basis.size())
        throw ArityMismatch("dimension does not match the number of basis vectors");
    return r;
}

SolveReport solve(const MultiDegree& d, Char c)
{
    if (d.total() == 0)
        throw WrongMultidegree("multidegree must have positive total degree");
    SolveReport report;
    report.mdeg = d;
    report.characteristic = c;
    report.monomials = words_of_multidegree(d);

    const auto tuples = composition_tuples(d, true);
    std::vector<ConditionVector> columns(report.monomials.size());
    std::set<ConditionKey> keys;
    for (std::size_t w = 0; w < report.monomials.size(); ++w) {
        const FreePoly word = FreePoly::monomial(report.monomials[w], c);
        for (std::size_t t = 0; t < tuples.size(); ++t)
            accumulate_conditions(lin_tuple(word, tuples[t]), t, columns[w]);
        for (const auto& [k, v] : columns[w])
            if (!v.is_zero())
                keys.insert(k);
    }

    Matrix m(0, report.monomials.size(), c);
    for (const auto& key : keys) {
        Vector row(report.monomials.size(), Scalar(c));
        for (std::size_t w = 0; w < columns.size(); ++w)
            if (auto it = columns[w].find(key); it != columns[w].end())
                row[w] = it->second;
        m.append_row(std::move(row));
    }
    report.constraint_rows = m.rows();
    report.basis = nullspace(m);
    return report;
}

namespace {

std::vector<Word> union_of_words(std::span<const FreePoly> polys)
{
    std::set<Word> words;
    for (const auto& f : polys)
        for (const auto& [w, c] : f.terms())
            words.insert(w);
    return {words.begin(), words.end()};
}

Matrix rows_of(std::span<const FreePoly> polys, const std::vector<Word>& words, Char c)
{
    Matrix m(0, words.size(), c);
    for (const auto& f : polys) {
        if (f.characteristic() != c)
            throw CharMismatch();
        Vector row;
        for (const auto& w : words)
            row.push_back(f.coefficient(w));
        m.append_row(std::move(row));
    }
    return m;
}

} // namespace

bool contains(const SolveReport& report, const FreePoly& f)
{
    if (f.characteristic() != report.characteristic)
        throw CharMismatch();
    if (f.is_zero())
        return true;
    for (const auto& [w, coeff] : f.terms())
        if (mdeg(w) != report.mdeg)
            throw WrongMultidegree("element has multidegree " + mdeg(w).to_string() +
                                   ", report is for " + report.mdeg.to_string());
    Matrix m(0, report.monomials.size(), report.characteristic);
    for (const auto& v : report.basis)
        m.append_row(v);
    const std::size_t before = rank(m);
    m.append_row(report.coordinates(f));
    return rank(m) == before;
}

std::size_t rank_of(std::span<const FreePoly> polys)
{
    if (polys.empty())
        return 0;
    const Char c = polys.front().characteristic();
    return rank(rows_of(polys, union_of_words(polys), c));
}

SweepResult sweep(const MultiDegree& d, std::span<const Char> chars)
{
    SweepResult out;
    for (Char c : chars)
        out.reports.push_back(solve(d, c));
    for (const auto& r : out.reports)
        if (r.dimension() != out.reports.front().dimension())
            out.dimensions_differ = true;
    return out;
}

// Matrices

std::string to_string(MatrixLabel l)
{
    switch (l) {
    case MatrixLabel::Multilinear15:
        return "multilinear15";
    case MatrixLabel::Multilinear12:
        return "multilinear12";
    case MatrixLabel::Pivot5:
        return "pivot5";
    }
    return "?";
}

MatrixLabel matrix_label_from_string(std::string_view s)
{
    std::string lower;
    for (char ch : s)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (auto l : {MatrixLabel::Multilinear15, MatrixLabel::Multilinear12, MatrixLabel::Pivot5})
        if (lower == to_string(l))
            return l;
    throw UnknownName("unknown matrix '" + std::string(s) + "'");
}

nlohmann::json IntegerMatrix::to_json() const
{
    return {{"label", to_string(label)}, {"char", characteristic.value()}, {"entries", entries}};
}

namespace {

struct Probe {
    std::vector<std::uint64_t> point;
    PbwIndex monomial;
};

// Rows are (basis tuple, PBW monomial); columns are reduced words by position.
IntegerMatrix evaluation_matrix(MatrixLabel label, Char c, const std::vector<std::size_t>& cols,
                                const std::vector<Probe>& probes)
{
    const auto& reduced = reduced_monomials();
    IntegerMatrix out{label, c, {}};
    for (const auto& probe : probes) {
        std::vector<long> row;
        for (std::size_t col : cols) {
            WeylElement v = eval_concrete(FreePoly::monomial(reduced[col], c), probe.point);
            Scalar s = v.coefficient(probe.monomial.x, probe.monomial.y);
            row.push_back(c.is_zero() ? s.rational().get_num().get_si()
                                      : static_cast<long>(s.residue()));
        }
        out.entries.push_back(std::move(row));
    }
    return out;
}

} // namespace

IntegerMatrix assemble_matrix(MatrixLabel label)
{
    const PbwIndex xy4{1, 4}, y3{0, 3}, y2{0, 2}, y1{0, 1}, xy2{1, 2};
    switch (label) {
    case MatrixLabel::Multilinear15: {
        std::vector<std::size_t> cols(15);
        for (std::size_t i = 0; i < 15; ++i)
            cols[i] = i;
        return evaluation_matrix(label, Char::zero(), cols,
                                 {
                                     {{1, 0, 0, 0}, xy4}, {{1, 0, 0, 0}, y3}, {{0, 1, 0, 0}, y3},
                                     {{0, 0, 1, 0}, y3},  {{2, 0, 0, 0}, y2}, {{0, 2, 0, 0}, y2},
                                     {{0, 0, 2, 0}, y2},  {{1, 1, 0, 0}, y2}, {{1, 0, 1, 0}, y2},
                                     {{1, 1, 1, 0}, y1},  {{1, 1, 0, 1}, y1}, {{1, 0, 1, 1}, y1},
                                     {{2, 1, 0, 0}, y1},  {{2, 0, 1, 0}, y1}, {{0, 2, 1, 0}, y1},
                                 });
    }
    case MatrixLabel::Multilinear12:
        // Reduced words 1, 3..12, 15 (1-based).
        return evaluation_matrix(label, Char::prime(2), {0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14},
                                 {
                                     {{1, 0, 0, 0}, xy4}, {{1, 0, 0, 0}, y3}, {{0, 1, 0, 0}, y3},
                                     {{0, 0, 1, 0}, y3},  {{1, 1, 0, 0}, y2}, {{1, 0, 1, 0}, y2},
                                     {{1, 1, 1, 0}, y1},  {{1, 1, 1, 0}, xy2}, {{1, 1, 0, 1}, y1},
                                     {{1, 1, 0, 1}, xy2}, {{1, 0, 1, 1}, y1}, {{1, 0, 1, 1}, xy2},
                                 });
    case MatrixLabel::Pivot5: {
        const Char c = Char::prime(2);
        const std::vector<Word> columns{
            {1, 2, 4, 3}, {3, 2, 4, 1}, {3, 4, 1, 2}, {4, 1, 3, 2}, {4, 2, 3, 1},
        };
        IntegerMatrix out{label, c, {}};
        for (Named n : {Named::Gamma, Named::Psi, Named::Delta, Named::Lambda, Named::G}) {
            FreePoly f = named(n, c);
            std::vector<long> row;
            for (const auto& w : columns)
                row.push_back(static_cast<long>(f.coefficient(w).residue()));
            out.entries.push_back(std::move(row));
        }
        return out;
    }
    }
    throw UnknownName("unknown matrix");
}

IntegerMatrix published_matrix(MatrixLabel label)
{
    switch (label) {
    case MatrixLabel::Multilinear15:
        return {label,
                Char::zero(),
                {
                    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                    {0, 0, 0, 0, 0, 1, 1, 2, 3, 2, 1, 1, 3, 2, 1},
                    {1, 1, 2, 3, 2, 0, 0, 0, 0, 0, 2, 3, 1, 3, 2},
                    {2, 3, 1, 1, 3, 2, 3, 1, 1, 3, 0, 0, 0, 0, 3},
                    {0, 0, 0, 0, 0, 0, 0, 2, 6, 2, 0, 0, 6, 2, 0},
                    {0, 0, 2, 6, 2, 0, 0, 0, 0, 0, 2, 6, 0, 6, 2},
                    {2, 6, 0, 0, 6, 2, 6, 0, 0, 6, 0, 0, 0, 0, 6},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 4, 1},
                    {0, 0, 0, 0, 0, 1, 2, 1, 2, 4, 0, 0, 0, 0, 2},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0},
                    {0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0},
                    {0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2},
                }};
    case MatrixLabel::Multilinear12:
        return {label,
                Char::prime(2),
                {
                    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                    {0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1},
                    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                    {0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1},
                    {0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
                    {1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0},
                    {0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 1},
                    {0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0},
                    {0, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1, 0},
                }};
    case MatrixLabel::Pivot5:
        return {label,
                Char::prime(2),
                {
                    {0, 0, 1, 0, 1},
                    {0, 0, 1, 0, 0},
                    {0, 0, 1, 1, 0},
                    {1, 1, 0, 1, 1},
                    {1, 0, 0, 0, 1},
                }};
    }
    throw UnknownName("unknown matrix");
}

} // namespace weylpi
