#include "weylpi/linearize.hpp"

#include <algorithm>
#include <numeric>

#include "weylpi/errors.hpp"

namespace weylpi {

Composition::Composition(std::vector<std::uint32_t> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw InvalidComposition("composition needs at least one part");
    if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
        throw InvalidComposition("composition parts must be positive");
}

Composition Composition::ones(std::uint32_t n)
{
    return Composition(std::vector<std::uint32_t>(n, 1));
}

std::uint32_t Composition::total() const
{
    return std::accumulate(parts_.begin(), parts_.end(), std::uint32_t{0});
}

std::string Composition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        out += (i ? "," : "") + std::to_string(parts_[i]);
    return out + ")";
}

namespace {

void compositions_rec(std::uint32_t rest, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                      std::vector<Composition>& out)
{
    if (rest == 0) {
        out.emplace_back(cur);
        return;
    }
    for (std::uint32_t p = 1; p <= std::min(rest, max_part); ++p) {
        cur.push_back(p);
        compositions_rec(rest - p, max_part, cur, out);
        cur.pop_back();
    }
}

void partitions_rec(std::uint32_t rest, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                    std::vector<Composition>& out)
{
    if (rest == 0) {
        out.emplace_back(cur);
        return;
    }
    for (std::uint32_t p = std::min(rest, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(rest - p, p, cur, out);
        cur.pop_back();
    }
}

// Distributes the occurrences of one variable among k slots with prescribed
// counts; each complete assignment yields one renamed word.
void assign_slots(const std::vector<Var>& letters, const std::vector<std::size_t>& positions,
                  std::size_t next, std::vector<std::uint32_t>& remaining,
                  std::vector<Var>& current, Var var, FreePoly& out, const Scalar& coeff)
{
    if (next == positions.size()) {
        out.add_term(Word(current), coeff);
        return;
    }
    for (std::size_t slot = 0; slot < remaining.size(); ++slot) {
        if (remaining[slot] == 0)
            continue;
        --remaining[slot];
        current[positions[next]] = var + static_cast<Var>(slot);
        assign_slots(letters, positions, next + 1, remaining, current, var, out, coeff);
        ++remaining[slot];
    }
}

} // namespace

std::vector<Composition> compositions_of(std::uint32_t n)
{
    std::vector<Composition> out;
    std::vector<std::uint32_t> cur;
    compositions_rec(n, n, cur, out);
    return out;
}

std::vector<Composition> partitions_of(std::uint32_t n)
{
    std::vector<Composition> out;
    std::vector<std::uint32_t> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

FreePoly lin(const FreePoly& f, Var var, const Composition& gamma)
{
    if (var == 0)
        throw ArityMismatch("variable indices start at 1");
    FreePoly out(f.characteristic());
    if (f.is_zero())
        return out;
    const MultiDegree d = multidegree_of(f);
    if (gamma.total() != d[var])
        throw DegreeMismatch("composition " + gamma.to_string() + " does not split degree " +
                             std::to_string(d[var]) + " of x" + std::to_string(var));
    const Var shift = static_cast<Var>(gamma.size() - 1);
    for (const auto& [w, coeff] : f.terms()) {
        std::vector<Var> renamed(w.letters());
        std::vector<std::size_t> positions;
        for (std::size_t p = 0; p < renamed.size(); ++p) {
            if (renamed[p] == var)
                positions.push_back(p);
            else if (renamed[p] > var)
                renamed[p] += shift;
        }
        std::vector<std::uint32_t> remaining(gamma.parts());
        assign_slots(w.letters(), positions, 0, remaining, renamed, var, out, coeff);
    }
    return out;
}

FreePoly lin_tuple(const FreePoly& f, const CompositionTuple& tuple)
{
    FreePoly g = f;
    for (std::size_t v = tuple.size(); v-- > 0;) {
        if (tuple[v].empty())
            continue;
        g = lin(g, static_cast<Var>(v + 1), Composition(tuple[v]));
    }
    return g;
}

FreePoly lin_complete(const FreePoly& f)
{
    if (f.is_zero())
        return f;
    const MultiDegree d = multidegree_of(f);
    CompositionTuple tuple;
    for (Var v = 1; v <= d.size(); ++v)
        tuple.push_back(std::vector<std::uint32_t>(d[v], 1));
    return lin_tuple(f, tuple);
}

std::vector<CompositionTuple> composition_tuples(const MultiDegree& d, bool dedup)
{
    std::vector<CompositionTuple> out{CompositionTuple{}};
    for (Var v = 1; v <= d.size(); ++v) {
        std::vector<std::vector<std::uint32_t>> choices;
        if (d[v] == 0)
            choices.emplace_back();
        else
            for (const auto& c : dedup ? partitions_of(d[v]) : compositions_of(d[v]))
                choices.push_back(c.parts());
        std::vector<CompositionTuple> next;
        for (const auto& prefix : out)
            for (const auto& c : choices) {
                CompositionTuple t = prefix;
                t.push_back(c);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    // Put the identity tuple (every composition a single part) first.
    std::stable_partition(out.begin(), out.end(), [](const CompositionTuple& t) {
        return std::all_of(t.begin(), t.end(), [](const auto& c) { return c.size() <= 1; });
    });
    return out;
}

std::vector<Linearization> all_linearizations(const FreePoly& f, bool dedup)
{
    std::vector<Linearization> out;
    if (f.is_zero()) {
        out.push_back({CompositionTuple{}, f});
        return out;
    }
    for (auto& t : composition_tuples(multidegree_of(f), dedup)) {
        FreePoly g = lin_tuple(f, t);
        out.push_back({std::move(t), std::move(g)});
    }
    return out;
}

std::string to_string(const CompositionTuple& t)
{
    std::string out = "[";
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (v)
            out += ",";
        out += "(";
        for (std::size_t i = 0; i < t[v].size(); ++i)
            out += (i ? "," : "") + std::to_string(t[v][i]);
        out += ")";
    }
    return out + "]";
}

} // namespace weylpi
