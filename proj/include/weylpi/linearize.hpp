#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "weylpi/freealg.hpp"

namespace weylpi {

/// Ordered splitting of a degree into positive parts.
class Composition {
public:
    /// Throws InvalidComposition if empty or some part is zero.
    explicit Composition(std::vector<std::uint32_t> parts);
    Composition(std::initializer_list<std::uint32_t> parts)
        : Composition(std::vector<std::uint32_t>(parts))
    {}

    /// The single-part composition (n); the identity linearization.
    static Composition whole(std::uint32_t n) { return Composition({n}); }
    /// (1, 1, ..., 1) with n parts.
    static Composition ones(std::uint32_t n);

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    std::uint32_t total() const;

    std::string to_string() const;

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<std::uint32_t> parts_;
};

/// All compositions of n (n >= 1), in lexicographic order.
std::vector<Composition> compositions_of(std::uint32_t n);
/// Partitions of n as non-increasing compositions.
std::vector<Composition> partitions_of(std::uint32_t n);

/// Partial linearization of the multihomogeneous f with respect to x_var.
///
/// x_var is replaced by x_var + ... + x_{var+k-1}, later variables shift up by
/// k - 1, and the component with degrees gamma in the inserted block is kept.
FreePoly lin(const FreePoly& f, Var var, const Composition& gamma);

/// Parts of one composition per variable; variables of degree zero get an
/// empty entry.
using CompositionTuple = std::vector<std::vector<std::uint32_t>>;

/// Applies the per-variable compositions to f, last variable first, so that
/// the inserted blocks appear in variable order.
FreePoly lin_tuple(const FreePoly& f, const CompositionTuple& tuple);

/// Complete linearization: 1^{delta_v} for every variable.
FreePoly lin_complete(const FreePoly& f);

struct Linearization {
    CompositionTuple compositions;
    FreePoly poly;
};

/// Every tuple of compositions (one per variable) for multidegree d. With
/// dedup, only non-increasing compositions are kept: permuting the parts of a
/// composition only renames variables.
std::vector<CompositionTuple> composition_tuples(const MultiDegree& d, bool dedup);

/// f together with all of its iterated partial linearizations.
std::vector<Linearization> all_linearizations(const FreePoly& f, bool dedup = true);

std::string to_string(const CompositionTuple& t);

} // namespace weylpi
