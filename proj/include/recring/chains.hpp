#ifndef RECRING_CHAINS_HPP
#define RECRING_CHAINS_HPP

#include "recring/groebner.hpp"
#include "recring/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace recring {

/// Three-valued answer for the leading-coefficient regularity test.
enum class Regularity { regular, zero_divisor, undetermined };

struct TriangularResult {
    bool triangular = false;
    /// Variable order certifying triangularity (ascending or reversed),
    /// as variable indices from lowest to highest chain level.
    std::vector<int> variable_order;
    /// Generator indices (0-based) arranged so that the k-th entry uses
    /// only the first k variables of the order.
    std::vector<std::size_t> arrangement;
};

struct ChainReport {
    bool triangular = false;
    std::optional<std::vector<int>> variable_order;
    Regularity leading_regular = Regularity::undetermined;
    /// Whether Buchberger's criterion certified the generators, which the
    /// zero-dimensionality criterion relies on.
    bool groebner_certified = false;
    bool zero_dimensional = false;
    bool is_regular_chain = false;
};

/// Can the generators be arranged so the k-th uses only the first k
/// variables of some order? Tries the ascending order x1..xn, then the
/// reversed order xn..x1.
TriangularResult check_triangular(std::span<const Polynomial> generators);

/// Inspects each generator's leading coefficient with respect to its
/// main variable under the triangular order: a constant is decided with
/// the coefficient ring's regularity test, anything else is undetermined.
Regularity check_leading_regular(std::span<const Polynomial> generators,
                                 const TriangularResult& triangular);
Regularity check_leading_regular(std::span<const Polynomial> generators);

/// Pure-power criterion for zero-dimensionality: every variable in
/// 1..max index must have some generator whose leading monomial is a
/// pure power of it. Only valid for a certified Groebner basis; throws
/// std::invalid_argument when not certified.
bool check_zero_dimensional(std::span<const Polynomial> generators, bool groebner_certified);

/// Runs the triangularity, regularity and zero-dimensionality checks and
/// combines them: is_regular_chain = triangular && regular leading
/// coefficients && zero-dimensional.
ChainReport is_regular_chain(std::span<const Polynomial> generators);

} // namespace recring

#endif
