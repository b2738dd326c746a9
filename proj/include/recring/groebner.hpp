#ifndef RECRING_GROEBNER_HPP
#define RECRING_GROEBNER_HPP

#include "recring/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace recring {

/// Outcome of multivariate division: p = sum(quotients[k] * divisors[k])
/// + remainder, and no remainder monomial is divisible by any divisor's
/// leading monomial.
struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

struct FailingPair {
    int i = 0; // 1-based generator indices
    int j = 0;
    Polynomial remainder;
};

struct GroebnerReport {
    bool is_groebner = false;
    std::optional<FailingPair> failing_pair;
    std::size_t pairs_checked = 0;
};

/// S(gi, gj) = (L / lt(gi)) gi - (L / lt(gj)) gj with L the lcm of the
/// leading monomials. Inputs must be nonzero with unit leading
/// coefficients; the leading terms cancel.
Polynomial s_polynomial(const Polynomial& gi, const Polynomial& gj);

/// Multivariate division under dlex: the working leading term is
/// cancelled with the first divisor (in list order) whose leading
/// monomial divides it, otherwise moved to the remainder. A leading
/// coefficient that cannot be cancelled exactly raises division_blocked.
DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors);

/// Buchberger's criterion: every S(gi, gj) for i < j must leave a zero
/// remainder against the full list. Stops at the first failing pair in
/// lexicographic (i, j) order.
GroebnerReport is_groebner(std::span<const Polynomial> generators);

/// True when no monomial of total degree >= d appears in more than one
/// of the reducers (pure powers included). d must be >= 2.
bool has_unique_mixed_terms(std::span<const Polynomial> reducers, int degree);

} // namespace recring

#endif
