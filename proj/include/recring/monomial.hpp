#ifndef RECRING_MONOMIAL_HPP
#define RECRING_MONOMIAL_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace recring {

enum class Ordering { less = -1, equal = 0, greater = 1 };

/// A power product x_{i1}^{e1} * x_{i2}^{e2} * ... stored as a sparse
/// exponent table sorted by variable index. Indices are 1-based; no
/// stored exponent is zero, so the empty table is the monomial 1.
class Monomial {
public:
    using Factor = std::pair<int, std::int64_t>; // (variable index, exponent)

    Monomial() = default; // the monomial 1

    /// Builds a monomial from (index, exponent) pairs. Duplicate indices
    /// accumulate, zero exponents are dropped. Index < 1 or a negative
    /// exponent is malformed.
    static Monomial from_factors(std::vector<Factor> factors);

    static Monomial variable(int index, std::int64_t exponent = 1);

    /// Sparse factor list, ascending by variable index.
    const std::vector<Factor>& factors() const { return factors_; }

    bool is_one() const { return factors_.empty(); }

    /// Total degree (the sum of all exponents).
    std::int64_t degree() const { return degree_; }

    std::int64_t exponent(int index) const;
    std::int64_t max_exponent() const;
    int max_index() const { return factors_.empty() ? 0 : factors_.back().first; }

    /// True when every exponent of this monomial is <= the matching
    /// exponent of `other`.
    bool divides(const Monomial& other) const;

    Monomial times(const Monomial& other) const;

    /// Exact quotient; throws std::invalid_argument unless divisor | this.
    Monomial divided_by(const Monomial& divisor) const;

    /// Removes `count` from the exponent of `index` (used when a factor
    /// x_i^d is rewritten away). Throws if the exponent is too small.
    Monomial without_power(int index, std::int64_t count) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<Factor> factors_;
    std::int64_t degree_ = 0;
};

/// Degree-lexicographic comparison: total degree first, ties broken by
/// scanning variable indices upward, where a higher exponent on a lower
/// index wins (x1 > x2 > ... > xn).
Ordering dlex_compare(const Monomial& a, const Monomial& b);

inline bool dlex_less(const Monomial& a, const Monomial& b) {
    return dlex_compare(a, b) == Ordering::less;
}
inline bool dlex_greater(const Monomial& a, const Monomial& b) {
    return dlex_compare(a, b) == Ordering::greater;
}

struct DlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return dlex_less(a, b); }
};
struct DlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return dlex_greater(a, b); }
};

/// Ordering used by the canonical text form: monomials compare by their
/// highest differing variable, so terms list as 1, x1, x2, x1*x2, x3,
/// x1*x3, ... (the constant first, x1 varying fastest).
bool display_less(const Monomial& a, const Monomial& b);

/// FNV-1a over the factor list, for hash-based term accumulation.
struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 14695981039346656037ull;
        for (const auto& [index, exp] : m.factors()) {
            h = (h ^ static_cast<std::size_t>(index)) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(exp)) * 1099511628211ull;
        }
        return h;
    }
};

/// Total degree of a monomial.
inline std::int64_t degsum(const Monomial& m) { return m.degree(); }

} // namespace recring

#endif
