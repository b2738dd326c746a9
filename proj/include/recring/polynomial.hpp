#ifndef RECRING_POLYNOMIAL_HPP
#define RECRING_POLYNOMIAL_HPP

#include "recring/coeff.hpp"
#include "recring/monomial.hpp"

#include <string>
#include <vector>

namespace recring {

struct Term {
    Int coeff;
    Monomial mono;

    friend bool operator==(const Term& a, const Term& b) {
        return a.coeff == b.coeff && a.mono == b.mono;
    }
};

/// Sparse multivariate polynomial over an exact coefficient ring.
/// Canonical form: terms sorted strictly descending under dlex, pairwise
/// distinct monomials, no zero coefficients (zero has an empty list),
/// modular coefficients stored as canonical residues.
class Polynomial {
public:
    explicit Polynomial(CoefficientRing ring) : ring_(std::move(ring)) {}

    static Polynomial zero(CoefficientRing ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(CoefficientRing ring, Int value);
    static Polynomial variable(CoefficientRing ring, int index, std::int64_t exponent = 1);

    /// Canonicalizes an arbitrary term list: residues normalized, like
    /// monomials combined, zeros dropped, terms sorted dlex-descending.
    static Polynomial from_terms(CoefficientRing ring, std::vector<Term> terms);

    const CoefficientRing& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// The dlex-greatest term; throws std::invalid_argument on zero.
    const Term& leading_term() const;

    /// Largest total degree among the terms (zero polynomial: -1).
    std::int64_t total_degree() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    friend Polynomial make_canonical_unchecked(CoefficientRing, std::vector<Term>);

    CoefficientRing ring_;
    std::vector<Term> terms_;
};

/// Coefficient-wise sum; operands must share a ring.
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial neg(const Polynomial& p);

/// Product in the free polynomial ring (no ideal reduction).
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// p scaled by a single term c * m.
Polynomial mul_term(const Polynomial& p, const Int& coeff, const Monomial& mono);

/// Sum of all coefficients, i.e. the value at x1 = x2 = ... = 1. Modular
/// coefficients are lifted to their canonical representative in [0, m)
/// and summed in Z.
Int evaluate_all_ones(const Polynomial& p);

/// Re-tags the coefficients into `target`, mapping each value by
/// canonical residue (into Z/mZ) or canonical lift (out of it); terms
/// that become zero are dropped.
Polynomial map_coefficients(const Polynomial& p, const CoefficientRing& target);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator-(const Polynomial& p) { return neg(p); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

/// Canonical text form, e.g. "1 + 4*x1 + x2". Terms are listed in
/// display order (see display_less), variables ascend within a term and
/// repeat per exponent, a coefficient of 1 is omitted before a variable.
std::string to_text(const Polynomial& p);

} // namespace recring

#endif
