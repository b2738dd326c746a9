#ifndef RECRING_RING_HPP
#define RECRING_RING_HPP

#include "recring/polynomial.hpp"

#include <optional>
#include <vector>

namespace recring {

/// A quotient of R[x1..xn] by the ideal <x_i^d - P_i : 1 <= i <= n>,
/// where each reducer P_i is itself in normal form and the terminal
/// reducer P_n is zero, so x_n^d rewrites to nothing.
class RingSpec {
public:
    /// Validates the full invariant set: n >= 1, d >= 2, one reducer per
    /// index, P_n = 0, reducer variables within 1..n, reducer exponents
    /// below d, reducer coefficients in the given ring.
    RingSpec(int num_vars, int degree, std::vector<Polynomial> reducers,
             CoefficientRing coeff_ring);

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    const CoefficientRing& coeff_ring() const { return coeff_ring_; }

    /// Reducer P_i, 1-based.
    const Polynomial& reducer(int index) const;
    const std::vector<Polynomial>& reducers() const { return reducers_; }

    /// True when every reducer monomial is dlex-below the x_i^d it
    /// replaces, which guarantees rewriting terminates. The built-in
    /// families all satisfy this.
    bool order_compatible() const { return order_compatible_; }

private:
    int num_vars_;
    int degree_;
    std::vector<Polynomial> reducers_;
    CoefficientRing coeff_ring_;
    bool order_compatible_;
};

enum class RingFamilyTag { K, KMod, KPrime };

/// Shorthand for the three built-in d = 2 families:
///   K      x_i^2 = 2x_i + x_{i+1} over Z
///   KMod   the same relations with coefficients in Z/mZ
///   KPrime x_i^2 = -2x_i + x_{i+1} over Z
/// with x_n^2 = 0 terminal in every family.
struct RingFamily {
    RingFamilyTag tag;
    int num_vars;
    std::optional<Int> modulus; // required iff tag == KMod
};

RingSpec make_ring(const RingFamily& family);

/// floor(log2 n) + 2, the variable count that the built-in constructions
/// size their rings with. n must be positive.
int required_vars(long long n);

/// Unique normal form of p modulo the ideal: while any term carries an
/// exponent >= d, the dlex-greatest offending term is rewritten by
/// replacing one factor x_i^d with P_i. Throws reduction_limit_exceeded
/// if a non-order-compatible reducer table fails to terminate.
Polynomial reduce(const Polynomial& p, const RingSpec& ring);

/// reduce(mul(p, q)); the product followed by normalization.
Polynomial ring_mul(const Polynomial& p, const Polynomial& q, const RingSpec& ring);

/// base^exp inside the quotient via binary exponentiation, reducing
/// after every multiplication. exp must be >= 0; base^0 = 1.
Polynomial ring_pow(const Polynomial& base, long long exp, const RingSpec& ring);

/// The ideal generators [x_i^d - P_i for i in 1..n] in canonical form.
std::vector<Polynomial> ideal_generators(const RingSpec& ring);

} // namespace recring

#endif
