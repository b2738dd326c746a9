#include "recring/coeff.hpp"

namespace recring {

namespace {

// Extended Euclid on nonnegative inputs; returns gcd and a coefficient x
// with a*x ≡ gcd (mod m).
Int egcd_inverse(const Int& a, const Int& m, Int& gcd_out) {
    Int old_r = a, r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    gcd_out = old_r;
    return old_s;
}

} // namespace

bool CoefficientRing::is_unit(const Int& value) const {
    if (!is_modular())
        return value == 1 || value == -1;
    Int g = boost::multiprecision::gcd(normalize(value), modulus_);
    return g == 1;
}

Int CoefficientRing::unit_inverse(const Int& value) const {
    if (!is_modular()) {
        if (value == 1 || value == -1)
            return value;
        throw std::invalid_argument("not a unit in Z: " + value.str());
    }
    Int g;
    Int inv = egcd_inverse(normalize(value), modulus_, g);
    if (g != 1)
        throw std::invalid_argument("not a unit mod " + modulus_.str() + ": " + value.str());
    return normalize(inv);
}

bool CoefficientRing::is_regular(const Int& value) const {
    if (!is_modular())
        return value != 0;
    return boost::multiprecision::gcd(normalize(value), modulus_) == 1;
}

} // namespace recring
