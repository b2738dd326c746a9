#ifndef RECRING_COEFF_HPP
#define RECRING_COEFF_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace recring {

/// Exact arbitrary-precision integer used for every coefficient and sum.
using Int = boost::multiprecision::cpp_int;

/// The coefficient domain of a polynomial: the integers, or the residue
/// ring Z/mZ with m >= 2. Modular values are always kept as canonical
/// representatives in [0, m).
class CoefficientRing {
public:
    enum class Kind { integers, integers_mod };

    static CoefficientRing integers() { return CoefficientRing(Kind::integers, 0); }

    static CoefficientRing integers_mod(Int modulus) {
        if (modulus < 2)
            throw std::invalid_argument("modulus must be at least 2");
        return CoefficientRing(Kind::integers_mod, std::move(modulus));
    }

    Kind kind() const { return kind_; }
    bool is_modular() const { return kind_ == Kind::integers_mod; }

    const Int& modulus() const {
        if (!is_modular())
            throw std::logic_error("coefficient ring has no modulus");
        return modulus_;
    }

    /// Canonical form of a value: the representative in [0, m) for Z/mZ,
    /// the value itself for Z.
    Int normalize(Int value) const {
        if (!is_modular())
            return value;
        Int r = value % modulus_;
        if (r < 0)
            r += modulus_;
        return r;
    }

    Int add(const Int& a, const Int& b) const { return normalize(a + b); }
    Int sub(const Int& a, const Int& b) const { return normalize(a - b); }
    Int mul(const Int& a, const Int& b) const { return normalize(a * b); }
    Int neg(const Int& a) const { return normalize(-a); }

    /// True when the (canonical) value is invertible: +-1 over Z, a
    /// residue coprime to m over Z/mZ.
    bool is_unit(const Int& value) const;

    /// Multiplicative inverse of a unit; throws std::invalid_argument
    /// for non-units.
    Int unit_inverse(const Int& value) const;

    /// True when the (canonical) value is a regular element, i.e. not a
    /// zero divisor: any nonzero integer over Z, a residue coprime to m
    /// over Z/mZ.
    bool is_regular(const Int& value) const;

    std::string describe() const {
        return is_modular() ? "Z/" + modulus_.str() + "Z" : "Z";
    }

    friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const CoefficientRing& a, const CoefficientRing& b) {
        return !(a == b);
    }

private:
    CoefficientRing(Kind kind, Int modulus) : kind_(kind), modulus_(std::move(modulus)) {}

    Kind kind_;
    Int modulus_; // zero unless modular
};

} // namespace recring

#endif
