#include "recring/groebner.hpp"

#include "recring/errors.hpp"

#include <map>
#include <stdexcept>

namespace recring {

namespace {

// c / lc in the coefficient ring, or division_blocked when the quotient
// does not exist exactly.
Int cancel_coefficient(const CoefficientRing& ring, const Int& c, const Int& lc) {
    if (lc == 1)
        return c;
    if (ring.is_modular()) {
        if (!ring.is_unit(lc))
            throw division_blocked("division blocked: leading coefficient " + lc.str() +
                                   " is not invertible " + ring.describe());
        return ring.mul(c, ring.unit_inverse(lc));
    }
    if (lc == -1)
        return -c;
    if (c % lc != 0)
        throw division_blocked("division blocked: " + lc.str() + " does not divide " + c.str());
    return c / lc;
}

Int unit_leading_inverse(const Polynomial& g, const char* what) {
    const Term& lt = g.leading_term();
    if (!g.ring().is_unit(lt.coeff))
        throw std::invalid_argument(std::string(what) +
                                    " requires unit leading coefficients, got " +
                                    lt.coeff.str());
    return g.ring().unit_inverse(lt.coeff);
}

} // namespace

Polynomial s_polynomial(const Polynomial& gi, const Polynomial& gj) {
    if (gi.is_zero() || gj.is_zero())
        throw std::invalid_argument("s_polynomial is undefined for the zero polynomial");
    if (gi.ring() != gj.ring())
        throw std::invalid_argument("coefficient ring mismatch in s_polynomial");
    Int inv_i = unit_leading_inverse(gi, "s_polynomial");
    Int inv_j = unit_leading_inverse(gj, "s_polynomial");
    Monomial l = Monomial::lcm(gi.leading_term().mono, gj.leading_term().mono);
    Polynomial left = mul_term(gi, inv_i, l.divided_by(gi.leading_term().mono));
    Polynomial right = mul_term(gj, inv_j, l.divided_by(gj.leading_term().mono));
    return sub(left, right);
}

DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors) {
    const auto& ring = p.ring();
    for (const auto& g : divisors) {
        if (g.is_zero())
            throw std::invalid_argument("cannot divide by the zero polynomial");
        if (g.ring() != ring)
            throw std::invalid_argument("coefficient ring mismatch in divide");
    }

    std::map<Monomial, Int, DlexGreater> work;
    for (const auto& t : p.terms())
        work.emplace(t.mono, t.coeff);
    auto merge = [&ring](std::map<Monomial, Int, DlexGreater>& table, const Monomial& m,
                         const Int& c) {
        auto [it, inserted] = table.try_emplace(m, c);
        if (!inserted) {
            it->second = ring.add(it->second, c);
            if (it->second == 0)
                table.erase(it);
        }
    };

    std::vector<std::map<Monomial, Int, DlexGreater>> quotients(divisors.size());
    std::vector<Term> remainder;

    while (!work.empty()) {
        auto lead = work.begin();
        const Monomial mono = lead->first;
        const Int coef = lead->second;

        std::size_t k = 0;
        for (; k < divisors.size(); ++k)
            if (divisors[k].leading_term().mono.divides(mono))
                break;
        if (k == divisors.size()) {
            remainder.push_back(Term{coef, mono}); // dlex order is preserved
            work.erase(lead);
            continue;
        }

        const Polynomial& g = divisors[k];
        Int qc = cancel_coefficient(ring, coef, g.leading_term().coeff);
        Monomial qm = mono.divided_by(g.leading_term().mono);
        merge(quotients[k], qm, qc);
        // work -= qc * qm * g; the leading term cancels exactly
        for (const auto& t : g.terms()) {
            Int c = ring.neg(ring.mul(qc, t.coeff));
            if (c != 0)
                merge(work, t.mono.times(qm), c);
        }
    }

    DivisionResult result{.quotients = {}, .remainder = Polynomial::from_terms(ring, std::move(remainder))};
    result.quotients.reserve(divisors.size());
    for (auto& q : quotients) {
        std::vector<Term> terms;
        terms.reserve(q.size());
        for (auto& [m, c] : q)
            terms.push_back(Term{std::move(c), m});
        result.quotients.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return result;
}

GroebnerReport is_groebner(std::span<const Polynomial> generators) {
    for (const auto& g : generators) {
        if (g.is_zero())
            throw std::invalid_argument("is_groebner requires nonzero generators");
        (void)unit_leading_inverse(g, "is_groebner");
    }
    GroebnerReport report;
    for (std::size_t i = 0; i + 1 < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            ++report.pairs_checked;
            Polynomial s = s_polynomial(generators[i], generators[j]);
            Polynomial r = divide(s, generators).remainder;
            if (!r.is_zero()) {
                report.is_groebner = false;
                report.failing_pair = FailingPair{static_cast<int>(i + 1),
                                                  static_cast<int>(j + 1), std::move(r)};
                return report;
            }
        }
    report.is_groebner = true;
    return report;
}

bool has_unique_mixed_terms(std::span<const Polynomial> reducers, int degree) {
    if (degree < 2)
        throw std::invalid_argument("the mixed-term test needs d >= 2");
    std::map<Monomial, int, DlexLess> seen;
    for (const auto& p : reducers)
        for (const auto& t : p.terms()) {
            if (t.mono.degree() < degree)
                continue;
            if (++seen[t.mono] > 1)
                return false;
        }
    return true;
}

} // namespace recring
