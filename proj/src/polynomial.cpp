#include "recring/polynomial.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <sstream>
#include <stdexcept>

namespace recring {

namespace {

void require_same_ring(const Polynomial& p, const Polynomial& q) {
    if (p.ring() != q.ring())
        throw std::invalid_argument("coefficient ring mismatch: " + p.ring().describe() +
                                    " vs " + q.ring().describe());
}

} // namespace

// Trusted constructor for callers that already hold a canonical term list.
Polynomial make_canonical_unchecked(CoefficientRing ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::constant(CoefficientRing ring, Int value) {
    return from_terms(std::move(ring), {Term{std::move(value), Monomial()}});
}

Polynomial Polynomial::variable(CoefficientRing ring, int index, std::int64_t exponent) {
    return from_terms(std::move(ring), {Term{1, Monomial::variable(index, exponent)}});
}

Polynomial Polynomial::from_terms(CoefficientRing ring, std::vector<Term> terms) {
    for (auto& t : terms)
        t.coeff = ring.normalize(std::move(t.coeff));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return dlex_greater(a.mono, b.mono); });
    std::vector<Term> canonical;
    canonical.reserve(terms.size());
    for (auto& t : terms) {
        if (!canonical.empty() && canonical.back().mono == t.mono)
            canonical.back().coeff = ring.add(canonical.back().coeff, t.coeff);
        else
            canonical.push_back(std::move(t));
        if (!canonical.empty() && canonical.back().coeff == 0)
            canonical.pop_back();
    }
    return make_canonical_unchecked(std::move(ring), std::move(canonical));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty())
        throw std::invalid_argument("the zero polynomial has no leading term");
    return terms_.front();
}

std::int64_t Polynomial::total_degree() const {
    return terms_.empty() ? -1 : terms_.front().mono.degree();
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p, q);
    const auto& ring = p.ring();
    std::vector<Term> out;
    out.reserve(p.terms().size() + q.terms().size());
    auto pi = p.terms().begin(), pe = p.terms().end();
    auto qi = q.terms().begin(), qe = q.terms().end();
    while (pi != pe && qi != qe) {
        Ordering ord = dlex_compare(pi->mono, qi->mono);
        if (ord == Ordering::greater) {
            out.push_back(*pi++);
        } else if (ord == Ordering::less) {
            out.push_back(*qi++);
        } else {
            Int c = ring.add(pi->coeff, qi->coeff);
            if (c != 0)
                out.push_back(Term{std::move(c), pi->mono});
            ++pi;
            ++qi;
        }
    }
    out.insert(out.end(), pi, pe);
    out.insert(out.end(), qi, qe);
    return make_canonical_unchecked(ring, std::move(out));
}

Polynomial neg(const Polynomial& p) {
    const auto& ring = p.ring();
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms())
        out.push_back(Term{ring.neg(t.coeff), t.mono});
    return make_canonical_unchecked(ring, std::move(out));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, neg(q)); }

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p, q);
    const auto& ring = p.ring();
    if (p.is_zero() || q.is_zero())
        return Polynomial::zero(ring);
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    acc.reserve(p.terms().size() + q.terms().size());
    for (const auto& a : p.terms())
        for (const auto& b : q.terms()) {
            Int c = ring.mul(a.coeff, b.coeff);
            if (c == 0)
                continue;
            auto [it, inserted] = acc.try_emplace(a.mono.times(b.mono), std::move(c));
            if (!inserted)
                it->second = ring.add(it->second, c);
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [mono, coeff] : acc)
        if (coeff != 0)
            out.push_back(Term{std::move(coeff), mono});
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return dlex_greater(a.mono, b.mono); });
    return make_canonical_unchecked(ring, std::move(out));
}

Polynomial mul_term(const Polynomial& p, const Int& coeff, const Monomial& mono) {
    const auto& ring = p.ring();
    Int c = ring.normalize(coeff);
    if (c == 0)
        return Polynomial::zero(ring);
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Int pc = ring.mul(t.coeff, c);
        if (pc != 0)
            out.push_back(Term{std::move(pc), t.mono.times(mono)});
    }
    // multiplying by a fixed monomial preserves the dlex order
    return make_canonical_unchecked(ring, std::move(out));
}

Int evaluate_all_ones(const Polynomial& p) {
    Int sum = 0;
    for (const auto& t : p.terms())
        sum += t.coeff;
    return sum;
}

Polynomial map_coefficients(const Polynomial& p, const CoefficientRing& target) {
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Int c = target.normalize(t.coeff); // stored residues are already canonical lifts
        if (c != 0)
            out.push_back(Term{std::move(c), t.mono});
    }
    return make_canonical_unchecked(target, std::move(out));
}

std::string to_text(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::vector<const Term*> order;
    order.reserve(p.terms().size());
    for (const auto& t : p.terms())
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const Term* a, const Term* b) { return display_less(a->mono, b->mono); });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : order) {
        if (!first)
            os << " + ";
        first = false;
        if (t->mono.is_one()) {
            os << t->coeff;
        } else {
            bool star = false;
            if (t->coeff != 1) {
                os << t->coeff;
                star = true;
            }
            for (const auto& [index, exp] : t->mono.factors())
                for (std::int64_t k = 0; k < exp; ++k) {
                    if (star)
                        os << "*";
                    os << "x" << index;
                    star = true;
                }
        }
    }
    return os.str();
}

} // namespace recring
