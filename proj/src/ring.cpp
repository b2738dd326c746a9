#include "recring/ring.hpp"

#include "recring/errors.hpp"

#include <bit>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace recring {

namespace {

// Rewrites are bounded so that reducer tables that keep regenerating
// their own input (possible when order_compatible() is false) surface as
// an error instead of a hang. The heaviest legitimate reductions in the
// built-in families stay below ~25k steps.
constexpr std::size_t kRewriteBudget = 2'000'000;

} // namespace

RingSpec::RingSpec(int num_vars, int degree, std::vector<Polynomial> reducers,
                   CoefficientRing coeff_ring)
    : num_vars_(num_vars),
      degree_(degree),
      reducers_(std::move(reducers)),
      coeff_ring_(std::move(coeff_ring)),
      order_compatible_(true) {
    if (num_vars_ < 1)
        throw std::invalid_argument("a quotient ring needs at least one variable");
    if (degree_ < 2)
        throw std::invalid_argument("reduction degree must be at least 2");
    if (reducers_.size() != static_cast<std::size_t>(num_vars_))
        throw std::invalid_argument("expected one reducer per variable");
    if (!reducers_.back().is_zero())
        throw std::invalid_argument("the terminal reducer P_n must be zero");
    for (int i = 1; i <= num_vars_; ++i) {
        const Polynomial& p = reducers_[static_cast<std::size_t>(i - 1)];
        if (p.ring() != coeff_ring_)
            throw std::invalid_argument("reducer coefficients must live in the ring's "
                                        "coefficient ring");
        Monomial lead = Monomial::variable(i, degree_);
        for (const auto& t : p.terms()) {
            if (t.mono.max_index() > num_vars_)
                throw std::invalid_argument("reducer uses a variable outside 1..n");
            if (t.mono.max_exponent() >= degree_)
                throw std::invalid_argument("reducers must be in normal form "
                                            "(every exponent below d)");
            if (!dlex_less(t.mono, lead))
                order_compatible_ = false;
        }
    }
}

const Polynomial& RingSpec::reducer(int index) const {
    if (index < 1 || index > num_vars_)
        throw std::invalid_argument("reducer index out of range");
    return reducers_[static_cast<std::size_t>(index - 1)];
}

RingSpec make_ring(const RingFamily& family) {
    if (family.num_vars < 1)
        throw std::invalid_argument("a ring family needs at least one variable");
    CoefficientRing ring = CoefficientRing::integers();
    Int slope = 2;
    switch (family.tag) {
    case RingFamilyTag::K:
        break;
    case RingFamilyTag::KPrime:
        slope = -2;
        break;
    case RingFamilyTag::KMod:
        if (!family.modulus)
            throw std::invalid_argument("family KMod requires a modulus");
        ring = CoefficientRing::integers_mod(*family.modulus);
        break;
    }
    if (family.tag != RingFamilyTag::KMod && family.modulus)
        throw std::invalid_argument("only family KMod takes a modulus");

    const int n = family.num_vars;
    std::vector<Polynomial> reducers;
    reducers.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i)
        reducers.push_back(Polynomial::from_terms(
            ring, {Term{slope, Monomial::variable(i)}, Term{1, Monomial::variable(i + 1)}}));
    reducers.push_back(Polynomial::zero(ring));
    return RingSpec(n, 2, std::move(reducers), ring);
}

int required_vars(long long n) {
    if (n <= 0)
        throw std::invalid_argument("required_vars needs a positive term index");
    return std::bit_width(static_cast<unsigned long long>(n)) + 1; // floor(log2 n) + 2
}

Polynomial reduce(const Polynomial& p, const RingSpec& ring) {
    if (p.ring() != ring.coeff_ring())
        throw std::invalid_argument("polynomial coefficients do not match the ring");
    const auto& coeff = ring.coeff_ring();
    const int d = ring.degree();

    auto offending = [d](const Monomial& m) { return m.max_exponent() >= d; };
    for (const auto& t : p.terms())
        if (t.mono.max_index() > ring.num_vars())
            throw std::invalid_argument("variable index out of range for this ring");

    std::map<Monomial, Int, DlexGreater> done;
    std::map<Monomial, Int, DlexGreater> pending; // offending monomials only
    auto put = [&](auto& table, const Monomial& m, const Int& c) {
        auto [it, inserted] = table.try_emplace(m, c);
        if (!inserted) {
            it->second = coeff.add(it->second, c);
            if (it->second == 0)
                table.erase(it);
        }
    };
    for (const auto& t : p.terms())
        put(offending(t.mono) ? pending : done, t.mono, t.coeff);

    std::size_t steps = 0;
    while (!pending.empty()) {
        if (++steps > kRewriteBudget)
            throw reduction_limit_exceeded("rewriting exceeded its step budget; the reducer "
                                           "table does not terminate on this input");
        auto node = pending.extract(pending.begin()); // dlex-greatest offending term
        const Monomial mono = std::move(node.key());
        const Int coef = std::move(node.mapped());

        int var = 0;
        for (const auto& [index, exp] : mono.factors())
            if (exp >= d) {
                var = index;
                break;
            }
        Monomial rest = mono.without_power(var, d);
        const Polynomial& replacement = ring.reducer(var);
        for (const auto& t : replacement.terms()) {
            Monomial m = t.mono.times(rest);
            assert(!ring.order_compatible() || dlex_less(m, mono));
            Int c = coeff.mul(coef, t.coeff);
            if (c != 0)
                put(offending(m) ? pending : done, m, c);
        }
    }

    std::vector<Term> out;
    out.reserve(done.size());
    for (auto& [mono, c] : done)
        out.push_back(Term{std::move(c), mono});
    return Polynomial::from_terms(coeff, std::move(out));
}

Polynomial ring_mul(const Polynomial& p, const Polynomial& q, const RingSpec& ring) {
    return reduce(mul(p, q), ring);
}

Polynomial ring_pow(const Polynomial& base, long long exp, const RingSpec& ring) {
    if (exp < 0)
        throw std::invalid_argument("negative exponents are not defined in the quotient");
    if (exp == 0)
        return Polynomial::constant(ring.coeff_ring(), 1);
    Polynomial acc = reduce(base, ring);
    const auto bits = static_cast<unsigned long long>(exp);
    for (int b = std::bit_width(bits) - 2; b >= 0; --b) {
        acc = ring_mul(acc, acc, ring);
        if ((bits >> b) & 1ull)
            acc = ring_mul(acc, base, ring);
    }
    return acc;
}

std::vector<Polynomial> ideal_generators(const RingSpec& ring) {
    std::vector<Polynomial> gens;
    gens.reserve(static_cast<std::size_t>(ring.num_vars()));
    for (int i = 1; i <= ring.num_vars(); ++i) {
        std::vector<Term> terms{Term{1, Monomial::variable(i, ring.degree())}};
        for (const auto& t : ring.reducer(i).terms())
            terms.push_back(Term{ring.coeff_ring().neg(t.coeff), t.mono});
        gens.push_back(Polynomial::from_terms(ring.coeff_ring(), std::move(terms)));
    }
    return gens;
}

} // namespace recring
