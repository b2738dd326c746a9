#include "recring/sequences.hpp"

#include "recring/intmath.hpp"
#include "recring/parallel.hpp"
#include "recring/ring.hpp"

#include <stdexcept>

namespace recring {

namespace {

void require_nonnegative(long long n) {
    if (n < 0)
        throw std::invalid_argument("sequence index must be >= 0");
}

RingSpec ring_for(SequenceId seq, long long n) {
    RingFamilyTag tag =
        seq == SequenceId::central_binomial ? RingFamilyTag::K : RingFamilyTag::KPrime;
    return make_ring(RingFamily{tag, required_vars(n), std::nullopt});
}

Int expand_and_sum(const RingSpec& ring, const Int& constant, long long n) {
    auto base = Polynomial::from_terms(
        ring.coeff_ring(), {Term{constant, Monomial()}, Term{1, Monomial::variable(1)}});
    return evaluate_all_ones(ring_pow(base, n, ring));
}

} // namespace

Int central_binomial_ring(long long n) {
    require_nonnegative(n);
    if (n == 0)
        return 1;
    return expand_and_sum(ring_for(SequenceId::central_binomial, n), 1, n);
}

Int central_binomial_oracle(long long n) {
    require_nonnegative(n);
    return factorial(2 * n) / (factorial(n) * factorial(n));
}

Int gould_mod2_ring(long long n) {
    require_nonnegative(n);
    if (n == 0)
        return 1;
    RingSpec ring = make_ring(RingFamily{RingFamilyTag::KMod, required_vars(n), Int(2)});
    return expand_and_sum(ring, 1, n);
}

Int gould_signed_ring(long long n) {
    require_nonnegative(n);
    if (n == 0)
        return 1;
    return expand_and_sum(ring_for(SequenceId::gould, n), 1, n);
}

Int gould_oracle(long long n) {
    require_nonnegative(n);
    return pow2(hamming_weight(n));
}

Int binomial_transform_direct(std::span<const Int> a, long long t, std::size_t n) {
    if (a.size() < n + 1)
        throw std::invalid_argument("binomial transform needs terms a_0..a_n");
    std::vector<Int> level(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n + 1));
    const bool inverse = t < 0;
    for (long long step = 0; step < (t < 0 ? -t : t); ++step) {
        std::vector<Int> next(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            Int sum = 0;
            for (std::size_t j = 0; j <= k; ++j) {
                Int term = binomial(static_cast<long long>(k), static_cast<long long>(j)) *
                           level[j];
                if (inverse && ((k - j) % 2 == 1))
                    sum -= term;
                else
                    sum += term;
            }
            next[k] = std::move(sum);
        }
        level = std::move(next);
    }
    return level[n];
}

Int transform_ring(SequenceId seq, long long t, long long n) {
    require_nonnegative(n);
    if (n == 0)
        return 1;
    return expand_and_sum(ring_for(seq, n), Int(t) + 1, n);
}

std::vector<Int> sequence_range(SequenceId seq, SeqMethod method, long long from, long long to) {
    if (from < 0 || to < from)
        throw std::invalid_argument("sequence range must satisfy 0 <= from <= to");
    if (seq == SequenceId::central_binomial &&
        (method == SeqMethod::mod2 || method == SeqMethod::signed_))
        throw std::invalid_argument("methods mod2/signed apply to gould only");
    auto term = [seq, method](long long n) -> Int {
        switch (method) {
        case SeqMethod::oracle:
            return seq == SequenceId::central_binomial ? central_binomial_oracle(n)
                                                       : gould_oracle(n);
        case SeqMethod::mod2:
            return gould_mod2_ring(n);
        case SeqMethod::signed_:
            return gould_signed_ring(n);
        case SeqMethod::ring:
        default:
            return seq == SequenceId::central_binomial ? central_binomial_ring(n)
                                                       : gould_signed_ring(n);
        }
    };
    return parallel_map_range<Int>(from, to, term);
}

std::vector<Int> transform_range(SequenceId seq, long long t, TransformMethod method,
                                 long long from, long long to) {
    if (from < 0 || to < from)
        throw std::invalid_argument("transform range must satisfy 0 <= from <= to");
    if (method == TransformMethod::ring)
        return parallel_map_range<Int>(from, to,
                                       [seq, t](long long n) { return transform_ring(seq, t, n); });
    std::vector<Int> base;
    base.reserve(static_cast<std::size_t>(to + 1));
    for (long long k = 0; k <= to; ++k)
        base.push_back(seq == SequenceId::central_binomial ? central_binomial_oracle(k)
                                                           : gould_oracle(k));
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(to - from + 1));
    for (long long n = from; n <= to; ++n)
        out.push_back(binomial_transform_direct(base, t, static_cast<std::size_t>(n)));
    return out;
}

} // namespace recring
