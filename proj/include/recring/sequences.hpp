#ifndef RECRING_SEQUENCES_HPP
#define RECRING_SEQUENCES_HPP

#include "recring/coeff.hpp"

#include <span>
#include <vector>

namespace recring {

enum class SequenceId { central_binomial, gould };

/// How a sequence term is produced.
enum class SeqMethod {
    ring,   // quotient-ring expansion (K for cbc; alias of `signed` for gould)
    oracle, // closed-form reference value
    mod2,   // gould only: expansion over Z/2Z, coefficients lifted and summed
    signed_ // gould only: expansion in the sign-flipped ring over Z
};

/// C(2n, n) via expansion of (1 + x1)^n in the family-K ring sized with
/// required_vars(n); n = 0 yields 1 directly.
Int central_binomial_ring(long long n);

/// C(2n, n) = (2n)! / (n!)^2, exactly.
Int central_binomial_oracle(long long n);

/// Gould term via (1 + x1)^n over Z/2Z, lifted coefficients summed in Z.
Int gould_mod2_ring(long long n);

/// Gould term via (1 + x1)^n in the sign-flipped family over Z.
Int gould_signed_ring(long long n);

/// 2^wt(n), with wt the binary Hamming weight.
Int gould_oracle(long long n);

/// The t-th binomial transform of a at index n, evaluated level by level
/// from the recursive definition: t = 0 is the identity, positive t
/// applies the forward sum t times, negative t the alternating inverse
/// sum. Needs terms a_0..a_n.
Int binomial_transform_direct(std::span<const Int> a, long long t, std::size_t n);

/// The same transform read off the quotient ring: expand
/// (t + 1 + x1)^n in the base sequence's ring and sum the coefficients.
Int transform_ring(SequenceId seq, long long t, long long n);

/// Terms from..to of a sequence under the chosen method, computed in
/// parallel (pure per-index work) and assembled in index order.
std::vector<Int> sequence_range(SequenceId seq, SeqMethod method, long long from, long long to);

/// Transform terms from..to, either through the ring route or the direct
/// recursion over oracle base terms.
enum class TransformMethod { ring, direct };
std::vector<Int> transform_range(SequenceId seq, long long t, TransformMethod method,
                                 long long from, long long to);

} // namespace recring

#endif
