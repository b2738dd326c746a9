#include "recring/sequences.hpp"

#include "recring/intmath.hpp"
#include "recring/polynomial.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace recring;

namespace {

std::vector<Int> oracle_terms(SequenceId seq, long long upto) {
    std::vector<Int> out;
    for (long long n = 0; n <= upto; ++n)
        out.push_back(seq == SequenceId::central_binomial ? central_binomial_oracle(n)
                                                          : gould_oracle(n));
    return out;
}

} // namespace

TEST_CASE("central binomial terms through the ring") {
    CHECK(central_binomial_ring(6) == 924);
    CHECK(central_binomial_ring(0) == 1);
    CHECK(central_binomial_ring(13) == 10400600);
}

TEST_CASE("central binomial oracle") {
    CHECK(central_binomial_oracle(4) == 70);
    CHECK(central_binomial_oracle(0) == 1);

    // independent multiplicative recurrence as a second route
    Int c = 1;
    for (long long k = 0; k <= 64; ++k) {
        CHECK(central_binomial_oracle(k) == c);
        c = c * 2 * (2 * k + 1) / (k + 1);
    }
    // value at n=64 frozen from the recurrence route (about 2.4e37)
    CHECK(central_binomial_oracle(64).str() ==
          "23951146041928082866135587776380551750");
}

TEST_CASE("gould terms through both rings and the weight oracle") {
    CHECK(gould_mod2_ring(7) == 8);
    CHECK(gould_mod2_ring(8) == 2);
    CHECK(gould_mod2_ring(0) == 1);

    CHECK(gould_signed_ring(5) == 4);
    CHECK(gould_signed_ring(15) == 16);
    CHECK(gould_signed_ring(1) == 2);

    CHECK(gould_oracle(0) == 1);
    CHECK(gould_oracle(7) == 8);
    for (int k = 0; k <= 20; ++k)
        CHECK(gould_oracle(1ll << k) == 2);
}

TEST_CASE("the three gould routes agree") {
    for (long long n = 0; n <= 128; ++n) {
        Int expected = gould_oracle(n);
        CHECK(gould_mod2_ring(n) == expected);
        CHECK(gould_signed_ring(n) == expected);
    }
}

TEST_CASE("ring route equals the factorial oracle") {
    for (long long n = 0; n <= 40; ++n)
        CHECK(central_binomial_ring(n) == central_binomial_oracle(n));
}

TEST_CASE("direct binomial transform follows the recursive definition") {
    auto cbc = oracle_terms(SequenceId::central_binomial, 8);
    CHECK(binomial_transform_direct(cbc, 1, 3) == 45);
    CHECK(binomial_transform_direct(cbc, 0, 5) == cbc[5]);

    auto gould = oracle_terms(SequenceId::gould, 8);
    CHECK(binomial_transform_direct(gould, 1, 5) == 85);

    CHECK_THROWS_AS(binomial_transform_direct(std::vector<Int>{1, 2}, 1, 5),
                    std::invalid_argument);
}

TEST_CASE("direct transform agrees with the closed form for small |t|") {
    std::mt19937_64 rng(0xC0FFEE11);
    std::uniform_int_distribution<long long> value(-50, 50);
    for (long long t = -3; t <= 3; ++t)
        for (int round = 0; round < 6; ++round) {
            std::vector<Int> a;
            for (int k = 0; k < 12; ++k)
                a.push_back(value(rng));
            for (std::size_t n = 0; n < a.size(); ++n) {
                Int closed = 0;
                for (std::size_t k = 0; k <= n; ++k) {
                    Int tp = 1;
                    for (std::size_t e = 0; e < n - k; ++e)
                        tp *= t;
                    closed += binomial(static_cast<long long>(n),
                                       static_cast<long long>(k)) *
                              tp * a[k];
                }
                CHECK(binomial_transform_direct(a, t, n) == closed);
            }
        }
}

TEST_CASE("transform through the ring") {
    CHECK(transform_ring(SequenceId::central_binomial, 1, 5) == 873);
    CHECK(transform_ring(SequenceId::gould, 1, 8) == 839);
    CHECK(transform_ring(SequenceId::central_binomial, 0, 9) == 48620);
}

TEST_CASE("ring and direct transforms agree for small t") {
    auto cbc = oracle_terms(SequenceId::central_binomial, 16);
    auto gould = oracle_terms(SequenceId::gould, 16);
    for (long long t : {-2ll, -1ll, 0ll, 1ll, 2ll, 3ll})
        for (long long n = 0; n <= 16; ++n) {
            CHECK(transform_ring(SequenceId::central_binomial, t, n) ==
                  binomial_transform_direct(cbc, t, static_cast<std::size_t>(n)));
            CHECK(transform_ring(SequenceId::gould, t, n) ==
                  binomial_transform_direct(gould, t, static_cast<std::size_t>(n)));
        }
}

TEST_CASE("inverse transform undoes the forward transform") {
    std::mt19937_64 rng(0xC0FFEE12);
    std::uniform_int_distribution<long long> value(-99, 99);
    std::uniform_int_distribution<int> length(1, 24);
    for (int round = 0; round < 25; ++round) {
        const int len = length(rng);
        std::vector<Int> a;
        for (int k = 0; k < len; ++k)
            a.push_back(value(rng));
        std::vector<Int> forward;
        for (int n = 0; n < len; ++n)
            forward.push_back(binomial_transform_direct(a, 1, static_cast<std::size_t>(n)));
        for (int n = 0; n < len; ++n) {
            CHECK(binomial_transform_direct(forward, -1, static_cast<std::size_t>(n)) ==
                  a[static_cast<std::size_t>(n)]);
            CHECK(binomial_transform_direct(a, 0, static_cast<std::size_t>(n)) ==
                  a[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("gould divides the central binomial coefficients exactly") {
    for (long long n = 1; n <= 128; ++n) {
        Int c = central_binomial_oracle(n);
        Int g = gould_oracle(n);
        CHECK(c % g == 0);
        CHECK((c / g) % 2 == 1); // g is the full power of two in c
    }
}

TEST_CASE("gould counts the odd coefficients of a univariate expansion") {
    const auto Z = CoefficientRing::integers();
    Polynomial base = Polynomial::from_terms(
        Z, {Term{1, Monomial()}, Term{1, Monomial::variable(1)}});
    Polynomial power = Polynomial::constant(Z, 1);
    for (long long n = 0; n <= 128; ++n) {
        int odd = 0;
        for (const auto& t : power.terms())
            if (t.coeff % 2 != 0)
                ++odd;
        CHECK(gould_oracle(n) == odd);
        power = mul(power, base); // free ring, one variable
    }
}

TEST_CASE("range helpers assemble terms in order") {
    auto ring_terms = sequence_range(SequenceId::central_binomial, SeqMethod::ring, 0, 10);
    auto oracle_vals = sequence_range(SequenceId::central_binomial, SeqMethod::oracle, 0, 10);
    CHECK(ring_terms == oracle_vals);

    auto direct = transform_range(SequenceId::gould, 1, TransformMethod::direct, 0, 8);
    auto ring = transform_range(SequenceId::gould, 1, TransformMethod::ring, 0, 8);
    CHECK(direct == ring);

    CHECK_THROWS_AS(sequence_range(SequenceId::central_binomial, SeqMethod::mod2, 0, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(sequence_range(SequenceId::gould, SeqMethod::oracle, 4, 2),
                    std::invalid_argument);
}
