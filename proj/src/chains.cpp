#include "recring/chains.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace recring {

namespace {

int max_variable_index(std::span<const Polynomial> generators) {
    int n = 0;
    for (const auto& g : generators)
        for (const auto& t : g.terms())
            n = std::max(n, t.mono.max_index());
    return n;
}

// Chain level of a generator under the given order: the highest position
// (1-based) among its variables, 0 for constants.
std::size_t level_of(const Polynomial& g, const std::vector<std::size_t>& position) {
    std::size_t level = 0;
    for (const auto& t : g.terms())
        for (const auto& [index, exp] : t.mono.factors())
            level = std::max(level, position[static_cast<std::size_t>(index)]);
    return level;
}

bool try_order(std::span<const Polynomial> generators, const std::vector<int>& order,
               TriangularResult& out) {
    std::vector<std::size_t> position(static_cast<std::size_t>(max_variable_index(generators)) + 1, 0);
    for (std::size_t k = 0; k < order.size(); ++k)
        position[static_cast<std::size_t>(order[k])] = k + 1;

    std::vector<std::pair<std::size_t, std::size_t>> levels; // (level, generator index)
    for (std::size_t g = 0; g < generators.size(); ++g)
        levels.emplace_back(level_of(generators[g], position), g);
    std::stable_sort(levels.begin(), levels.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < levels.size(); ++k)
        if (levels[k].first > k + 1)
            return false;

    out.triangular = true;
    out.variable_order = order;
    out.arrangement.clear();
    for (const auto& [level, g] : levels)
        out.arrangement.push_back(g);
    return true;
}

// Leading coefficient of g with respect to variable v: the terms holding
// the highest power of v, with that power removed.
Polynomial leading_coefficient_in(const Polynomial& g, int v) {
    std::int64_t top = 0;
    for (const auto& t : g.terms())
        top = std::max(top, t.mono.exponent(v));
    std::vector<Term> terms;
    for (const auto& t : g.terms())
        if (t.mono.exponent(v) == top)
            terms.push_back(Term{t.coeff, top > 0 ? t.mono.without_power(v, top) : t.mono});
    return Polynomial::from_terms(g.ring(), std::move(terms));
}

} // namespace

TriangularResult check_triangular(std::span<const Polynomial> generators) {
    const int n = max_variable_index(generators);
    std::vector<int> ascending(static_cast<std::size_t>(n));
    std::iota(ascending.begin(), ascending.end(), 1);
    std::vector<int> reversed(ascending.rbegin(), ascending.rend());

    TriangularResult result;
    if (try_order(generators, ascending, result))
        return result;
    if (try_order(generators, reversed, result))
        return result;
    return result;
}

Regularity check_leading_regular(std::span<const Polynomial> generators,
                                 const TriangularResult& triangular) {
    if (!triangular.triangular)
        return Regularity::undetermined;
    std::vector<std::size_t> position(
        static_cast<std::size_t>(max_variable_index(generators)) + 1, 0);
    for (std::size_t k = 0; k < triangular.variable_order.size(); ++k)
        position[static_cast<std::size_t>(triangular.variable_order[k])] = k + 1;

    bool any_undetermined = false;
    for (const auto& g : generators) {
        if (g.is_zero())
            return Regularity::zero_divisor;
        std::size_t level = level_of(g, position);
        Polynomial lc = level == 0
                            ? g // a constant generator is its own leading coefficient
                            : leading_coefficient_in(g, triangular.variable_order[level - 1]);
        if (lc.term_count() == 1 && lc.terms().front().mono.is_one()) {
            if (!g.ring().is_regular(lc.terms().front().coeff))
                return Regularity::zero_divisor;
        } else {
            any_undetermined = true;
        }
    }
    return any_undetermined ? Regularity::undetermined : Regularity::regular;
}

Regularity check_leading_regular(std::span<const Polynomial> generators) {
    return check_leading_regular(generators, check_triangular(generators));
}

bool check_zero_dimensional(std::span<const Polynomial> generators, bool groebner_certified) {
    if (!groebner_certified)
        throw std::invalid_argument("zero-dimensionality needs a certified Groebner basis");
    const int n = max_variable_index(generators);
    std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
    for (const auto& g : generators) {
        if (g.is_zero())
            continue;
        const Monomial& lm = g.leading_term().mono;
        if (lm.is_one())
            return true; // a unit leading monomial collapses the quotient
        if (lm.factors().size() == 1)
            covered[static_cast<std::size_t>(lm.factors().front().first)] = true;
    }
    for (int i = 1; i <= n; ++i)
        if (!covered[static_cast<std::size_t>(i)])
            return false;
    return true;
}

ChainReport is_regular_chain(std::span<const Polynomial> generators) {
    ChainReport report;
    TriangularResult tri = check_triangular(generators);
    report.triangular = tri.triangular;
    if (tri.triangular)
        report.variable_order = tri.variable_order;
    report.leading_regular = check_leading_regular(generators, tri);

    try {
        GroebnerReport gb = is_groebner(generators);
        report.groebner_certified = gb.is_groebner;
    } catch (const std::exception&) {
        report.groebner_certified = false; // zero or non-unit-lead generators
    }
    report.zero_dimensional =
        report.groebner_certified && check_zero_dimensional(generators, true);

    report.is_regular_chain = report.triangular &&
                              report.leading_regular == Regularity::regular &&
                              report.zero_dimensional;
    return report;
}

} // namespace recring
