#include "recring/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace recring {

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    for (const auto& [index, exp] : factors) {
        if (index < 1)
            throw std::invalid_argument("variable index must be >= 1");
        if (exp < 0)
            throw std::invalid_argument("exponent must be >= 0");
    }
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [index, exp] : factors) {
        if (exp == 0)
            continue;
        if (!m.factors_.empty() && m.factors_.back().first == index)
            m.factors_.back().second += exp;
        else
            m.factors_.emplace_back(index, exp);
        m.degree_ += exp;
    }
    return m;
}

Monomial Monomial::variable(int index, std::int64_t exponent) {
    return from_factors({{index, exponent}});
}

std::int64_t Monomial::exponent(int index) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), index,
                               [](const Factor& f, int i) { return f.first < i; });
    return (it != factors_.end() && it->first == index) ? it->second : 0;
}

std::int64_t Monomial::max_exponent() const {
    std::int64_t best = 0;
    for (const auto& [index, exp] : factors_)
        best = std::max(best, exp);
    return best;
}

bool Monomial::divides(const Monomial& other) const {
    auto oi = other.factors_.begin();
    for (const auto& [index, exp] : factors_) {
        while (oi != other.factors_.end() && oi->first < index)
            ++oi;
        if (oi == other.factors_.end() || oi->first != index || oi->second < exp)
            return false;
    }
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto ai = factors_.begin(), ae = factors_.end();
    auto bi = other.factors_.begin(), be = other.factors_.end();
    while (ai != ae && bi != be) {
        if (ai->first < bi->first)
            out.factors_.push_back(*ai++);
        else if (bi->first < ai->first)
            out.factors_.push_back(*bi++);
        else {
            out.factors_.emplace_back(ai->first, ai->second + bi->second);
            ++ai;
            ++bi;
        }
    }
    out.factors_.insert(out.factors_.end(), ai, ae);
    out.factors_.insert(out.factors_.end(), bi, be);
    out.degree_ = degree_ + other.degree_;
    return out;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
    if (!divisor.divides(*this))
        throw std::invalid_argument("monomial quotient is not exact");
    Monomial out;
    auto di = divisor.factors_.begin(), de = divisor.factors_.end();
    for (const auto& [index, exp] : factors_) {
        std::int64_t drop = 0;
        while (di != de && di->first < index)
            ++di;
        if (di != de && di->first == index)
            drop = di->second;
        if (exp - drop > 0)
            out.factors_.emplace_back(index, exp - drop);
    }
    out.degree_ = degree_ - divisor.degree_;
    return out;
}

Monomial Monomial::without_power(int index, std::int64_t count) const {
    Monomial out;
    bool done = false;
    for (const auto& [i, exp] : factors_) {
        if (i == index) {
            if (exp < count)
                throw std::invalid_argument("monomial lacks the requested power");
            if (exp > count)
                out.factors_.emplace_back(i, exp - count);
            done = true;
        } else {
            out.factors_.emplace_back(i, exp);
        }
    }
    if (!done)
        throw std::invalid_argument("monomial lacks the requested power");
    out.degree_ = degree_ - count;
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ai = a.factors_.begin(), ae = a.factors_.end();
    auto bi = b.factors_.begin(), be = b.factors_.end();
    while (ai != ae && bi != be) {
        if (ai->first < bi->first)
            out.factors_.push_back(*ai++);
        else if (bi->first < ai->first)
            out.factors_.push_back(*bi++);
        else {
            out.factors_.emplace_back(ai->first, std::max(ai->second, bi->second));
            ++ai;
            ++bi;
        }
    }
    out.factors_.insert(out.factors_.end(), ai, ae);
    out.factors_.insert(out.factors_.end(), bi, be);
    for (const auto& [index, exp] : out.factors_)
        out.degree_ += exp;
    return out;
}

Ordering dlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? Ordering::less : Ordering::greater;
    auto ai = a.factors().begin(), ae = a.factors().end();
    auto bi = b.factors().begin(), be = b.factors().end();
    while (ai != ae && bi != be) {
        if (ai->first != bi->first) // positive exponent on the lower index wins
            return ai->first < bi->first ? Ordering::greater : Ordering::less;
        if (ai->second != bi->second)
            return ai->second > bi->second ? Ordering::greater : Ordering::less;
        ++ai;
        ++bi;
    }
    return Ordering::equal; // equal degrees force both lists exhausted
}

bool display_less(const Monomial& a, const Monomial& b) {
    auto ai = a.factors().rbegin(), ae = a.factors().rend();
    auto bi = b.factors().rbegin(), be = b.factors().rend();
    while (ai != ae && bi != be) {
        if (ai->first != bi->first)
            return ai->first < bi->first;
        if (ai->second != bi->second)
            return ai->second < bi->second;
        ++ai;
        ++bi;
    }
    return ai == ae && bi != be;
}

} // namespace recring
