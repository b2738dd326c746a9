#ifndef RECRING_ERRORS_HPP
#define RECRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recring {

/// Raised by multivariate division when a leading coefficient cannot be
/// cancelled exactly in the coefficient ring.
struct division_blocked : std::runtime_error {
    explicit division_blocked(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when rewriting exceeds its step budget. Reducer tables whose
/// right-hand sides are not order-compatible with the ideal's leading
/// terms can rewrite forever; the budget turns that into an error.
struct reduction_limit_exceeded : std::runtime_error {
    explicit reduction_limit_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace recring

#endif
