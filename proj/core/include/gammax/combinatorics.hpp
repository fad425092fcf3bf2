#pragma once

#include <cstddef>

#include "gammax/rational.hpp"

namespace gammax {

/// Generalized binomial coefficient r(r-1)...(r-k+1)/k!; equals 1 for k = 0.
Rational binomial_general(const Rational& r, std::size_t k);

/// Bernoulli number B_n with the B_1 = -1/2 convention.
///
/// Computed from the defining recurrence sum_{j<=n} C(n+1, j) B_j = 0 and
/// memoized. Thread-safe.
Rational bernoulli(std::size_t n);

}  // namespace gammax
