#pragma once

#include <utility>
#include <vector>

#include "arbkk/rational.hpp"

namespace arbkk {

/// Prime factorization of n >= 1 as ascending (prime, exponent) pairs.
/// Results are cached process-wide.
std::vector<std::pair<Int, unsigned long>> factorize(const Int& n);

bool is_prime(const Int& n);

}  // namespace arbkk
