#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arbkk {

using Int = mpz_class;
using Rat = mpq_class;  // always canonical: lowest terms, positive denominator
using RatVector = std::vector<Rat>;
using LatticeVector = std::vector<std::int64_t>;

/// num/den in lowest terms; throws DomainError when den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Parses "a" or "a/b" with optional leading sign.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& q);
std::string to_string(const Int& z);

RatVector to_rat(const LatticeVector& v);
bool is_integral(const RatVector& v);

Rat dot(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const RatVector& a, const Rat& s);
RatVector zeros(std::size_t n);

Int factorial(unsigned n);

/// Nearest multiple of 2^-bits below (or above) `value`; exact dyadic result.
Rat dyadic_floor(double value, int bits);
Rat dyadic_ceil(double value, int bits);
Rat dyadic_floor(const Rat& value, int bits);
Rat dyadic_ceil(const Rat& value, int bits);

/// Rank of a list of row vectors (exact).
int rank(std::vector<RatVector> rows);
int rank(std::vector<std::vector<Int>> rows);

/// Determinant of a square matrix (exact).
Rat determinant(std::vector<RatVector> m);

/// Solves the square system m x = b exactly; throws DomainError if singular.
RatVector solve(std::vector<RatVector> m, RatVector b);

/// Integer determinant by fraction-free elimination.
Int determinant(std::vector<std::vector<Int>> m);

}  // namespace arbkk
