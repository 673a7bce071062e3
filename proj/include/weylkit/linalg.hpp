#pragma once

#include <cstddef>
#include <vector>

#include "weylkit/charring.hpp"

namespace weylkit {

/// Dense integer matrix, row major.
using IntegerMatrix = std::vector<std::vector<Integer>>;
using IntegerVector = std::vector<Integer>;

/// Rank over Q, by exact rational elimination.
std::size_t rank_exact(const IntegerMatrix& a);

/// Rank modulo the prime 2^61 - 1. Never exceeds the rank over Q, so a full
/// rank result here is a proof of full rank over Q.
std::size_t rank_mod_p(const IntegerMatrix& a);

/// Primitive integer vectors forming a Q-basis of {x : a x = 0}.
std::vector<IntegerVector> kernel_basis(const IntegerMatrix& a, std::size_t cols);

enum class SolveStatus { Unique, Inconsistent, Underdetermined, NonIntegral };

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  IntegerVector x;
};

/// Solves a x = b over Z. Elimination runs modulo a large prime and the
/// candidate is verified exactly; exact rational elimination takes over
/// whenever the modular pass is inconclusive.
SolveResult solve_integer(const IntegerMatrix& a, const IntegerVector& b, std::size_t cols);

/// a * x, exact.
IntegerVector multiply(const IntegerMatrix& a, const IntegerVector& x);

}  // namespace weylkit
