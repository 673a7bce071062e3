#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weylkit/charring.hpp"
#include "weylkit/hecke.hpp"

namespace weylkit {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Seeded generator for test inputs. Identical seeds give identical streams
/// on a given standard library.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Weight weight(std::size_t rank, std::int64_t radius);
  /// Up to `terms` monomials with weights in [-radius, radius]^rank and
  /// nonzero coefficients in [-coeff, coeff].
  CharElt element(std::size_t rank, std::size_t terms, std::int64_t radius = 5,
                  std::int64_t coeff = 9);
  /// A short random operator expression over d, dp, w and m[e^mu].
  OpExpr operator_expr(std::size_t rank);

 private:
  std::mt19937_64 rng_;
};

struct SuiteResult {
  std::string type;
  std::string suite;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
};

struct SelftestOptions {
  std::vector<std::string> types;
  std::uint64_t seed = kDefaultSeed;
  /// Random inputs per property.
  std::size_t samples = 25;
};

/// Runs the rootdata, weyl, charring, demazure, hecke, repring and covers
/// suites for every type. Suite failures (including thrown errors) are
/// collected, not propagated.
std::vector<SuiteResult> run_selftest(const SelftestOptions& opts);

/// Deterministic text report, without timings.
std::string format_report(const std::vector<SuiteResult>& results, std::uint64_t seed);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace weylkit
