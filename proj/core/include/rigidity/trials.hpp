#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/identities.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct TrialConfig {
  std::size_t trials = 10'000;
  int n_min = 2;
  int n_max = 6;
  int p_max = 4;
  std::uint64_t seed = kDefaultSeed;
  Rational entry_bound{1};  // entries uniform in [-entry_bound, entry_bound]
  double tolerance = kLemmaTolerance;

  void validate() const;
};

struct TrialReport {
  std::string tag;
  std::size_t trials = 0;
  std::size_t violations = 0;
  double max_violation = 0;  // clamped at 0 when every trial holds
  double tolerance = 0;
  std::string witness;       // inputs of the trial closest to failing
  bool pass = true;
  // Identity suites only: trials whose exact-rational residual was nonzero.
  std::optional<std::size_t> exact_mismatches;
};

/// Tags of the inequality suites, in report order.
const std::vector<std::string>& lemma_tags();
/// Tags of the equality-witness suites.
const std::vector<std::string>& witness_tags();
/// Tags of the pointwise identity suites.
const std::vector<std::string>& identity_tags();

/// Randomized inequality suite. Trial i uses its own stream derived from
/// (seed, tag, i), so the report does not depend on evaluation order.
TrialReport run_lemma_suite(std::string_view tag, const TrialConfig& config);
std::vector<TrialReport> run_lemma_suites(const TrialConfig& config);

/// Equality cases; pass iff every |lhs - rhs| < 1e-12.
inline constexpr double kWitnessTolerance = 1e-12;
std::vector<TrialReport> run_witness_suites(const TrialConfig& config);

/// Identity suites on random exact-rational forms: every residual must be
/// exactly zero in rational arithmetic and below `config.tolerance` (absolute)
/// when the same form is evaluated in doubles.
inline constexpr double kIdentityTolerance = 1e-10;
std::vector<TrialReport> run_identity_suites(const TrialConfig& config);

}  // namespace rigidity
