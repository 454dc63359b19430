#pragma once

// Batch verification: pair witnesses run concurrently, merged in declared order.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bdcurves/config.hpp"
#include "bdcurves/witness.hpp"

namespace bdcurves {

struct SuiteOptions {
  int grid = 512;
  IdentityTolerances tolerances;
  /// Replaces every tolerance, including per-pair overrides from a config.
  std::optional<double> uniform_tol;
};

struct SuiteEntry {
  std::string witness;
  std::string description;
  double lambda = 0.0;
  int grid = 0;
  int expected_type = 0;
  int type = 0;
  std::vector<Residual> ledger;
  std::string tau_rate;
  /// Set when construction failed; the entry then has an empty ledger.
  std::optional<std::string> error;
};

/// One job of a suite. The base strip is built from `source` inside the job
/// unless `base` is already given, so construction failures are captured.
struct SuiteJob {
  std::string name;
  std::string description;
  std::shared_ptr<const StripCurve> base;
  std::shared_ptr<const StripSource> source;
  double lambda = 0.0;
  int expected_type = 0;
  int grid = 512;
  IdentityTolerances tolerances;
};

/// Runs the jobs with std::async and returns results in job order.
std::vector<SuiteEntry> run_jobs(const std::vector<SuiteJob>& jobs);

/// The built-in catalog as jobs.
std::vector<SuiteJob> builtin_jobs(const SuiteOptions& options);

/// Jobs for one configured pair, one per lambda.
std::vector<SuiteJob> pair_jobs(const Scene& scene, const PairSpec& pair,
                                const SuiteOptions& options);

/// Jobs for `verify`: the built-in catalog unless the suite section turns it
/// off, then the suite's pairs (every pair when no suite section is given).
std::vector<SuiteJob> verify_jobs(const Scene* scene, const SuiteOptions& options);

struct SuiteVerdict {
  int identities = 0;  ///< gating identities counted
  int failures = 0;    ///< gating identities that failed
  int errors = 0;      ///< entries that could not be constructed
  bool pass() const { return failures == 0 && errors == 0; }
};

SuiteVerdict verdict(const std::vector<SuiteEntry>& entries);

/// The tau_g1 rate convention per pair type across the entries: the prefix
/// that passes on every witness of the type while the other fails on at
/// least one, else "none" or "undetermined".
std::map<int, std::string> tau_rate_conventions(const std::vector<SuiteEntry>& entries);

}  // namespace bdcurves
