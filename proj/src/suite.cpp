#include "bdcurves/suite.hpp"

#include <future>

#include "bdcurves/errors.hpp"

namespace bdcurves {

namespace {

IdentityTolerances effective(const SuiteOptions& o, const std::optional<IdentityTolerances>& own) {
  if (o.uniform_tol) return IdentityTolerances::uniform(*o.uniform_tol);
  return own ? *own : o.tolerances;
}

SuiteEntry run_one(const SuiteJob& job) {
  SuiteEntry e;
  e.witness = job.name;
  e.description = job.description;
  e.lambda = job.lambda;
  e.grid = job.grid;
  e.expected_type = job.expected_type;
  try {
    auto base = job.base ? job.base : std::make_shared<const StripCurve>(job.source);
    PairOptions po;
    po.grid = job.grid;
    const PairRecord p = build_pair(base, job.lambda, po);
    e.type = p.type;
    e.ledger = residual_ledger(p, job.tolerances);
    e.tau_rate = tau_rate_winner(e.ledger);
  } catch (const GeometryError& err) {
    e.error = err.what();
  }
  return e;
}

}  // namespace

std::vector<SuiteEntry> run_jobs(const std::vector<SuiteJob>& jobs) {
  std::vector<std::future<SuiteEntry>> futures;
  futures.reserve(jobs.size());
  for (const SuiteJob& j : jobs) {
    futures.push_back(std::async(std::launch::async, run_one, std::cref(j)));
  }
  std::vector<SuiteEntry> out;
  out.reserve(jobs.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

std::vector<SuiteJob> builtin_jobs(const SuiteOptions& options) {
  std::vector<SuiteJob> jobs;
  for (const PairWitness& w : pair_witnesses()) {
    jobs.push_back({w.name, w.description, w.base, w.base->source_ptr(), w.lambda,
                    w.expected_type, options.grid, effective(options, std::nullopt)});
  }
  return jobs;
}

std::vector<SuiteJob> pair_jobs(const Scene& scene, const PairSpec& pair,
                                const SuiteOptions& options) {
  const CurveSpec& base = scene.curve(pair.base);
  std::vector<SuiteJob> jobs;
  for (double lambda : pair.lambdas) {
    jobs.push_back({pair.name + ", lambda = " + format_double(lambda), "base curve " + pair.base,
                    nullptr, base.strip, lambda, 0, pair.grid.value_or(options.grid),
                    effective(options, pair.tolerances)});
  }
  return jobs;
}

std::vector<SuiteJob> verify_jobs(const Scene* scene, const SuiteOptions& options) {
  std::vector<SuiteJob> jobs;
  if (!scene || scene->suite.builtin) jobs = builtin_jobs(options);
  if (scene) {
    std::vector<std::string> names = scene->suite.pairs;
    if (!scene->suite.declared) {
      for (const PairSpec& p : scene->pairs) names.push_back(p.name);
    }
    for (const std::string& n : names) {
      for (SuiteJob& j : pair_jobs(*scene, scene->pair(n), options)) jobs.push_back(std::move(j));
    }
  }
  return jobs;
}

SuiteVerdict verdict(const std::vector<SuiteEntry>& entries) {
  SuiteVerdict v;
  for (const SuiteEntry& e : entries) {
    if (e.error) ++v.errors;
    for (const Residual& r : e.ledger) {
      if (!r.gating) continue;
      ++v.identities;
      if (!r.pass) ++v.failures;
    }
  }
  return v;
}

std::map<int, std::string> tau_rate_conventions(const std::vector<SuiteEntry>& entries) {
  struct Tally {
    bool statement = true;
    bool proof = true;
  };
  std::map<int, Tally> by_type;
  for (const SuiteEntry& e : entries) {
    if (e.error) continue;
    Tally& t = by_type[e.type];
    for (const Residual& r : e.ledger) {
      if (r.name != "tau_g1 rate") continue;
      if (r.variant == "statement") t.statement = t.statement && r.pass;
      if (r.variant == "proof") t.proof = t.proof && r.pass;
    }
  }
  std::map<int, std::string> out;
  for (const auto& [type, t] : by_type) {
    if (t.statement != t.proof) {
      out[type] = t.statement ? "statement" : "proof";
    } else {
      out[type] = t.statement ? "undetermined" : "none";
    }
  }
  return out;
}

}  // namespace bdcurves
