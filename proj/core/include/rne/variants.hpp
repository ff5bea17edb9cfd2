#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rne/scenario.hpp"
#include "rne/sim_types.hpp"

namespace rne {

/// The four ablation arms: graph vs tree expansion, local sampling on/off.
enum class Variant { Rne, Rrg, RrtLs, Rrt };

const char* to_string(Variant v);
/// Accepts "rne", "rrg", "rrt+ls", "rrt". Throws ConfigError otherwise.
Variant parse_variant(const std::string& name);

/// Applies the variant's mode / local-sampling switches to a base config.
ScenarioConfig apply_variant(ScenarioConfig config, Variant v);

struct RunRecord {
  Variant variant = Variant::Rne;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;  // set when !ok
  RunResult result;   // valid when ok
};

struct VariantSummary {
  Variant variant = Variant::Rne;
  int runs = 0;
  int failures = 0;
  // mean / population standard deviation per metric
  double duration_mean = 0.0, duration_std = 0.0;
  double path_mean = 0.0, path_std = 0.0;
  double volume_mean = 0.0, volume_std = 0.0;
};

/// Runs |variants| x |seeds| simulations. Failures are recorded per run and
/// the batch continues. `on_finish` (optional) observes each record, e.g. to
/// write per-run artifacts.
std::vector<RunRecord> run_batch(
    const ScenarioConfig& base, const std::vector<Variant>& variants,
    const std::vector<std::uint64_t>& seeds,
    const std::function<void(const RunRecord&)>& on_finish = {});

std::vector<VariantSummary> summarize(const std::vector<RunRecord>& records);

/// Table 1-style delimited text; the header states the sigma estimator.
std::string format_summary(const std::vector<VariantSummary>& summaries);

}  // namespace rne
