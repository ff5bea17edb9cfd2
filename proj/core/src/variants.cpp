#include "rne/variants.hpp"

#include <cmath>
#include <cstdio>

#include "rne/errors.hpp"
#include "rne/sim.hpp"

namespace rne {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::Rne: return "rne";
    case Variant::Rrg: return "rrg";
    case Variant::RrtLs: return "rrt+ls";
    case Variant::Rrt: return "rrt";
  }
  return "?";
}

Variant parse_variant(const std::string& name) {
  if (name == "rne") return Variant::Rne;
  if (name == "rrg") return Variant::Rrg;
  if (name == "rrt+ls") return Variant::RrtLs;
  if (name == "rrt") return Variant::Rrt;
  throw ConfigError("unknown variant '" + name +
                    "' (expected rne, rrg, rrt+ls or rrt)");
}

ScenarioConfig apply_variant(ScenarioConfig config, Variant v) {
  switch (v) {
    case Variant::Rne:
      config.mode = GraphMode::Graph;
      config.local_sampling = true;
      break;
    case Variant::Rrg:
      config.mode = GraphMode::Graph;
      config.local_sampling = false;
      break;
    case Variant::RrtLs:
      config.mode = GraphMode::Tree;
      config.local_sampling = true;
      break;
    case Variant::Rrt:
      config.mode = GraphMode::Tree;
      config.local_sampling = false;
      break;
  }
  return config;
}

std::vector<RunRecord> run_batch(
    const ScenarioConfig& base, const std::vector<Variant>& variants,
    const std::vector<std::uint64_t>& seeds,
    const std::function<void(const RunRecord&)>& on_finish) {
  std::vector<RunRecord> records;
  records.reserve(variants.size() * seeds.size());
  for (Variant v : variants) {
    for (std::uint64_t seed : seeds) {
      RunRecord rec;
      rec.variant = v;
      rec.seed = seed;
      try {
        ScenarioConfig cfg = apply_variant(base, v);
        cfg.seed = seed;
        rec.result = run_to_completion(cfg);
        rec.ok = true;
      } catch (const std::exception& e) {
        rec.ok = false;
        rec.error = e.what();
      }
      if (on_finish) on_finish(rec);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

namespace {

struct Acc {
  std::vector<double> values;
  void add(double v) { values.push_back(v); }
  double mean() const {
    if (values.empty()) return 0.0;
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
  }
  double stddev() const {  // population sigma
    if (values.empty()) return 0.0;
    const double m = mean();
    double s = 0.0;
    for (double v : values) s += (v - m) * (v - m);
    return std::sqrt(s / static_cast<double>(values.size()));
  }
};

}  // namespace

std::vector<VariantSummary> summarize(const std::vector<RunRecord>& records) {
  std::vector<VariantSummary> out;
  for (Variant v : {Variant::Rne, Variant::Rrg, Variant::RrtLs, Variant::Rrt}) {
    VariantSummary s;
    s.variant = v;
    Acc duration, path, volume;
    for (const RunRecord& r : records) {
      if (r.variant != v) continue;
      ++s.runs;
      if (!r.ok) {
        ++s.failures;
        continue;
      }
      duration.add(r.result.duration);
      path.add(r.result.path_length);
      volume.add(r.result.mapped_volume);
    }
    if (s.runs == 0) continue;
    s.duration_mean = duration.mean();
    s.duration_std = duration.stddev();
    s.path_mean = path.mean();
    s.path_std = path.stddev();
    s.volume_mean = volume.mean();
    s.volume_std = volume.stddev();
    out.push_back(s);
  }
  return out;
}

std::string format_summary(const std::vector<VariantSummary>& summaries) {
  std::string out =
      "# sigma is the population standard deviation\n"
      "variant,runs,failures,duration_mean_s,duration_std_s,"
      "path_mean_m,path_std_m,volume_mean_m3,volume_std_m3\n";
  char buf[256];
  for (const VariantSummary& s : summaries) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%.3f,%.3f,%.3f,%.3f,%.6f,%.6f\n",
                  to_string(s.variant), s.runs, s.failures, s.duration_mean,
                  s.duration_std, s.path_mean, s.path_std, s.volume_mean,
                  s.volume_std);
    out += buf;
  }
  return out;
}

}  // namespace rne
