#ifndef ARGP_HARNESS_HPP
#define ARGP_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "argp/io.hpp"
#include "argp/verify.hpp"

namespace argp {

enum class CurveFamily { Circle, TrigPerturbed, Square, LShape };

/// bound: measured >= 2m + lambda (or the ceiling bound on polygons);
/// winding: argument principle with no roots on the curve;
/// detour: the detour construction around planted on-curve zeros;
/// trig: the cosine-sum application with random real coefficients.
enum class HarnessMode { Bound, Winding, Detour, Trig };

struct HarnessConfig {
  int trials = 100;
  int max_degree = 6;
  CurveFamily family = CurveFamily::Circle;
  std::uint64_t seed = 1;
  HarnessMode mode = HarnessMode::Bound;
  int threads = 1;
  /// failing instances are written here when non-empty
  std::string replay_dir;
  VerifyOptions verify;
};

HarnessConfig harness_config_from_json(const io::json& j);
io::json to_json(const HarnessConfig& c);

struct PlantedRoot {
  Complex location;
  int multiplicity = 1;
  PointLocation where = PointLocation::Inside;
};

struct Instance {
  std::uint64_t trial = 0;
  Polynomial f{1.0};
  JordanCurve curve;
  Line line;
  std::vector<PlantedRoot> planted;
  std::vector<double> trig_coeffs;  ///< trig mode only

  int planted_m() const;
  int planted_lambda() const;
};

/// Deterministic in (config.seed, trial): roots are planted by factor
/// construction with known location relative to the curve.
Instance generate_instance(const HarnessConfig& config, std::uint64_t trial);

struct TrialOutcome {
  std::uint64_t trial = 0;
  bool passed = false;
  bool error = false;     ///< a numerical or input error was raised
  bool rerun = false;     ///< the first attempt failed
  bool equality = false;  ///< measured == bound
  std::int64_t measured = 0;
  int bound = 0;
  std::string message;
};

/// One attempt under the given options; never throws for library errors.
TrialOutcome run_trial(const Instance& inst, const HarnessConfig& config, const VerifyOptions& opt);

/// 4x resolution and every tolerance 10x tighter.
VerifyOptions tightened(const VerifyOptions& opt);

struct HarnessSummary {
  HarnessConfig config;
  int trials = 0;
  int passed = 0;
  int violations = 0;
  int errors = 0;
  int reruns = 0;
  int recovered = 0;
  int equality_cases = 0;
  std::vector<TrialOutcome> failures;
  std::vector<std::string> replay_files;
};

/// Runs every trial, re-running failures under tightened() before counting
/// them, and writes a replay file for each one that still fails.
HarnessSummary run_harness(const HarnessConfig& config);
io::json to_json(const HarnessSummary& s);

io::json replay_to_json(const Instance& inst, const HarnessConfig& config);
std::pair<Instance, HarnessConfig> replay_from_json(const io::json& j);

}  // namespace argp

#endif  // ARGP_HARNESS_HPP
