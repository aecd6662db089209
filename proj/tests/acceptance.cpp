// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "argp/harness.hpp"
#include "argp/verify.hpp"
#include "oracle.hpp"

using namespace argp;
using std::numbers::pi;

namespace {

// Pinned limits.
constexpr double kLimit1Seconds = 5.0;
constexpr double kLimit2Seconds = 10.0;
constexpr double kLimit3Seconds = 60.0;
constexpr double kLimit4Seconds = 300.0;
constexpr double kLogderivTol = 0.01;
constexpr double kProbeCoarseTol = 0.1;
constexpr double kDiscEpsilon = 1e-3;
constexpr double kProbeCoarse = 1e-2;
constexpr double kProbeFine = 1e-3;
constexpr long kOracleSamples = 1000000;
constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!v.pass) ++failures;
  std::printf("criterion %2d %-4s %-32s %7.2fs  %s\n", id, v.pass ? "PASS" : "FAIL", name, secs, v.detail.c_str());
  std::fflush(stdout);
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string summary_text(const HarnessSummary& s) {
  return std::to_string(s.passed) + "/" + std::to_string(s.trials) + " passed, " + std::to_string(s.violations) +
         " violations, " + std::to_string(s.errors) + " errors, " + std::to_string(s.reruns) + " re-runs";
}

HarnessSummary harness(CurveFamily family, HarnessMode mode, int trials, int max_degree, std::uint64_t seed) {
  HarnessConfig c;
  c.family = family;
  c.mode = mode;
  c.trials = trials;
  c.max_degree = max_degree;
  c.seed = seed;
  c.threads = 0;
  return run_harness(c);
}

Verdict criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::string got;
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    const Polynomial f = Polynomial::from_real(oracle::binomial_row(n));
    const std::int64_t c = count_preimages(f, unit_circle(), Line::real_axis()).count();
    got += (n > 1 ? "," : "") + std::to_string(c);
    ok = ok && c == n;
  }
  const double secs = elapsed_since(t0);
  return {ok && secs < kLimit1Seconds, "counts n=1..8: " + got};
}

Verdict criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> u(0.0, pi);
  std::vector<double> angles(8);
  for (double& a : angles) a = u(rng);
  int bad = 0;
  for (int n = 1; n <= 8; ++n) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
    c[n] = 1.0;
    const Polynomial f(c);
    for (double phi : angles)
      if (count_preimages(f, unit_circle(), Line(phi)).count() != 2 * n) ++bad;
  }
  const double secs = elapsed_since(t0);
  return {bad == 0 && secs < kLimit2Seconds, std::to_string(64 - bad) + "/64 exact"};
}

Verdict criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const CurveFamily fams[] = {CurveFamily::Circle, CurveFamily::TrigPerturbed, CurveFamily::Square,
                              CurveFamily::LShape};
  int passed = 0, total = 0;
  for (CurveFamily f : fams) {
    const HarnessSummary s = harness(f, HarnessMode::Winding, 125, 8, kSeed);
    passed += s.passed;
    total += s.trials;
  }
  const double secs = elapsed_since(t0);
  return {passed == total && total == 500 && secs < kLimit3Seconds,
          std::to_string(passed) + "/" + std::to_string(total) + " (logderiv tol " + std::to_string(kLogderivTol) + ")"};
}

Verdict criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const HarnessSummary a = harness(CurveFamily::Circle, HarnessMode::Bound, 500, 6, kSeed);
  const HarnessSummary b = harness(CurveFamily::TrigPerturbed, HarnessMode::Bound, 500, 6, kSeed);
  const double secs = elapsed_since(t0);
  const bool ok = a.passed == a.trials && b.passed == b.trials && secs < kLimit4Seconds;
  return {ok, "circle " + summary_text(a) + "; trig-perturbed " + summary_text(b) + "; equality cases " +
                  std::to_string(a.equality_cases + b.equality_cases)};
}

Verdict criterion5() {
  std::string got;
  bool ok = true;
  for (int k = 1; k <= 4; ++k) {
    const Polynomial f = pow(Polynomial{-1.0, 1.0}, k) * Polynomial{5.0, 1.0};
    for (double phi : {0.0, 0.37, pi / 2, 2.2}) {
      const std::int64_t c = count_disc_preimages(f, 1.0, k, kDiscEpsilon, Line(phi));
      ok = ok && c == 2 * k;
      if (phi == 0.0) got += (k > 1 ? "," : "") + std::to_string(c);
    }
  }
  return {ok, "real-axis counts k=1..4: " + got};
}

Verdict criterion6() {
  bool ok = true;
  std::string got;
  char buf[96];
  for (int k = 1; k <= 5; ++k) {
    const Polynomial f = pow(Polynomial{-1.0, 1.0}, k);
    const double coarse = arg_derivative_probe(f, 1.0, kProbeCoarse).max_dev;
    const double fine = arg_derivative_probe(f, 1.0, kProbeFine).max_dev;
    ok = ok && coarse < kProbeCoarseTol && fine < coarse;
    std::snprintf(buf, sizeof buf, "%sk=%d %.1e->%.1e", k > 1 ? ", " : "", k, coarse, fine);
    got += buf;
  }
  return {ok, got};
}

void criterion6_supplement() {
  std::string got;
  char buf[96];
  for (int k = 1; k <= 4; ++k) {
    const Polynomial f = pow(Polynomial{-1.0, 1.0}, k) * Polynomial{5.0, 1.0};
    got += k > 1 ? ", " : "";
    for (double eps : {1e-1, 1e-2, 1e-3}) {
      std::snprintf(buf, sizeof buf, "%s%.1e", eps < 1e-1 ? "->" : "", arg_derivative_probe(f, 1.0, eps).max_dev);
      got += buf;
    }
  }
  std::printf("   info         (z-1)^k(z+5) max_dev at 1e-1,1e-2,1e-3: %s\n", got.c_str());
}

int detour_passes(int trials, int max_degree, int* total) {
  const CurveFamily fams[] = {CurveFamily::Circle, CurveFamily::TrigPerturbed, CurveFamily::Square,
                              CurveFamily::LShape};
  int passed = 0;
  *total = 0;
  for (int i = 0; i < 4; ++i) {
    const int n = trials / 4 + (i < trials % 4 ? 1 : 0);
    const HarnessSummary s = harness(fams[i], HarnessMode::Detour, n, max_degree, kSeed);
    passed += s.passed;
    *total += s.trials;
  }
  return passed;
}

Verdict criterion7() {
  int total = 0;
  const int passed = detour_passes(50, 4, &total);
  return {passed == total && total == 50, std::to_string(passed) + "/" + std::to_string(total) + " at degree <= 4"};
}

void criterion7_supplement() {
  int total = 0;
  const int passed = detour_passes(200, 6, &total);
  std::printf("   info         detour at degree <= 6: %d/%d\n", passed, total);
}

Verdict criterion8() {
  const HarnessSummary s = harness(CurveFamily::Circle, HarnessMode::Trig, 500, 8, kSeed);
  bool closed = true;
  std::string got;
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> a(n + 1, 0.0);
    a.front() = a.back() = 1.0;
    const TrigReport r = verify_trig(a);
    closed = closed && r.z_p == n && r.z_q == n;
    got += (n > 1 ? "," : "") + std::to_string(r.z_p) + "/" + std::to_string(r.z_q);
  }
  return {s.passed == s.trials && s.trials == 500 && closed, summary_text(s) + "; closed form Z_P/Z_Q: " + got};
}

bool has_corner_root(const Instance& inst) {
  for (const PlantedRoot& r : inst.planted)
    if (r.where == PointLocation::OnCurve && corner_near(inst.curve, r.location, 1e-9)) return true;
  return false;
}

Verdict criterion9() {
  int passed = 0, total = 0, equality = 0;
  for (CurveFamily fam : {CurveFamily::Square, CurveFamily::LShape}) {
    HarnessConfig c;
    c.family = fam;
    c.mode = HarnessMode::Bound;
    c.max_degree = 6;
    c.seed = kSeed;
    int taken = 0;
    for (std::uint64_t trial = 0; taken < 100; ++trial) {
      const Instance inst = generate_instance(c, trial);
      if (!has_corner_root(inst)) continue;
      ++taken;
      TrialOutcome o = run_trial(inst, c, c.verify);
      if (!o.passed) o = run_trial(inst, c, tightened(c.verify));
      passed += o.passed;
      equality += o.passed && o.measured == o.bound;
      ++total;
    }
  }

  // On smooth curves the ceiling sum must equal 2m + lambda.
  int same = 0, smooth = 0;
  for (CurveFamily fam : {CurveFamily::Circle, CurveFamily::TrigPerturbed}) {
    HarnessConfig c;
    c.family = fam;
    c.mode = HarnessMode::Bound;
    c.max_degree = 6;
    c.seed = kSeed;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      const Instance inst = generate_instance(c, trial);
      const BoundReport a = verify_main(inst.f, inst.curve, inst.line);
      const BoundReport b = verify_piecewise(inst.f, inst.curve, inst.line);
      same += a.bound == b.bound && b.bound == 2 * inst.planted_m() + inst.planted_lambda();
      ++smooth;
    }
  }
  return {passed == total && total == 200 && same == smooth,
          std::to_string(passed) + "/" + std::to_string(total) + " corner instances (" + std::to_string(equality) +
              " at equality); smooth reduction " + std::to_string(same) + "/" + std::to_string(smooth)};
}

Verdict criterion10() {
  int agree = 0, total = 0;
  std::string first_miss;
  const CurveFamily fams[] = {CurveFamily::Circle, CurveFamily::TrigPerturbed, CurveFamily::Square,
                              CurveFamily::LShape};
  for (CurveFamily fam : fams) {
    HarnessConfig c;
    c.family = fam;
    c.mode = HarnessMode::Bound;
    c.max_degree = 6;
    c.seed = kSeed + 1;
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
      const Instance inst = generate_instance(c, trial);
      oracle::Planted p;
      p.lead = inst.f.leading();
      for (const PlantedRoot& r : inst.planted) p.roots.push_back({r.location, r.multiplicity});
      const std::int64_t got = count_preimages(inst.f, inst.curve, inst.line).count();
      const long want = oracle::dense_count(p, inst.curve, inst.line.angle(), kOracleSamples);
      ++total;
      if (got == want) {
        ++agree;
      } else if (first_miss.empty()) {
        first_miss = "; first mismatch family " + std::to_string(static_cast<int>(fam)) + " trial " +
                     std::to_string(trial) + ": " + std::to_string(got) + " vs " + std::to_string(want);
      }
    }
  }
  return {agree == total && total == 100, std::to_string(agree) + "/" + std::to_string(total) + first_miss};
}

}  // namespace

int main() {
  report(1, "sharpness of lambda", criterion1);
  report(2, "sharpness of 2m", criterion2);
  report(3, "argument principle", criterion3);
  report(4, "smooth bound property", criterion4);
  report(5, "disc preimage law", criterion5);
  report(6, "argument derivative", criterion6);
  criterion6_supplement();
  report(7, "detour verification", criterion7);
  criterion7_supplement();
  report(8, "cosine sums", criterion8);
  report(9, "corner bound property", criterion9);
  report(10, "dense oracle equivalence", criterion10);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
