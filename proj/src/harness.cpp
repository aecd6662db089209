#include "argp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <thread>

#include "argp/errors.hpp"

namespace argp {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(gen_); }

 private:
  std::mt19937_64 gen_;
};

const char* family_name(CurveFamily f) {
  switch (f) {
    case CurveFamily::Circle:
      return "circle";
    case CurveFamily::TrigPerturbed:
      return "trig-perturbed";
    case CurveFamily::Square:
      return "square";
    case CurveFamily::LShape:
      return "lshape";
  }
  return "";
}

const char* mode_name(HarnessMode m) {
  switch (m) {
    case HarnessMode::Bound:
      return "bound";
    case HarnessMode::Winding:
      return "winding";
    case HarnessMode::Detour:
      return "detour";
    case HarnessMode::Trig:
      return "trig";
  }
  return "";
}

bool polygonal(CurveFamily f) { return f == CurveFamily::Square || f == CurveFamily::LShape; }

/// Curve for a trial together with the polygon sites (corners first, then
/// edge midpoints) where on-curve roots may be planted.
struct Stage {
  JordanCurve curve;
  std::vector<Complex> corners;
  std::vector<Complex> midpoints;
};

Stage make_stage(CurveFamily family, Rng& rng) {
  Stage s;
  switch (family) {
    case CurveFamily::Circle:
      s.curve = unit_circle();
      break;
    case CurveFamily::TrigPerturbed: {
      std::vector<double> cs{0.0}, sn{0.0};
      for (int k = 2; k <= 4; ++k) {
        cs.push_back(rng.uniform(-0.06, 0.06));
        sn.push_back(rng.uniform(-0.06, 0.06));
      }
      s.curve = perturbed_circle(0.0, 1.0, cs, sn);
      break;
    }
    case CurveFamily::Square:
    case CurveFamily::LShape: {
      const std::vector<Complex> v = family == CurveFamily::Square
                                         ? std::vector<Complex>{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}
                                         : std::vector<Complex>{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
      s.curve = polygon(v);
      s.corners = v;
      for (std::size_t i = 0; i < v.size(); ++i) s.midpoints.push_back(0.5 * (v[i] + v[(i + 1) % v.size()]));
      break;
    }
  }
  return s;
}

Complex on_curve_site(CurveFamily family, const Stage& s, Rng& rng) {
  if (polygonal(family)) {
    const auto& pool = rng.uniform(0.0, 1.0) < 2.0 / 3.0 ? s.corners : s.midpoints;
    return pool[static_cast<std::size_t>(rng.integer(0, static_cast<int>(pool.size()) - 1))];
  }
  const int q = rng.integer(3, 24);
  const int p = rng.integer(0, q - 1);
  if (family == CurveFamily::Circle) return std::polar(1.0, 2.0 * kPi * p / q);
  return s.curve.point(static_cast<double>(p) / q);
}

/// A point at least `margin` away from the curve on the requested side.
std::optional<Complex> off_curve_site(CurveFamily family, const Stage& s, bool inside, Rng& rng) {
  if (family == CurveFamily::Circle) {
    const double r = inside ? 0.85 * std::sqrt(rng.uniform(0.0, 1.0)) : rng.uniform(1.15, 3.0);
    return std::polar(r, rng.uniform(0.0, 2.0 * kPi));
  }
  const double diam = s.curve.diameter();
  const double margin = 0.08 * diam;
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (const CurveSample& c : sample(s.curve, 256)) {
    lo_x = std::min(lo_x, c.point.real());
    hi_x = std::max(hi_x, c.point.real());
    lo_y = std::min(lo_y, c.point.imag());
    hi_y = std::max(hi_y, c.point.imag());
  }
  const double pad = inside ? 0.0 : 0.6 * diam;
  for (int attempt = 0; attempt < 200; ++attempt) {
    const Complex p{rng.uniform(lo_x - pad, hi_x + pad), rng.uniform(lo_y - pad, hi_y + pad)};
    if (nearest_point(s.curve, p).distance < margin) continue;
    if ((winding_number(s.curve, p) != 0) == inside) return p;
  }
  return std::nullopt;
}

std::vector<double> trig_coefficients(int max_degree, Rng& rng) {
  const int n = rng.integer(1, max_degree);
  std::vector<double> a(static_cast<std::size_t>(n) + 1);
  for (double& x : a) x = rng.uniform(-1.0, 1.0);
  while (std::abs(a.front()) < 0.05) a.front() = rng.uniform(-1.0, 1.0);
  while (std::abs(a.back()) < 0.05) a.back() = rng.uniform(-1.0, 1.0);
  return a;
}

std::string describe(const ZeroReport& z, const Instance& inst) {
  return "classified m=" + std::to_string(z.m) + " lambda=" + std::to_string(z.lambda) + ", planted m=" +
         std::to_string(inst.planted_m()) + " lambda=" + std::to_string(inst.planted_lambda());
}

CurveFamily family_from(const std::string& s) {
  if (s == "circle") return CurveFamily::Circle;
  if (s == "trig-perturbed") return CurveFamily::TrigPerturbed;
  if (s == "square") return CurveFamily::Square;
  if (s == "lshape") return CurveFamily::LShape;
  throw InputError("unknown curve_family '" + s + "'");
}

HarnessMode mode_from(const std::string& s) {
  if (s == "bound") return HarnessMode::Bound;
  if (s == "winding") return HarnessMode::Winding;
  if (s == "detour") return HarnessMode::Detour;
  if (s == "trig") return HarnessMode::Trig;
  throw InputError("unknown harness mode '" + s + "'");
}

const char* location_name(PointLocation p) {
  switch (p) {
    case PointLocation::Inside:
      return "inside";
    case PointLocation::OnCurve:
      return "on-curve";
    case PointLocation::Outside:
      return "outside";
  }
  return "";
}

PointLocation location_from(const std::string& s) {
  if (s == "inside") return PointLocation::Inside;
  if (s == "on-curve") return PointLocation::OnCurve;
  if (s == "outside") return PointLocation::Outside;
  throw InputError("unknown planted location '" + s + "'");
}

}  // namespace

int Instance::planted_m() const {
  int m = 0;
  for (const PlantedRoot& r : planted) m += r.where == PointLocation::Inside ? r.multiplicity : 0;
  return m;
}

int Instance::planted_lambda() const {
  int l = 0;
  for (const PlantedRoot& r : planted) l += r.where == PointLocation::OnCurve ? r.multiplicity : 0;
  return l;
}

HarnessConfig harness_config_from_json(const io::json& j) {
  if (!j.is_object()) throw InputError("harness config must be a JSON object");
  HarnessConfig c;
  try {
    c.trials = j.value("trials", c.trials);
    c.max_degree = j.value("max_degree", c.max_degree);
    c.family = family_from(j.value("curve_family", std::string("circle")));
    c.seed = j.value("seed", c.seed);
    c.mode = mode_from(j.value("mode", std::string("bound")));
    c.threads = j.value("threads", c.threads);
    c.replay_dir = j.value("replay_dir", c.replay_dir);
  } catch (const io::json::exception& e) {
    throw InputError(std::string("malformed harness config: ") + e.what());
  }
  if (c.trials < 0) throw InputError("trials must be non-negative");
  if (c.max_degree < 1) throw InputError("max_degree must be at least 1");
  return c;
}

io::json to_json(const HarnessConfig& c) {
  return {{"trials", c.trials},
          {"max_degree", c.max_degree},
          {"curve_family", family_name(c.family)},
          {"seed", c.seed},
          {"mode", mode_name(c.mode)}};
}

Instance generate_instance(const HarnessConfig& config, std::uint64_t trial) {
  Rng rng(splitmix64(config.seed ^ splitmix64(trial + 1)));
  Instance inst;
  inst.trial = trial;

  if (config.mode == HarnessMode::Trig) {
    inst.trig_coeffs = trig_coefficients(config.max_degree, rng);
    inst.f = Polynomial::from_real(inst.trig_coeffs);
    inst.curve = unit_circle();
    inst.line = Line::imag_axis();
    return inst;
  }

  const Stage stage = make_stage(config.family, rng);
  inst.curve = stage.curve;
  inst.line = Line(rng.uniform(0.0, kPi));

  const int degree = rng.integer(1, config.max_degree);
  const double separation = 0.2;
  int total = 0;
  while (total < degree) {
    const int mult = rng.integer(1, std::min(3, degree - total));
    PointLocation where;
    if (config.mode == HarnessMode::Winding) {
      where = rng.uniform(0.0, 1.0) < 0.5 ? PointLocation::Inside : PointLocation::Outside;
    } else if (config.mode == HarnessMode::Detour && total == 0) {
      where = PointLocation::OnCurve;
    } else {
      const int k = rng.integer(0, 2);
      where = k == 0 ? PointLocation::Inside : k == 1 ? PointLocation::OnCurve : PointLocation::Outside;
    }
    std::optional<Complex> site;
    for (int attempt = 0; attempt < 50 && !site; ++attempt) {
      std::optional<Complex> p = where == PointLocation::OnCurve
                                     ? std::optional<Complex>(on_curve_site(config.family, stage, rng))
                                     : off_curve_site(config.family, stage, where == PointLocation::Inside, rng);
      if (!p) continue;
      const bool clear = std::all_of(inst.planted.begin(), inst.planted.end(),
                                     [&](const PlantedRoot& r) { return std::abs(r.location - *p) >= separation; });
      if (clear) site = p;
    }
    if (!site) {
      if (config.mode == HarnessMode::Detour && total == 0) throw InputError("could not plant an on-curve root");
      continue;
    }
    inst.planted.push_back({*site, mult, where});
    total += mult;
  }

  std::vector<Root> roots;
  for (const PlantedRoot& r : inst.planted) roots.push_back({r.location, r.multiplicity});
  const Complex lead = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * kPi));
  inst.f = Polynomial::from_roots(roots, lead);
  return inst;
}

VerifyOptions tightened(const VerifyOptions& opt) {
  VerifyOptions t = opt;
  CrossingOptions& c = t.crossings;
  c.initial_resolution *= 4;
  c.max_resolution *= 4;
  c.parameter_tol /= 10.0;
  c.cluster_radius /= 10.0;
  c.contact_tol /= 10.0;
  c.residual_tol /= 10.0;
  c.roots.tol /= 10.0;
  t.winding.initial_samples *= 4;
  t.winding.rounding_guard /= 10.0;
  return t;
}

TrialOutcome run_trial(const Instance& inst, const HarnessConfig& config, const VerifyOptions& opt) {
  TrialOutcome out;
  out.trial = inst.trial;
  try {
    switch (config.mode) {
      case HarnessMode::Bound: {
        const BoundReport r = polygonal(config.family) ? verify_piecewise(inst.f, inst.curve, inst.line, opt)
                                                       : verify_main(inst.f, inst.curve, inst.line, opt);
        out.measured = r.measured;
        out.bound = r.bound;
        const bool planted_ok = r.m == inst.planted_m() && r.lambda == inst.planted_lambda();
        out.passed = r.holds && planted_ok;
        if (!planted_ok) out.message = describe(r.zeros, inst);
        if (!r.holds) out.message = "measured " + std::to_string(r.measured) + " < bound " + std::to_string(r.bound);
        break;
      }
      case HarnessMode::Winding: {
        const int m = inst.planted_m();
        const int w = winding_count(inst.f, inst.curve, opt.winding);
        const Complex ld = logderiv_integral(inst.f, inst.curve, 8192, opt.winding);
        const ZeroReport z = classify_roots(inst.f, inst.curve, inst.curve.default_band(), opt.crossings.roots);
        out.measured = w;
        out.bound = m;
        out.passed = w == m && std::abs(ld - Complex(m)) < 0.01 && z.m == m && z.lambda == 0;
        if (!out.passed)
          out.message = "winding " + std::to_string(w) + ", integral " + std::to_string(ld.real()) + "+" +
                        std::to_string(ld.imag()) + "i, " + describe(z, inst);
        break;
      }
      case HarnessMode::Detour: {
        const DetourReport d = verify_detour(inst.f, inst.curve, inst.line, {}, opt);
        out.measured = d.on_detour.count();
        out.bound = 2 * (d.m + d.lambda);
        const bool planted_ok = d.m == inst.planted_m() && d.lambda == inst.planted_lambda();
        out.passed = d.holds && d.consistent && planted_ok;
        if (!out.passed)
          out.message = "liftoff " + std::to_string(d.liftoff_ok) + ", winding " + std::to_string(d.winding.winding) +
                        " (want " + std::to_string(d.m + d.lambda) + "), detour preimages " +
                        std::to_string(out.measured) + ", base " + std::to_string(d.on_base) + "/" +
                        std::to_string(d.base_points) + ", planted m=" + std::to_string(inst.planted_m()) +
                        " lambda=" + std::to_string(inst.planted_lambda());
        break;
      }
      case HarnessMode::Trig: {
        const TrigReport t = verify_trig(inst.trig_coeffs, opt.crossings);
        out.measured = t.z_p + t.z_q;
        out.bound = 2 * t.n;
        out.passed = t.bound_holds && t.identity_holds && t.direct_agrees && t.conjugates_match;
        if (!out.passed)
          out.message = "Z_P=" + std::to_string(t.z_p) + " Z_Q=" + std::to_string(t.z_q) + " m_f=" +
                        std::to_string(t.m_f) + " m_g=" + std::to_string(t.m_g) + " lambda=" +
                        std::to_string(t.lambda) + " direct_agrees=" + std::to_string(t.direct_agrees) +
                        " conjugates_match=" + std::to_string(t.conjugates_match);
        break;
      }
    }
  } catch (const Error& e) {
    out.passed = false;
    out.error = true;
    out.message = e.what();
  }
  out.equality = out.passed && out.measured == out.bound;
  return out;
}

io::json replay_to_json(const Instance& inst, const HarnessConfig& config) {
  io::json planted = io::json::array();
  for (const PlantedRoot& r : inst.planted)
    planted.push_back({{"location", {r.location.real(), r.location.imag()}},
                       {"multiplicity", r.multiplicity},
                       {"where", location_name(r.where)}});
  io::json j = {{"config", to_json(config)},
                {"trial", inst.trial},
                {"polynomial", io::to_json(inst.f)},
                {"curve", io::to_json(inst.curve)},
                {"line", io::to_json(inst.line)},
                {"planted", planted},
                {"crossings", io::config_echo(config.verify.crossings)},
                {"winding", io::config_echo(config.verify.winding)}};
  if (!inst.trig_coeffs.empty()) j["trig_coeffs"] = inst.trig_coeffs;
  return j;
}

std::pair<Instance, HarnessConfig> replay_from_json(const io::json& j) {
  try {
    HarnessConfig config = harness_config_from_json(j.at("config"));
    Instance inst;
    inst.trial = j.value("trial", std::uint64_t{0});
    inst.f = io::polynomial_from_json(j.at("polynomial"));
    inst.curve = io::curve_from_json(j.at("curve"));
    inst.line = io::line_from_json(j.at("line"));
    for (const io::json& r : j.value("planted", io::json::array()))
      inst.planted.push_back({{r.at("location")[0].get<double>(), r.at("location")[1].get<double>()},
                              r.at("multiplicity").get<int>(),
                              location_from(r.at("where").get<std::string>())});
    if (j.contains("trig_coeffs")) inst.trig_coeffs = j.at("trig_coeffs").get<std::vector<double>>();
    return {std::move(inst), std::move(config)};
  } catch (const io::json::exception& e) {
    throw InputError(std::string("malformed replay file: ") + e.what());
  }
}

HarnessSummary run_harness(const HarnessConfig& config) {
  HarnessSummary s;
  s.config = config;
  s.trials = config.trials;
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(std::max(0, config.trials)));
  std::vector<std::string> replays(outcomes.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < outcomes.size(); i = next++) {
      TrialOutcome o;
      try {
        const Instance inst = generate_instance(config, i);
        o = run_trial(inst, config, config.verify);
        if (!o.passed) {
          const std::string first = o.message;
          o = run_trial(inst, config, tightened(config.verify));
          o.rerun = true;
          if (!o.passed) {
            o.message = first + " | rerun: " + o.message;
            if (!config.replay_dir.empty()) {
              std::filesystem::create_directories(config.replay_dir);
              const std::string path = config.replay_dir + "/replay_" + family_name(config.family) + "_" +
                                       mode_name(config.mode) + "_" + std::to_string(config.seed) + "_" +
                                       std::to_string(i) + ".json";
              std::ofstream(path) << replay_to_json(inst, config).dump(2) << "\n";
              replays[i] = path;
            }
          }
        }
      } catch (const Error& e) {
        o.trial = i;
        o.error = true;
        o.message = std::string("instance generation: ") + e.what();
      }
      outcomes[i] = std::move(o);
    }
  };
  const int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, threads); ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const TrialOutcome& o = outcomes[i];
    s.reruns += o.rerun ? 1 : 0;
    if (o.passed) {
      ++s.passed;
      s.recovered += o.rerun ? 1 : 0;
      s.equality_cases += o.equality ? 1 : 0;
      continue;
    }
    ++(o.error ? s.errors : s.violations);
    s.failures.push_back(o);
    if (!replays[i].empty()) s.replay_files.push_back(replays[i]);
  }
  return s;
}

io::json to_json(const HarnessSummary& s) {
  io::json failures = io::json::array();
  for (const TrialOutcome& o : s.failures)
    failures.push_back({{"trial", o.trial}, {"error", o.error}, {"measured", o.measured}, {"bound", o.bound},
                        {"message", o.message}});
  return {{"config_echo",
           {{"harness", to_json(s.config)},
            {"crossings", io::config_echo(s.config.verify.crossings)},
            {"winding", io::config_echo(s.config.verify.winding)}}},
          {"trials", s.trials},
          {"passed", s.passed},
          {"violations", s.violations},
          {"errors", s.errors},
          {"reruns", s.reruns},
          {"recovered", s.recovered},
          {"equality_cases", s.equality_cases},
          {"failures", failures},
          {"replay_files", s.replay_files}};
}

}  // namespace argp
