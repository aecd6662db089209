#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "argp/errors.hpp"
#include "argp/harness.hpp"
#include "argp/io.hpp"

namespace argp::cli {

namespace {

using io::json;

struct Args {
  std::string poly;
  std::string curve = "unit-circle";
  std::string line = "real-axis";
  std::string out;
  std::string csv;
  std::string coeffs;
  std::string config;
  std::string replay;
  std::string replay_dir;
  std::string instance;
  std::vector<double> epsilons;
  double delta = 0.0;
  int resolution = 0;
  int rows = 4096;
  int threads = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

/// --instance FILE holds {"polynomial", "curve", "line"} in one document;
/// explicit --poly / --curve / --line win over it.
struct Inputs {
  std::optional<Polynomial> f;
  JordanCurve curve;
  Line line;
};

Inputs load_inputs(const Args& a, bool need_poly) {
  json inst = json::object();
  if (!a.instance.empty()) inst = io::read_file(a.instance);
  Inputs in;
  if (!a.poly.empty())
    in.f = io::polynomial_from_json(io::file_or_inline(a.poly));
  else if (inst.contains("polynomial"))
    in.f = io::polynomial_from_json(inst.at("polynomial"));
  if (need_poly && !in.f) throw InputError("--poly is required");
  in.curve = io::curve_from_json(inst.contains("curve") && a.curve == "unit-circle" ? inst.at("curve")
                                                                                    : io::file_or_inline(a.curve));
  in.line = io::line_from_json(inst.contains("line") && a.line == "real-axis" ? inst.at("line")
                                                                              : io::file_or_inline(a.line));
  return in;
}

VerifyOptions options(const Args& a) {
  VerifyOptions opt;
  if (a.delta < 0.0) throw InputError("--delta must be positive");
  opt.crossings.band = a.delta;
  opt.winding.band = a.delta;
  if (a.resolution < 0) throw InputError("--resolution must be positive");
  if (a.resolution > 0) {
    opt.crossings.initial_resolution = a.resolution;
    opt.crossings.max_resolution = std::max(opt.crossings.max_resolution, 2 * a.resolution);
  }
  return opt;
}

json echo(const VerifyOptions& opt) {
  return {{"crossings", io::config_echo(opt.crossings)}, {"winding", io::config_echo(opt.winding)}};
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::logic_error&) {
      throw InputError("bad number '" + item + "' in --coeffs");
    }
  }
  return out;
}

void write_report(const json& report, const Args& a, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (a.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw InputError("cannot write '" + a.out + "'");
  f << text;
}

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int emit_samples(const Args& a, std::ostream& out) {
  const Inputs in = load_inputs(a, true);
  if (a.rows < 3) throw InputError("--rows must be at least 3");
  std::ostringstream csv;
  csv << "t,re_gamma,im_gamma,re_f,im_f,h\n";
  for (int k = 0; k < a.rows; ++k) {
    const double t = static_cast<double>(k) / a.rows;
    const Complex z = in.curve.point(t);
    const Complex v = eval(*in.f, z);
    csv << csv_number(t) << ',' << csv_number(z.real()) << ',' << csv_number(z.imag()) << ',' << csv_number(v.real())
        << ',' << csv_number(v.imag()) << ',' << csv_number(line_residual(*in.f, in.curve, in.line, t)) << '\n';
  }
  const std::string target = !a.csv.empty() ? a.csv : a.out;
  if (target.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(target);
    if (!f) throw InputError("cannot write '" + target + "'");
    f << csv.str();
  }
  return kOk;
}

int dispatch(const std::string& cmd, const Args& a, std::ostream& out, std::ostream& err) {
  const VerifyOptions opt = options(a);

  if (cmd == "count-zeros") {
    const Inputs in = load_inputs(a, true);
    const double band = opt.crossings.band > 0.0 ? opt.crossings.band : in.curve.default_band();
    json r = io::to_json(classify_roots(*in.f, in.curve, band, opt.crossings.roots));
    r["config_echo"] = echo(opt);
    write_report(r, a, out);
    return kOk;
  }
  if (cmd == "winding") {
    const Inputs in = load_inputs(a, true);
    json r = io::to_json(winding_trace(*in.f, in.curve, opt.winding));
    r["config_echo"] = echo(opt);
    write_report(r, a, out);
    return kOk;
  }
  if (cmd == "crossings") {
    const Inputs in = load_inputs(a, true);
    json r = io::to_json(count_preimages(*in.f, in.curve, in.line, opt.crossings));
    r["line"] = io::to_json(in.line);
    r["config_echo"] = echo(opt);
    write_report(r, a, out);
    return kOk;
  }
  if (cmd == "verify" || cmd == "verify-piecewise") {
    const Inputs in = load_inputs(a, true);
    const BoundReport b = cmd == "verify" ? verify_main(*in.f, in.curve, in.line, opt)
                                          : verify_piecewise(*in.f, in.curve, in.line, opt);
    json r = io::to_json(b);
    r["config_echo"] = echo(opt);
    write_report(r, a, out);
    return b.holds ? kOk : kBoundViolated;
  }
  if (cmd == "detour") {
    const Inputs in = load_inputs(a, true);
    const DetourReport d = verify_detour(*in.f, in.curve, in.line, a.epsilons, opt);
    json r = io::to_json(d);
    r["config_echo"] = echo(opt);
    write_report(r, a, out);
    return d.holds ? kOk : kBoundViolated;
  }
  if (cmd == "trig-check") {
    std::vector<double> coeffs;
    if (!a.coeffs.empty()) {
      coeffs = parse_reals(a.coeffs);
    } else if (!a.poly.empty()) {
      const json j = io::file_or_inline(a.poly);
      if (!j.is_object() || !j.contains("real_coeffs")) throw InputError("trig-check needs real coefficients");
      coeffs = j.at("real_coeffs").get<std::vector<double>>();
    } else {
      throw InputError("trig-check needs --coeffs or --poly");
    }
    const TrigReport t = verify_trig(coeffs, opt.crossings);
    json r = io::to_json(t);
    r["config_echo"] = echo(opt);
    write_report(r, a, out);
    return t.bound_holds && t.identity_holds ? kOk : kBoundViolated;
  }
  if (cmd == "harness") {
    if (!a.replay.empty()) {
      auto [inst, config] = replay_from_json(io::read_file(a.replay));
      config.verify = opt;
      const TrialOutcome o = run_trial(inst, config, opt);
      json r = {{"trial", o.trial}, {"passed", o.passed}, {"error", o.error}, {"measured", o.measured},
                {"bound", o.bound}, {"message", o.message}, {"config_echo", echo(opt)}};
      write_report(r, a, out);
      return o.passed ? kOk : kBoundViolated;
    }
    HarnessConfig config = a.config.empty() ? HarnessConfig{} : harness_config_from_json(io::file_or_inline(a.config));
    if (a.seed_given) config.seed = a.seed;
    if (!a.replay_dir.empty()) config.replay_dir = a.replay_dir;
    config.threads = a.threads;
    config.verify = opt;
    const HarnessSummary s = run_harness(config);
    write_report(to_json(s), a, out);
    if (!s.failures.empty()) err << "argp: " << s.failures.size() << " of " << s.trials << " trials failed\n";
    return s.failures.empty() ? kOk : kBoundViolated;
  }
  if (cmd == "emit-samples") return emit_samples(a, out);
  throw InputError("unknown subcommand '" + cmd + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero counting and line-preimage bounds for polynomials on Jordan curves", "argp"};
  app.require_subcommand(1, 1);
  Args a;

  auto common = [&](CLI::App* sub, bool with_line) {
    sub->add_option("--poly", a.poly, "polynomial JSON file or inline JSON");
    sub->add_option("--curve", a.curve, "curve JSON file or alias")->capture_default_str();
    if (with_line) sub->add_option("--line", a.line, "line JSON file or alias")->capture_default_str();
    sub->add_option("--instance", a.instance, "JSON file with polynomial, curve and line");
    sub->add_option("--delta", a.delta, "on-curve band (default 1e-9 x diameter)");
    sub->add_option("--resolution", a.resolution, "initial sample count for preimage counting");
    sub->add_option("--out", a.out, "write the report here instead of stdout");
  };

  struct Sub {
    const char* name;
    const char* help;
    bool line;
  };
  const Sub subs[] = {{"count-zeros", "classify the roots of f against the curve", false},
                      {"winding", "winding number of f along the curve", false},
                      {"crossings", "distinct curve points mapped into the line", true},
                      {"verify", "check preimages >= 2m + lambda on a smooth curve", true},
                      {"verify-piecewise", "check the ceiling bound on a curve with corners", true},
                      {"detour", "build the detour curve and check it", true}};
  for (const Sub& s : subs) common(app.add_subcommand(s.name, s.help), s.line);

  app.get_subcommand("detour")->add_option("--epsilon", a.epsilons, "disc radii to try, largest first");

  CLI::App* trig = app.add_subcommand("trig-check", "Z_P + Z_Q >= 2n for real coefficients a_0..a_n");
  trig->add_option("--coeffs", a.coeffs, "comma-separated a_0,...,a_n");
  trig->add_option("--poly", a.poly, "polynomial JSON with real_coeffs");
  trig->add_option("--resolution", a.resolution, "initial sample count");
  trig->add_option("--out", a.out, "write the report here instead of stdout");

  CLI::App* harness = app.add_subcommand("harness", "randomized property trials");
  harness->add_option("--config", a.config, "harness config JSON file or inline JSON");
  harness->add_option("--seed", a.seed, "override the config seed")->each([&](const std::string&) { a.seed_given = true; });
  harness->add_option("--replay", a.replay, "re-run one replay file");
  harness->add_option("--replay-dir", a.replay_dir, "write failing instances here");
  harness->add_option("--threads", a.threads, "worker threads (0 = all cores)");
  harness->add_option("--resolution", a.resolution, "initial sample count");
  harness->add_option("--delta", a.delta, "on-curve band");
  harness->add_option("--out", a.out, "write the report here instead of stdout");

  CLI::App* emit = app.add_subcommand("emit-samples", "CSV of t, gamma(t), f(gamma(t)) and h(t)");
  common(emit, true);
  emit->add_option("--csv", a.csv, "CSV output file");
  emit->add_option("--rows", a.rows, "number of rows")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, a, out, err);
  } catch (const Error& e) {
    err << "argp " << cmd << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::Input ? kInputError : kNumericalError;
  } catch (const io::json::exception& e) {
    err << "argp " << cmd << ": malformed input: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace argp::cli
