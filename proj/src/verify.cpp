#include "argp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <numbers>

#include "argp/errors.hpp"

namespace argp {

namespace {

constexpr double kPi = std::numbers::pi;

BoundReport measure(const Polynomial& f, const JordanCurve& curve, Line line, const VerifyOptions& opt) {
  const double band = opt.crossings.band > 0.0 ? opt.crossings.band : curve.default_band();
  BoundReport r;
  r.zeros = classify_roots(f, curve, band, opt.crossings.roots);
  r.preimages = count_preimages(f, curve, line, r.zeros, opt.crossings);
  r.measured = r.preimages.count();
  r.m = r.zeros.m;
  r.lambda = r.zeros.lambda;
  r.line_angle = line.angle();
  r.resolution = r.preimages.resolution;
  return r;
}

double cosine_sum(std::span<const double> c, double theta) {
  double s = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * std::cos(static_cast<double>(j) * theta);
  return s;
}

}  // namespace

int ceiling_term(int multiplicity, double interior_angle) {
  const double x = multiplicity * interior_angle / kPi;
  const double r = std::round(x);
  return static_cast<int>(std::abs(x - r) < 1e-9 ? r : std::ceil(x));
}

BoundReport verify_main(const Polynomial& f, const JordanCurve& curve, Line line, const VerifyOptions& opt) {
  if (!curve.smooth()) throw PreconditionViolated("verify_main needs a curve without corners; use verify_piecewise");
  BoundReport r = measure(f, curve, line, opt);
  r.theorem = "main";
  r.bound = 2 * r.m + r.lambda;
  for (std::size_t j = 0; j < r.zeros.on_curve.roots.size(); ++j) {
    const Root& root = r.zeros.on_curve.roots[j];
    r.per_corner.push_back({root.location, r.zeros.on_curve_parameters[j], root.multiplicity, kPi, root.multiplicity});
  }
  r.holds = r.measured >= r.bound;
  return r;
}

BoundReport verify_piecewise(const Polynomial& f, const JordanCurve& curve, Line line, const VerifyOptions& opt) {
  BoundReport r = measure(f, curve, line, opt);
  r.theorem = "piecewise";
  // a computed root sits within a few bands of the corner it was planted at
  const double snap = 10.0 * r.zeros.band;
  r.bound = 2 * r.m;
  for (std::size_t j = 0; j < r.zeros.on_curve.roots.size(); ++j) {
    const Root& root = r.zeros.on_curve.roots[j];
    CornerTerm term{root.location, r.zeros.on_curve_parameters[j], root.multiplicity, kPi, 0};
    if (const auto corner = corner_near(curve, root.location, snap)) {
      term.parameter = corner->parameter;
      term.interior_angle = corner->interior_angle;
    } else {
      term.interior_angle = interior_angle(curve, term.parameter);
    }
    term.term = ceiling_term(term.multiplicity, term.interior_angle);
    r.bound += term.term;
    r.per_corner.push_back(term);
  }
  r.holds = r.measured >= r.bound;
  return r;
}

namespace {

int floor_term(int multiplicity, double angle) {
  const double x = multiplicity * angle / kPi;
  const double r = std::round(x);
  return static_cast<int>(std::abs(x - r) < 1e-9 ? r : std::floor(x));
}

struct DetourAttempt {
  DetourReport report;
  bool arcs_ok = false;
};

DetourAttempt evaluate_detour(const Polynomial& f, const JordanCurve& curve, Line line, const ZeroReport& zeros,
                              DetourCurve detour, std::int64_t on_base, const VerifyOptions& opt) {
  DetourAttempt a;
  DetourReport& out = a.report;
  out.m = zeros.m;
  out.lambda = zeros.lambda;
  out.on_base = on_base;
  out.detour = std::move(detour);
  const JordanCurve& composite = out.detour.composite;
  const double snap = 10.0 * zeros.band;

  std::vector<int> mult;
  for (const Excision& e : out.detour.excisions) {
    int k = 0;
    for (const Root& r : zeros.on_curve.roots)
      if (r.location == e.center) k = r.multiplicity;
    mult.push_back(k);
    const auto corner = corner_near(curve, e.center, snap);
    out.interior_angles.push_back(corner ? corner->interior_angle : interior_angle(curve, e.t_zero));
  }

  WindingOptions wopt = opt.winding;
  wopt.band = composite.default_band();
  try {
    out.winding = winding_trace(f, composite, wopt);
    out.liftoff_ok = true;
  } catch (const ZeroOnCurve&) {
    return a;
  }
  out.winding_ok = out.winding.winding == out.m + out.lambda;

  CrossingOptions copt = opt.crossings;
  copt.band = 0.0;
  out.on_detour = count_preimages(f, composite, line, copt);
  out.preimages_ok = out.on_detour.count() >= 2 * static_cast<std::int64_t>(out.m + out.lambda);
  out.holds = out.winding_ok && out.preimages_ok;
  if (out.on_detour.continuum) return a;

  const std::size_t k = out.detour.excisions.size();
  out.per_arc.assign(k, 0);
  for (const Preimage& p : out.on_detour.points) {
    bool on_arc = false;
    for (std::size_t j = 0; j < k && !on_arc; ++j) {
      const Excision& e = out.detour.excisions[j];
      if (std::abs(std::abs(p.z - e.center) - e.radius) < 1e-9 * e.radius) {
        ++out.per_arc[j];
        on_arc = true;
      }
    }
    ++(on_arc ? out.arc_points : out.base_points);
  }

  a.arcs_ok = true;
  std::int64_t intermediate = 2 * static_cast<std::int64_t>(zeros.m);
  for (std::size_t j = 0; j < k; ++j) {
    const double alpha = out.interior_angles[j];
    a.arcs_ok = a.arcs_ok && out.per_arc[j] <= floor_term(mult[j], 2.0 * kPi - alpha) + 1;
    intermediate += ceiling_term(mult[j], alpha) - 1;
  }
  out.consistent = a.arcs_ok && out.on_base >= out.base_points && out.base_points >= intermediate;
  return a;
}

}  // namespace

DetourReport verify_detour(const Polynomial& f, const JordanCurve& curve, Line line, std::span<const double> schedule,
                           const VerifyOptions& opt) {
  const double band = opt.crossings.band > 0.0 ? opt.crossings.band : curve.default_band();
  const ZeroReport zeros = classify_roots(f, curve, band, opt.crossings.roots);
  if (zeros.lambda < 1) throw PreconditionViolated("the detour needs at least one zero of f on the curve");

  std::vector<Complex> centers;
  for (const Root& r : zeros.on_curve.roots) centers.push_back(r.location);

  // each disc may hold only its own zero
  double exclusion = std::numeric_limits<double>::infinity();
  const std::vector<Root> all = zeros.all_roots();
  for (const Complex& c : centers)
    for (const Root& r : all)
      if (r.location != c) exclusion = std::min(exclusion, std::abs(r.location - c));
  std::vector<double> radii;
  for (double eps : schedule.empty() ? default_epsilon_schedule(curve, centers)
                                     : std::vector<double>(schedule.begin(), schedule.end()))
    if (eps < exclusion) radii.push_back(eps);
  if (radii.empty()) throw DetourFailed("every radius in the schedule reaches another root of f");

  const std::int64_t on_base = count_preimages(f, curve, line, zeros, opt.crossings).count();
  std::optional<DetourAttempt> last;
  std::size_t from = 0;
  while (from < radii.size()) {
    DetourCurve d;
    try {
      d = build_detour(curve, centers, std::span<const double>(radii).subspan(from), band);
    } catch (const DetourFailed&) {
      if (last) break;
      throw;
    }
    from = static_cast<std::size_t>(std::find(radii.begin(), radii.end(), d.epsilon) - radii.begin()) + 1;
    DetourAttempt a = evaluate_detour(f, curve, line, zeros, std::move(d), on_base, opt);
    if (a.arcs_ok || !a.report.liftoff_ok) return std::move(a.report);
    last = std::move(a);
  }
  return std::move(last->report);
}

Polynomial reverse_poly(const Polynomial& f) {
  const Eigen::VectorXcd& a = f.coeffs();
  if (a[0] == Complex(0.0)) throw BoundaryCoefficientZero("reversal needs a nonzero constant coefficient");
  return Polynomial(Eigen::VectorXcd(a.reverse()));
}

std::int64_t count_cosine_zeros(std::span<const double> c, int samples) {
  if (samples < 16) throw PreconditionViolated("cosine zero count needs at least 16 samples");
  double scale = 0.0;
  for (double x : c) scale += std::abs(x);
  if (!(scale > 0.0)) throw PreconditionViolated("cosine sum is identically zero");
  const double contact = 1e-8 * scale;
  const double step = 2.0 * kPi / samples;

  std::vector<double> v(samples);
  for (int k = 0; k < samples; ++k) v[k] = cosine_sum(c, k * step);
  auto at = [&](long k) { return v[static_cast<std::size_t>((k % samples + samples) % samples)]; };

  auto bisect = [&](double a, double b, double fa) {
    for (int it = 0; it < 200; ++it) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      const double fm = cosine_sum(c, m);
      if (fm == 0.0) return m;
      if ((fm > 0.0) == (fa > 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    return 0.5 * (a + b);
  };

  std::vector<double> roots;
  for (long k = 0; k < samples; ++k) {
    const double a = at(k), b = at(k + 1);
    if (a == 0.0) {
      roots.push_back(k * step);
    } else if (b != 0.0 && (a > 0.0) != (b > 0.0)) {
      roots.push_back(bisect(k * step, (k + 1) * step, a));
    }
  }
  for (long k = 0; k < samples; ++k) {
    const double l = at(k - 1), m = at(k), r = at(k + 1);
    if (m == 0.0 || (l > 0.0) != (m > 0.0) || (r > 0.0) != (m > 0.0)) continue;
    if (!(std::abs(m) <= std::abs(l) && std::abs(m) <= std::abs(r))) continue;
    const double sign = m > 0.0 ? 1.0 : -1.0;
    double lo = (k - 1) * step, hi = (k + 1) * step;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = sign * cosine_sum(c, x1), f2 = sign * cosine_sum(c, x2);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = sign * cosine_sum(c, x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = sign * cosine_sum(c, x2);
      }
    }
    const double xm = f1 < f2 ? x1 : x2, fm = std::min(f1, f2);
    if (fm < -1e-14 * scale) {
      roots.push_back(bisect((k - 1) * step, xm, l));
      roots.push_back(bisect(xm, (k + 1) * step, r));
    } else if (fm < contact) {
      roots.push_back(xm);
    }
  }

  for (double& x : roots) x -= 2.0 * kPi * std::floor(x / (2.0 * kPi));
  std::sort(roots.begin(), roots.end());
  constexpr double merge = 1e-10;
  std::vector<double> distinct;
  for (double x : roots)
    if (distinct.empty() || x - distinct.back() > merge) distinct.push_back(x);
  if (distinct.size() > 1 && distinct.front() + 2.0 * kPi - distinct.back() <= merge) distinct.pop_back();
  return static_cast<std::int64_t>(distinct.size());
}

TrigZeroCount trig_zero_count(std::span<const double> a, CosineSum which, const CrossingOptions& opt) {
  if (a.size() < 2) throw PreconditionViolated("need coefficients a_0 .. a_n with n >= 1");
  if (a.front() == 0.0 || a.back() == 0.0) throw BoundaryCoefficientZero("a_0 and a_n must be nonzero");
  std::vector<double> c(a.begin(), a.end());
  if (which == CosineSum::Q) std::reverse(c.begin(), c.end());
  TrigZeroCount out;
  out.via_polynomial = count_preimages(Polynomial::from_real(c), unit_circle(), Line::imag_axis(), opt).count();
  out.direct = count_cosine_zeros(c);
  return out;
}

TrigReport verify_trig(std::span<const double> a, const CrossingOptions& opt) {
  if (a.size() < 2) throw PreconditionViolated("need coefficients a_0 .. a_n with n >= 1");
  if (a.front() == 0.0 || a.back() == 0.0) throw BoundaryCoefficientZero("a_0 and a_n must be nonzero");
  TrigReport out;
  out.coeffs.assign(a.begin(), a.end());
  out.n = static_cast<int>(a.size()) - 1;

  const JordanCurve circle = unit_circle();
  const double band = opt.band > 0.0 ? opt.band : circle.default_band();
  const Polynomial f = Polynomial::from_real(out.coeffs);
  const Polynomial g = reverse_poly(f);
  const ZeroReport zf = classify_roots(f, circle, band, opt.roots);
  const ZeroReport zg = classify_roots(g, circle, band, opt.roots);
  out.m_f = zf.m;
  out.m_g = zg.m;
  out.lambda = zf.lambda;

  // a zero e^{i theta} of f makes e^{-i theta} a zero of g of the same order
  out.conjugates_match = zf.lambda == zg.lambda && zf.on_curve.roots.size() == zg.on_curve.roots.size();
  for (const Root& r : zf.on_curve.roots) {
    const double tol = std::pow(opt.roots.tol, 1.0 / r.multiplicity);
    const bool found = std::any_of(zg.on_curve.roots.begin(), zg.on_curve.roots.end(), [&](const Root& s) {
      return s.multiplicity == r.multiplicity && std::abs(s.location - std::conj(r.location)) <= tol;
    });
    out.conjugates_match = out.conjugates_match && found;
  }

  const Line imag = Line::imag_axis();
  out.z_p = count_preimages(f, circle, imag, zf, opt).count();
  out.z_q = count_preimages(g, circle, imag, zg, opt).count();
  std::vector<double> rev(out.coeffs.rbegin(), out.coeffs.rend());
  out.direct_agrees = count_cosine_zeros(out.coeffs) == out.z_p && count_cosine_zeros(rev) == out.z_q;
  out.identity_holds = out.m_f + out.m_g + out.lambda == out.n;
  out.bound_holds = out.z_p + out.z_q >= 2 * static_cast<std::int64_t>(out.n);
  return out;
}

}  // namespace argp
