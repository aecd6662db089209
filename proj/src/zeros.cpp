#include "argp/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "argp/errors.hpp"

namespace argp {

namespace {

constexpr double kPi = std::numbers::pi;

struct Tracker {
  const Polynomial& f;
  const std::optional<Polynomial> df;
  double min_abs_f = std::numeric_limits<double>::infinity();
  double max_abs_df = 0.0;
  std::size_t evaluations = 0;

  Complex operator()(Complex z) {
    const Complex v = eval(f, z);
    min_abs_f = std::min(min_abs_f, std::abs(v));
    max_abs_df = std::max(max_abs_df, std::abs(dfdz(z)));
    ++evaluations;
    return v;
  }

  Complex dfdz(Complex z) const { return df ? eval(*df, z) : Complex(0.0); }

  bool lifted(double band, double factor) const { return min_abs_f > factor * band * max_abs_df; }
};

std::optional<Polynomial> derivative_or_zero(const Polynomial& f) {
  if (f.degree() < 1) return std::nullopt;
  return derivative(f);
}

void require_liftoff(const Tracker& tr, double band, double factor) {
  if (!tr.lifted(band, factor))
    throw ZeroOnCurve("f has a zero on (or within the lift-off band of) the curve: min |f| = " +
                      std::to_string(tr.min_abs_f));
}

}  // namespace

std::vector<Root> ZeroReport::all_roots() const {
  std::vector<Root> out = inside.roots;
  out.insert(out.end(), on_curve.roots.begin(), on_curve.roots.end());
  out.insert(out.end(), outside.roots.begin(), outside.roots.end());
  return out;
}

ZeroReport classify_roots(const Polynomial& f, const JordanCurve& curve, double band, const RootOptions& root_opt) {
  ZeroReport out;
  out.band = band;
  if (f.degree() == 0) return out;
  const RootSet roots = find_roots(f, root_opt);
  out.inside.residual = out.on_curve.residual = out.outside.residual = roots.residual;
  for (const Root& r : roots.roots) {
    const Classification c = classify_point(curve, r.location, band);
    switch (c.location) {
      case PointLocation::Inside:
        out.inside.roots.push_back(r);
        out.m += r.multiplicity;
        break;
      case PointLocation::OnCurve:
        out.on_curve.roots.push_back(r);
        out.on_curve_parameters.push_back(c.parameter);
        out.lambda += r.multiplicity;
        break;
      case PointLocation::Outside:
        out.outside.roots.push_back(r);
        out.outside_multiplicity += r.multiplicity;
        break;
    }
  }
  return out;
}

ZeroReport classify_roots(const Polynomial& f, const JordanCurve& curve) {
  return classify_roots(f, curve, curve.default_band());
}

WindingResult winding_trace(const Polynomial& f, const JordanCurve& curve, const WindingOptions& opt) {
  const double band = opt.band > 0.0 ? opt.band : curve.default_band();
  Tracker tr{f, derivative_or_zero(f)};

  const std::vector<double> ts = segment_aware_parameters(curve, opt.initial_samples, 16);
  std::vector<Complex> values;
  values.reserve(ts.size());
  for (double t : ts) values.push_back(tr(curve.point(t)));
  require_liftoff(tr, band, opt.liftoff_factor);

  auto refine = [&](auto&& self, double ta, double tb, Complex fa, Complex fb, int depth) -> double {
    const double d = std::arg(fb / fa);
    const double tm = 0.5 * (ta + tb);
    const Complex fm = tr(curve.point(tm));
    if (fm == Complex(0.0)) require_liftoff(tr, band, opt.liftoff_factor);
    const double d1 = std::arg(fm / fa), d2 = std::arg(fb / fm);
    if (std::abs(d) < kPi / 2 && std::abs(d1) < kPi / 2 && std::abs(d2) < kPi / 2 && std::abs(d1 + d2 - d) < 1e-9)
      return d;
    if (depth >= opt.max_depth) {
      require_liftoff(tr, band, opt.liftoff_factor);
      throw NonIntegerWinding("argument tracking did not resolve at maximum refinement depth");
    }
    return self(self, ta, tm, fa, fm, depth + 1) + self(self, tm, tb, fm, fb, depth + 1);
  };

  double total = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double tb = i + 1 < ts.size() ? ts[i + 1] : 1.0;
    const Complex fb = values[(i + 1) % values.size()];
    total += refine(refine, ts[i], tb, values[i], fb, 0);
  }
  require_liftoff(tr, band, opt.liftoff_factor);

  WindingResult out;
  out.raw = total / (2.0 * kPi);
  out.winding = static_cast<int>(std::round(out.raw));
  out.min_abs_f = tr.min_abs_f;
  out.max_abs_df = tr.max_abs_df;
  out.evaluations = tr.evaluations;
  if (std::abs(out.raw - out.winding) > opt.rounding_guard)
    throw NonIntegerWinding("winding estimate " + std::to_string(out.raw) + " is not within guard of an integer");
  return out;
}

int winding_count(const Polynomial& f, const JordanCurve& curve, const WindingOptions& opt) {
  return winding_trace(f, curve, opt).winding;
}

Complex logderiv_integral(const Polynomial& f, const JordanCurve& curve, int n, const WindingOptions& opt) {
  const double band = opt.band > 0.0 ? opt.band : curve.default_band();
  Tracker tr{f, derivative_or_zero(f)};
  const auto& br = curve.breaks();
  Complex sum = 0.0;
  for (std::size_t i = 0; i < curve.segments().size(); ++i) {
    const Segment& seg = curve.segments()[i];
    const int k = std::max(16, static_cast<int>(std::ceil(n * (br[i + 1] - br[i]))));
    Complex seg_sum = 0.0;
    for (int j = 0; j <= k; ++j) {
      const double u = static_cast<double>(j) / k;
      const Complex z = point(seg, u);
      const Complex v = tr(z);
      if (v == Complex(0.0)) require_liftoff(tr, band, opt.liftoff_factor);
      const Complex integrand = tr.dfdz(z) / v * velocity(seg, u);
      seg_sum += (j == 0 || j == k) ? 0.5 * integrand : integrand;
    }
    sum += seg_sum / static_cast<double>(k);
  }
  require_liftoff(tr, band, opt.liftoff_factor);
  return sum / Complex(0.0, 2.0 * kPi);
}

}  // namespace argp
