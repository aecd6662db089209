#include "argp/detour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "argp/errors.hpp"

namespace argp {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_two_pi(double a) {
  a = std::fmod(a, 2.0 * kPi);
  return a <= 0.0 ? a + 2.0 * kPi : a;
}

double mod1(double t) { return t - std::floor(t); }

/// Segments tracing the base curve from ta to tb (cyclic, tb taken past ta).
std::vector<Segment> extract(const JordanCurve& curve, double ta, double tb) {
  ta = mod1(ta);
  tb = mod1(tb);
  if (tb <= ta) tb += 1.0;
  std::vector<Segment> out;
  const auto& br = curve.breaks();
  for (int pass = 0; pass <= 1; ++pass) {
    for (std::size_t i = 0; i < curve.segments().size(); ++i) {
      const double lo = br[i] + pass, hi = br[i + 1] + pass;
      const double a = std::max(ta, lo), b = std::min(tb, hi);
      if (b - a <= 1e-14) continue;
      const double u0 = a == lo ? 0.0 : (a - lo) / (hi - lo);
      const double u1 = b == hi ? 1.0 : (b - lo) / (hi - lo);
      if (u1 - u0 < 1e-12) continue;
      out.push_back(subsegment(curve.segments()[i], u0, u1));
    }
  }
  return out;
}

std::optional<DetourCurve> try_radius(const JordanCurve& curve, const std::vector<Complex>& zeros,
                                      const std::vector<double>& t_zero, double eps, double band) {
  const std::size_t k = zeros.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (std::abs(zeros[i] - zeros[j]) <= 2.0 * eps) return std::nullopt;

  std::vector<Excision> exc;
  for (std::size_t j = 0; j < k; ++j) {
    const std::vector<double> c = circle_crossings(curve, zeros[j], eps);
    if (c.size() != 2) return std::nullopt;
    Excision e;
    e.center = zeros[j];
    e.radius = eps;
    e.t_zero = t_zero[j];
    const bool inside_between = c[0] < t_zero[j] && t_zero[j] < c[1];
    e.t_in = inside_between ? c[0] : c[1];
    e.t_out = inside_between ? c[1] : c[0];
    const double theta_a = std::arg(curve.point(e.t_in) - e.center);
    const double theta_b = std::arg(curve.point(e.t_out) - e.center);
    e.sweep = wrap_two_pi(theta_b - theta_a);
    const Complex mid = e.center + std::polar(eps, theta_a + 0.5 * e.sweep);
    if (classify_point(curve, mid, band).location != PointLocation::Outside) return std::nullopt;
    exc.push_back(e);
  }
  std::sort(exc.begin(), exc.end(), [](const Excision& a, const Excision& b) { return a.t_zero < b.t_zero; });

  std::vector<Segment> segs;
  for (std::size_t j = 0; j < k; ++j) {
    const Excision& cur = exc[j];
    const Excision& next = exc[(j + 1) % k];
    for (Segment& s : extract(curve, cur.t_out, next.t_in)) segs.push_back(std::move(s));
    const double theta_a = std::arg(curve.point(next.t_in) - next.center);
    segs.push_back(ArcSegment{next.center, next.radius, theta_a, theta_a + next.sweep});
  }

  std::optional<DetourCurve> out;
  try {
    JordanCurve composite = JordanCurve::from_segments(std::move(segs));
    if (composite.was_reversed()) return std::nullopt;
    for (const Complex& z : zeros)
      if (classify_point(composite, z, band).location != PointLocation::Inside) return std::nullopt;
    out = DetourCurve{curve, std::move(exc), std::move(composite), eps};
  } catch (const Error&) {
    return std::nullopt;
  }
  return out;
}

}  // namespace

std::vector<double> default_epsilon_schedule(const JordanCurve& curve, std::span<const Complex> zeros) {
  double scale = curve.diameter();
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = i + 1; j < zeros.size(); ++j) scale = std::min(scale, std::abs(zeros[i] - zeros[j]));
  std::vector<double> out;
  for (int k = 0; k <= 20; ++k) out.push_back(0.2 * std::ldexp(1.0, -k) * scale);
  return out;
}

std::vector<double> circle_crossings(const JordanCurve& curve, Complex center, double radius) {
  std::vector<double> out;
  for (std::size_t i = 0; i < curve.segments().size(); ++i) {
    const Segment& seg = curve.segments()[i];
    const double speed = speed_bound(seg);
    auto dist = [&](double u) { return std::abs(point(seg, u) - center) - radius; };
    auto rec = [&](auto&& self, double ua, double ub, double da, double db, int depth) -> void {
      const double reach = 0.5 * speed * (ub - ua);
      if (std::min(da, db) - reach > 0.0 || std::max(da, db) + reach < 0.0) return;
      if (reach < radius * 1e-3 || depth > 60) {
        if ((da >= 0.0) == (db >= 0.0)) return;
        double a = ua, b = ub, fa = da;
        for (int it = 0; it < 200; ++it) {
          const double m = 0.5 * (a + b);
          if (m <= a || m >= b) break;
          const double fm = dist(m);
          if ((fm >= 0.0) == (fa >= 0.0)) {
            a = m;
            fa = fm;
          } else {
            b = m;
          }
        }
        out.push_back(mod1(curve.global_parameter(i, 0.5 * (a + b))));
        return;
      }
      const double um = 0.5 * (ua + ub);
      const double dm = dist(um);
      self(self, ua, um, da, dm, depth + 1);
      self(self, um, ub, dm, db, depth + 1);
    };
    constexpr int pieces = 8;
    double da = dist(0.0);
    for (int p = 0; p < pieces; ++p) {
      const double ub = static_cast<double>(p + 1) / pieces;
      const double db = dist(ub);
      rec(rec, static_cast<double>(p) / pieces, ub, da, db, 0);
      da = db;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DetourCurve build_detour(const JordanCurve& curve, std::span<const Complex> zeros, std::span<const double> schedule,
                         double band) {
  if (band <= 0.0) band = curve.default_band();
  std::vector<Complex> zs(zeros.begin(), zeros.end());
  std::vector<double> ts;
  for (const Complex& z : zs) {
    const Classification c = classify_point(curve, z, band);
    if (c.location != PointLocation::OnCurve) throw PreconditionViolated("detour center is not on the curve");
    ts.push_back(c.parameter);
  }
  if (zs.empty()) return DetourCurve{curve, {}, curve, 0.0};

  for (double eps : schedule) {
    if (!(eps > 0.0)) throw PreconditionViolated("detour radii must be positive");
    if (auto d = try_radius(curve, zs, ts, eps, band)) return *std::move(d);
  }
  throw DetourFailed("no radius in the schedule yields a valid detour curve");
}

DetourCurve build_detour(const JordanCurve& curve, std::span<const Complex> zeros) {
  const std::vector<double> schedule = default_epsilon_schedule(curve, zeros);
  return build_detour(curve, zeros, schedule);
}

}  // namespace argp
