#include "argp/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "argp/errors.hpp"

namespace argp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCornerThreshold = 1e-6;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double fourier(const std::vector<double>& c, double s) {
  if (c.empty()) return 0.0;
  double acc = c[0];
  for (std::size_t j = 1; j < c.size(); j += 2) {
    const double k = static_cast<double>((j + 1) / 2);
    acc += c[j] * std::cos(k * s);
    if (j + 1 < c.size()) acc += c[j + 1] * std::sin(k * s);
  }
  return acc;
}

double fourier_derivative(const std::vector<double>& c, double s) {
  double acc = 0.0;
  for (std::size_t j = 1; j < c.size(); j += 2) {
    const double k = static_cast<double>((j + 1) / 2);
    acc -= k * c[j] * std::sin(k * s);
    if (j + 1 < c.size()) acc += k * c[j + 1] * std::cos(k * s);
  }
  return acc;
}

double fourier_derivative_bound(const std::vector<double>& c) {
  double acc = 0.0;
  for (std::size_t j = 1; j < c.size(); ++j) acc += static_cast<double>((j + 1) / 2) * std::abs(c[j]);
  return acc;
}

double wrap_two_pi(double a) {
  a = std::fmod(a, 2.0 * kPi);
  return a < 0.0 ? a + 2.0 * kPi : a;
}

double segment_length(const Segment& s) {
  return std::visit(overloaded{
                        [](const ArcSegment& a) { return a.radius * std::abs(a.to - a.from); },
                        [](const LineSegment& l) { return std::abs(l.to - l.from); },
                        [&](const TrigSegment&) {
                          constexpr int n = 512;
                          double acc = 0.0;
                          for (int i = 0; i < n; ++i) acc += std::abs(velocity(s, (i + 0.5) / n));
                          return acc / n;
                        },
                    },
                    s);
}

double point_segment_distance(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  double u = len2 > 0.0 ? std::real((p - a) * std::conj(d)) / len2 : 0.0;
  u = std::clamp(u, 0.0, 1.0);
  return std::abs(p - (a + u * d));
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool chords_cross(Complex a, Complex b, Complex c, Complex d) {
  const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

double chord_distance(Complex a, Complex b, Complex c, Complex d) {
  if (chords_cross(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d), point_segment_distance(c, a, b),
                   point_segment_distance(d, a, b)});
}

/// Nearest local parameter on one segment.
std::pair<double, double> nearest_on_segment(const Segment& s, Complex p) {
  auto consider = [&](double u, std::pair<double, double>& best) {
    const double d = std::abs(point(s, u) - p);
    if (d < best.second) best = {u, d};
  };
  std::pair<double, double> best{0.0, std::abs(point(s, 0.0) - p)};
  consider(1.0, best);

  if (const auto* line = std::get_if<LineSegment>(&s)) {
    const Complex d = line->to - line->from;
    const double u = std::clamp(std::real((p - line->from) * std::conj(d)) / std::norm(d), 0.0, 1.0);
    consider(u, best);
    return best;
  }
  if (const auto* arc = std::get_if<ArcSegment>(&s)) {
    if (p == arc->center) return best;
    const double ang = std::arg(p - arc->center);
    const double span = arc->to - arc->from;
    const double rel = span > 0 ? wrap_two_pi(ang - arc->from) : wrap_two_pi(arc->from - ang);
    if (rel <= std::abs(span)) consider(rel / std::abs(span), best);
    return best;
  }

  // Trigonometric: coarse scan, then bisection on the derivative of the
  // squared distance inside the bracketing cell.
  constexpr int n = 256;
  int best_i = 0;
  double best_d = std::abs(point(s, 0.0) - p);
  for (int i = 1; i <= n; ++i) {
    const double d = std::abs(point(s, static_cast<double>(i) / n) - p);
    if (d < best_d) {
      best_d = d;
      best_i = i;
    }
  }
  auto slope = [&](double u) { return std::real(std::conj(point(s, u) - p) * velocity(s, u)); };
  double lo = std::max(0, best_i - 1) / static_cast<double>(n);
  double hi = std::min(n, best_i + 1) / static_cast<double>(n);
  if (slope(lo) <= 0.0 && slope(hi) >= 0.0) {
    for (int it = 0; it < 80 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (slope(mid) < 0.0 ? lo : hi) = mid;
    }
    consider(0.5 * (lo + hi), best);
  } else {
    // golden section on the distance itself
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    for (int it = 0; it < 100 && b - a > 1e-15; ++it) {
      const double c = b - g * (b - a), d = a + g * (b - a);
      if (std::abs(point(s, c) - p) < std::abs(point(s, d) - p))
        b = d;
      else
        a = c;
    }
    consider(0.5 * (a + b), best);
  }
  consider(best_i / static_cast<double>(n), best);
  return best;
}

/// Signed angle swept by the segment as seen from p.
double swept_angle(const Segment& s, Complex p) {
  if (const auto* line = std::get_if<LineSegment>(&s)) return std::arg((line->to - p) / (line->from - p));

  double total = 0.0;
  auto refine = [&](auto&& self, double ua, double ub, Complex wa, Complex wb, int depth) -> double {
    const double d = std::arg(wb / wa);
    const double um = 0.5 * (ua + ub);
    const Complex wm = point(s, um) - p;
    const double d1 = std::arg(wm / wa), d2 = std::arg(wb / wm);
    const double chord = std::abs(wb - wa);
    if (std::abs(d) < kPi / 2 && std::abs(d1 + d2 - d) < 1e-9 &&
        chord < 0.5 * std::min(std::abs(wa), std::abs(wb)))
      return d;
    if (depth > 60) throw AmbiguousClassification("winding refinement exhausted; point too close to curve");
    return self(self, ua, um, wa, wm, depth + 1) + self(self, um, ub, wm, wb, depth + 1);
  };
  constexpr int pieces = 16;
  Complex wa = point(s, 0.0) - p;
  for (int i = 0; i < pieces; ++i) {
    const double ua = static_cast<double>(i) / pieces, ub = static_cast<double>(i + 1) / pieces;
    const Complex wb = point(s, ub) - p;
    total += refine(refine, ua, ub, wa, wb, 0);
    wa = wb;
  }
  return total;
}

}  // namespace

Complex point(const Segment& s, double u) {
  return std::visit(overloaded{
                        [u](const ArcSegment& a) {
                          return a.center + std::polar(a.radius, a.from + u * (a.to - a.from));
                        },
                        [u](const LineSegment& l) { return l.from + u * (l.to - l.from); },
                        [u](const TrigSegment& t) {
                          const double s = t.t0 + u * (t.t1 - t.t0);
                          return Complex(fourier(t.coeffs_x, s), fourier(t.coeffs_y, s));
                        },
                    },
                    s);
}

Complex velocity(const Segment& s, double u) {
  return std::visit(overloaded{
                        [u](const ArcSegment& a) {
                          const double span = a.to - a.from;
                          return Complex(0.0, span) * std::polar(a.radius, a.from + u * span);
                        },
                        [](const LineSegment& l) { return l.to - l.from; },
                        [u](const TrigSegment& t) {
                          const double s = t.t0 + u * (t.t1 - t.t0);
                          return (t.t1 - t.t0) *
                                 Complex(fourier_derivative(t.coeffs_x, s), fourier_derivative(t.coeffs_y, s));
                        },
                    },
                    s);
}

double speed_bound(const Segment& s) {
  return std::visit(overloaded{
                        [](const ArcSegment& a) { return a.radius * std::abs(a.to - a.from); },
                        [](const LineSegment& l) { return std::abs(l.to - l.from); },
                        [](const TrigSegment& t) {
                          return std::abs(t.t1 - t.t0) * std::hypot(fourier_derivative_bound(t.coeffs_x),
                                                                    fourier_derivative_bound(t.coeffs_y));
                        },
                    },
                    s);
}

Segment reversed(const Segment& s) {
  return std::visit(overloaded{
                        [](const ArcSegment& a) -> Segment { return ArcSegment{a.center, a.radius, a.to, a.from}; },
                        [](const LineSegment& l) -> Segment { return LineSegment{l.to, l.from}; },
                        [](const TrigSegment& t) -> Segment {
                          return TrigSegment{t.coeffs_x, t.coeffs_y, t.t1, t.t0};
                        },
                    },
                    s);
}

Segment subsegment(const Segment& s, double u0, double u1) {
  return std::visit(overloaded{
                        [&](const ArcSegment& a) -> Segment {
                          const double span = a.to - a.from;
                          return ArcSegment{a.center, a.radius, a.from + u0 * span, a.from + u1 * span};
                        },
                        [&](const LineSegment& l) -> Segment {
                          // exact endpoints when the full range is kept
                          const Complex from = u0 == 0.0 ? l.from : l.from + u0 * (l.to - l.from);
                          const Complex to = u1 == 1.0 ? l.to : l.from + u1 * (l.to - l.from);
                          return LineSegment{from, to};
                        },
                        [&](const TrigSegment& t) -> Segment {
                          const double span = t.t1 - t.t0;
                          return TrigSegment{t.coeffs_x, t.coeffs_y, t.t0 + u0 * span, t.t0 + u1 * span};
                        },
                    },
                    s);
}

bool is_valid(const Segment& s) {
  return std::visit(overloaded{
                        [](const ArcSegment& a) {
                          return a.radius > 0.0 && a.to != a.from && std::abs(a.to - a.from) <= 2.0 * kPi + 1e-12 &&
                                 std::isfinite(a.radius) && std::isfinite(a.from) && std::isfinite(a.to);
                        },
                        [](const LineSegment& l) {
                          return l.to != l.from && std::isfinite(std::abs(l.from)) && std::isfinite(std::abs(l.to));
                        },
                        [&](const TrigSegment& t) {
                          if (t.t0 == t.t1 || t.coeffs_x.empty() || t.coeffs_y.empty()) return false;
                          for (int i = 0; i <= 256; ++i)
                            if (!(std::abs(velocity(s, i / 256.0)) > 0.0)) return false;
                          return true;
                        },
                    },
                    s);
}

JordanCurve JordanCurve::from_segments(std::vector<Segment> segments) {
  if (segments.empty()) throw InputError("a curve needs at least one segment");
  for (const Segment& s : segments)
    if (!is_valid(s)) throw InputError("degenerate curve segment (zero radius, zero length or vanishing derivative)");

  // coarse samples for diameter and orientation
  std::vector<Complex> coarse;
  for (const Segment& s : segments)
    for (int i = 0; i < 256; ++i) coarse.push_back(argp::point(s, i / 256.0));
  double diam = 0.0;
  {
    std::vector<Complex> sub;
    const std::size_t stride = std::max<std::size_t>(1, coarse.size() / 512);
    for (std::size_t i = 0; i < coarse.size(); i += stride) sub.push_back(coarse[i]);
    for (const Segment& s : segments) sub.push_back(argp::point(s, 0.0));
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j) diam = std::max(diam, std::abs(sub[i] - sub[j]));
  }
  if (!(diam > 0.0)) throw InputError("curve has zero extent");

  const double closure_tol = 1e-9 * diam;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Complex end = argp::point(segments[i], 1.0);
    const Complex start = argp::point(segments[(i + 1) % segments.size()], 0.0);
    if (std::abs(end - start) > closure_tol) throw InputError("curve is not closed: segment endpoints do not meet");
  }

  double area = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) area += 0.5 * cross(coarse[i], coarse[(i + 1) % coarse.size()]);
  if (area == 0.0) throw InputError("curve encloses no area");

  JordanCurve c;
  if (area < 0.0) {
    std::reverse(segments.begin(), segments.end());
    for (Segment& s : segments) s = reversed(s);
    area = -area;
    c.reversed_ = true;
  }
  c.segments_ = std::move(segments);
  c.diameter_ = diam;
  c.area_ = area;

  std::vector<double> lengths;
  double total = 0.0;
  for (const Segment& s : c.segments_) {
    lengths.push_back(segment_length(s));
    total += lengths.back();
  }
  c.breaks_.push_back(0.0);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    acc += lengths[i];
    c.breaks_.push_back(acc / total);
  }
  c.breaks_.push_back(1.0);

  const std::size_t n = c.segments_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const Complex v_in = velocity(c.segments_[i], 1.0);
    const Complex v_out = velocity(c.segments_[j], 0.0);
    const double turning = std::arg(v_out / v_in);
    if (std::abs(turning) > kCornerThreshold)
      c.corners_.push_back({c.breaks_[j], argp::point(c.segments_[j], 0.0), kPi - turning});
  }
  std::sort(c.corners_.begin(), c.corners_.end(),
            [](const CornerInfo& a, const CornerInfo& b) { return a.parameter < b.parameter; });

  std::vector<Complex> poly;
  for (double t : segment_aware_parameters(c, 512, 16)) poly.push_back(c.point(t));
  if (!simple_at_resolution(poly, c.default_band())) throw InputError("curve is not simple at sample resolution");
  return c;
}

std::pair<std::size_t, double> JordanCurve::locate(double t) const {
  t -= std::floor(t);
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  std::size_t i = static_cast<std::size_t>(std::distance(breaks_.begin(), it));
  i = i == 0 ? 0 : i - 1;
  if (i >= segments_.size()) i = segments_.size() - 1;
  const double u = (t - breaks_[i]) / (breaks_[i + 1] - breaks_[i]);
  return {i, std::clamp(u, 0.0, 1.0)};
}

double JordanCurve::global_parameter(std::size_t segment, double u) const {
  return breaks_[segment] + u * (breaks_[segment + 1] - breaks_[segment]);
}

Complex JordanCurve::point(double t) const {
  const auto [i, u] = locate(t);
  return argp::point(segments_[i], u);
}

Complex JordanCurve::derivative(double t) const {
  const auto [i, u] = locate(t);
  return velocity(segments_[i], u) / (breaks_[i + 1] - breaks_[i]);
}

Complex JordanCurve::incoming_derivative(double t) const {
  const auto [i, u] = locate(t);
  if (u == 0.0) {
    const std::size_t p = i == 0 ? segments_.size() - 1 : i - 1;
    return velocity(segments_[p], 1.0) / (breaks_[p + 1] - breaks_[p]);
  }
  return velocity(segments_[i], u) / (breaks_[i + 1] - breaks_[i]);
}

JordanCurve unit_circle() { return circle(0.0, 1.0); }

JordanCurve circle(Complex center, double radius) {
  return JordanCurve::from_segments({ArcSegment{center, radius, 0.0, 2.0 * kPi}});
}

JordanCurve polygon(const std::vector<Complex>& vertices) {
  if (vertices.size() < 3) throw InputError("polygon needs at least three vertices");
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    segs.push_back(LineSegment{vertices[i], vertices[(i + 1) % vertices.size()]});
  return JordanCurve::from_segments(std::move(segs));
}

JordanCurve square(Complex center, double side) {
  const double h = 0.5 * side;
  return polygon({center + Complex(-h, -h), center + Complex(h, -h), center + Complex(h, h), center + Complex(-h, h)});
}

JordanCurve l_shape(Complex origin, double scale) {
  std::vector<Complex> v{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  for (Complex& z : v) z = origin + scale * z;
  return polygon(v);
}

JordanCurve perturbed_circle(Complex center, double radius, const std::vector<double>& cos_terms,
                             const std::vector<double>& sin_terms) {
  const std::size_t kmax = std::max(cos_terms.size(), sin_terms.size());
  std::vector<double> xc(kmax + 2, 0.0), xs(kmax + 2, 0.0), yc(kmax + 2, 0.0), ys(kmax + 2, 0.0);
  xc[1] = 1.0;
  ys[1] = 1.0;
  for (std::size_t idx = 0; idx < kmax; ++idx) {
    const std::size_t k = idx + 1;
    const double p = idx < cos_terms.size() ? cos_terms[idx] : 0.0;
    const double q = idx < sin_terms.size() ? sin_terms[idx] : 0.0;
    // r cos s and r sin s via product-to-sum
    xc[k + 1] += 0.5 * p;
    xc[k - 1] += 0.5 * p;
    xs[k + 1] += 0.5 * q;
    xs[k - 1] += 0.5 * q;
    ys[k + 1] += 0.5 * p;
    ys[k - 1] -= 0.5 * p;
    yc[k - 1] += 0.5 * q;
    yc[k + 1] -= 0.5 * q;
  }
  auto layout = [&](const std::vector<double>& cs, const std::vector<double>& sn, double offset) {
    std::vector<double> out{offset + radius * cs[0]};
    for (std::size_t k = 1; k < cs.size(); ++k) {
      out.push_back(radius * cs[k]);
      out.push_back(radius * sn[k]);
    }
    return out;
  };
  return JordanCurve::from_segments(
      {TrigSegment{layout(xc, xs, center.real()), layout(yc, ys, center.imag()), 0.0, 2.0 * kPi}});
}

std::vector<CurveSample> sample(const JordanCurve& curve, int n) {
  if (n < 3) throw PreconditionViolated("sample needs n >= 3");
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / n;
    bool corner = false;
    for (const CornerInfo& c : curve.corners()) corner = corner || std::abs(c.parameter - t) < 1e-12;
    out.push_back({t, curve.point(t), curve.derivative(t), corner});
  }
  return out;
}

std::vector<double> segment_aware_parameters(const JordanCurve& curve, int n, int min_per_segment) {
  std::vector<double> out;
  const auto& br = curve.breaks();
  for (std::size_t i = 0; i + 1 < br.size(); ++i) {
    const double span = br[i + 1] - br[i];
    const int k = std::max(min_per_segment, static_cast<int>(std::ceil(n * span)));
    for (int j = 0; j < k; ++j) out.push_back(br[i] + span * j / k);
  }
  return out;
}

Nearest nearest_point(const JordanCurve& curve, Complex p) {
  Nearest best{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < curve.segments().size(); ++i) {
    const auto [u, d] = nearest_on_segment(curve.segments()[i], p);
    if (d < best.distance) best = {curve.global_parameter(i, u), d};
  }
  if (best.parameter >= 1.0) best.parameter -= 1.0;
  return best;
}

int winding_number(const JordanCurve& curve, Complex p) {
  double total = 0.0;
  for (const Segment& s : curve.segments()) total += swept_angle(s, p);
  const double w = total / (2.0 * kPi);
  const double r = std::round(w);
  if (std::abs(w - r) > 0.01) throw AmbiguousClassification("winding estimate not near an integer");
  return static_cast<int>(r);
}

Classification classify_point(const JordanCurve& curve, Complex p, double band) {
  if (!(band > 0.0)) throw PreconditionViolated("on-curve band must be positive");
  const Nearest near = nearest_point(curve, p);
  Classification out{PointLocation::OnCurve, near.parameter, near.distance};
  if (near.distance < band) return out;
  out.location = winding_number(curve, p) != 0 ? PointLocation::Inside : PointLocation::Outside;
  return out;
}

double interior_angle(const JordanCurve& curve, double t) {
  t -= std::floor(t);
  for (const CornerInfo& c : curve.corners()) {
    double d = std::abs(c.parameter - t);
    d = std::min(d, 1.0 - d);
    if (d < 1e-12) return c.interior_angle;
  }
  return kPi;
}

std::optional<CornerInfo> corner_near(const JordanCurve& curve, Complex z, double radius) {
  std::optional<CornerInfo> out;
  double best = radius;
  for (const CornerInfo& c : curve.corners()) {
    const double d = std::abs(c.location - z);
    if (d <= best) {
      best = d;
      out = c;
    }
  }
  return out;
}

bool simple_at_resolution(const std::vector<Complex>& poly, double band) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = poly[i], b = poly[(i + 1) % n];
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      const Complex c = poly[j], d = poly[(j + 1) % n];
      if (chord_distance(a, b, c, d) <= band) return false;
    }
  }
  return true;
}

}  // namespace argp
