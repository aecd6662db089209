#ifndef ARGP_CURVE_HPP
#define ARGP_CURVE_HPP

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "argp/polynomial.hpp"

namespace argp {

/// Circular arc c + r e^{i a}, a running linearly from `from` to `to`.
/// to > from is counterclockwise.
struct ArcSegment {
  Complex center;
  double radius = 1.0;
  double from = 0.0;
  double to = 0.0;
};

struct LineSegment {
  Complex from;
  Complex to;
};

/// x(s) + i y(s) for s in [t0, t1], each coordinate a finite Fourier series
/// laid out as [c0, a1, b1, a2, b2, ...] meaning c0 + sum a_k cos(ks) + b_k sin(ks).
struct TrigSegment {
  std::vector<double> coeffs_x;
  std::vector<double> coeffs_y;
  double t0 = 0.0;
  double t1 = 0.0;
};

using Segment = std::variant<ArcSegment, LineSegment, TrigSegment>;

// Segment-local evaluation, u in [0, 1].
Complex point(const Segment& s, double u);
Complex velocity(const Segment& s, double u);
/// Upper bound on |velocity| over the segment.
double speed_bound(const Segment& s);
Segment reversed(const Segment& s);
/// The piece of s between local parameters u0 < u1, reparameterized to [0, 1].
Segment subsegment(const Segment& s, double u0, double u1);
bool is_valid(const Segment& s);

struct CornerInfo {
  double parameter = 0.0;
  Complex location;
  double interior_angle = 0.0;
};

struct CurveSample {
  double t = 0.0;
  Complex point;
  Complex tangent;
  /// Sample sits on a segment junction; the tangent is the outgoing one-sided derivative.
  bool at_corner = false;
};

/// Piecewise-smooth closed curve, positively oriented.
///
/// The global parameter t in [0, 1) is split among segments in proportion
/// to their length. Construction checks closure, simplicity at sample
/// resolution and orientation; clockwise input is reversed (and flagged).
class JordanCurve {
 public:
  static JordanCurve from_segments(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  /// breaks()[i] is the parameter where segment i starts; breaks().back() == 1.
  const std::vector<double>& breaks() const noexcept { return breaks_; }
  const std::vector<CornerInfo>& corners() const noexcept { return corners_; }
  bool smooth() const noexcept { return corners_.empty(); }
  bool was_reversed() const noexcept { return reversed_; }
  double diameter() const noexcept { return diameter_; }
  double signed_area() const noexcept { return area_; }
  /// 1e-9 x diameter
  double default_band() const noexcept { return 1e-9 * diameter_; }

  /// Segment index and local parameter for global t (taken mod 1).
  std::pair<std::size_t, double> locate(double t) const;
  double global_parameter(std::size_t segment, double u) const;
  Complex point(double t) const;
  /// Derivative with respect to t; at junctions this is the outgoing one.
  Complex derivative(double t) const;
  Complex incoming_derivative(double t) const;

 private:
  std::vector<Segment> segments_;
  std::vector<double> breaks_;
  std::vector<CornerInfo> corners_;
  double diameter_ = 0.0;
  double area_ = 0.0;
  bool reversed_ = false;
};

// Builders for the curve families used throughout.
JordanCurve unit_circle();
JordanCurve circle(Complex center, double radius);
/// Axis-aligned square with the given center and side.
JordanCurve square(Complex center, double side);
/// Closed polygon through the vertices in order.
JordanCurve polygon(const std::vector<Complex>& vertices);
/// The L-shaped hexagon (0,0) (2,0) (2,1) (1,1) (1,2) (0,2), scaled and shifted.
JordanCurve l_shape(Complex origin = 0.0, double scale = 1.0);
/// center + R r(s) e^{is} with r(s) = 1 + sum p_k cos(ks) + q_k sin(ks), k = 1..,
/// written as a single trigonometric segment.
JordanCurve perturbed_circle(Complex center, double radius, const std::vector<double>& cos_terms,
                             const std::vector<double>& sin_terms);

/// Equispaced samples at t = i/n. Requires n >= 3.
std::vector<CurveSample> sample(const JordanCurve& curve, int n);

/// Samples with at least min_per_segment points on every segment, t ascending,
/// first sample at t = 0.
std::vector<double> segment_aware_parameters(const JordanCurve& curve, int n, int min_per_segment);

enum class PointLocation { Inside, Outside, OnCurve };

struct Classification {
  PointLocation location = PointLocation::Outside;
  /// nearest curve parameter and distance, always filled
  double parameter = 0.0;
  double distance = 0.0;
};

struct Nearest {
  double parameter = 0.0;
  double distance = 0.0;
};

Nearest nearest_point(const JordanCurve& curve, Complex p);

/// Winding number of the curve around p. Throws AmbiguousClassification
/// when refinement cannot settle the count (p too close to the curve).
int winding_number(const JordanCurve& curve, Complex p);

/// On-curve when the distance to the curve is below band; otherwise inside
/// or outside by winding number.
Classification classify_point(const JordanCurve& curve, Complex p, double band);

/// Interior angle at t: pi at smooth points, pi minus the turning angle at corners.
double interior_angle(const JordanCurve& curve, double t);

/// The corner within `radius` of z, if any.
std::optional<CornerInfo> corner_near(const JordanCurve& curve, Complex z, double radius);

/// No two non-adjacent chords of the polyline through the samples cross or
/// come within `band` of each other.
bool simple_at_resolution(const std::vector<Complex>& closed_polyline, double band);

}  // namespace argp

#endif  // ARGP_CURVE_HPP
