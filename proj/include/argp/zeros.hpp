#ifndef ARGP_ZEROS_HPP
#define ARGP_ZEROS_HPP

#include <vector>

#include "argp/curve.hpp"
#include "argp/polynomial.hpp"
#include "argp/roots.hpp"

namespace argp {

/// Zeros of f split by position relative to a Jordan curve.
struct ZeroReport {
  RootSet inside;
  RootSet on_curve;
  RootSet outside;
  /// curve parameter of each on_curve root, same order
  std::vector<double> on_curve_parameters;
  int m = 0;       ///< total multiplicity strictly inside
  int lambda = 0;  ///< total multiplicity on the curve
  int outside_multiplicity = 0;
  double band = 0.0;

  /// Every root regardless of position.
  std::vector<Root> all_roots() const;
};

/// Routes every root of f through classify_point with the given band.
ZeroReport classify_roots(const Polynomial& f, const JordanCurve& curve, double band,
                          const RootOptions& root_opt = {});
/// Uses curve.default_band().
ZeroReport classify_roots(const Polynomial& f, const JordanCurve& curve);

struct WindingOptions {
  /// on-curve band; <= 0 selects curve.default_band()
  double band = 0.0;
  int initial_samples = 1024;
  /// doublings allowed below the initial spacing
  int max_depth = 24;
  /// |f| must exceed liftoff_factor * band * max|f'| on the samples
  double liftoff_factor = 1e3;
  double rounding_guard = 0.01;
};

struct WindingResult {
  int winding = 0;
  double raw = 0.0;  ///< argument variation / 2pi before rounding
  double min_abs_f = 0.0;
  double max_abs_df = 0.0;
  std::size_t evaluations = 0;
};

/// Winding number of f(curve) around 0 by adaptive argument tracking.
/// Throws ZeroOnCurve when |f| dips below the lift-off threshold and
/// NonIntegerWinding when the raw count misses an integer by more than the guard.
WindingResult winding_trace(const Polynomial& f, const JordanCurve& curve, const WindingOptions& opt = {});
int winding_count(const Polynomial& f, const JordanCurve& curve, const WindingOptions& opt = {});

/// (1 / 2 pi i) times the trapezoidal quadrature of f'/f dz along the curve,
/// with about n nodes spread over the segments. Throws ZeroOnCurve under
/// the same lift-off rule as winding_count.
Complex logderiv_integral(const Polynomial& f, const JordanCurve& curve, int n, const WindingOptions& opt = {});

}  // namespace argp

#endif  // ARGP_ZEROS_HPP
