#ifndef ARGP_CROSSINGS_HPP
#define ARGP_CROSSINGS_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "argp/curve.hpp"
#include "argp/polynomial.hpp"
#include "argp/roots.hpp"
#include "argp/zeros.hpp"

namespace argp {

/// Line through the origin, {r e^{i angle} : r real}, angle reduced to [0, pi).
class Line {
 public:
  explicit Line(double angle = 0.0);
  static Line real_axis() { return Line(0.0); }
  static Line imag_axis();

  double angle() const noexcept { return angle_; }
  Complex direction() const noexcept { return std::polar(1.0, angle_); }
  bool contains(Complex w, double tol) const;

 private:
  double angle_;
};

enum class Contact { Transversal, Tangential, ZeroOfF };

struct Preimage {
  double t = 0.0;
  Complex z;
  Complex value;
  Contact contact = Contact::Transversal;
};

/// Distinct curve points mapped into the line.
struct PreimageSet {
  std::vector<Preimage> points;
  /// A whole arc of the curve maps into the line; the set is infinite.
  bool continuum = false;
  int resolution = 0;

  static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();
  std::int64_t count() const noexcept {
    return continuum ? kUnbounded : static_cast<std::int64_t>(points.size());
  }
};

struct CrossingOptions {
  int initial_resolution = 4096;
  int max_resolution = 1 << 22;
  /// bisection stops below this parameter width
  double parameter_tol = 1e-12;
  /// candidates closer than this merge; <= 0 means 8 x parameter_tol
  double cluster_radius = 0.0;
  /// a local minimum of |h| / |f| below this is a tangential contact
  double contact_tol = 1e-8;
  /// parameter neighbourhood of an on-curve zero that belongs to the zero
  double zero_exclusion = 1e-7;
  /// reported values must satisfy |Im(e^{-i phi} f)| <= residual_tol * max|f|, plus the
  /// Horner rounding bound at the point
  double residual_tol = 1e-6;
  /// on-curve band for root classification; <= 0 means curve default
  double band = 0.0;
  RootOptions roots;
};

/// h(t) = Im(e^{-i phi} f(gamma(t))); zero exactly when f(gamma(t)) lies on the line.
double line_residual(const Polynomial& f, const JordanCurve& curve, Line line, double t);

/// Every distinct t in [0, 1) with f(gamma(t)) on the line.
///
/// Sign changes of h are bracketed and bisected, dips of |h| / |f| that touch
/// zero without a sign change count as tangential contacts, and on-curve
/// zeros of f are added directly. The sample grid is doubled until two
/// consecutive resolutions agree (ResolutionTooCoarse past max_resolution).
PreimageSet count_preimages(const Polynomial& f, const JordanCurve& curve, Line line,
                            const CrossingOptions& opt = {});
/// Same, reusing an existing classification of the roots of f.
PreimageSet count_preimages(const Polynomial& f, const JordanCurve& curve, Line line, const ZeroReport& zeros,
                            const CrossingOptions& opt = {});

/// Preimages of the line on the full circle |z - zero| = radius.
/// Requires zero to be a root of multiplicity `multiplicity` and no other
/// root within the closed disc.
std::int64_t count_disc_preimages(const Polynomial& f, Complex zero, int multiplicity, double radius, Line line,
                                  const CrossingOptions& opt = {});

struct ArgDerivativeProbe {
  double mean = 0.0;
  double max_dev = 0.0;
  int multiplicity = 0;
};

/// Central-difference estimate of d arg f(zero + radius e^{i theta}) / d theta on
/// `grid` equispaced angles, compared against the multiplicity of the root.
ArgDerivativeProbe arg_derivative_probe(const Polynomial& f, Complex zero, double radius, int grid = 1024,
                                        const RootOptions& root_opt = {});

}  // namespace argp

#endif  // ARGP_CROSSINGS_HPP
