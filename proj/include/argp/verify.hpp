#ifndef ARGP_VERIFY_HPP
#define ARGP_VERIFY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "argp/crossings.hpp"
#include "argp/detour.hpp"
#include "argp/zeros.hpp"

namespace argp {

struct VerifyOptions {
  CrossingOptions crossings;
  WindingOptions winding;
};

struct CornerTerm {
  Complex location;
  double parameter = 0.0;
  int multiplicity = 0;
  double interior_angle = 0.0;
  int term = 0;  ///< ceil(multiplicity * interior_angle / pi)
};

struct BoundReport {
  std::string theorem;  ///< "main" or "piecewise"
  std::int64_t measured = 0;
  int bound = 0;
  int m = 0;
  int lambda = 0;
  std::vector<CornerTerm> per_corner;
  bool holds = false;
  double line_angle = 0.0;
  int resolution = 0;
  ZeroReport zeros;
  PreimageSet preimages;
};

/// ceil(multiplicity * angle / pi), with products within 1e-9 of an integer
/// snapped to it so that a right angle gives exactly half the multiplicity.
int ceiling_term(int multiplicity, double interior_angle);

/// Measured preimages against 2m + lambda. Requires a curve without corners.
BoundReport verify_main(const Polynomial& f, const JordanCurve& curve, Line line, const VerifyOptions& opt = {});

/// Measured preimages against 2m + sum ceil(lambda_j alpha_j / pi).
BoundReport verify_piecewise(const Polynomial& f, const JordanCurve& curve, Line line,
                             const VerifyOptions& opt = {});

struct DetourReport {
  DetourCurve detour;
  int m = 0;
  int lambda = 0;
  WindingResult winding;
  PreimageSet on_detour;
  std::vector<double> interior_angles;  ///< alpha_j per excision
  std::vector<std::int64_t> per_arc;    ///< preimages on each replacement arc
  std::int64_t arc_points = 0;          ///< preimages on the replacement arcs
  std::int64_t base_points = 0;  ///< preimages on the retained base pieces
  std::int64_t on_base = 0;      ///< preimages on the original curve
  bool liftoff_ok = false;
  bool winding_ok = false;
  bool preimages_ok = false;
  /// Each arc carries at most floor((2 pi - alpha_j) lambda_j / pi) + 1
  /// preimages, and on_base >= base_points >= 2m + sum(ceil(lambda_j alpha_j / pi) - 1).
  bool consistent = false;
  bool holds = false;
};

/// Builds the detour curve around the on-curve zeros and checks that f stays
/// away from zero on it, winds m + lambda times, and hits the line at least
/// 2(m + lambda) times. Requires lambda >= 1.
///
/// Radii whose closed discs hold another root of f are skipped. Among the
/// rest, the first radius whose arcs respect the per-disc count is kept;
/// failing that, the last one tried is reported.
DetourReport verify_detour(const Polynomial& f, const JordanCurve& curve, Line line,
                           std::span<const double> schedule = {}, const VerifyOptions& opt = {});

/// z^n f(1/z). Throws BoundaryCoefficientZero when f(0) = 0.
Polynomial reverse_poly(const Polynomial& f);

enum class CosineSum { P, Q };

struct TrigZeroCount {
  std::int64_t via_polynomial = 0;
  std::int64_t direct = 0;
  bool agrees() const noexcept { return via_polynomial == direct; }
};

/// Distinct zeros on [0, 2 pi) of sum c_j cos(j theta), by dense sampling:
/// sign changes plus refined dips below 1e-8 max|c|.
std::int64_t count_cosine_zeros(std::span<const double> c, int samples = 1 << 16);

/// Z_P or Z_Q, counted as preimages of the imaginary axis on the unit circle
/// and cross-checked against count_cosine_zeros.
TrigZeroCount trig_zero_count(std::span<const double> a, CosineSum which, const CrossingOptions& opt = {});

struct TrigReport {
  std::vector<double> coeffs;
  int n = 0;
  std::int64_t z_p = 0;
  std::int64_t z_q = 0;
  int m_f = 0;
  int m_g = 0;
  int lambda = 0;
  bool direct_agrees = false;
  bool conjugates_match = false;
  bool identity_holds = false;
  bool bound_holds = false;
};

TrigReport verify_trig(std::span<const double> a, const CrossingOptions& opt = {});

}  // namespace argp

#endif  // ARGP_VERIFY_HPP
