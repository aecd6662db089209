#ifndef ARGP_DETOUR_HPP
#define ARGP_DETOUR_HPP

#include <span>
#include <vector>

#include "argp/curve.hpp"

namespace argp {

/// One disc |z - center| < radius cut out of the base curve.
struct Excision {
  Complex center;
  double radius = 0.0;
  double t_zero = 0.0;  ///< base parameter of the center
  double t_in = 0.0;    ///< base parameter where the curve enters the disc
  double t_out = 0.0;   ///< base parameter where it leaves
  /// Angular length of the replacement arc; pi + eta for a smooth base point,
  /// 2 pi minus the interior angle at a corner.
  double sweep = 0.0;
};

/// The base curve with every excised piece replaced by the outer arc of
/// its disc, so each excised center ends up strictly inside.
struct DetourCurve {
  JordanCurve base;
  std::vector<Excision> excisions;
  JordanCurve composite;
  double epsilon = 0.0;
};

/// 0.2 * 2^-k * min(pairwise distance of the zeros, diameter), k = 0..20.
std::vector<double> default_epsilon_schedule(const JordanCurve& curve, std::span<const Complex> zeros_on_curve);

/// Parameters where the circle |z - center| = radius meets the curve.
std::vector<double> circle_crossings(const JordanCurve& curve, Complex center, double radius);

/// Takes the first radius in the schedule for which the discs are disjoint,
/// each disc boundary meets the curve exactly twice, the replacement arcs lie
/// outside the base curve, and the composite is a positively oriented closed
/// curve, simple at sample resolution, with every center inside.
///
/// Throws PreconditionViolated if a listed zero is not on the curve and
/// DetourFailed if no radius in the schedule works.
DetourCurve build_detour(const JordanCurve& curve, std::span<const Complex> zeros_on_curve,
                         std::span<const double> schedule, double band = 0.0);
DetourCurve build_detour(const JordanCurve& curve, std::span<const Complex> zeros_on_curve);

}  // namespace argp

#endif  // ARGP_DETOUR_HPP
