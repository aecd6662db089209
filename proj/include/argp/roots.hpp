#ifndef ARGP_ROOTS_HPP
#define ARGP_ROOTS_HPP

#include <vector>

#include "argp/polynomial.hpp"

namespace argp {

struct RootSet {
  std::vector<Root> roots;
  /// max over roots of |f(r)| / sum_j |a_j| |r|^j
  double residual = 0.0;

  int total_multiplicity() const noexcept {
    int n = 0;
    for (const Root& r : roots) n += r.multiplicity;
    return n;
  }
};

struct RootOptions {
  /// Relative residual accepted for a computed root, and the threshold of the
  /// derivative-based multiplicity test. A k-fold cluster is merged within
  /// radius tol^(1/k) of its centroid.
  double tol = 1e-10;
  int max_iterations = 500;
};

/// All roots of f with multiplicities.
///
/// Companion-matrix eigenvalues seed an Aberth-Ehrlich simultaneous
/// iteration; the resulting approximations are grouped into clusters, each
/// cluster is confirmed by the Taylor-coefficient test and its centroid is
/// polished by Newton's method on the (k-1)-th derivative. Exact zero
/// coefficients at the low end are split off as an exact root at 0.
///
/// Throws DegreeZero for constant f, NoConvergence when the iteration leaves
/// a residual above tol.
RootSet find_roots(const Polynomial& f, const RootOptions& opt = {});

/// Smallest k with |f^(k)(z)| / (k! scale_k) > tol, where scale_k is the
/// absolute-value evaluation of f^(k)/k! at |z|.
int multiplicity_at(const Polynomial& f, Complex z, double tol);

}  // namespace argp

#endif  // ARGP_ROOTS_HPP
