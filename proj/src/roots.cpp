#include "argp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "argp/errors.hpp"

namespace argp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double relative_residual(const Polynomial& f, Complex z) {
  const double scale = eval_scale(f, std::abs(z));
  return scale > 0.0 ? std::abs(eval(f, z)) / scale : 0.0;
}

std::vector<Complex> companion_eigenvalues(const Polynomial& p) {
  const int n = p.degree();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / p.leading();

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> out;
  if (solver.info() == Eigen::Success) {
    const auto& ev = solver.eigenvalues();
    out.assign(ev.data(), ev.data() + ev.size());
    for (const Complex& z : out)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) out.clear();
  }
  if (out.empty()) {
    // Cauchy bound circle, rotated off the real axis
    double bound = 0.0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(p[i] / p.leading()));
    bound += 1.0;
    for (int i = 0; i < n; ++i)
      out.push_back(std::polar(bound, 2.0 * std::numbers::pi * (i + 0.25) / n));
  }
  return out;
}

/// Gauss-Seidel flavoured Aberth-Ehrlich iteration. A root is frozen once
/// its residual reaches rounding level.
void aberth(const Polynomial& p, std::vector<Complex>& z, int max_iterations) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (z[i] == z[j]) z[i] += Complex(1e-12, 1e-12) * (1.0 + std::abs(z[i]));

  for (int it = 0; it < max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto [v, dv] = eval_with_derivative(p, z[i]);
      if (std::abs(v) <= 16.0 * kEps * eval_scale(p, std::abs(z[i]))) {
        done[i] = true;
        continue;
      }
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      Complex denom = dv - v * repulsion;
      if (denom == Complex(0.0)) denom = Complex(kEps, kEps);
      const Complex step = v / denom;
      z[i] -= step;
      if (std::abs(step) <= 2.0 * kEps * std::abs(z[i])) done[i] = true;
      all_done = all_done && done[i];
    }
    if (all_done) break;
  }
}

Complex polish(const Polynomial& p, Complex c, int k, double radius) {
  const Polynomial q = taylor_coefficient(p, k - 1);
  if (q.degree() < 1) return c;
  Complex best = c;
  double best_val = std::abs(eval(q, c));
  Complex x = c;
  for (int it = 0; it < 8 && best_val > 0.0; ++it) {
    const auto [v, dv] = eval_with_derivative(q, x);
    if (dv == Complex(0.0)) break;
    x -= v / dv;
    if (std::abs(x - c) > radius) break;
    const double val = std::abs(eval(q, x));
    if (!(val < best_val)) break;
    best = x;
    best_val = val;
  }
  return best;
}

}  // namespace

int multiplicity_at(const Polynomial& f, Complex z, double tol) {
  for (int k = 0; k < f.degree(); ++k) {
    const Polynomial q = taylor_coefficient(f, k);
    const double scale = eval_scale(q, std::abs(z));
    if (std::abs(eval(q, z)) > tol * scale) return k;
  }
  return f.degree();
}

RootSet find_roots(const Polynomial& f, const RootOptions& opt) {
  if (f.degree() < 1) throw DegreeZero("find_roots requires degree >= 1");

  int zero_mult = 0;
  while (f[zero_mult] == Complex(0.0)) ++zero_mult;

  RootSet out;
  if (zero_mult > 0) out.roots.push_back({0.0, zero_mult});
  if (zero_mult == f.degree()) return out;

  const Polynomial p(Eigen::VectorXcd(f.coeffs().tail(f.degree() + 1 - zero_mult)));
  std::vector<Complex> z = companion_eigenvalues(p);
  aberth(p, z, opt.max_iterations);

  double residual = 0.0;
  for (const Complex& r : z) residual = std::max(residual, relative_residual(p, r));
  if (!(residual <= opt.tol))
    throw NoConvergence("root iteration stalled with relative residual " + std::to_string(residual));

  const std::size_t n = z.size();
  std::vector<bool> assigned(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> cand;
    for (std::size_t j = 0; j < n; ++j)
      if (!assigned[j]) cand.push_back(j);
    std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(z[a] - z[i]) < std::abs(z[b] - z[i]);
    });

    std::size_t best_k = 1;
    Complex best_c = polish(p, z[i], 1, std::max(1.0, std::abs(z[i])) * opt.tol);
    Complex sum = z[cand[0]];
    for (std::size_t k = 2; k <= cand.size(); ++k) {
      sum += z[cand[k - 1]];
      const Complex c = sum / static_cast<double>(k);
      const double radius = std::pow(opt.tol, 1.0 / static_cast<double>(k)) * std::max(1.0, std::abs(c));
      double spread = 0.0;
      for (std::size_t m = 0; m < k; ++m) spread = std::max(spread, std::abs(z[cand[m]] - c));
      if (spread > radius) continue;
      // a raw centroid is only good to about tol^(2/k); test the polished point
      const Complex pc = polish(p, c, static_cast<int>(k), radius);
      if (multiplicity_at(p, pc, opt.tol) != static_cast<int>(k)) continue;
      best_k = k;
      best_c = pc;
    }
    for (std::size_t m = 0; m < best_k; ++m) assigned[cand[m]] = true;

    out.roots.push_back({best_c, static_cast<int>(best_k)});
  }

  for (const Root& r : out.roots) residual = std::max(residual, relative_residual(f, r.location));
  out.residual = residual;
  std::sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return out;
}

}  // namespace argp
