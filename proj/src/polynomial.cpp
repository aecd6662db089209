#include "argp/polynomial.hpp"

#include <cmath>

#include "argp/errors.hpp"

namespace argp {

namespace {

Eigen::VectorXcd trimmed(const Eigen::VectorXcd& c) {
  Eigen::Index n = c.size();
  while (n > 0 && c[n - 1] == Complex(0.0)) --n;
  if (n == 0) throw InputError("the zero polynomial is not admissible");
  return c.head(n);
}

}  // namespace

Polynomial::Polynomial(Eigen::VectorXcd coeffs) : c_(trimmed(coeffs)) {}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) {
  Eigen::VectorXcd c(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (Complex a : coeffs) c[i++] = a;
  c_ = trimmed(c);
}

Polynomial Polynomial::from_real(std::span<const double> coeffs) {
  Eigen::VectorXcd c(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[static_cast<Eigen::Index>(i)] = coeffs[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const Root> roots, Complex lead) {
  int n = 0;
  for (const Root& r : roots) n += r.multiplicity;
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  c[0] = lead;
  int deg = 0;
  for (const Root& r : roots) {
    for (int k = 0; k < r.multiplicity; ++k) {
      // multiply by (z - r) in place
      c[deg + 1] = c[deg];
      for (int j = deg; j >= 1; --j) c[j] = c[j - 1] - r.location * c[j];
      c[0] = -r.location * c[0];
      ++deg;
    }
  }
  return Polynomial(std::move(c));
}

Complex Polynomial::operator()(Complex z) const { return eval(*this, z); }

Complex eval(const Polynomial& f, Complex z) {
  const auto& c = f.coeffs();
  Complex acc = c[c.size() - 1];
  for (Eigen::Index j = c.size() - 2; j >= 0; --j) acc = acc * z + c[j];
  return acc;
}

std::pair<Complex, Complex> eval_with_derivative(const Polynomial& f, Complex z) {
  const auto& c = f.coeffs();
  Complex p = c[c.size() - 1];
  Complex dp = 0.0;
  for (Eigen::Index j = c.size() - 2; j >= 0; --j) {
    dp = dp * z + p;
    p = p * z + c[j];
  }
  return {p, dp};
}

double eval_scale(const Polynomial& f, double abs_z) {
  const auto& c = f.coeffs();
  double acc = std::abs(c[c.size() - 1]);
  for (Eigen::Index j = c.size() - 2; j >= 0; --j) acc = acc * abs_z + std::abs(c[j]);
  return acc;
}

Polynomial derivative(const Polynomial& f) {
  if (f.degree() < 1) throw DegreeZero("derivative of a constant polynomial");
  Eigen::VectorXcd d(f.degree());
  for (int j = 1; j <= f.degree(); ++j) d[j - 1] = static_cast<double>(j) * f[j];
  return Polynomial(std::move(d));
}

Polynomial taylor_coefficient(const Polynomial& f, int k) {
  if (k < 0 || k > f.degree()) throw PreconditionViolated("taylor_coefficient order out of range");
  Eigen::VectorXcd d(f.degree() - k + 1);
  for (int j = k; j <= f.degree(); ++j) {
    // binomial(j, k), exact for the degrees we handle
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (j - k + i) / i;
    d[j - k] = std::round(b) * f[j];
  }
  return Polynomial(std::move(d));
}

Polynomial deflate(const Polynomial& f, Complex root, int times) {
  Eigen::VectorXcd c = f.coeffs();
  for (int t = 0; t < times; ++t) {
    const Eigen::Index n = c.size() - 1;
    if (n < 1) throw PreconditionViolated("cannot deflate a constant polynomial");
    Eigen::VectorXcd q(n);
    Complex acc = c[n];
    for (Eigen::Index j = n - 1; j >= 0; --j) {
      q[j] = acc;
      acc = acc * root + c[j];
    }
    c = std::move(q);
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[i + j] += a[i] * b[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& f) { return Polynomial(Eigen::VectorXcd(s * f.coeffs())); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const int n = std::max(a.degree(), b.degree());
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  c.head(a.degree() + 1) += a.coeffs();
  c.head(b.degree() + 1) += b.coeffs();
  return Polynomial(std::move(c));
}

Polynomial pow(const Polynomial& f, int n) {
  Polynomial acc{1.0};
  for (int i = 0; i < n; ++i) acc = acc * f;
  return acc;
}

}  // namespace argp
