#ifndef ARGP_POLYNOMIAL_HPP
#define ARGP_POLYNOMIAL_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace argp {

using Complex = std::complex<double>;

/// A zero of a polynomial together with its order of vanishing.
struct Root {
  Complex location;
  int multiplicity = 1;
};

/// Complex-coefficient polynomial, coefficients stored in ascending degree.
///
/// Trailing zero coefficients are trimmed on construction so the leading
/// coefficient is always nonzero. The zero polynomial is rejected with
/// InputError: every count in this library is about a nonzero function.
class Polynomial {
 public:
  explicit Polynomial(Eigen::VectorXcd coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial from_real(std::span<const double> coeffs);
  /// lead * prod (z - r)^k over the given roots.
  static Polynomial from_roots(std::span<const Root> roots, Complex lead = 1.0);

  const Eigen::VectorXcd& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Complex leading() const noexcept { return c_[c_.size() - 1]; }
  Complex operator[](int i) const noexcept { return c_[i]; }

  Complex operator()(Complex z) const;

 private:
  Eigen::VectorXcd c_;
};

/// Horner evaluation.
Complex eval(const Polynomial& f, Complex z);

/// f(z) and f'(z) in one Horner pass.
std::pair<Complex, Complex> eval_with_derivative(const Polynomial& f, Complex z);

/// Sum of |a_j| |z|^j; the natural magnitude against which |f(z)| is small.
double eval_scale(const Polynomial& f, double abs_z);

/// Throws DegreeZero for constant f.
Polynomial derivative(const Polynomial& f);

/// k-th derivative divided by k!, which keeps coefficients integral for
/// integral input. Requires 0 <= k <= degree.
Polynomial taylor_coefficient(const Polynomial& f, int k);

/// Quotient of f by (z - root)^times, remainder discarded.
Polynomial deflate(const Polynomial& f, Complex root, int times = 1);

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Complex s, const Polynomial& f);
Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& f, int n);

}  // namespace argp

#endif  // ARGP_POLYNOMIAL_HPP
