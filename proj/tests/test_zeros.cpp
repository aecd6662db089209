#include "doctest.h"

#include <numbers>
#include <random>

#include "argp/errors.hpp"
#include "argp/zeros.hpp"
#include "oracle.hpp"

using namespace argp;

TEST_CASE("classify_roots on the unit circle") {
  const JordanCurve c = unit_circle();
  const ZeroReport a = classify_roots(Polynomial{0.0, -1.0, 1.0}, c);
  CHECK(a.m == 1);
  CHECK(a.lambda == 1);
  REQUIRE(a.on_curve_parameters.size() == 1);
  CHECK(a.on_curve_parameters[0] == doctest::Approx(0.0).epsilon(1e-9));

  const ZeroReport b = classify_roots(pow(Polynomial{-2.0, 1.0}, 2), c);
  CHECK(b.m == 0);
  CHECK(b.lambda == 0);
  CHECK(b.outside_multiplicity == 2);

  const std::vector<Root> planted{{std::polar(0.5, 0.7), 2}, {std::polar(1.0, 1.1), 3}, {Complex(3.0), 1}};
  const ZeroReport p = classify_roots(Polynomial::from_roots(planted), c);
  CHECK(p.m == 2);
  CHECK(p.lambda == 3);
  CHECK(p.outside_multiplicity == 1);
  CHECK(p.all_roots().size() == 3);
  CHECK(p.on_curve_parameters[0] == doctest::Approx(1.1 / (2 * std::numbers::pi)));
}

TEST_CASE("winding count examples") {
  const JordanCurve c = unit_circle();
  CHECK(winding_count(Polynomial{0.0, 1.0}, c) == 1);
  CHECK(winding_count(pow(Polynomial{0.0, 1.0}, 5), c) == 5);
  CHECK(winding_count(Polynomial{-0.5, 1.0} * Polynomial{-3.0, 1.0}, c) == 1);
  CHECK(winding_count(Polynomial{-2.0, 1.0}, c) == 0);
}

TEST_CASE("zero on the curve is refused") {
  CHECK_THROWS_AS(winding_count(Polynomial{-1.0, 1.0}, unit_circle()), ZeroOnCurve);
  CHECK_THROWS_AS(logderiv_integral(Polynomial{-1.0, 1.0}, unit_circle(), 1024), ZeroOnCurve);
  CHECK_THROWS_AS(winding_count(Polynomial{Complex(-1.0, -1.0), 1.0}, square(0.0, 2.0)), ZeroOnCurve);
}

TEST_CASE("log-derivative quadrature") {
  const JordanCurve c = unit_circle();
  CHECK(std::abs(logderiv_integral(Polynomial{0.0, 1.0}, c, 1024) - 1.0) < 1e-6);
  CHECK(std::abs(logderiv_integral(Polynomial{0.0, -0.125, 0.0, 1.0}, c, 4096) - 3.0) < 1e-6);
  CHECK(std::abs(logderiv_integral(Polynomial{-2.0, 1.0}, c, 1024)) < 1e-6);
}

TEST_CASE("winding equals planted interior multiplicity") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  std::uniform_int_distribution<int> mult(1, 3);
  const JordanCurve curves[] = {unit_circle(), square(0.0, 2.0), l_shape(Complex(-1, -1)),
                                perturbed_circle(0.0, 1.0, {0.0, 0.06}, {0.0, 0.0, -0.04})};
  for (const JordanCurve& c : curves) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Root> planted;
      int degree = 0, inside = 0;
      while (degree < 6) {
        const Complex z{u(rng), u(rng)};
        if (nearest_point(c, z).distance < 0.2) continue;
        const int k = std::min(mult(rng), 6 - degree);
        planted.push_back({z, k});
        degree += k;
        if (oracle::polyline_winding(oracle::dense_polyline(c, 4000), z) == 1) inside += k;
      }
      const Polynomial f = Polynomial::from_roots(planted, Complex(0.7, -0.4));
      const WindingResult w = winding_trace(f, c);
      CHECK(w.winding == inside);
      CHECK(std::abs(w.raw - inside) < 1e-6);
      CHECK(classify_roots(f, c).m == inside);
      CHECK(std::abs(logderiv_integral(f, c, 8192) - static_cast<double>(inside)) < 0.01);
    }
  }
}
