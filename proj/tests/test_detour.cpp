#include "doctest.h"

#include <numbers>
#include <random>

#include "argp/detour.hpp"
#include "argp/errors.hpp"
#include "oracle.hpp"

using namespace argp;
using std::numbers::pi;

namespace {

int composite_winding(const DetourCurve& d, Complex p) {
  return oracle::polyline_winding(oracle::dense_polyline(d.composite, 40000), p);
}

}  // namespace

TEST_CASE("single excision on the unit circle") {
  const std::vector<Complex> zeros{1.0};
  const std::vector<double> eps{0.1};
  const DetourCurve d = build_detour(unit_circle(), zeros, eps);
  CHECK(d.epsilon == 0.1);
  REQUIRE(d.excisions.size() == 1);
  CHECK(composite_winding(d, 1.0) == 1);
  CHECK(classify_point(d.composite, 1.0, d.composite.default_band()).location == PointLocation::Inside);
  CHECK(!d.composite.was_reversed());
  CHECK(d.composite.signed_area() > d.base.signed_area());
  CHECK(std::abs(std::abs(d.base.point(d.excisions[0].t_in) - 1.0) - 0.1) < 1e-9);
  CHECK(std::abs(std::abs(d.base.point(d.excisions[0].t_out) - 1.0) - 0.1) < 1e-9);
}

TEST_CASE("no zeros leaves the curve unchanged") {
  const JordanCurve c = unit_circle();
  const DetourCurve d = build_detour(c, std::vector<Complex>{});
  CHECK(d.excisions.empty());
  for (double t : {0.0, 0.1, 0.5, 0.77}) CHECK(d.composite.point(t) == c.point(t));
}

TEST_CASE("two antipodal excisions") {
  const std::vector<Complex> zeros{1.0, -1.0};
  const std::vector<double> eps{0.1};
  const DetourCurve d = build_detour(unit_circle(), zeros, eps);
  REQUIRE(d.excisions.size() == 2);
  CHECK(composite_winding(d, 1.0) == 1);
  CHECK(composite_winding(d, -1.0) == 1);
  CHECK(composite_winding(d, 0.0) == 1);
  CHECK(composite_winding(d, Complex(0, 1.05)) == 0);
}

TEST_CASE("smooth excision arcs approach a half turn") {
  const std::vector<Complex> zeros{Complex(0, 1)};
  double prev = 1e300;
  for (double e : {0.4, 0.2, 0.1, 0.05, 0.025, 0.0125}) {
    const std::vector<double> eps{e};
    const DetourCurve d = build_detour(unit_circle(), zeros, eps);
    const double eta = d.excisions[0].sweep - pi;
    CHECK(eta > 0.0);
    CHECK(eta < prev);
    prev = eta;
  }
  CHECK(prev < 0.02);
}

TEST_CASE("corner excision sweeps the exterior angle") {
  const JordanCurve sq = square(0.0, 2.0);
  const std::vector<Complex> zeros{Complex(1, 1)};
  const std::vector<double> eps{0.1};
  const DetourCurve d = build_detour(sq, zeros, eps);
  CHECK(d.excisions[0].sweep == doctest::Approx(3 * pi / 2));
  CHECK(composite_winding(d, Complex(1, 1)) == 1);

  const DetourCurve l = build_detour(l_shape(), std::vector<Complex>{Complex(1, 1)}, eps);
  CHECK(l.excisions[0].sweep == doctest::Approx(pi / 2));
  CHECK(composite_winding(l, Complex(1, 1)) == 1);
}

TEST_CASE("errors") {
  const std::vector<double> eps{0.1};
  CHECK_THROWS_AS(build_detour(unit_circle(), std::vector<Complex>{0.5}, eps), PreconditionViolated);
  CHECK_THROWS_AS(build_detour(unit_circle(), std::vector<Complex>{1.0, std::polar(1.0, 0.01)}, eps), DetourFailed);
}

TEST_CASE("circle crossings") {
  const auto t = circle_crossings(unit_circle(), 1.0, 0.1);
  REQUIRE(t.size() == 2);
  for (double s : t) CHECK(std::abs(unit_circle().point(s) - 1.0) == doctest::Approx(0.1));
  CHECK(circle_crossings(unit_circle(), 0.0, 0.5).empty());
}

TEST_CASE("random on-curve centers end up inside the composite") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const JordanCurve curves[] = {unit_circle(), square(0.0, 2.0), l_shape(),
                                perturbed_circle(0.0, 1.0, {0.0, 0.05}, {0.0, 0.0, 0.04})};
  for (const JordanCurve& c : curves) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Complex> zeros;
      while (zeros.size() < 3) {
        const Complex z = c.point(u(rng));
        bool far = true;
        for (Complex w : zeros) far = far && std::abs(w - z) > 0.2;
        if (far) zeros.push_back(z);
      }
      const DetourCurve d = build_detour(c, zeros);
      CHECK(!d.composite.was_reversed());
      for (const Excision& e : d.excisions) CHECK(composite_winding(d, e.center) == 1);

      const std::vector<double> eps{0.005};
      const DetourCurve s = build_detour(c, zeros, eps);
      for (const Excision& e : s.excisions) {
        if (corner_near(c, e.center, 0.02)) continue;
        CHECK(e.sweep == doctest::Approx(pi).epsilon(0.01));
      }
    }
  }
}
