#include "doctest.h"

#include <numbers>
#include <random>

#include "argp/errors.hpp"
#include "argp/verify.hpp"
#include "oracle.hpp"

using namespace argp;
using std::numbers::pi;

TEST_CASE("ceiling terms") {
  CHECK(ceiling_term(1, pi) == 1);
  CHECK(ceiling_term(1, pi / 2) == 1);
  CHECK(ceiling_term(2, pi / 2) == 1);
  CHECK(ceiling_term(3, pi / 2) == 2);
  CHECK(ceiling_term(2, 3 * pi / 2) == 3);
  CHECK(ceiling_term(4, pi) == 4);
}

TEST_CASE("smooth bound examples") {
  const JordanCurve c = unit_circle();
  const BoundReport a = verify_main(Polynomial::from_real(oracle::binomial_row(4)), c, Line::real_axis());
  CHECK(a.measured == 4);
  CHECK(a.bound == 4);
  CHECK(a.holds);

  const BoundReport b = verify_main(pow(Polynomial{0.0, 1.0}, 3), c, Line::imag_axis());
  CHECK(b.measured == 6);
  CHECK(b.bound == 6);
  CHECK(b.m == 3);

  const oracle::Planted p{1.0, {{Complex(1.0), 1}, {Complex(0.5), 1}}};
  const BoundReport r = verify_main(Polynomial::from_roots(p.roots), c, Line::real_axis());
  CHECK(r.bound == 3);
  CHECK(r.measured == oracle::dense_count(p, c, 0.0));
  CHECK(r.holds);

  CHECK_THROWS_AS(verify_main(Polynomial{0.0, 1.0}, square(0.0, 2.0), Line::real_axis()), PreconditionViolated);
}

TEST_CASE("piecewise bound examples") {
  const JordanCurve sq = square(0.0, 2.0);
  const oracle::Planted p{1.0, {{Complex(1, 1), 1}}};
  const BoundReport a = verify_piecewise(Polynomial::from_roots(p.roots), sq, Line::real_axis());
  CHECK(a.bound == 1);
  REQUIRE(a.per_corner.size() == 1);
  CHECK(a.per_corner[0].interior_angle == doctest::Approx(pi / 2));
  // The top edge maps onto the real axis.
  CHECK(a.preimages.continuum);
  CHECK(a.holds);
  const BoundReport d = verify_piecewise(Polynomial::from_roots(p.roots), sq, Line(pi / 3));
  CHECK(d.bound == 1);
  CHECK(d.measured == oracle::dense_count(p, sq, pi / 3));

  const BoundReport b = verify_piecewise(pow(Polynomial{Complex(-1, -1), 1.0}, 2), sq, Line::real_axis());
  REQUIRE(b.per_corner.size() == 1);
  CHECK(b.per_corner[0].term == 1);
  CHECK(b.holds);

  // On a smooth curve both bounds coincide.
  const Polynomial f = Polynomial::from_roots(std::vector<Root>{{std::polar(1.0, 0.4), 2}, {Complex(0.2, 0.1), 1}});
  for (double phi : {0.0, 1.1, 2.6}) {
    const BoundReport m = verify_main(f, unit_circle(), Line(phi));
    const BoundReport w = verify_piecewise(f, unit_circle(), Line(phi));
    CHECK(m.bound == w.bound);
    CHECK(m.measured == w.measured);
  }
}

TEST_CASE("bound holds over a grid of line angles") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Polynomial f = Polynomial::from_roots(
      std::vector<Root>{{std::polar(1.0, 2 * pi / 5), 2}, {Complex(0.1, -0.3), 2}, {Complex(2.0, 1.0), 1}},
      std::polar(1.3, 2 * pi * u(rng)));
  for (int k = 0; k < 32; ++k) {
    const BoundReport r = verify_main(f, unit_circle(), Line(pi * k / 32));
    CAPTURE(k);
    CHECK(r.bound == 6);
    CHECK(r.holds);
  }
}

TEST_CASE("detour examples") {
  const std::vector<double> eps{0.1};
  const DetourReport a = verify_detour(Polynomial{-1.0, 1.0}, unit_circle(), Line::real_axis(), eps);
  CHECK(a.winding.winding == 1);
  CHECK(a.on_detour.count() >= 2);
  CHECK(a.holds);
  CHECK(a.consistent);

  const Polynomial g = pow(Polynomial{-1.0, 1.0}, 2) * Polynomial{-0.3, 1.0};
  const DetourReport b = verify_detour(g, unit_circle(), Line::real_axis());
  CHECK(b.m == 1);
  CHECK(b.lambda == 2);
  CHECK(b.winding.winding == 3);
  CHECK(b.on_detour.count() >= 6);
  CHECK(b.holds);

  CHECK_THROWS_AS(verify_detour(Polynomial{-2.0, 1.0}, unit_circle(), Line::real_axis()), PreconditionViolated);
}

TEST_CASE("coefficient reversal") {
  const Polynomial g = reverse_poly(Polynomial{1.0, 2.0, 3.0});
  CHECK(g.coeffs() == Polynomial{3.0, 2.0, 1.0}.coeffs());
  const Polynomial pal{1.0, -2.0, 5.0, -2.0, 1.0};
  CHECK(reverse_poly(pal).coeffs() == pal.coeffs());
  CHECK_THROWS_AS(reverse_poly(Polynomial{0.0, 1.0}), BoundaryCoefficientZero);

  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(6);
    for (double& x : a) x = u(rng);
    const Polynomial f = Polynomial::from_real(a);
    const RootSet rf = find_roots(f), rg = find_roots(reverse_poly(f));
    REQUIRE(rf.roots.size() == rg.roots.size());
    for (const Root& r : rf.roots) {
      bool matched = false;
      for (const Root& s : rg.roots) matched = matched || std::abs(s.location - 1.0 / r.location) < 1e-8 * (1 + std::abs(s.location));
      CHECK(matched);
    }
  }
}

TEST_CASE("cosine sum zeros") {
  const std::vector<double> a{1.0, 2.0};
  const TrigZeroCount p = trig_zero_count(a, CosineSum::P);
  const TrigZeroCount q = trig_zero_count(a, CosineSum::Q);
  CHECK(p.via_polynomial == 2);
  CHECK(q.via_polynomial == 0);
  CHECK(p.agrees());
  CHECK(q.agrees());

  for (int n = 1; n <= 7; ++n) {
    std::vector<double> c(n + 1, 0.0);
    c.front() = c.back() = 1.0;
    const TrigZeroCount z = trig_zero_count(c, CosineSum::P);
    CAPTURE(n);
    CHECK(z.via_polynomial == n);
    CHECK(z.direct == n);
  }

  CHECK_THROWS_AS(trig_zero_count(std::vector<double>{0.0, 1.0}, CosineSum::P), BoundaryCoefficientZero);
}

TEST_CASE("trigonometric reports") {
  const TrigReport a = verify_trig(std::vector<double>{1.0, 2.0});
  CHECK(a.n == 1);
  CHECK(a.z_p + a.z_q == 2);
  CHECK(a.identity_holds);
  CHECK(a.bound_holds);

  for (int n = 1; n <= 6; ++n) {
    const TrigReport b = verify_trig(oracle::binomial_row(n));
    CAPTURE(n);
    CHECK(b.lambda == n);
    CHECK(b.m_f == 0);
    CHECK(b.m_g == 0);
    CHECK(b.conjugates_match);
    CHECK(b.bound_holds);
  }

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> c(2 + trial % 7);
    for (double& x : c) x = u(rng);
    if (std::abs(c.front()) < 0.05 || std::abs(c.back()) < 0.05) continue;
    const TrigReport r = verify_trig(c);
    CHECK(r.identity_holds);
    CHECK(r.bound_holds);
    CHECK(r.direct_agrees);
  }
}
