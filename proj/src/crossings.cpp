#include "argp/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "argp/errors.hpp"

namespace argp {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_pi(double a) { return std::remainder(a, 2.0 * kPi); }

double cyclic_distance(double a, double b) {
  double d = std::abs(a - b);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

double mod1(double t) { return t - std::floor(t); }

/// arg(f(z)) - phi from the root factorization of f. Accurate arbitrarily
/// close to a root, where Horner evaluation of the expanded form is not.
class DirectionField {
 public:
  DirectionField(Complex lead, std::vector<Root> roots, double phi)
      : offset_(std::arg(lead) - phi), roots_(std::move(roots)) {}

  double phase(Complex z) const {
    double s = offset_;
    for (const Root& r : roots_) s += r.multiplicity * std::arg(z - r.location);
    return s;
  }

 private:
  double offset_;
  std::vector<Root> roots_;
};

struct Sample {
  double t;
  double phase;
  double h;  // sin(phase) = h(t) / |f(gamma(t))|
};

struct Candidate {
  double t;
  Contact contact;
};

class PreimageCounter {
 public:
  PreimageCounter(const Polynomial& f, const JordanCurve& curve, Line line, const ZeroReport& zeros,
                  const CrossingOptions& opt)
      : f_(f),
        curve_(curve),
        line_(line),
        opt_(opt),
        field_(f.leading(), zeros.all_roots(), line.angle()),
        rho_(opt.cluster_radius > 0.0 ? opt.cluster_radius : 8.0 * opt.parameter_tol) {
    std::vector<double> ts = zeros.on_curve_parameters;
    for (double& t : ts) t = mod1(t);
    std::sort(ts.begin(), ts.end());
    for (double t : ts)
      if (zero_ts_.empty() || cyclic_distance(t, zero_ts_.back()) >= opt_.zero_exclusion) zero_ts_.push_back(t);
    if (zero_ts_.size() > 1 && cyclic_distance(zero_ts_.front(), zero_ts_.back()) < opt_.zero_exclusion)
      zero_ts_.pop_back();
  }

  PreimageSet run() {
    int n = opt_.initial_resolution;
    PreimageSet prev = at_resolution(n);
    while (true) {
      if (2 * static_cast<long long>(n) > opt_.max_resolution)
        throw ResolutionTooCoarse("preimage count did not stabilise below resolution " +
                                  std::to_string(opt_.max_resolution));
      n *= 2;
      PreimageSet next = at_resolution(n);
      if (next.count() == prev.count()) return next;
      prev = std::move(next);
    }
  }

 private:
  Sample sample_at(double t) const {
    const double ph = field_.phase(curve_.point(t));
    return {t, ph, std::sin(ph)};
  }

  /// Adds midpoints until consecutive phases differ by at most pi/4.
  std::vector<Sample> refine(const std::vector<double>& ts) const {
    std::vector<Sample> out;
    out.reserve(ts.size() * 2);
    auto rec = [&](auto&& self, const Sample& a, const Sample& b, int depth) -> void {
      if (depth < 40 && std::abs(wrap_pi(b.phase - a.phase)) > kPi / 4) {
        const Sample m = sample_at(0.5 * (a.t + b.t));
        self(self, a, m, depth + 1);
        self(self, m, b, depth + 1);
        return;
      }
      out.push_back(b);
    };
    Sample prev = sample_at(ts.front());
    out.push_back(prev);
    for (std::size_t i = 1; i < ts.size(); ++i) {
      const Sample cur = sample_at(ts[i]);
      rec(rec, prev, cur, 0);
      prev = cur;
    }
    return out;
  }

  double bisect(double a, double b, double ha) const {
    for (int it = 0; it < 200 && b - a > opt_.parameter_tol; ++it) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      const double hm = sample_at(m).h;
      if (hm == 0.0) return m;
      if ((hm > 0.0) == (ha > 0.0)) {
        a = m;
        ha = hm;
      } else {
        b = m;
      }
    }
    return 0.5 * (a + b);
  }

  /// Minimizes sign * h on [a, b]; returns (argmin, sign * h there).
  std::pair<double, double> golden_min(double a, double b, double sign) const {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = sign * sample_at(c).h, fd = sign * sample_at(d).h;
    for (int it = 0; it < 200 && b - a > opt_.parameter_tol; ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - g * (b - a);
        fc = sign * sample_at(c).h;
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + g * (b - a);
        fd = sign * sample_at(d).h;
      }
    }
    return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
  }

  /// Scans one run of samples. `first`/`last` bound the indices whose
  /// neighbourhoods are examined.
  void scan(const std::vector<Sample>& s, std::size_t first, std::size_t last, std::vector<Candidate>& out,
            bool& continuum) const {
    int flat = 0;
    for (std::size_t i = first; i <= last; ++i) {
      flat = std::abs(s[i].h) < opt_.contact_tol ? flat + 1 : 0;
      if (flat >= 4) continuum = true;
    }
    for (std::size_t i = first; i < last; ++i) {
      const double ha = s[i].h, hb = s[i + 1].h;
      if (ha == 0.0) {
        out.push_back({s[i].t, Contact::Transversal});
      } else if (hb != 0.0 && (ha > 0.0) != (hb > 0.0)) {
        out.push_back({bisect(s[i].t, s[i + 1].t, ha), Contact::Transversal});
      }
    }
    if (continuum) return;
    for (std::size_t i = std::max<std::size_t>(first, 1); i <= last && i + 1 < s.size(); ++i) {
      const double hl = s[i - 1].h, hc = s[i].h, hr = s[i + 1].h;
      if (hc == 0.0 || (hl > 0.0) != (hc > 0.0) || (hr > 0.0) != (hc > 0.0)) continue;
      if (!(std::abs(hc) <= std::abs(hl) && std::abs(hc) <= std::abs(hr))) continue;
      const double sign = hc > 0.0 ? 1.0 : -1.0;
      const auto [tm, vm] = golden_min(s[i - 1].t, s[i + 1].t, sign);
      if (vm < -1e-6 * opt_.contact_tol) {
        // the dip crosses zero twice between samples
        out.push_back({bisect(s[i - 1].t, tm, hl), Contact::Transversal});
        out.push_back({bisect(tm, s[i + 1].t, -hr), Contact::Transversal});
      } else if (vm < opt_.contact_tol) {
        out.push_back({tm, Contact::Tangential});
      }
    }
  }

  PreimageSet at_resolution(int n) const {
    const std::vector<double> grid = segment_aware_parameters(curve_, n, 32);
    std::vector<Candidate> cands;
    bool continuum = false;

    if (zero_ts_.empty()) {
      std::vector<double> ts = grid;
      ts.push_back(1.0);
      // s.back() is t = 1, the same point as s.front(); pad with wrap neighbours
      const std::vector<Sample> s = refine(ts);
      const Sample& before = s[s.size() - 2];
      std::vector<Sample> ext;
      ext.reserve(s.size() + 2);
      ext.push_back({before.t - 1.0, before.phase, before.h});
      ext.insert(ext.end(), s.begin(), s.end());
      ext.push_back({s[1].t + 1.0, s[1].phase, s[1].h});
      scan(ext, 1, ext.size() - 2, cands, continuum);
    } else {
      const std::size_t k = zero_ts_.size();
      for (std::size_t j = 0; j < k; ++j) {
        const double a = zero_ts_[j] + opt_.zero_exclusion;
        const double b = (j + 1 < k ? zero_ts_[j + 1] : zero_ts_[0] + 1.0) - opt_.zero_exclusion;
        if (!(b > a)) continue;
        std::vector<double> ts{a};
        for (int shift = 0; shift <= 1; ++shift)
          for (double g : grid) {
            const double t = g + shift;
            if (t > a && t < b) ts.push_back(t);
          }
        std::sort(ts.begin(), ts.end());
        ts.push_back(b);
        const std::vector<Sample> s = refine(ts);
        scan(s, 0, s.size() - 1, cands, continuum);
      }
    }

    PreimageSet out;
    out.resolution = n;
    out.continuum = continuum;

    double scale = 0.0;
    for (double t : grid) scale = std::max(scale, std::abs(eval(f_, curve_.point(t))));

    for (double t : zero_ts_) {
      const Complex z = curve_.point(t);
      out.points.push_back({t, z, eval(f_, z), Contact::ZeroOfF});
    }

    std::vector<Candidate> rest;
    for (Candidate c : cands) {
      c.t = mod1(c.t);
      bool near_zero = false;
      for (double zt : zero_ts_) near_zero = near_zero || cyclic_distance(c.t, zt) < opt_.zero_exclusion;
      if (!near_zero) rest.push_back(c);
    }
    std::sort(rest.begin(), rest.end(), [](const Candidate& a, const Candidate& b) { return a.t < b.t; });
    std::vector<Candidate> merged;
    for (const Candidate& c : rest) {
      if (!merged.empty() && c.t - merged.back().t < rho_) {
        if (c.contact == Contact::Tangential) merged.back().contact = Contact::Tangential;
        continue;
      }
      merged.push_back(c);
    }
    if (merged.size() > 1 && cyclic_distance(merged.front().t, merged.back().t) < rho_) merged.pop_back();

    const Complex rot = std::conj(line_.direction());
    for (const Candidate& c : merged) {
      const Complex z = curve_.point(c.t);
      const Complex v = eval(f_, z);
      // Horner rounding bound: residuals below it are indistinguishable from zero.
      const double rounding = 2.0 * (f_.degree() + 1) * std::numeric_limits<double>::epsilon() *
                              eval_scale(f_, std::abs(z));
      if (std::abs((rot * v).imag()) > opt_.residual_tol * scale + rounding) continue;
      out.points.push_back({c.t, z, v, c.contact});
    }
    std::sort(out.points.begin(), out.points.end(), [](const Preimage& a, const Preimage& b) { return a.t < b.t; });
    return out;
  }

  const Polynomial& f_;
  const JordanCurve& curve_;
  Line line_;
  CrossingOptions opt_;
  DirectionField field_;
  double rho_;
  std::vector<double> zero_ts_;
};

/// Root cluster of f nearest to z, with the remaining roots.
std::pair<Root, std::vector<Root>> split_root(const Polynomial& f, Complex zero, const RootOptions& opt) {
  const RootSet rs = find_roots(f, opt);
  std::size_t best = 0;
  for (std::size_t i = 1; i < rs.roots.size(); ++i)
    if (std::abs(rs.roots[i].location - zero) < std::abs(rs.roots[best].location - zero)) best = i;
  const Root r = rs.roots[best];
  const double tol = std::pow(opt.tol, 1.0 / r.multiplicity) * std::max(1.0, std::abs(zero));
  if (std::abs(r.location - zero) > tol)
    throw PreconditionViolated("the given point is not a root of f");
  std::vector<Root> others;
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if (i != best) others.push_back(rs.roots[i]);
  return {r, others};
}

void require_isolated(const std::vector<Root>& others, Complex zero, double radius) {
  if (!(radius > 0.0)) throw PreconditionViolated("disc radius must be positive");
  for (const Root& o : others)
    if (std::abs(o.location - zero) <= radius)
      throw PreconditionViolated("disc of the given radius contains another root of f");
}

}  // namespace

Line::Line(double angle) : angle_(angle - kPi * std::floor(angle / kPi)) {
  if (angle_ >= kPi) angle_ = 0.0;
}

Line Line::imag_axis() { return Line(kPi / 2); }

bool Line::contains(Complex w, double tol) const { return std::abs((std::conj(direction()) * w).imag()) <= tol; }

double line_residual(const Polynomial& f, const JordanCurve& curve, Line line, double t) {
  return (std::conj(line.direction()) * eval(f, curve.point(t))).imag();
}

PreimageSet count_preimages(const Polynomial& f, const JordanCurve& curve, Line line, const CrossingOptions& opt) {
  const double band = opt.band > 0.0 ? opt.band : curve.default_band();
  const ZeroReport zeros = classify_roots(f, curve, band, opt.roots);
  return count_preimages(f, curve, line, zeros, opt);
}

PreimageSet count_preimages(const Polynomial& f, const JordanCurve& curve, Line line, const ZeroReport& zeros,
                            const CrossingOptions& opt) {
  return PreimageCounter(f, curve, line, zeros, opt).run();
}

std::int64_t count_disc_preimages(const Polynomial& f, Complex zero, int multiplicity, double radius, Line line,
                                  const CrossingOptions& opt) {
  const auto [root, others] = split_root(f, zero, opt.roots);
  if (root.multiplicity != multiplicity)
    throw PreconditionViolated("root multiplicity is " + std::to_string(root.multiplicity) + ", not " +
                               std::to_string(multiplicity));
  require_isolated(others, zero, radius);
  return count_preimages(f, circle(zero, radius), line, opt).count();
}

ArgDerivativeProbe arg_derivative_probe(const Polynomial& f, Complex zero, double radius, int grid,
                                        const RootOptions& root_opt) {
  if (grid < 3) throw PreconditionViolated("probe grid needs at least 3 angles");
  const auto [root, others] = split_root(f, zero, root_opt);
  require_isolated(others, zero, radius);

  // arg f = multiplicity * theta + arg g on the circle, g = f / (z - zero)^multiplicity
  const Polynomial g = deflate(f, zero, root.multiplicity);
  const double h = 2.0 * kPi / grid;
  std::vector<double> arg_g(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) arg_g[i] = std::arg(eval(g, zero + std::polar(radius, i * h)));

  ArgDerivativeProbe out;
  out.multiplicity = root.multiplicity;
  double sum = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double ahead = arg_g[(i + 1) % grid], behind = arg_g[(i + grid - 1) % grid];
    const double d = root.multiplicity + wrap_pi(ahead - behind) / (2.0 * h);
    sum += d;
    out.max_dev = std::max(out.max_dev, std::abs(d - root.multiplicity));
  }
  out.mean = sum / grid;
  return out;
}

}  // namespace argp
