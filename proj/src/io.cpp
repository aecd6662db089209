#include "argp/io.hpp"

#include <filesystem>
#include <fstream>
#include <regex>

#include "argp/errors.hpp"

namespace argp::io {

namespace {

Complex complex_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InputError("expected a complex number as [re, im], got " + j.dump());
}

json complex_to(Complex z) { return json::array({z.real(), z.imag()}); }

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) throw InputError(std::string("missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

std::vector<double> reals(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw InputError(std::string("missing array field '") + key + "'");
  std::vector<double> out;
  for (const json& x : j.at(key)) {
    if (!x.is_number()) throw InputError(std::string("non-numeric entry in '") + key + "'");
    out.push_back(x.get<double>());
  }
  return out;
}

Segment segment_from(const json& s) {
  const std::string kind = s.value("kind", "");
  if (kind == "arc") return ArcSegment{complex_from(s.at("center")), number(s, "radius"), number(s, "from"), number(s, "to")};
  if (kind == "line") return LineSegment{complex_from(s.at("from")), complex_from(s.at("to"))};
  if (kind == "trig") return TrigSegment{reals(s, "coeffs_x"), reals(s, "coeffs_y"), number(s, "t0"), number(s, "t1")};
  throw InputError("unknown segment kind '" + kind + "'");
}

json segment_to(const Segment& s) {
  return std::visit(
      [](const auto& seg) -> json {
        using T = std::decay_t<decltype(seg)>;
        if constexpr (std::is_same_v<T, ArcSegment>) {
          return {{"kind", "arc"}, {"center", complex_to(seg.center)}, {"radius", seg.radius}, {"from", seg.from},
                  {"to", seg.to}};
        } else if constexpr (std::is_same_v<T, LineSegment>) {
          return {{"kind", "line"}, {"from", complex_to(seg.from)}, {"to", complex_to(seg.to)}};
        } else {
          return {{"kind", "trig"}, {"coeffs_x", seg.coeffs_x}, {"coeffs_y", seg.coeffs_y}, {"t0", seg.t0},
                  {"t1", seg.t1}};
        }
      },
      s);
}

std::vector<double> alias_args(const std::string& inside) {
  std::vector<double> out;
  std::stringstream ss(inside);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad number '" + item + "' in curve alias");
    }
  }
  return out;
}

const char* contact_name(Contact c) {
  switch (c) {
    case Contact::Transversal:
      return "transversal";
    case Contact::Tangential:
      return "tangential";
    case Contact::ZeroOfF:
      return "zero-of-f";
  }
  return "";
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

json file_or_inline(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  const auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("inline JSON does not parse: ") + e.what());
    }
  }
  return json(arg);
}

Polynomial polynomial_from_json(const json& j) {
  try {
    if (j.is_object() && j.contains("coeffs")) {
      const json& c = j.at("coeffs");
      if (!c.is_array() || c.empty()) throw InputError("'coeffs' must be a non-empty array");
      Eigen::VectorXcd v(static_cast<Eigen::Index>(c.size()));
      for (std::size_t i = 0; i < c.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from(c[i]);
      return Polynomial(v);
    }
    if (j.is_object() && j.contains("real_coeffs")) {
      const std::vector<double> a = reals(j, "real_coeffs");
      if (a.empty()) throw InputError("'real_coeffs' must be non-empty");
      return Polynomial::from_real(a);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed polynomial: ") + e.what());
  }
  throw InputError("polynomial needs a 'coeffs' or 'real_coeffs' field");
}

json to_json(const Polynomial& f) {
  json c = json::array();
  for (Eigen::Index i = 0; i < f.coeffs().size(); ++i) c.push_back(complex_to(f.coeffs()[i]));
  return {{"coeffs", c}};
}

JordanCurve curve_from_alias(const std::string& alias) {
  if (alias == "unit-circle") return unit_circle();
  if (alias == "lshape") return l_shape();
  static const std::regex call(R"(^\s*(circle|square|lshape)\s*\((.*)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(alias, m, call)) throw InputError("unknown curve alias '" + alias + "'");
  const std::string name = m[1];
  const std::vector<double> a = alias_args(m[2]);
  if (name == "lshape") {
    if (a.size() != 1) throw InputError("lshape(s) takes one argument");
    return l_shape(0.0, a[0]);
  }
  Complex c;
  double size = 0.0;
  if (a.size() == 2) {
    c = a[0];
    size = a[1];
  } else if (a.size() == 3) {
    c = {a[0], a[1]};
    size = a[2];
  } else {
    throw InputError(name + "(...) takes (c, size) or (cx, cy, size)");
  }
  if (!(size > 0.0)) throw InputError(name + " size must be positive");
  return name == "circle" ? circle(c, size) : square(c, size);
}

JordanCurve curve_from_json(const json& j) {
  if (j.is_string()) return curve_from_alias(j.get<std::string>());
  if (!j.is_object() || !j.contains("segments") || !j.at("segments").is_array())
    throw InputError("curve needs a 'segments' array or an alias string");
  std::vector<Segment> segs;
  try {
    for (const json& s : j.at("segments")) segs.push_back(segment_from(s));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed curve segment: ") + e.what());
  }
  return JordanCurve::from_segments(std::move(segs));
}

json to_json(const JordanCurve& c) {
  json segs = json::array();
  for (const Segment& s : c.segments()) segs.push_back(segment_to(s));
  return {{"segments", segs}};
}

Line line_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "real-axis") return Line::real_axis();
    if (s == "imag-axis") return Line::imag_axis();
    throw InputError("unknown line alias '" + s + "'");
  }
  if (j.is_object() && j.contains("angle") && j.at("angle").is_number()) return Line(j.at("angle").get<double>());
  throw InputError("line needs an 'angle' field or an alias string");
}

json to_json(Line line) { return {{"angle", line.angle()}}; }

json to_json(const RootSet& r) {
  json roots = json::array();
  for (const Root& x : r.roots) roots.push_back({{"location", complex_to(x.location)}, {"multiplicity", x.multiplicity}});
  return {{"roots", roots}, {"residual", r.residual}};
}

json to_json(const ZeroReport& z) {
  return {{"inside", to_json(z.inside)},
          {"on_curve", to_json(z.on_curve)},
          {"on_curve_parameters", z.on_curve_parameters},
          {"outside", to_json(z.outside)},
          {"m", z.m},
          {"lambda", z.lambda},
          {"outside_multiplicity", z.outside_multiplicity},
          {"band", z.band}};
}

json to_json(const PreimageSet& p) {
  json pts = json::array();
  for (const Preimage& x : p.points)
    pts.push_back({{"t", x.t}, {"z", complex_to(x.z)}, {"value", complex_to(x.value)}, {"contact", contact_name(x.contact)}});
  json out = {{"points", pts}, {"continuum", p.continuum}, {"resolution", p.resolution}};
  if (p.continuum)
    out["count"] = "infinite";
  else
    out["count"] = p.count();
  return out;
}

json to_json(const WindingResult& w) {
  return {{"winding", w.winding},
          {"raw", w.raw},
          {"min_abs_f", w.min_abs_f},
          {"max_abs_df", w.max_abs_df},
          {"evaluations", w.evaluations}};
}

json to_json(const BoundReport& b) {
  json corners = json::array();
  for (const CornerTerm& c : b.per_corner)
    corners.push_back({{"location", complex_to(c.location)},
                       {"parameter", c.parameter},
                       {"lambda_j", c.multiplicity},
                       {"alpha_j", c.interior_angle},
                       {"term", c.term}});
  json out = {{"theorem", b.theorem}, {"bound", b.bound}, {"m", b.m},
              {"lambda", b.lambda},   {"per_corner", corners}, {"holds", b.holds},
              {"line_angle", b.line_angle}, {"zeros", to_json(b.zeros)}, {"preimages", to_json(b.preimages)}};
  if (b.preimages.continuum)
    out["measured"] = "infinite";
  else
    out["measured"] = b.measured;
  return out;
}

json to_json(const DetourReport& d) {
  json exc = json::array();
  for (const Excision& e : d.detour.excisions)
    exc.push_back({{"center", complex_to(e.center)},
                   {"radius", e.radius},
                   {"t_zero", e.t_zero},
                   {"t_in", e.t_in},
                   {"t_out", e.t_out},
                   {"sweep", e.sweep}});
  return {{"epsilon", d.detour.epsilon},
          {"excisions", exc},
          {"composite", to_json(d.detour.composite)},
          {"m", d.m},
          {"lambda", d.lambda},
          {"winding", to_json(d.winding)},
          {"preimages_on_detour", to_json(d.on_detour)},
          {"arc_points", d.arc_points},
          {"base_points", d.base_points},
          {"on_base", d.on_base},
          {"liftoff_ok", d.liftoff_ok},
          {"winding_ok", d.winding_ok},
          {"preimages_ok", d.preimages_ok},
          {"consistent", d.consistent},
          {"holds", d.holds}};
}

json to_json(const TrigReport& t) {
  return {{"coeffs", t.coeffs},
          {"n", t.n},
          {"Z_P", t.z_p},
          {"Z_Q", t.z_q},
          {"m_f", t.m_f},
          {"m_g", t.m_g},
          {"lambda", t.lambda},
          {"direct_agrees", t.direct_agrees},
          {"conjugates_match", t.conjugates_match},
          {"identity_holds", t.identity_holds},
          {"bound_holds", t.bound_holds}};
}

json config_echo(const CrossingOptions& opt) {
  return {{"initial_resolution", opt.initial_resolution},
          {"max_resolution", opt.max_resolution},
          {"parameter_tol", opt.parameter_tol},
          {"cluster_radius", opt.cluster_radius > 0.0 ? opt.cluster_radius : 8.0 * opt.parameter_tol},
          {"contact_tol", opt.contact_tol},
          {"zero_exclusion", opt.zero_exclusion},
          {"residual_tol", opt.residual_tol},
          {"band", opt.band},
          {"root_tol", opt.roots.tol},
          {"root_max_iterations", opt.roots.max_iterations}};
}

json config_echo(const WindingOptions& opt) {
  return {{"band", opt.band},
          {"initial_samples", opt.initial_samples},
          {"max_depth", opt.max_depth},
          {"liftoff_factor", opt.liftoff_factor},
          {"rounding_guard", opt.rounding_guard}};
}

}  // namespace argp::io
