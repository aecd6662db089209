#ifndef ARGP_IO_HPP
#define ARGP_IO_HPP

#include <string>

#include "json.hpp"

#include "argp/crossings.hpp"
#include "argp/verify.hpp"

namespace argp::io {

using nlohmann::json;

/// Reads a whole file as JSON; InputError on I/O or syntax failure.
json read_file(const std::string& path);

/// {"coeffs": [[re, im], ...]} or {"real_coeffs": [a0, ...]}, ascending degree.
Polynomial polynomial_from_json(const json& j);
json to_json(const Polynomial& f);

/// {"segments": [...]} or one of the aliases "unit-circle", "circle(c,r)",
/// "circle(cx,cy,r)", "square(c,s)", "square(cx,cy,s)", "lshape", "lshape(s)".
JordanCurve curve_from_json(const json& j);
JordanCurve curve_from_alias(const std::string& alias);
json to_json(const JordanCurve& c);

/// {"angle": phi}, or "real-axis" / "imag-axis".
Line line_from_json(const json& j);
json to_json(Line line);

/// Reads `arg` as a file when one exists at that path, otherwise parses it as
/// an alias or inline JSON.
json file_or_inline(const std::string& arg);

json to_json(const RootSet& r);
json to_json(const ZeroReport& z);
json to_json(const PreimageSet& p);
json to_json(const WindingResult& w);
json to_json(const BoundReport& b);
json to_json(const DetourReport& d);
json to_json(const TrigReport& t);

json config_echo(const CrossingOptions& opt);
json config_echo(const WindingOptions& opt);

}  // namespace argp::io

#endif  // ARGP_IO_HPP
