#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <qcurve/curve.hpp>

namespace qcurve::cli {

/// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A curve together with where it came from.
struct CurveSource {
    Curve curve;
    std::string family;
    std::map<std::string, double> params;
    /// Sub-interval on which the Frenet frame is defined everywhere (the
    /// anti-Salkowski curve loses its frame at t = 0).
    Interval regular;
};

/// "family:key=value,key=value". Numeric values only.
struct CurveSpec {
    std::string family;
    std::map<std::string, double> params;
};

/// Parses a spec string; a string naming no known family is read as a file path.
CurveSpec parse_spec(const std::string& text);

/// Families: salkowski, anti-salkowski, circle, helix, line (files go through
/// load_curve_file).
///   salkowski / anti-salkowski: m, margin (fraction of pi/(2|n|))
///   circle: radius;  helix: radius, pitch;  line: px py pz vx vy vz
/// Every family also accepts a rigid motion: rx ry rz angle (rotation),
/// dx dy dz (translation), antipodal (nonzero negates the curve first), and
/// t0 t1 (the comparison range, replacing `regular`).
/// Throws ParameterError.
CurveSource build_curve(const CurveSpec& spec);

/// Builds from a spec string, dispatching "file:path" and bare paths to load_curve_file.
CurveSource curve_from_text(const std::string& text);

/// Reads a table written by `sample` (CSV with header, or JSON with
/// columns/rows) and returns the cubic spline through its (t, x, y, z) columns.
/// Throws IoError.
CurveSource load_curve_file(const std::string& path);

std::vector<std::string> known_families();

/// A table of doubles; NaN cells are written as "nan" (CSV) or null (JSON).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t, const std::string& family, const std::map<std::string, double>& params);

/// Formats a value with 12 significant digits.
std::string format_number(double v);

} // namespace qcurve::cli
