#include "qcurve_cli/curve_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <qcurve/errors.hpp>
#include <qcurve/families.hpp>
#include <qcurve/spline.hpp>

namespace qcurve::cli {

namespace {

using json = nlohmann::json;

double get(const std::map<std::string, double>& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw ParameterError("not a number for " + what + ": '" + text + "'");
    }
}

const std::vector<std::string>& allowed_keys(const std::string& family) {
    static const std::map<std::string, std::vector<std::string>> keys = {
        {"salkowski", {"m", "margin"}},
        {"anti-salkowski", {"m", "margin"}},
        {"circle", {"radius"}},
        {"helix", {"radius", "pitch"}},
        {"line", {"px", "py", "pz", "vx", "vy", "vz"}},
    };
    return keys.at(family);
}

bool is_motion_key(const std::string& k) {
    static const std::vector<std::string> motion = {"rx", "ry", "rz", "angle", "dx", "dy", "dz", "antipodal", "t0", "t1"};
    return std::find(motion.begin(), motion.end(), k) != motion.end();
}

} // namespace

std::vector<std::string> known_families() { return {"salkowski", "anti-salkowski", "circle", "helix", "line"}; }

CurveSpec parse_spec(const std::string& text) {
    CurveSpec spec;
    const auto colon = text.find(':');
    const std::string head = trim(colon == std::string::npos ? text : text.substr(0, colon));
    const auto fams = known_families();
    if (std::find(fams.begin(), fams.end(), head) == fams.end()) {
        spec.family = "file";
        return spec;
    }
    spec.family = head;
    if (colon == std::string::npos) {
        return spec;
    }
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ParameterError("curve spec entry '" + item + "' is not key=value");
        }
        const std::string key = trim(item.substr(0, eq));
        spec.params[key] = parse_double(trim(item.substr(eq + 1)), key);
    }
    return spec;
}

CurveSource build_curve(const CurveSpec& spec) {
    const auto& p = spec.params;
    if (spec.family == "file") {
        throw ParameterError("file curves are loaded with load_curve_file");
    }
    const auto fams = known_families();
    if (std::find(fams.begin(), fams.end(), spec.family) == fams.end()) {
        throw ParameterError("unknown family '" + spec.family + "'");
    }
    const auto& allowed = allowed_keys(spec.family);
    for (const auto& [k, v] : p) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end() && !is_motion_key(k)) {
            throw ParameterError("family '" + spec.family + "' has no parameter '" + k + "'");
        }
    }

    std::optional<Curve> c;
    std::optional<Interval> regular;
    if (spec.family == "salkowski" || spec.family == "anti-salkowski") {
        const double m = get(p, "m", 1.0);
        std::optional<double> margin;
        if (p.count("margin")) {
            margin = p.at("margin") * SalkowskiParams::make(m).half_width();
        }
        if (spec.family == "salkowski") {
            c = salkowski(m, margin);
        } else {
            c = anti_salkowski(m, margin);
            regular = SalkowskiParams::make(m, margin).positive_domain();
        }
    } else if (spec.family == "circle") {
        c = circle(get(p, "radius", 1.0));
    } else if (spec.family == "helix") {
        c = circular_helix(get(p, "radius", 1.0), get(p, "pitch", 1.0));
    } else {
        c = line({get(p, "px", 0.0), get(p, "py", 0.0), get(p, "pz", 0.0)},
                 {get(p, "vx", 1.0), get(p, "vy", 0.0), get(p, "vz", 0.0)});
    }

    if (get(p, "antipodal", 0.0) != 0.0) {
        c = antipodal(*c);
    }
    const SpatialQuaternion axis{get(p, "rx", 0.0), get(p, "ry", 0.0), get(p, "rz", 1.0)};
    const double angle = get(p, "angle", 0.0);
    const SpatialQuaternion shift{get(p, "dx", 0.0), get(p, "dy", 0.0), get(p, "dz", 0.0)};
    if (angle != 0.0 || norm(shift) != 0.0) {
        if (!(norm(axis) > 0.0)) {
            throw ParameterError("rotation axis must be nonzero");
        }
        c = transformed(*c, Matrix3::rotation(axis, angle), shift);
    }

    Interval reg = regular.value_or(c->domain());
    if (p.count("t0") || p.count("t1")) {
        reg = {get(p, "t0", c->domain().lo), get(p, "t1", c->domain().hi)};
        if (!(reg.lo < reg.hi) || !c->domain().contains(reg.lo) || !c->domain().contains(reg.hi)) {
            throw ParameterError("spec range [t0, t1] must be increasing and inside the curve domain");
        }
    }
    CurveSource out{*c, spec.family, p, reg};
    for (const auto& [k, v] : c->params()) {
        out.params.emplace(k, v);
    }
    return out;
}

CurveSource curve_from_text(const std::string& text) {
    if (text.rfind("file:", 0) == 0) {
        return load_curve_file(text.substr(5));
    }
    const CurveSpec spec = parse_spec(text);
    if (spec.family == "file") {
        return load_curve_file(text);
    }
    return build_curve(spec);
}

CurveSource load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open curve file '" + path + "'");
    }
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    const int first = in.peek();
    if (first == '{') {
        json doc;
        try {
            in >> doc;
            columns = doc.at("columns").get<std::vector<std::string>>();
            for (const auto& r : doc.at("rows")) {
                std::vector<double> row;
                for (const auto& cell : r) {
                    row.push_back(cell.is_null() ? std::nan("") : cell.get<double>());
                }
                rows.push_back(std::move(row));
            }
        } catch (const json::exception& e) {
            throw IoError("malformed JSON curve file '" + path + "': " + e.what());
        }
    } else {
        std::string line;
        if (!std::getline(in, line)) {
            throw IoError("empty curve file '" + path + "'");
        }
        std::stringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) {
            columns.push_back(trim(cell));
        }
        while (std::getline(in, line)) {
            if (trim(line).empty()) {
                continue;
            }
            std::stringstream ls(line);
            std::vector<double> row;
            while (std::getline(ls, cell, ',')) {
                try {
                    row.push_back(parse_double(trim(cell), "cell"));
                } catch (const ParameterError&) {
                    throw IoError("malformed number '" + trim(cell) + "' in '" + path + "'");
                }
            }
            rows.push_back(std::move(row));
        }
    }

    auto col = [&](const std::string& name) -> std::size_t {
        auto it = std::find(columns.begin(), columns.end(), name);
        if (it == columns.end()) {
            throw IoError("curve file '" + path + "' lacks column '" + name + "'");
        }
        return static_cast<std::size_t>(it - columns.begin());
    };
    const std::size_t it = col("t"), ix = col("x"), iy = col("y"), iz = col("z");
    std::vector<double> knots;
    std::vector<SpatialQuaternion> points;
    for (const auto& r : rows) {
        if (r.size() != columns.size()) {
            throw IoError("ragged row in curve file '" + path + "'");
        }
        knots.push_back(r[it]);
        points.push_back({r[ix], r[iy], r[iz]});
    }
    if (knots.size() < 4) {
        throw IoError("curve file '" + path + "' needs at least 4 rows");
    }
    try {
        Curve c = spline_curve(std::move(knots), std::move(points), "file(" + path + ")");
        return CurveSource{c, "file", {}, c.domain()};
    } catch (const Error& e) {
        throw IoError("curve file '" + path + "': " + e.what());
    }
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
        os << (j ? "," : "") << t.columns[j];
    }
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            os << (j ? "," : "") << format_number(r[j]);
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t, const std::string& family, const std::map<std::string, double>& params) {
    json doc;
    doc["family"] = family;
    doc["params"] = json::object();
    for (const auto& [k, v] : params) {
        doc["params"][k] = v;
    }
    doc["columns"] = t.columns;
    doc["rows"] = json::array();
    for (const auto& r : t.rows) {
        json row = json::array();
        for (double v : r) {
            if (std::isnan(v)) {
                row.push_back(nullptr);
            } else {
                // Round through the 12-digit text form so CSV and JSON agree.
                row.push_back(std::stod(format_number(v)));
            }
        }
        doc["rows"].push_back(std::move(row));
    }
    os << doc.dump() << '\n';
}

} // namespace qcurve::cli
