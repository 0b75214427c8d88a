#include "qcurve_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include <qcurve/characterize.hpp>
#include <qcurve/errors.hpp>
#include <qcurve/families.hpp>
#include <qcurve/kernel.hpp>

#include "qcurve_cli/curve_io.hpp"
#include "qcurve_cli/verify.hpp"

namespace qcurve::cli {

namespace {

using json = nlohmann::json;

struct Options {
    Settings settings;
    std::string family;
    std::optional<double> radius, pitch, t0, t1;
    std::string input, a, b, out;
    std::string criterion = "ratio";
    std::string check;
    bool json = false;
};

/// Opens --out (or returns `fallback` when it is empty) for the duration of `body`.
void with_output(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(fallback);
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    body(f);
    f.flush();
    if (!f) {
        throw IoError("write to '" + path + "' failed");
    }
}

CurveSource source_from_flags(const Options& o) {
    if (!o.input.empty()) {
        return curve_from_text(o.input);
    }
    if (o.family.empty()) {
        throw ParameterError("give --family or --input");
    }
    if (o.family == "file") {
        throw ParameterError("--family file needs --input PATH");
    }
    CurveSpec spec{o.family, {}};
    if (o.family == "salkowski" || o.family == "anti-salkowski") {
        spec.params["m"] = o.settings.m;
        spec.params["margin"] = o.settings.margin;
    }
    if (o.radius) spec.params["radius"] = *o.radius;
    if (o.pitch) spec.params["pitch"] = *o.pitch;
    return build_curve(spec);
}

std::vector<double> grid_for(const CurveSource& src, Interval base, const Options& o) {
    Interval iv{o.t0.value_or(base.lo), o.t1.value_or(base.hi)};
    if (!(iv.lo < iv.hi)) {
        throw ParameterError("need t0 < t1");
    }
    if (!src.curve.domain().contains(iv.lo) || !src.curve.domain().contains(iv.hi)) {
        throw ParameterError("[t0, t1] leaves the curve domain");
    }
    if (o.settings.n < 2) {
        throw ParameterError("--n must be at least 2");
    }
    return uniform_grid(iv, o.settings.n);
}

double step_for(const Curve& c, const Options& o) {
    const double h = o.settings.fd_step.value_or(default_fd_step(c));
    if (!(h > 0.0)) {
        throw ParameterError("--fd-step must be positive");
    }
    return h;
}

int cmd_sample(const Options& o, std::ostream& out, std::ostream&) {
    const CurveSource src = source_from_flags(o);
    const auto grid = grid_for(src, src.curve.domain(), o);
    const double h = step_for(src.curve, o);
    Table t{{"t", "s", "x", "y", "z"}, {}};
    double s = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0) {
            s += arc_length(src.curve, grid[i - 1], grid[i], h);
        }
        const SpatialQuaternion p = src.curve(grid[i]);
        t.rows.push_back({grid[i], s, p.a1, p.a2, p.a3});
    }
    with_output(o.out, out, [&](std::ostream& os) {
        if (o.json) {
            write_json(os, t, src.family, src.params);
        } else {
            write_csv(os, t);
        }
    });
    return kOk;
}

int cmd_frenet(const Options& o, std::ostream& out, std::ostream& err) {
    const CurveSource src = source_from_flags(o);
    const auto grid = grid_for(src, src.curve.domain(), o);
    const double h = step_for(src.curve, o);
    const double nan = std::nan("");
    Table t{{"t", "s", "speed", "tx", "ty", "tz", "n1x", "n1y", "n1z", "n2x", "n2y", "n2z", "k", "r"}, {}};
    std::optional<SpatialQuaternion> last_normal;
    std::size_t flagged = 0;
    double s = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0) {
            s += arc_length(src.curve, grid[i - 1], grid[i], h);
        }
        try {
            FrenetSample f = frenet_local(src.curve, grid[i], h);
            if (last_normal && vec_dot(*last_normal, f.normal1) < 0.0) {
                f.normal1 = -f.normal1;
                f.normal2 = -f.normal2;
            }
            last_normal = f.normal1;
            t.rows.push_back({f.t, s, f.speed, f.tangent.a1, f.tangent.a2, f.tangent.a3, f.normal1.a1, f.normal1.a2,
                              f.normal1.a3, f.normal2.a1, f.normal2.a2, f.normal2.a3, f.k, f.r});
        } catch (const FrameError&) {
            ++flagged;
            const double speed = norm(derivative(src.curve, grid[i], 1, h));
            t.rows.push_back({grid[i], s, speed, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan});
        }
    }
    if (flagged == grid.size()) {
        err << "error: Frenet frame undefined at every grid point\n";
        return kFrameUndefined;
    }
    with_output(o.out, out, [&](std::ostream& os) {
        if (o.json) {
            write_json(os, t, src.family, src.params);
        } else {
            write_csv(os, t);
        }
    });
    if (flagged > 0) {
        err << "warning: frame undefined at " << flagged << " of " << grid.size() << " rows (written as nan)\n";
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
    const VerificationReport r = run_check(o.check, o.settings);
    with_output(o.out, out, [&](std::ostream& os) {
        if (o.json) {
            print_json(os, r);
        } else {
            print_text(os, r);
        }
    });
    return r.pass ? kOk : kVerificationFailed;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream&) {
    if (o.a.empty() || o.b.empty()) {
        throw ParameterError("compare needs --a and --b");
    }
    const Criterion crit = parse_criterion(o.criterion);
    const CurveSource a = curve_from_text(o.a);
    const CurveSource b = curve_from_text(o.b);
    Options plain = o;
    plain.t0.reset();
    plain.t1.reset();
    const auto ga = grid_for(a, a.regular, plain);
    const auto gb = grid_for(b, b.regular, plain);
    const SimilarityReport r = similar_check(a.curve, ga, b.curve, gb, crit, o.settings.tol);

    with_output(o.out, out, [&](std::ostream& os) {
        if (o.json) {
            json doc;
            doc["criterion"] = to_string(r.criterion);
            doc["max_discrepancy"] = r.max_discrepancy;
            doc["tolerance"] = o.settings.tol;
            doc["verdict"] = r.verdict;
            doc["branch"] = r.branch;
            doc["special_case"] = r.special_case;
            doc["gauge"] = r.gauge.m;
            doc["transformation_samples"] = json::array();
            for (const auto& [sb, lambda] : r.transformation_samples) {
                doc["transformation_samples"].push_back({sb, lambda});
            }
            os << doc.dump(1) << '\n';
        } else {
            os << "criterion: " << to_string(r.criterion) << '\n'
               << "max discrepancy: " << format_number(r.max_discrepancy) << " (tol " << o.settings.tol << ")\n"
               << "branch: " << (r.branch > 0 ? "+" : "-") << '\n';
            if (!r.special_case.empty()) {
                os << "special case: " << r.special_case << '\n';
            }
            if (!r.transformation_samples.empty()) {
                double lo = r.transformation_samples.front().second, hi = lo;
                for (const auto& [sb, lambda] : r.transformation_samples) {
                    lo = std::min(lo, lambda);
                    hi = std::max(hi, lambda);
                }
                os << "lambda range: [" << format_number(lo) << ", " << format_number(hi) << "]\n";
            }
            os << (r.verdict ? "similar" : "not similar") << '\n';
        }
    });
    return r.verdict ? kOk : kVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Salkowski / anti-Salkowski curve toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file with default settings (flags override)");
    app.add_option("--family", o.family, "salkowski | anti-salkowski | line | circle | helix | file");
    app.add_option("--m", o.settings.m, "Salkowski shape parameter");
    app.add_option("--radius", o.radius, "circle radius or helix radius");
    app.add_option("--pitch", o.pitch, "helix pitch per radian");
    app.add_option("--t0", o.t0, "grid start");
    app.add_option("--t1", o.t1, "grid end");
    app.add_option("--n", o.settings.n, "grid size");
    app.add_option("--fd-step", o.settings.fd_step, "finite-difference step");
    app.add_option("--tol", o.settings.tol, "verdict tolerance");
    app.add_option("--margin", o.settings.margin, "Salkowski domain margin, fraction of pi/(2|n|)");
    app.add_option("--out", o.out, "output file (default stdout)");
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--criterion", o.criterion, "tangent | normal | binormal | ratio");
    app.add_option("--input", o.input, "curve spec (family:key=value,...) or curve file");
    app.add_option("--a", o.a, "first curve spec or file");
    app.add_option("--b", o.b, "second curve spec or file");

    auto* sample = app.add_subcommand("sample", "write (t, s, x, y, z) samples of a curve")->fallthrough();
    auto* frenet = app.add_subcommand("frenet", "write the Frenet apparatus along a curve")->fallthrough();
    auto* verify = app.add_subcommand("verify", "run a verification check")->fallthrough();
    verify->add_option("check", o.check, "salkowski-intrinsics | slant-helix | torsion-law | duality | ode35 | corollaries")
        ->required();
    auto* compare = app.add_subcommand("compare", "similarity test of two curves")->fallthrough();

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }

    try {
        if (*sample) return cmd_sample(o, out, err);
        if (*frenet) return cmd_frenet(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
        if (*compare) return cmd_compare(o, out, err);
        return kBadArguments;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const IncomparableRangeError& e) {
        err << "error: " << e.what() << '\n';
        return kIncomparable;
    } catch (const CriterionInapplicableError& e) {
        err << "error: " << e.what() << '\n';
        return kIncomparable;
    } catch (const FrameError& e) {
        err << "error: " << e.what() << " (t = " << e.t() << ")\n";
        return kFrameUndefined;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
}

} // namespace qcurve::cli
