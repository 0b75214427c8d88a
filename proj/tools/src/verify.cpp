#include "qcurve_cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include <qcurve/characterize.hpp>
#include <qcurve/errors.hpp>
#include <qcurve/families.hpp>
#include <qcurve/kernel.hpp>

namespace qcurve::cli {

namespace {

using json = nlohmann::json;

void expect_below(VerificationReport& r, std::string name, double measured, double tol) {
    r.assertions.push_back({std::move(name), measured, tol, measured < tol});
}

FrameField field(const Curve& c, const std::vector<double>& grid, const Settings& s) {
    return s.fd_step ? frame_field(c, grid, *s.fd_step) : frame_field(c, grid);
}

SalkowskiParams params_of(const Settings& s) {
    const SalkowskiParams p = SalkowskiParams::make(s.m);
    return SalkowskiParams::make(s.m, s.margin * p.half_width());
}

std::size_t half_grid(std::size_t n) {
    if (n < 17) {
        throw ParameterError("convergence checks need --n >= 17");
    }
    return (n - 1) / 2 + 1;
}

void salkowski_intrinsics(VerificationReport& r, const Settings& s) {
    const SalkowskiParams p = params_of(s);
    const Curve c = salkowski(s.m, p.margin);
    const auto grid = uniform_grid(p.safe_domain(), s.n);
    const FrameField ff = field(c, grid, s);
    double ek = 0.0, er = 0.0, es = 0.0, ef = 0.0;
    const double s0 = p.arc_length(grid.front());
    for (const auto& smp : ff.samples) {
        ek = std::max(ek, std::abs(smp.k - 1.0));
        er = std::max(er, std::abs(smp.r - std::tan(p.n * smp.t)));
        es = std::max(es, std::abs(smp.s - (p.arc_length(smp.t) - s0)));
    }
    for (double t : uniform_grid(p.safe_domain(), 101)) {
        const FrenetSample smp = s.fd_step ? frenet_local(c, t, *s.fd_step) : frenet_local(c, t, default_fd_step(c));
        const Frame f = salkowski_frame_closed_form(s.m, t);
        const double same = std::max({distance(f.tangent, smp.tangent), distance(f.normal1, smp.normal1),
                                      distance(f.normal2, smp.normal2)});
        const double flip = std::max({distance(f.tangent, smp.tangent), distance(f.normal1, -smp.normal1),
                                      distance(f.normal2, -smp.normal2)});
        ef = std::max(ef, std::min(same, flip));
    }
    expect_below(r, "max |k - 1|", ek, 1e-5);
    expect_below(r, "max |r - tan(nt)|", er, 1e-4);
    expect_below(r, "max |s - sin(nt)/m|", es, 1e-8);
    expect_below(r, "max closed-form frame distance (101 points)", ef, 1e-6);
}

void slant_helix(VerificationReport& r, const Settings& s) {
    const SalkowskiParams p = params_of(s);
    const FrameField ff = field(salkowski(s.m, p.margin), uniform_grid(p.safe_domain(), s.n), s);
    const SlantHelixReport rep = slant_helix_check(ff, s.tol);
    expect_below(r, "axis drift", rep.max_axis_drift, s.tol);
    expect_below(r, "angle deviation", rep.max_angle_deviation, 1e-5);
    expect_below(r, "| |cos theta| - m/sqrt(1+m^2) |", std::abs(std::abs(rep.cos_angle) - std::abs(p.n)), 1e-4);
    const AntiSalkowskiSlantReport anti = slant_helix_of_anti_salkowski(s.m, s.n, s.tol);
    expect_below(r, "anti-salkowski axis drift", anti.anti_salkowski.max_axis_drift, s.tol);
    expect_below(r, "anti-salkowski axis mismatch", anti.axis_mismatch, 1e-3);
}

void torsion_law(VerificationReport& r, const Settings& s) {
    const SalkowskiParams p = params_of(s);
    const FrameField ff = field(salkowski(s.m, p.margin), uniform_grid(p.safe_domain(), s.n), s);
    const TorsionLawReport law = salkowski_torsion_law(ff, s.tol);
    expect_below(r, "|b - m|", std::abs(law.b - std::abs(s.m)), 1e-4);
    expect_below(r, "max law residual", law.max_residual, 1e-3);
}

double duality_max(const Curve& c, const std::vector<double>& grid, DualityReport* out = nullptr) {
    const DualityReport d = anti_salkowski_duality_check(c, grid);
    if (out) {
        *out = d;
    }
    return d.max_residual();
}

void duality(VerificationReport& r, const Settings& s) {
    const SalkowskiParams p = params_of(s);
    const Curve c = salkowski(s.m, p.margin);
    DualityReport d;
    const double fine = duality_max(c, uniform_grid(p.positive_domain(), s.n), &d);
    const double coarse = duality_max(c, uniform_grid(p.positive_domain(), half_grid(s.n)));
    expect_below(r, "k_beta - |r_alpha|", d.curvature_residual, 1e-3);
    expect_below(r, "r_beta - k_alpha", d.torsion_residual, 1e-3);
    expect_below(r, "t_beta - n2_alpha", d.tangent_residual, 1e-3);
    expect_below(r, "n1_beta - n1_alpha", d.normal1_residual, 1e-3);
    expect_below(r, "n2_beta + t_alpha", d.normal2_residual, 1e-3);
    expect_below(r, "|q - 4|, q = residual ratio on grid halving", std::abs(coarse / fine - 4.0), 1.0);
}

void ode(VerificationReport& r, const Settings& s) {
    const SalkowskiParams p = params_of(s);
    const Curve c = salkowski(s.m, p.margin);
    const double fine = tangent_ode_residual(field(c, uniform_grid(p.positive_domain(), s.n), s)).max_norm;
    const double coarse = tangent_ode_residual(field(c, uniform_grid(p.positive_domain(), half_grid(s.n)), s)).max_norm;
    expect_below(r, "max residual", fine, 1e-3);
    expect_below(r, "|q - 4|, q = residual ratio on grid halving", std::abs(coarse / fine - 4.0), 1.0);
    const Curve h = circular_helix(1.0, 1.0);
    const double helix = tangent_ode_residual(field(h, uniform_grid(h.domain(), s.n), s)).max_norm;
    expect_below(r, "helix(1,1) residual", helix, 1e-4);
}

void corollaries(VerificationReport& r, const Settings& s) {
    for (const CorollaryCase& cc : corollary_suite(s.tol, s.n)) {
        double worst = 0.0;
        for (const auto& rep : cc.reports) {
            worst = std::max(worst, rep.max_discrepancy);
        }
        if (cc.reports.empty()) {
            worst = std::numeric_limits<double>::infinity();
        }
        r.assertions.push_back({cc.name, worst, s.tol, cc.pass});
        std::ostringstream line;
        line << (cc.pass ? "PASS " : "FAIL ") << std::left << std::setw(24) << cc.name << cc.description;
        if (!cc.reports.empty()) {
            line << "  (branch " << (cc.reports.back().branch > 0 ? "+" : "-");
            if (!cc.reports.back().special_case.empty()) {
                line << ", " << cc.reports.back().special_case;
            }
            line << ")";
        }
        r.notes.push_back(line.str());
    }
}

} // namespace

std::vector<std::string> known_checks() {
    return {"salkowski-intrinsics", "slant-helix", "torsion-law", "duality", "ode35", "corollaries"};
}

VerificationReport run_check(const std::string& check, const Settings& s) {
    VerificationReport r;
    r.check = check;
    r.params = {{"m", s.m}, {"n", static_cast<double>(s.n)}, {"tol", s.tol}, {"margin", s.margin}};
    if (s.fd_step) {
        r.params["fd_step"] = *s.fd_step;
    }
    const auto start = std::chrono::steady_clock::now();
    if (check == "salkowski-intrinsics") {
        salkowski_intrinsics(r, s);
    } else if (check == "slant-helix") {
        slant_helix(r, s);
    } else if (check == "torsion-law") {
        torsion_law(r, s);
    } else if (check == "duality") {
        duality(r, s);
    } else if (check == "ode35") {
        ode(r, s);
    } else if (check == "corollaries") {
        r.params.erase("m");
        r.params.erase("margin");
        corollaries(r, s);
    } else {
        throw ParameterError("unknown check '" + check + "'");
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = !r.assertions.empty();
    for (const auto& a : r.assertions) {
        r.pass = r.pass && a.pass;
    }
    return r;
}

void print_text(std::ostream& os, const VerificationReport& r) {
    os << r.check << ':';
    for (const auto& [k, v] : r.params) {
        os << ' ' << k << '=' << v;
    }
    os << '\n';
    if (!r.notes.empty()) {
        for (const auto& n : r.notes) {
            os << n << '\n';
        }
    } else {
        for (const auto& a : r.assertions) {
            os << (a.pass ? "  PASS " : "  FAIL ") << a.name << " = " << std::setprecision(4) << a.measured
               << " (tol " << a.tolerance << ")\n";
        }
    }
    os << (r.pass ? "PASS" : "FAIL") << " in " << std::setprecision(3) << r.seconds << " s\n";
}

void print_json(std::ostream& os, const VerificationReport& r) {
    json doc;
    doc["check"] = r.check;
    doc["params"] = json::object();
    for (const auto& [k, v] : r.params) {
        doc["params"][k] = v;
    }
    doc["assertions"] = json::array();
    for (const auto& a : r.assertions) {
        json measured = std::isfinite(a.measured) ? json(a.measured) : json(nullptr);
        doc["assertions"].push_back({{"name", a.name}, {"measured", measured}, {"tolerance", a.tolerance}, {"pass", a.pass}});
    }
    doc["pass"] = r.pass;
    doc["seconds"] = r.seconds;
    os << doc.dump(2) << '\n';
}

} // namespace qcurve::cli
