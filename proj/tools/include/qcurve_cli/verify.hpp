#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qcurve::cli {

/// Shared defaults; flags and the config file override them.
struct Settings {
    std::size_t n = 2001;
    std::optional<double> fd_step;
    double tol = 1e-4;
    double margin = 0.05;  ///< fraction of pi/(2|n|)
    double m = 1.0;
};

struct Assertion {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::string check;
    std::map<std::string, double> params;
    std::vector<Assertion> assertions;
    bool pass = false;
    double seconds = 0.0;
    /// Extra human-readable lines (the corollary summary).
    std::vector<std::string> notes;
};

std::vector<std::string> known_checks();

/// Runs one named check. Throws ParameterError for an unknown name.
VerificationReport run_check(const std::string& check, const Settings& settings);

void print_text(std::ostream& os, const VerificationReport& r);
void print_json(std::ostream& os, const VerificationReport& r);

} // namespace qcurve::cli
