#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcurve::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kBadArguments = 2,
    kIoError = 3,
    kFrameUndefined = 4,
    kIncomparable = 5,
};

/// Runs the command line `args` (args[0] is the program name) and returns the exit code.
///
///   qcurve sample  --family F [params] [--t0 --t1 --n] [--out P] [--json]
///   qcurve frenet  (--input SPEC | --family F [params]) [--fd-step H] [--out P] [--json]
///   qcurve verify  CHECK [--m --n --tol --margin --fd-step] [--json]
///   qcurve compare --a SPEC --b SPEC [--criterion C] [--tol --n] [--json]
///
/// Shared settings may also come from --config FILE (key = value lines); flags win.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcurve::cli
