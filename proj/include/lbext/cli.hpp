#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lbext/flag.hpp"

namespace lbext {

/// Runs one command; args exclude the program name. Returns the exit code:
/// 0 valid / success, 1 domain-level failure (with a report), 2 I/O, parse or
/// shape errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One line per violation: "LABEL @ (labels): residual [i,j]=c, ...".
std::string format_report(const VerdictReport& rep);
std::string report_json(const VerdictReport& rep);

/// "c1*n1 + c2*n2"; "0" for the zero vector.
std::string format_combination(std::span<const Scalar> coeffs, const std::vector<std::string>& names);

std::string classification_text(const std::string& base_name, const LieBialgebra& base, const FlagSolutionReport& r);
std::string classification_json(const std::string& base_name, const LieBialgebra& base, const FlagSolutionReport& r);

}  // namespace lbext
