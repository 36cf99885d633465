#ifndef BOHRLAB_TOOLS_CLI_HPP
#define BOHRLAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "bohrlab/radii.hpp"
#include "bohrlab/verifier.hpp"

namespace bohrlab::cli
{

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

// Runs the tool. args[0] is the program name. Payload goes to `out`,
// diagnostics and usage text to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// 17 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double v);

// Replaces r by 1/3 or 1/sqrt(3) when it lies within 1e-9 of either.
double snap_endpoint(double r);

// "a=0.5,k=0.25" (',' or ';' separated) -> {a: 0.5, k: 0.25}
std::map<std::string, double> parse_params(const std::string &text);

nlohmann::json to_json(const RadiusResult &result);
nlohmann::json to_json(const VerificationReport &report);

} // namespace bohrlab::cli

#endif
