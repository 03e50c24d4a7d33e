#pragma once

#include <string>

namespace twomilton {

/// Size limits for the exponential-time solvers. Defaults can be overridden
/// through the TWOMILTON_LIMITS environment variable, a comma-separated list
/// of key=value pairs, e.g. `TWOMILTON_LIMITS=alpha=40,psi=32`.
/// Keys: alpha, psi, enumerate, exhaustive_f.
struct Limits {
  int alpha_max_n = 64;
  int psi_max_n = 48;
  int enumerate_max_n = 13;
  int exhaustive_f_max_n = 12;
};

Limits parse_limits(const std::string& spec, Limits base = {});
/// Process-wide limits: defaults merged with TWOMILTON_LIMITS, read once.
const Limits& limits();
/// Replaces the process-wide limits (tests and the CLI use this).
void set_limits(const Limits& l);

}  // namespace twomilton
