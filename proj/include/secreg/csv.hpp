#pragma once

#include <string>

namespace secreg {

/// Shortest fixed-notation decimal string that parses back to exactly v.
/// Never uses scientific notation.
std::string format_double(double v);

} // namespace secreg
