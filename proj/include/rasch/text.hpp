#pragma once

#include <string>

namespace rasch {

// Shortest decimal form that round-trips the double exactly.
std::string format_double(double value);

}  // namespace rasch
