#include "rasch/text.hpp"

#include <cstdio>
#include <cstring>
#include <sstream>

namespace rasch {

std::string format_double(double value) {
  char buf[40];
  // Shortest precision that parses back to the same bits.
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == value || (value != value && back != back)) break;
  }
  return buf;
}

}  // namespace rasch
